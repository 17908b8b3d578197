#include "hopfexp/deform.hpp"

#include <sstream>

namespace hopfexp {

// --- twists -------------------------------------------------------------------

TwistElement TwistElement::trivial(const HopfAlgebra& h) {
    TwistElement t;
    t.j = tensor_unit(h, 2);
    t.j_inverse = t.j;
    return t;
}

TwistElement TwistElement::from_coords(const HopfAlgebra& h, const Vec& j, const Vec& j_inv) {
    if (j.size() != h.dim * h.dim || j_inv.size() != h.dim * h.dim)
        throw Error(Errc::DimensionMismatch, "twist coordinates must have length dim^2");
    TwistElement t;
    t.j.dim = h.dim;
    t.j.legs = 2;
    for (std::size_t i = 0; i < j.size(); ++i)
        if (!j[i].is_zero()) t.j.terms.emplace_back(static_cast<std::int64_t>(i), j[i]);
    t.j_inverse.dim = h.dim;
    t.j_inverse.legs = 2;
    for (std::size_t i = 0; i < j_inv.size(); ++i)
        if (!j_inv[i].is_zero()) t.j_inverse.terms.emplace_back(static_cast<std::int64_t>(i), j_inv[i]);
    t.j.normalize();
    t.j_inverse.normalize();
    return t;
}

namespace {

Vec tensor_dense(const TensorElem& t, const FieldDescriptor& f, std::size_t len) {
    Vec out = vec_zero(f, len);
    for (const auto& [idx, c] : t.terms) out[static_cast<std::size_t>(idx)] = c;
    return out;
}

}  // namespace

Vec TwistElement::j_coords(const HopfAlgebra& h) const {
    return tensor_dense(j, h.field, h.dim * h.dim);
}

Vec TwistElement::j_inverse_coords(const HopfAlgebra& h) const {
    return tensor_dense(j_inverse, h.field, h.dim * h.dim);
}

std::string TwistReport::to_string() const {
    if (ok) return "ok";
    std::ostringstream ss;
    ss << "twist invalid: " << failed_invariant << " fails at tensor coordinate " << witness_index;
    return ss.str();
}

namespace {

std::int64_t first_difference(const TensorElem& a, const TensorElem& b) {
    TensorElem d = tensor_sub(a, b);
    return d.terms.empty() ? -1 : d.terms.front().first;
}

}  // namespace

TwistReport validate_twist(const HopfAlgebra& h, const TwistElement& t) {
    TwistReport rep;
    TensorElem one2 = tensor_unit(h, 2);
    TensorElem ji = tensor_mul(h, t.j, t.j_inverse);
    TensorElem ij = tensor_mul(h, t.j_inverse, t.j);
    if (!(ji == one2) || !(ij == one2)) {
        rep.ok = false;
        rep.failed_invariant = "invertibility";
        rep.witness_index = first_difference(ji == one2 ? ij : ji, one2);
        return rep;
    }
    TensorElem lhs = tensor_mul(h, tensor_outer(t.j, tensor_from_vec(h.unit)),
                                tensor_comult_leg(h, t.j, 0));
    TensorElem rhs = tensor_mul(h, tensor_outer(tensor_from_vec(h.unit), t.j),
                                tensor_comult_leg(h, t.j, 1));
    if (!(lhs == rhs)) {
        rep.ok = false;
        rep.failed_invariant = "cocycle";
        rep.witness_index = first_difference(lhs, rhs);
        return rep;
    }
    Vec left = tensor_to_vec(tensor_counit_leg(h, t.j, 0), h.field);
    Vec right = tensor_to_vec(tensor_counit_leg(h, t.j, 1), h.field);
    if (left != h.unit || right != h.unit) {
        rep.ok = false;
        rep.failed_invariant = "counit";
        rep.witness_index = 0;
        return rep;
    }
    return rep;
}

HopfAlgebra twist(const HopfAlgebra& h, const TwistElement& t) {
    TwistReport rep = validate_twist(h, t);
    if (!rep.ok) throw Error(Errc::InvalidTwist, rep.to_string());

    HopfAlgebra out(h.field, h.dim);
    out.basis_names = h.basis_names;
    out.mult = h.mult;
    out.unit = h.unit;
    out.counit = h.counit;
    out.finalize();  // mult views for the tensor products below
    for (std::size_t i = 0; i < h.dim; ++i) {
        TensorElem d = tensor_mul(h, tensor_mul(h, t.j, h.comult_elem(h.basis_vector(i))), t.j_inverse);
        for (const auto& [idx, c] : d.terms)
            out.comult_at(i, static_cast<std::size_t>(idx / h.dim),
                          static_cast<std::size_t>(idx % h.dim)) = c;
    }
    // S^J(x) = W S(x) V with W = m(id (x) S)(J), V = m(S (x) id)(J^{-1})
    Vec w = tensor_to_vec(tensor_mult_legs(h, tensor_apply_leg(t.j, h.antipode, 1), 0), h.field);
    Vec v = tensor_to_vec(tensor_mult_legs(h, tensor_apply_leg(t.j_inverse, h.antipode, 0), 0), h.field);
    Matrix s(h.field, h.dim, h.dim);
    for (std::size_t i = 0; i < h.dim; ++i)
        s.set_col(i, h.multiply(h.multiply(w, h.antipode.col(i)), v));
    out.antipode = s;
    out.antipode_inverse = inverse(s);
    out.finalize();
    require_axioms(out, "twist");
    return out;
}

Vec twisted_sweedler_power(const HopfAlgebra& h, const TwistElement& t, const Vec& elem,
                           std::int64_t n) {
    if (n < 0) throw Error(Errc::DimensionMismatch, "twisted_sweedler_power needs n >= 0");
    TwistReport rep = validate_twist(h, t);
    if (!rep.ok) throw Error(Errc::InvalidTwist, rep.to_string());
    TensorElem one1 = tensor_from_vec(h.unit);
    TensorElem e = tensor_mul(
        h, tensor_mul(h, tensor_outer(one1, t.j), tensor_outer(one1, h.comult_elem(elem))),
        tensor_outer(t.j_inverse, one1));
    // middle leg goes through m_n . Delta^J_n, the outer legs multiply back on
    Matrix p = h.u_eps();
    if (n >= 1) {
        HopfAlgebra hj = twist(h, t);
        p = hj.twisted_power_map(0, n);
    }
    Vec out = vec_zero(h.field, h.dim);
    for (const auto& [idx, c] : e.terms) {
        auto dg = e.digits(idx);
        Vec mid = p.col(static_cast<std::size_t>(dg[1]));
        Vec term = h.multiply(h.multiply(h.basis_vector(static_cast<std::size_t>(dg[0])), mid),
                              h.basis_vector(static_cast<std::size_t>(dg[2])));
        for (std::size_t r = 0; r < h.dim; ++r) FieldElement::add_mul(out[r], c, term[r]);
    }
    return out;
}

TwistElement klein_beta_twist(const HopfAlgebra& dual_k4) {
    if (dual_k4.dim != 4)
        throw Error(Errc::DimensionMismatch, "beta twist lives on the dual of Z2 x Z2");
    // group element index encodes (a, b) as 2a + b; beta((a,b),(c,d)) = (-1)^{ad}
    Vec j = vec_zero(dual_k4.field, 16);
    for (std::size_t g = 0; g < 4; ++g)
        for (std::size_t k = 0; k < 4; ++k) {
            int a = static_cast<int>(g) >> 1;
            int d = static_cast<int>(k) & 1;
            j[g * 4 + k] = FieldElement::from_integer(dual_k4.field, (a * d) % 2 ? -1 : 1);
        }
    return TwistElement::from_coords(dual_k4, j, j);  // beta takes values +-1, self-inverse
}

// --- Drinfeld double ---------------------------------------------------------------

DrinfeldDouble drinfeld_double(const HopfAlgebra& h) {
    const std::size_t n = h.dim;
    const std::size_t nn = n * n;
    const FieldDescriptor f = h.field;
    auto ix = [n](std::size_t u, std::size_t a) { return u * n + a; };

    // iterated coproducts: delta2_h[a] = sum c e_r (x) e_s (x) e_t
    std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, FieldElement>>>
        delta2_h(n), delta2_dual(n);
    for (std::size_t a = 0; a < n; ++a) {
        TensorElem d = h.comult_elem(h.basis_vector(a));
        TensorElem d2 = tensor_comult_leg(h, d, 0);
        for (const auto& [idx, c] : d2.terms) {
            auto dg = d2.digits(idx);
            delta2_h[a].emplace_back(static_cast<std::uint32_t>(dg[0]), static_cast<std::uint32_t>(dg[1]),
                                     static_cast<std::uint32_t>(dg[2]), c);
        }
    }
    // dual coproduct of e^v: <e^v, e_x e_y e_z>, associated as (e_x e_y) e_z
    {
        std::vector<std::vector<std::pair<std::uint32_t, FieldElement>>> pair_prod(n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) pair_prod[x * n + y] = h.views.mult_pair[x * n + y];
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (const auto& [w, c1] : pair_prod[x * n + y])
                    for (std::size_t z = 0; z < n; ++z)
                        for (const auto& [v, c2] : h.views.mult_pair[static_cast<std::size_t>(w) * n + z])
                            delta2_dual[v].emplace_back(static_cast<std::uint32_t>(x),
                                                        static_cast<std::uint32_t>(y),
                                                        static_cast<std::uint32_t>(z), c1 * c2);
    }

    HopfAlgebra dd(f, nn);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t a = 0; a < n; ++a)
            dd.basis_names[ix(u, a)] = "d[" + h.basis_names[u] + "]|x|" + h.basis_names[a];

    // multiplication: (e^u |x| e_a)(e^v |x| e_b)
    //   = sum <e^v_(1), S^{-1}(a_(3))> <e^v_(3), a_(1)> (e^u e^v_(2)) |x| (a_(2) e_b)
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t v = 0; v < n; ++v) {
                // accumulate sum over legs once per (u,a,v); then distribute over b
                // partial[(y, s)] = coefficient of e^u e^y |x| e_s e_b prefactors
                std::vector<FieldElement> partial(n * n, FieldElement::zero(f));
                for (const auto& [x, y, z, cv] : delta2_dual[v])
                    for (const auto& [r, s, t, ca] : delta2_h[a]) {
                        // <e^x, S^{-1} e_t> = (S^{-1})_{x,t};  <e^z, e_r> = delta_{z,r}
                        if (z != r) continue;
                        const FieldElement& si = h.antipode_inverse.at(x, t);
                        if (si.is_zero()) continue;
                        FieldElement coeff = cv * ca * si;
                        partial[static_cast<std::size_t>(y) * n + s] += coeff;
                    }
                for (std::size_t y = 0; y < n; ++y)
                    for (std::size_t s = 0; s < n; ++s) {
                        const FieldElement& pc = partial[y * n + s];
                        if (pc.is_zero()) continue;
                        // (e^u e^y) = sum_w comult[w][u][y] e^w
                        for (std::size_t w = 0; w < n; ++w) {
                            const FieldElement& cw = h.comult_at(w, u, y);
                            if (cw.is_zero()) continue;
                            FieldElement pcw = pc * cw;
                            for (std::size_t b = 0; b < n; ++b)
                                for (const auto& [cc, mc] : h.views.mult_pair[s * n + b])
                                    FieldElement::add_mul(dd.mult_at(ix(u, a), ix(v, b), ix(w, cc)),
                                                          pcw, mc);
                        }
                    }
            }

    // coalgebra: Delta(e^u |x| e_a) = sum (e^u_(2) |x| a_(1)) (x) (e^u_(1) |x| a_(2))
    // with e^u_(1) (x) e^u_(2) = sum mult[x][y][u] e^x (x) e^y
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    const FieldElement& cu = h.mult_at(x, y, u);
                    if (cu.is_zero()) continue;
                    for (const auto& [r, s, ca] : h.views.comult_of[a])
                        dd.comult_at(ix(u, a), ix(y, r), ix(x, s)) += cu * ca;
                }

    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t a = 0; a < n; ++a) {
            dd.unit[ix(u, a)] = h.counit[u] * h.unit[a];
            dd.counit[ix(u, a)] = h.unit[u] * h.counit[a];
        }
    dd.finalize();

    // antipode: S(f |x| h) = (eps |x| S h) (S*^{-1} f |x| 1), S*^{-1} = (S^{-1})^T
    Matrix s(f, nn, nn);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t a = 0; a < n; ++a) {
            Vec left = vec_zero(f, nn);  // eps |x| S e_a
            for (std::size_t v = 0; v < n; ++v) {
                if (h.counit[v].is_zero()) continue;
                for (std::size_t m = 0; m < n; ++m) {
                    const FieldElement& sm = h.antipode.at(m, a);
                    if (!sm.is_zero()) left[ix(v, m)] += h.counit[v] * sm;
                }
            }
            Vec right = vec_zero(f, nn);  // (S^{-1})^T e^u |x| 1
            for (std::size_t v = 0; v < n; ++v) {
                const FieldElement& c = h.antipode_inverse.at(u, v);
                if (c.is_zero()) continue;
                for (std::size_t m = 0; m < n; ++m)
                    if (!h.unit[m].is_zero()) right[ix(v, m)] += c * h.unit[m];
            }
            s.set_col(ix(u, a), dd.multiply(left, right));
        }
    dd.antipode = s;
    dd.antipode_inverse = inverse(s);
    dd.finalize();
    require_axioms(dd, "drinfeld_double");

    DrinfeldDouble out{std::move(dd), Matrix(f, nn, n), Matrix(f, nn, n), TensorElem{}};
    for (std::size_t a = 0; a < n; ++a) {
        Vec col = vec_zero(f, nn);
        for (std::size_t v = 0; v < n; ++v)
            if (!h.counit[v].is_zero()) col[ix(v, a)] = h.counit[v];
        out.embed_h.set_col(a, col);
    }
    for (std::size_t u = 0; u < n; ++u) {
        Vec col = vec_zero(f, nn);
        for (std::size_t m = 0; m < n; ++m)
            if (!h.unit[m].is_zero()) col[ix(u, m)] = h.unit[m];
        out.embed_dual.set_col(u, col);
    }
    // R = sum_i (eps |x| e_i) (x) (e^i |x| 1)
    out.r_matrix.dim = nn;
    out.r_matrix.legs = 2;
    for (std::size_t i = 0; i < n; ++i) {
        Vec first = out.embed_h.col(i);
        Vec second = out.embed_dual.col(i);
        for (std::size_t p = 0; p < nn; ++p) {
            if (first[p].is_zero()) continue;
            for (std::size_t q = 0; q < nn; ++q)
                if (!second[q].is_zero())
                    out.r_matrix.terms.emplace_back(
                        static_cast<std::int64_t>(p) * static_cast<std::int64_t>(nn) + q,
                        first[p] * second[q]);
        }
    }
    out.r_matrix.normalize();
    return out;
}

QuasitriangularReport quasitriangular_checks(const HopfAlgebra& h, const TensorElem& r) {
    QuasitriangularReport rep;
    TensorElem sr = tensor_apply_leg(r, h.antipode, 0);
    rep.r_invertible = tensor_mul(h, r, sr) == tensor_unit(h, 2);

    rep.intertwines = true;
    for (std::size_t i = 0; i < h.dim && rep.intertwines; ++i) {
        TensorElem d = h.comult_elem(h.basis_vector(i));
        TensorElem dcop = tensor_swap_legs(d, 0, 1);
        rep.intertwines = tensor_mul(h, r, d) == tensor_mul(h, dcop, r);
    }

    TensorElem one1 = tensor_from_vec(h.unit);
    TensorElem r13 = tensor_swap_legs(tensor_outer(r, one1), 1, 2);
    TensorElem r23 = tensor_outer(one1, r);
    TensorElem r12 = tensor_outer(r, one1);
    rep.hexagon_left = tensor_comult_leg(h, r, 0) == tensor_mul(h, r13, r23);
    rep.hexagon_right = tensor_comult_leg(h, r, 1) == tensor_mul(h, r13, r12);
    return rep;
}

// --- smash product -----------------------------------------------------------------

SmashProduct smash_s2(const HopfAlgebra& h) {
    const FieldDescriptor f = h.field;
    const std::size_t n = h.dim;
    const std::int64_t d = h.s2_order();
    const std::size_t dd = static_cast<std::size_t>(d);
    const std::size_t dim = n * dd;
    auto ix = [dd, n](std::size_t j, std::size_t i) { return j * dd + i; };

    std::vector<Matrix> s2pow;  // (S^2)^i for i in [0, d)
    s2pow.push_back(Matrix::identity(f, n));
    Matrix s2 = h.antipode * h.antipode;
    for (std::size_t i = 1; i < dd; ++i) s2pow.push_back(s2pow.back() * s2);

    HopfAlgebra sm(f, dim);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < dd; ++i)
            sm.basis_names[ix(j, i)] = "(" + h.basis_names[j] + ")|xS^" + std::to_string(2 * i);

    // (h |x| S^{2i})(k |x| S^{2j}) = h S^{2i}(k) |x| S^{2(i+j)}
    for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t i1 = 0; i1 < dd; ++i1)
            for (std::size_t j2 = 0; j2 < n; ++j2) {
                Vec im = s2pow[i1].col(j2);  // S^{2 i1}(e_{j2})
                for (std::size_t i2 = 0; i2 < dd; ++i2) {
                    std::size_t ip = (i1 + i2) % dd;
                    for (std::size_t m = 0; m < n; ++m) {
                        if (im[m].is_zero()) continue;
                        for (const auto& [k, mc] : h.views.mult_pair[j1 * n + m])
                            FieldElement::add_mul(sm.mult_at(ix(j1, i1), ix(j2, i2), ix(k, ip)),
                                                  im[m], mc);
                    }
                }
            }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < dd; ++i) {
            for (const auto& [r, s, c] : h.views.comult_of[j])
                sm.comult_at(ix(j, i), ix(r, i), ix(s, i)) = c;
            sm.counit[ix(j, i)] = h.counit[j];
        }
    for (std::size_t j = 0; j < n; ++j) sm.unit[ix(j, 0)] = h.unit[j];

    // S(h |x| S^{2i}) = S^{-2i+1}(h) |x| S^{-2i}
    Matrix s(f, dim, dim);
    for (std::size_t i = 0; i < dd; ++i) {
        std::size_t im = (dd - i) % dd;  // -i mod d
        Matrix map = h.antipode * s2pow[im];  // S . (S^2)^{-i} = S^{1-2i}
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = map.col(j);
            for (std::size_t m = 0; m < n; ++m)
                if (!v[m].is_zero()) s.at(ix(m, im), ix(j, i)) = v[m];
        }
    }
    sm.antipode = s;
    sm.antipode_inverse = inverse(s);
    sm.finalize();
    require_axioms(sm, "smash_s2");

    SmashProduct out{std::move(sm), d, Matrix(f, dim, n), vec_zero(f, dim)};
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = vec_zero(f, dim);
        col[ix(j, 0)] = FieldElement::one(f);
        out.embed.set_col(j, col);
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!h.unit[j].is_zero()) out.pivot[ix(j, static_cast<std::size_t>(1 % d))] = h.unit[j];
    return out;
}

}  // namespace hopfexp
