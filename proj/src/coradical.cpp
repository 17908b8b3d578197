#include "hopfexp/coradical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hopfexp/exponent.hpp"

namespace hopfexp {

// --- matrices over H ---------------------------------------------------------------

HMatrix::HMatrix(const HopfAlgebra& h, std::size_t r, std::size_t c)
    : rows(r), cols(c), entries(r * c, vec_zero(h.field, h.dim)) {}

bool HMatrix::is_zero() const {
    for (const auto& e : entries)
        if (!vec_is_zero(e)) return false;
    return true;
}

HMatrix hmat_identity(const HopfAlgebra& h, std::size_t r) {
    HMatrix m(h, r, r);
    for (std::size_t i = 0; i < r; ++i) m.at(i, i) = h.unit;
    return m;
}

HMatrix hmat_add(const HMatrix& a, const HMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error(Errc::DimensionMismatch, "hmat_add");
    HMatrix r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = vec_add(r.entries[i], b.entries[i]);
    return r;
}

HMatrix hmat_sub(const HMatrix& a, const HMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error(Errc::DimensionMismatch, "hmat_sub");
    HMatrix r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = vec_sub(r.entries[i], b.entries[i]);
    return r;
}

HMatrix hmat_mul(const HopfAlgebra& h, const HMatrix& a, const HMatrix& b) {
    if (a.cols != b.rows) throw Error(Errc::DimensionMismatch, "hmat_mul");
    HMatrix r(h, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) {
            Vec acc = vec_zero(h.field, h.dim);
            for (std::size_t k = 0; k < a.cols; ++k)
                acc = vec_add(acc, h.multiply(a.at(i, k), b.at(k, j)));
            r.at(i, j) = std::move(acc);
        }
    return r;
}

HMatrix hmat_transpose(const HMatrix& a) {
    HMatrix r;
    r.rows = a.cols;
    r.cols = a.rows;
    r.entries.resize(a.entries.size());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r.entries[j * a.rows + i] = a.at(i, j);
    return r;
}

HMatrix hmat_apply(const Matrix& endo, const HMatrix& a) {
    HMatrix r = a;
    for (auto& e : r.entries) e = endo * e;
    return r;
}

HMatrix hmat_scale(const HMatrix& a, const FieldElement& c) {
    HMatrix r = a;
    for (auto& e : r.entries) e = vec_scale(e, c);
    return r;
}

HMatrix hmat_scale_left(const HopfAlgebra& h, const Vec& elem, const HMatrix& a) {
    HMatrix r = a;
    for (auto& e : r.entries) e = h.multiply(elem, e);
    return r;
}

HMatrix hmat_scale_right(const HopfAlgebra& h, const HMatrix& a, const Vec& elem) {
    HMatrix r = a;
    for (auto& e : r.entries) e = h.multiply(e, elem);
    return r;
}

HMatrix hmat_pow(const HopfAlgebra& h, const HMatrix& a, std::int64_t n) {
    if (a.rows != a.cols) throw Error(Errc::DimensionMismatch, "hmat_pow");
    if (n < 0) throw Error(Errc::DimensionMismatch, "hmat_pow needs n >= 0");
    HMatrix acc = hmat_identity(h, a.rows);
    for (std::int64_t k = 0; k < n; ++k) acc = hmat_mul(h, acc, a);
    return acc;
}

bool is_multiplicative_matrix(const HopfAlgebra& h, const MultiplicativeMatrix& m) {
    if (m.rows != m.cols) return false;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            TensorElem lhs = h.comult_elem(m.at(i, j));
            TensorElem rhs;
            rhs.dim = h.dim;
            rhs.legs = 2;
            for (std::size_t k = 0; k < m.rows; ++k)
                rhs = tensor_add(rhs, tensor_outer(tensor_from_vec(m.at(i, k)),
                                                   tensor_from_vec(m.at(k, j))));
            if (!(lhs == rhs)) return false;
            FieldElement e = h.counit_of(m.at(i, j));
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

bool is_basic_multiplicative_matrix(const HopfAlgebra& h, const MultiplicativeMatrix& m) {
    if (!is_multiplicative_matrix(h, m)) return false;
    Echelon ech(h.field, h.dim);
    for (const auto& e : m.entries)
        if (!ech.insert(e)) return false;
    return true;
}

MultiplicativeMatrix unit_multiplicative_matrix(const HopfAlgebra& h) {
    MultiplicativeMatrix m(h, 1, 1);
    m.at(0, 0) = h.unit;
    return m;
}

// --- internal structure-constant algebra -------------------------------------------

namespace {

struct SCAlgebra {
    FieldDescriptor f = FieldDescriptor::rational();
    std::size_t dim = 0;
    std::vector<FieldElement> mult;  // (i*dim + j)*dim + k
    Vec unit;

    const FieldElement& at(std::size_t i, std::size_t j, std::size_t k) const {
        return mult[(i * dim + j) * dim + k];
    }
    FieldElement& at(std::size_t i, std::size_t j, std::size_t k) {
        return mult[(i * dim + j) * dim + k];
    }

    Vec multiply(const Vec& a, const Vec& b) const {
        Vec out = vec_zero(f, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (b[j].is_zero()) continue;
                FieldElement c = a[i] * b[j];
                for (std::size_t k = 0; k < dim; ++k) {
                    const FieldElement& m = at(i, j, k);
                    if (!m.is_zero()) FieldElement::add_mul(out[k], c, m);
                }
            }
        }
        return out;
    }

    Matrix left_mult_matrix(const Vec& a) const {
        Matrix m(f, dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            Vec e = vec_zero(f, dim);
            e[j] = FieldElement::one(f);
            m.set_col(j, multiply(a, e));
        }
        return m;
    }

    Polynomial element_min_poly(const Vec& a) const {
        return relative_min_poly(left_mult_matrix(a), unit);
    }

    Vec eval_poly(const Polynomial& p, const Vec& a) const {
        // p(a) with a^0 = unit of this algebra
        Vec acc = vec_zero(f, dim);
        for (std::int64_t i = p.degree(); i >= 0; --i) {
            acc = multiply(acc, a);
            FieldElement c = p.coeff(static_cast<std::size_t>(i));
            if (!c.is_zero()) acc = vec_add(acc, vec_scale(unit, c));
        }
        return acc;
    }
};

SCAlgebra dual_algebra(const HopfAlgebra& h) {
    SCAlgebra a;
    a.f = h.field;
    a.dim = h.dim;
    a.mult.assign(h.dim * h.dim * h.dim, FieldElement::zero(h.field));
    for (std::size_t u = 0; u < h.dim; ++u)
        for (std::size_t v = 0; v < h.dim; ++v)
            for (std::size_t w = 0; w < h.dim; ++w) a.at(u, v, w) = h.comult_at(w, u, v);
    a.unit = h.counit;
    return a;
}

// coordinates of vectors relative to a basis (columns), shared elimination
struct SpanCoords {
    Matrix basis_cols;
    explicit SpanCoords(const FieldDescriptor& f, std::size_t ambient, const std::vector<Vec>& basis)
        : basis_cols(Matrix::from_columns(f, ambient, basis)) {}
    Vec coords(const Vec& v) const {
        SolveResult r = solve_linear(basis_cols, v);
        if (!r.ok()) throw Error(Errc::Internal, "vector outside span");
        return *r.solution;
    }
};

/// Unital subalgebra on an explicit basis; products must stay in the span.
SCAlgebra span_subalgebra(const SCAlgebra& big, const std::vector<Vec>& basis, const Vec& unit_elem) {
    SCAlgebra s;
    s.f = big.f;
    s.dim = basis.size();
    s.mult.assign(s.dim * s.dim * s.dim, FieldElement::zero(big.f));
    SpanCoords sc(big.f, big.dim, basis);
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j) {
            Vec p = sc.coords(big.multiply(basis[i], basis[j]));
            for (std::size_t k = 0; k < s.dim; ++k) s.at(i, j, k) = p[k];
        }
    s.unit = sc.coords(unit_elem);
    return s;
}

std::vector<Vec> radical_char0(const SCAlgebra& a) {
    // Dickson: kernel of the trace form Tr(L_u L_v) = Tr(L_{uv})
    Vec tr = vec_zero(a.f, a.dim);
    for (std::size_t c = 0; c < a.dim; ++c)
        for (std::size_t w = 0; w < a.dim; ++w) tr[c] += a.at(c, w, w);
    Matrix t(a.f, a.dim, a.dim);
    for (std::size_t u = 0; u < a.dim; ++u)
        for (std::size_t v = 0; v < a.dim; ++v) {
            FieldElement acc = FieldElement::zero(a.f);
            for (std::size_t c = 0; c < a.dim; ++c) {
                const FieldElement& m = a.at(u, v, c);
                if (!m.is_zero()) FieldElement::add_mul(acc, m, tr[c]);
            }
            t.at(u, v) = acc;
        }
    return kernel_basis(t);
}

std::vector<Vec> radical_char_p(const SCAlgebra& a) {
    // iterated chain: I_{i} = {x in I_{i-1} : e_{p^i}(L_{x y}) = 0 for all y in I_{i-1}},
    // with e_j read off the characteristic polynomial of the regular representation
    const std::int64_t p = a.f.characteristic();
    const std::size_t n = a.dim;
    std::vector<Vec> current;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e = vec_zero(a.f, n);
        e[i] = FieldElement::one(a.f);
        current.push_back(std::move(e));
    }
    std::int64_t pk = 1;
    while (pk <= static_cast<std::int64_t>(n) && !current.empty()) {
        const std::size_t m = current.size();
        Matrix cond(a.f, m, m);
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t) {
                Vec prod = a.multiply(current[s], current[t]);
                Polynomial cp = charpoly(a.left_mult_matrix(prod));
                cond.at(s, t) = cp.coeff(n - static_cast<std::size_t>(pk));
            }
        // solve sum_t alpha_t cond[s][t] = 0 for all s
        std::vector<Vec> alphas = kernel_basis(cond);
        std::vector<Vec> next;
        for (const auto& alpha : alphas) {
            Vec v = vec_zero(a.f, n);
            for (std::size_t t = 0; t < m; ++t)
                if (!alpha[t].is_zero()) v = vec_add(v, vec_scale(current[t], alpha[t]));
            next.push_back(std::move(v));
        }
        current = std::move(next);
        pk *= p;
    }
    return current;
}

std::vector<Vec> radical_basis(const SCAlgebra& a) {
    if (a.dim == 0) return {};
    return a.f.characteristic() == 0 ? radical_char0(a) : radical_char_p(a);
}

struct QuotientAlgebra {
    SCAlgebra q;
    Matrix lift{FieldDescriptor::rational(), 0, 0};  // quotient coords -> ambient coords
    Echelon full{FieldDescriptor::rational(), 0};    // ideal generators, then coset reps
    std::vector<std::size_t> rep_slots;              // generator slot of each coset rep

    Vec project(const Vec& v) const {
        auto coords = full.express(v);
        if (!coords) throw Error(Errc::Internal, "quotient projection failed");
        Vec out;
        out.reserve(rep_slots.size());
        for (std::size_t slot : rep_slots) out.push_back((*coords)[slot]);
        return out;
    }
};

QuotientAlgebra quotient_algebra(const SCAlgebra& a, const std::vector<Vec>& ideal) {
    QuotientAlgebra out;
    out.full = Echelon(a.f, a.dim, /*track=*/true);
    for (const auto& v : ideal)
        if (!out.full.insert(v)) throw Error(Errc::Internal, "dependent ideal basis");
    std::vector<Vec> reps;
    for (std::size_t i = 0; i < a.dim; ++i) {
        Vec e = vec_zero(a.f, a.dim);
        e[i] = FieldElement::one(a.f);
        std::size_t slot = out.full.generators();
        if (out.full.insert(e)) {
            reps.push_back(std::move(e));
            out.rep_slots.push_back(slot);
        }
    }
    out.lift = Matrix::from_columns(a.f, a.dim, reps);
    const std::size_t m = reps.size();
    out.q.f = a.f;
    out.q.dim = m;
    out.q.mult.assign(m * m * m, FieldElement::zero(a.f));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec prod = out.project(a.multiply(reps[i], reps[j]));
            for (std::size_t k = 0; k < m; ++k) out.q.at(i, j, k) = prod[k];
        }
    out.q.unit = out.project(a.unit);
    return out;
}

}  // namespace

// --- coradical ---------------------------------------------------------------------

std::vector<Vec> dual_radical_basis(const HopfAlgebra& h) {
    return radical_basis(dual_algebra(h));
}

namespace {

std::vector<Vec> annihilator_in_h(const HopfAlgebra& h, const std::vector<Vec>& functionals) {
    if (functionals.empty()) {
        std::vector<Vec> all;
        for (std::size_t i = 0; i < h.dim; ++i) all.push_back(h.basis_vector(i));
        return all;
    }
    Matrix rows(h.field, functionals.size(), h.dim);
    for (std::size_t i = 0; i < functionals.size(); ++i)
        for (std::size_t j = 0; j < h.dim; ++j) rows.at(i, j) = functionals[i][j];
    return kernel_basis(rows);
}

}  // namespace

CoradicalData coradical(const HopfAlgebra& h) {
    CoradicalData data;
    data.h0_basis = annihilator_in_h(h, dual_radical_basis(h));
    // gate: the dual quotient by its radical must re-test as radical free
    SCAlgebra a = dual_algebra(h);
    std::vector<Vec> rad = radical_basis(a);
    QuotientAlgebra q = quotient_algebra(a, rad);
    if (!radical_basis(q.q).empty())
        throw Error(Errc::Internal, "dual quotient retains a radical");
    // and H_0 must be a subcoalgebra
    Matrix h0cols = Matrix::from_columns(h.field, h.dim, data.h0_basis);
    const std::size_t k = data.h0_basis.size();
    Matrix pairs(h.field, h.dim * h.dim, k * k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t i = 0; i < h.dim; ++i)
                for (std::size_t j = 0; j < h.dim; ++j)
                    pairs.at(i * h.dim + j, x * k + y) = data.h0_basis[x][i] * data.h0_basis[y][j];
    for (const auto& b : data.h0_basis) {
        TensorElem d = h.comult_elem(b);
        Vec dense = vec_zero(h.field, h.dim * h.dim);
        for (const auto& [idx, c] : d.terms) dense[static_cast<std::size_t>(idx)] = c;
        if (!solve_linear(pairs, dense).ok())
            throw Error(Errc::Internal, "computed H_0 is not a subcoalgebra");
    }
    return data;
}

CoradicalData coradical_filtration(const HopfAlgebra& h) {
    CoradicalData data = coradical(h);
    const std::size_t n = h.dim;
    // Delta as a dim^2 x dim matrix
    Matrix dmat(h.field, n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, k, c] : h.views.comult_of[i])
            dmat.at(static_cast<std::size_t>(j) * n + k, i) = c;

    std::vector<Vec> prev = data.h0_basis;
    data.filtration.push_back(prev);
    while (prev.size() < n) {
        // W = H (x) H_{n-1} + H_0 (x) H inside H (x) H
        std::vector<Vec> w;
        for (std::size_t i = 0; i < n; ++i) {
            Vec e = h.basis_vector(i);
            for (const auto& b : prev) {
                Vec t = vec_zero(h.field, n * n);
                for (std::size_t x = 0; x < n; ++x)
                    if (!e[x].is_zero())
                        for (std::size_t y = 0; y < n; ++y)
                            if (!b[y].is_zero()) t[x * n + y] = e[x] * b[y];
                w.push_back(std::move(t));
            }
            for (const auto& b : data.h0_basis) {
                Vec t = vec_zero(h.field, n * n);
                for (std::size_t x = 0; x < n; ++x)
                    if (!b[x].is_zero())
                        for (std::size_t y = 0; y < n; ++y)
                            if (!e[y].is_zero()) t[x * n + y] = b[x] * e[y];
                w.push_back(std::move(t));
            }
        }
        std::vector<Vec> ann = annihilator(w, n * n, h.field);
        Matrix cond(h.field, ann.size(), n);
        for (std::size_t r = 0; r < ann.size(); ++r) {
            // row r of (ann_r . Delta)
            for (std::size_t i = 0; i < n; ++i) {
                FieldElement acc = FieldElement::zero(h.field);
                for (const auto& [j, k, c] : h.views.comult_of[i])
                    FieldElement::add_mul(acc, c, ann[r][static_cast<std::size_t>(j) * n + k]);
                cond.at(r, i) = acc;
            }
        }
        std::vector<Vec> next = kernel_basis(cond);
        if (next.size() == prev.size())
            throw Error(Errc::Internal, "coradical filtration failed to grow");
        data.filtration.push_back(next);
        prev = std::move(next);
    }
    data.loewy_length = static_cast<std::int64_t>(data.filtration.size());
    data.simples = simple_decomposition(h);
    return data;
}

bool is_dual_chevalley(const HopfAlgebra& h) {
    CoradicalData data = coradical(h);
    Echelon span(h.field, h.dim);
    for (const auto& b : data.h0_basis) span.insert(b);
    if (!span.contains(h.unit)) return false;
    for (const auto& a : data.h0_basis) {
        if (!span.contains(h.antipode * a)) return false;
        for (const auto& b : data.h0_basis)
            if (!span.contains(h.multiply(a, b))) return false;
    }
    return true;
}

// --- factorization support for separating elements -----------------------------------

namespace {

// Full factorization over characteristic 0 when certifiable: roots of unity in
// the field, rational roots, and cyclotomic pieces over Q. nullopt = cannot split.
std::optional<std::vector<std::pair<Polynomial, int>>> factor_char0(const Polynomial& mu) {
    const FieldDescriptor f = mu.descriptor();
    std::vector<std::pair<Polynomial, int>> out;
    for (auto& [part, multiplicity] : squarefree_decomposition_char0(mu.monic())) {
        Polynomial rest = part;
        Polynomial x = Polynomial::x(f);
        // factors of x
        while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
            out.emplace_back(x, multiplicity);
            rest = (rest / x).monic();
        }
        // linear factors at roots of unity available in the field
        std::int64_t ru = f.kind == FieldKind::Cyclotomic ? std::lcm<std::int64_t>(2, f.param) : 2;
        for (const auto& u : roots_of_unity(f, ru)) {
            while (rest.degree() > 0 && rest.eval(u).is_zero()) {
                Polynomial lin = x - Polynomial::constant(u);
                out.emplace_back(lin, multiplicity);
                rest = (rest / lin).monic();
            }
        }
        // rational roots (coefficients must all be rational)
        bool rational_coeffs = f.kind == FieldKind::Rational;
        if (f.kind == FieldKind::Cyclotomic) {
            rational_coeffs = true;
            for (std::int64_t d = 0; d <= rest.degree() && rational_coeffs; ++d) {
                const auto& cy = rest.coeff(static_cast<std::size_t>(d)).cyc();
                for (std::size_t t = 1; t < cy.size(); ++t)
                    if (cy[t] != 0) { rational_coeffs = false; break; }
            }
        }
        if (rational_coeffs && rest.degree() > 0) {
            // clear denominators, then p/q with p | constant and q | leading
            auto rat_of = [&](std::size_t i) -> mpq_class {
                const FieldElement& c = rest.coeff(i);
                return f.kind == FieldKind::Rational ? c.rat() : c.cyc()[0];
            };
            mpz_class den = 1;
            for (std::int64_t d = 0; d <= rest.degree(); ++d)
                den = lcm_mpz(den, rat_of(static_cast<std::size_t>(d)).get_den());
            mpz_class c0 = rat_of(0).get_num() * (den / rat_of(0).get_den());
            mpz_class lead = rat_of(static_cast<std::size_t>(rest.degree())).get_num() *
                             (den / rat_of(static_cast<std::size_t>(rest.degree())).get_den());
            if (c0 != 0) {
                std::vector<mpz_class> ps{1}, qs{1};
                for (auto& [prime, e] : factor_mpz(abs(c0))) {
                    std::size_t sz = ps.size();
                    mpz_class pk = 1;
                    for (int t = 1; t <= e; ++t) {
                        pk *= prime;
                        for (std::size_t s = 0; s < sz; ++s) ps.push_back(ps[s] * pk);
                    }
                }
                for (auto& [prime, e] : factor_mpz(abs(lead))) {
                    std::size_t sz = qs.size();
                    mpz_class pk = 1;
                    for (int t = 1; t <= e; ++t) {
                        pk *= prime;
                        for (std::size_t s = 0; s < sz; ++s) qs.push_back(qs[s] * pk);
                    }
                }
                for (const auto& pnum : ps)
                    for (const auto& qden : qs)
                        for (int sign : {1, -1}) {
                            if (rest.degree() == 0) break;
                            mpq_class root(sign * pnum, qden);
                            root.canonicalize();
                            FieldElement r = FieldElement::from_rational(f, root);
                            while (rest.degree() > 0 && rest.eval(r).is_zero()) {
                                Polynomial lin = x - Polynomial::constant(r);
                                out.emplace_back(lin, multiplicity);
                                rest = (rest / lin).monic();
                            }
                        }
            }
        }
        // cyclotomic pieces; over Q each ascending gcd with x^n - 1 is Phi_n
        if (f.kind == FieldKind::Rational && rest.degree() > 0) {
            std::int64_t bound = rest.degree();
            for (std::int64_t n = 1; rest.degree() > 0 && n <= 2 * bound * bound + 4; ++n) {
                if (euler_phi(n) > bound) continue;
                Polynomial g = poly_gcd(rest, Polynomial::x_pow_minus_one(f, n));
                if (g.degree() > 0) {
                    out.emplace_back(g, multiplicity);  // = Phi_n, irreducible over Q
                    rest = (rest / g).monic();
                }
            }
        }
        if (rest.degree() > 0) return std::nullopt;  // cannot certify the remainder
    }
    return out;
}

std::optional<std::vector<std::pair<Polynomial, int>>> factor_element_min_poly(
    const Polynomial& mu, std::uint64_t seed) {
    if (mu.descriptor().characteristic() == 0) return factor_char0(mu);
    return factor_prime_field(mu, seed);
}

// orthogonal idempotent decomposition of k[z] inside an algebra, one idempotent
// per distinct irreducible factor of the minimal polynomial
std::vector<Vec> crt_idempotents(const SCAlgebra& a, const Vec& z, const Polynomial& mu,
                                 const std::vector<std::pair<Polynomial, int>>& factors) {
    std::vector<Vec> out;
    for (const auto& [fac, m] : factors) {
        Polynomial fm = fac;
        for (int t = 1; t < m; ++t) fm = fm * fac;
        Polynomial g = mu / fm;
        Polynomial u = poly_invmod(g % fm, fm);
        Vec e = a.eval_poly((g * u) % mu, z);
        if (a.multiply(e, e) != e) throw Error(Errc::Internal, "CRT idempotent is not idempotent");
        out.push_back(std::move(e));
    }
    return out;
}

struct DecompositionContext {
    SCAlgebra a;                 // dual algebra of H
    std::vector<Vec> rad;        // radical of a
    QuotientAlgebra q;           // semisimple quotient
    std::vector<std::vector<Vec>> blocks;  // block bases, quotient coords
    std::vector<SimpleSubcoalgebra> simples;
};

// Split a semisimple two-sided summand into simple blocks, recursing on the
// factorization of minimal polynomials of central elements. A part that resists
// every candidate must itself certify simplicity, else the budget is exhausted.
void split_blocks(const SCAlgebra& q, const std::vector<Vec>& part_basis, const Vec& part_unit,
                  std::uint64_t seed, std::vector<std::vector<Vec>>& out) {
    const std::size_t m = part_basis.size();
    if (m == 1) {
        out.push_back(part_basis);
        return;
    }
    SCAlgebra part = span_subalgebra(q, part_basis, part_unit);
    Matrix cen(part.f, m * m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t w = 0; w < m; ++w)
            for (std::size_t v = 0; v < m; ++v)
                cen.at(a * m + w, v) = part.at(v, a, w) - part.at(a, v, w);
    std::vector<Vec> center = kernel_basis(cen);

    std::vector<Vec> candidates = center;
    {
        Vec z = vec_zero(part.f, m);
        for (std::size_t t = 0; t < center.size(); ++t)
            z = vec_add(z, vec_scale(center[t],
                                     FieldElement::from_integer(part.f, static_cast<long>(t + 1))));
        candidates.push_back(z);
    }
    SplitMix64 rng(seed ^ 0xc0ffee123456789ULL);
    for (int trial = 0; trial < 61; ++trial) {
        Vec z = vec_zero(part.f, m);
        for (const auto& zc : center) {
            long w = static_cast<long>(rng.below(2048)) - 1024;
            z = vec_add(z, vec_scale(zc, FieldElement::from_integer(part.f, w)));
        }
        candidates.push_back(z);
    }

    for (const auto& z : candidates) {
        Polynomial mu = part.element_min_poly(z);
        if (mu.degree() < 2) continue;
        auto factors = factor_element_min_poly(mu, seed);
        if (!factors || factors->size() < 2) continue;
        std::vector<Vec> idem = crt_idempotents(part, z, mu, *factors);
        for (const auto& e_part : idem) {
            Vec e = vec_zero(q.f, q.dim);
            for (std::size_t t = 0; t < m; ++t)
                if (!e_part[t].is_zero()) e = vec_add(e, vec_scale(part_basis[t], e_part[t]));
            Echelon span(q.f, q.dim);
            std::vector<Vec> sub;
            for (const auto& b : part_basis) {
                Vec v = q.multiply(b, e);
                if (span.insert(v)) sub.push_back(std::move(v));
            }
            split_blocks(q, sub, e, seed, out);
        }
        return;
    }
    // no central splitter found: this must be a single simple block; certify by
    // checking the two-sided ideal generated by each basis element is everything
    for (const auto& b : part_basis) {
        Echelon ideal(q.f, q.dim);
        std::size_t count = 0;
        for (const auto& x : part_basis)
            for (const auto& y : part_basis)
                if (ideal.insert(q.multiply(x, q.multiply(b, y)))) ++count;
        if (count != m)
            throw Error(Errc::SeparatingElementNotFound,
                        "part is not simple but no central splitter was found in budget");
    }
    out.push_back(part_basis);
}

DecompositionContext decompose_context(const HopfAlgebra& h, std::uint64_t seed) {
    DecompositionContext ctx;
    ctx.a = dual_algebra(h);
    ctx.rad = radical_basis(ctx.a);
    ctx.q = quotient_algebra(ctx.a, ctx.rad);
    const SCAlgebra& q = ctx.q.q;
    const std::size_t m = q.dim;

    std::vector<Vec> full;
    for (std::size_t t = 0; t < m; ++t) {
        Vec e = vec_zero(h.field, m);
        e[t] = FieldElement::one(h.field);
        full.push_back(std::move(e));
    }
    split_blocks(q, full, q.unit, seed, ctx.blocks);

    // pull each block back to its simple subcoalgebra
    for (std::size_t bi = 0; bi < ctx.blocks.size(); ++bi) {
        std::vector<Vec> functionals = ctx.rad;
        for (std::size_t bj = 0; bj < ctx.blocks.size(); ++bj) {
            if (bi == bj) continue;
            for (const auto& v : ctx.blocks[bj]) functionals.push_back(ctx.q.lift * v);
        }
        SimpleSubcoalgebra s;
        s.basis = annihilator_in_h(h, functionals);
        s.dim = s.basis.size();
        if (s.dim != ctx.blocks[bi].size())
            throw Error(Errc::Internal, "simple subcoalgebra dimension mismatch");
        for (const auto& v : ctx.blocks[bi]) s.dual_block_basis.push_back(ctx.q.lift * v);
        Matrix cols = Matrix::from_columns(h.field, h.dim, s.basis);
        s.contains_unit = s.dim == 1 && solve_linear(cols, h.unit).ok();
        ctx.simples.push_back(std::move(s));
    }
    return ctx;
}

}  // namespace

std::vector<SimpleSubcoalgebra> simple_decomposition(const HopfAlgebra& h, std::uint64_t seed) {
    return decompose_context(h, seed).simples;
}

// --- basic multiplicative matrices ---------------------------------------------------

namespace {

struct CornerSplit {
    std::vector<Vec> idempotents;  // primitive orthogonal, quotient coords
    bool split = true;
};

// recursively split an idempotent into primitive orthogonal idempotents inside
// the unital algebra (block, u); NotSplit when an indecomposable corner of
// dimension > 1 resists every candidate (division algebra over the base field)
bool split_idempotent(const SCAlgebra& q, const std::vector<Vec>& block_basis, const Vec& u,
                      std::uint64_t seed, std::vector<Vec>& out) {
    // corner u B u
    Echelon span(q.f, q.dim);
    std::vector<Vec> corner;
    for (const auto& b : block_basis) {
        Vec v = q.multiply(u, q.multiply(b, u));
        if (span.insert(v)) corner.push_back(std::move(v));
    }
    if (corner.size() == 1) {
        out.push_back(u);
        return true;
    }
    SCAlgebra ca = span_subalgebra(q, corner, u);

    std::vector<Vec> candidates;  // corner coordinates
    for (std::size_t t = 0; t < corner.size(); ++t) {
        Vec e = vec_zero(q.f, corner.size());
        e[t] = FieldElement::one(q.f);
        candidates.push_back(std::move(e));
    }
    SplitMix64 rng(seed ^ 0x517eaf00dULL);
    for (int trial = 0; trial < 48; ++trial) {
        Vec z = vec_zero(q.f, corner.size());
        for (std::size_t t = 0; t < corner.size(); ++t) {
            long w = static_cast<long>(rng.below(1024)) - 512;
            z[t] += FieldElement::from_integer(q.f, w);
        }
        candidates.push_back(std::move(z));
    }
    for (const auto& zc : candidates) {
        Polynomial mu = ca.element_min_poly(zc);
        if (mu.degree() < 2) continue;
        auto factors = factor_element_min_poly(mu, seed);
        if (!factors || factors->size() < 2) continue;
        std::vector<Vec> parts = crt_idempotents(ca, zc, mu, *factors);
        std::vector<Vec> collected;
        bool ok = true;
        for (const auto& e_corner : parts) {
            // back to quotient coordinates
            Vec e = vec_zero(q.f, q.dim);
            for (std::size_t t = 0; t < corner.size(); ++t)
                if (!e_corner[t].is_zero()) e = vec_add(e, vec_scale(corner[t], e_corner[t]));
            if (!split_idempotent(q, block_basis, e, seed, collected)) { ok = false; break; }
        }
        if (!ok) return false;  // an indecomposable corner of dimension > 1 below
        out.insert(out.end(), collected.begin(), collected.end());
        return true;
    }
    return false;  // every candidate has an irreducible minimal polynomial
}

}  // namespace

std::optional<MultiplicativeMatrix> basic_multiplicative_matrix(const HopfAlgebra& h,
                                                                const SimpleSubcoalgebra& s,
                                                                std::uint64_t seed) {
    if (s.dim == 1) {
        FieldElement e = h.counit_of(s.basis[0]);
        if (e.is_zero()) throw Error(Errc::Internal, "grouplike normalization failed");
        MultiplicativeMatrix m(h, 1, 1);
        m.at(0, 0) = vec_scale(s.basis[0], e.inverse());
        if (!is_basic_multiplicative_matrix(h, m))
            throw Error(Errc::Internal, "1x1 multiplicative matrix check failed");
        return m;
    }
    DecompositionContext ctx = decompose_context(h, seed);
    // locate the block matching this simple subcoalgebra
    Echelon target(h.field, h.dim);
    for (const auto& b : s.basis) target.insert(b);
    std::size_t found = ctx.simples.size();
    for (std::size_t i = 0; i < ctx.simples.size(); ++i) {
        if (ctx.simples[i].dim != s.dim) continue;
        bool same = true;
        for (const auto& b : ctx.simples[i].basis)
            if (!target.contains(b)) { same = false; break; }
        if (same) { found = i; break; }
    }
    if (found == ctx.simples.size())
        throw Error(Errc::Internal, "simple subcoalgebra does not match the decomposition");
    const std::vector<Vec>& block = ctx.blocks[found];
    const SCAlgebra& q = ctx.q.q;
    // block unit: solve sum of block elements acting as identity on the block
    // (the central idempotent): it is the unit of span_subalgebra
    // recover it as the unique idempotent central in the block: project q.unit
    // onto the block: e = unit * (block projector) — the central idempotent is
    // q.unit restricted: compute as the component of q.unit in the block span
    // across the full block decomposition
    Vec e_block = vec_zero(h.field, q.dim);
    {
        // q.unit = sum of central idempotents; solve coordinates over all blocks
        std::vector<Vec> all;
        for (const auto& blk : ctx.blocks)
            for (const auto& v : blk) all.push_back(v);
        SpanCoords sc(h.field, q.dim, all);
        Vec coords = sc.coords(q.unit);
        std::size_t off = 0;
        for (std::size_t bi = 0; bi < ctx.blocks.size(); ++bi) {
            if (bi == found) {
                for (std::size_t t = 0; t < ctx.blocks[bi].size(); ++t)
                    if (!coords[off + t].is_zero())
                        e_block = vec_add(e_block, vec_scale(ctx.blocks[bi][t], coords[off + t]));
            }
            off += ctx.blocks[bi].size();
        }
    }
    if (q.multiply(e_block, e_block) != e_block)
        throw Error(Errc::Internal, "block identity is not idempotent");

    std::vector<Vec> prim;
    if (!split_idempotent(q, block, e_block, seed, prim)) return std::nullopt;
    const std::size_t r = prim.size();
    if (r * r != s.dim) return std::nullopt;  // corners bigger than the base field

    // matrix units: u_{i1} in e_i B e_1, u_{1j} in e_1 B e_j, normalized
    auto corner_basis = [&](const Vec& ei, const Vec& ej) {
        Echelon span(h.field, q.dim);
        std::vector<Vec> basis;
        for (const auto& b : block) {
            Vec v = q.multiply(ei, q.multiply(b, ej));
            if (span.insert(v)) basis.push_back(std::move(v));
        }
        return basis;
    };
    std::vector<Vec> units(r * r, vec_zero(h.field, q.dim));
    auto unit_at = [&](std::size_t i, std::size_t j) -> Vec& { return units[i * r + j]; };
    for (std::size_t i = 0; i < r; ++i) unit_at(i, i) = prim[i];
    std::vector<Vec> u_i1(r), u_1j(r);
    for (std::size_t i = 1; i < r; ++i) {
        auto ci = corner_basis(prim[i], prim[0]);
        auto cj = corner_basis(prim[0], prim[i]);
        if (ci.size() != 1 || cj.size() != 1) return std::nullopt;
        u_i1[i] = ci[0];
        u_1j[i] = cj[0];
        // scale so that u_{1i} u_{i1} = e_11
        Vec prod = q.multiply(u_1j[i], u_i1[i]);
        SpanCoords sc(h.field, q.dim, {prim[0]});
        Vec lam = sc.coords(prod);
        if (lam[0].is_zero()) throw Error(Errc::Internal, "degenerate corner pairing");
        u_1j[i] = vec_scale(u_1j[i], lam[0].inverse());
        unit_at(i, 0) = u_i1[i];
        unit_at(0, i) = u_1j[i];
    }
    for (std::size_t i = 1; i < r; ++i)
        for (std::size_t j = 1; j < r; ++j)
            if (i != j) unit_at(i, j) = q.multiply(unit_at(i, 0), unit_at(0, j));
    // e_ii from the units must reproduce prim (consistency)
    for (std::size_t i = 1; i < r; ++i) {
        Vec check = q.multiply(unit_at(i, 0), unit_at(0, i));
        if (check != prim[i]) throw Error(Errc::Internal, "matrix units fail e_i1 e_1i = e_ii");
    }
    // multiplicative-matrix entries: <lift(u_kl), c_ij> = delta_ik delta_jl
    Matrix pair(h.field, r * r, s.dim);
    for (std::size_t kl = 0; kl < r * r; ++kl) {
        Vec lifted = ctx.q.lift * units[kl];
        for (std::size_t t = 0; t < s.dim; ++t) {
            FieldElement acc = FieldElement::zero(h.field);
            for (std::size_t u = 0; u < h.dim; ++u)
                FieldElement::add_mul(acc, lifted[u], s.basis[t][u]);
            pair.at(kl, t) = acc;
        }
    }
    MultiplicativeMatrix m(h, r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Vec rhs = vec_zero(h.field, r * r);
            rhs[i * r + j] = FieldElement::one(h.field);
            SolveResult res = solve_linear(pair, rhs);
            if (!res.ok()) throw Error(Errc::Internal, "entry pairing system unsolvable");
            Vec entry = vec_zero(h.field, h.dim);
            for (std::size_t t = 0; t < s.dim; ++t)
                if (!(*res.solution)[t].is_zero())
                    entry = vec_add(entry, vec_scale(s.basis[t], (*res.solution)[t]));
            m.at(i, j) = std::move(entry);
        }
    if (!is_basic_multiplicative_matrix(h, m))
        throw Error(Errc::Internal, "constructed matrix fails the multiplicative identities");
    return m;
}

// --- primitive spaces ----------------------------------------------------------------

PrimitiveMatrixSpace primitive_space(const HopfAlgebra& h, const MultiplicativeMatrix& c,
                                     const MultiplicativeMatrix& d) {
    const std::size_t r = c.rows, s = d.rows, n = h.dim;
    PrimitiveMatrixSpace out;
    out.c = c;
    out.d = d;
    const std::size_t unknowns = r * s * n;
    Matrix sys(h.field, r * s * n * n, unknowns);
    auto col_of = [&](std::size_t i, std::size_t j, std::size_t t) { return (i * s + j) * n + t; };
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            std::size_t row0 = (i * s + j) * n * n;
            // Delta(x_ij)
            for (std::size_t t = 0; t < n; ++t)
                for (const auto& [a, b, cc] : h.views.comult_of[t])
                    sys.at(row0 + static_cast<std::size_t>(a) * n + b, col_of(i, j, t)) += cc;
            // - sum_k c_ik (x) x_kj
            for (std::size_t k = 0; k < r; ++k) {
                const Vec& cik = c.at(i, k);
                for (std::size_t u = 0; u < n; ++u) {
                    if (cik[u].is_zero()) continue;
                    for (std::size_t t = 0; t < n; ++t)
                        sys.at(row0 + u * n + t, col_of(k, j, t)) -= cik[u];
                }
            }
            // - sum_l x_il (x) d_lj
            for (std::size_t l = 0; l < s; ++l) {
                const Vec& dlj = d.at(l, j);
                for (std::size_t u = 0; u < n; ++u) {
                    if (dlj[u].is_zero()) continue;
                    for (std::size_t t = 0; t < n; ++t)
                        sys.at(row0 + t * n + u, col_of(i, l, t)) -= dlj[u];
                }
            }
        }
    std::vector<Vec> kernel = kernel_basis(sys);
    auto to_hmat = [&](const Vec& flat) {
        HMatrix x(h, r, s);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t t = 0; t < n; ++t) x.at(i, j)[t] = flat[col_of(i, j, t)];
        return x;
    };
    for (const auto& v : kernel) out.basis.push_back(to_hmat(v));

    // trivial part: every entry inside H_0
    std::vector<Vec> h0 = coradical(h).h0_basis;
    std::vector<Vec> ann = annihilator(h0, n, h.field);
    Matrix cond(h.field, r * s * ann.size(), kernel.size());
    for (std::size_t kc = 0; kc < kernel.size(); ++kc)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t ar = 0; ar < ann.size(); ++ar) {
                    FieldElement acc = FieldElement::zero(h.field);
                    for (std::size_t t = 0; t < n; ++t)
                        FieldElement::add_mul(acc, ann[ar][t], kernel[kc][col_of(i, j, t)]);
                    cond.at((i * s + j) * ann.size() + ar, kc) = acc;
                }
    std::vector<Vec> trivial_coords = kernel_basis(cond);
    Echelon ech(h.field, kernel.size(), /*track=*/false);
    for (const auto& tc : trivial_coords) {
        ech.insert(tc);
        Vec flat = vec_zero(h.field, unknowns);
        for (std::size_t kc = 0; kc < kernel.size(); ++kc)
            if (!tc[kc].is_zero()) flat = vec_add(flat, vec_scale(kernel[kc], tc[kc]));
        out.trivial_basis.push_back(to_hmat(flat));
    }
    for (std::size_t kc = 0; kc < kernel.size(); ++kc) {
        Vec e = vec_zero(h.field, kernel.size());
        e[kc] = FieldElement::one(h.field);
        if (ech.insert(e)) out.nontrivial_basis.push_back(to_hmat(kernel[kc]));
    }
    return out;
}

// --- integrals ------------------------------------------------------------------------

CoradicalIntegral integral_coradical(const HopfAlgebra& h) {
    CoradicalData data = coradical(h);
    auto [h0alg, incl] = sub_hopf_algebra(h, data.h0_basis);
    // H_0 must be semisimple as an algebra for the integral normalization
    {
        SCAlgebra a0;
        a0.f = h0alg.field;
        a0.dim = h0alg.dim;
        a0.mult = h0alg.mult;
        a0.unit = h0alg.unit;
        if (!radical_basis(a0).empty())
            throw Error(Errc::NotSemisimpleCoradical, "H_0 has a nonzero radical");
    }
    const std::size_t k = h0alg.dim;
    Matrix sys(h.field, k * k, k);
    for (std::size_t b = 0; b < k; ++b) {
        // row block: e_b Lambda - eps(e_b) Lambda = 0
        for (std::size_t j = 0; j < k; ++j) {
            Vec prod = h0alg.multiply(h0alg.basis_vector(b), h0alg.basis_vector(j));
            for (std::size_t t = 0; t < k; ++t) {
                sys.at(b * k + t, j) += prod[t];
                if (t == j) sys.at(b * k + t, j) -= h0alg.counit[b];
            }
        }
    }
    std::vector<Vec> ker = kernel_basis(sys);
    if (ker.size() != 1)
        throw Error(Errc::NotSemisimpleCoradical,
                    "integral space of H_0 has dimension " + std::to_string(ker.size()));
    Vec lambda = incl * ker[0];

    // normalize the k.1 component to 1 across the simple decomposition
    std::vector<SimpleSubcoalgebra> simples = simple_decomposition(h);
    std::vector<Vec> all;
    std::size_t unit_block = simples.size(), unit_off = 0, off = 0;
    for (std::size_t i = 0; i < simples.size(); ++i) {
        if (simples[i].contains_unit) { unit_block = i; unit_off = off; }
        for (const auto& b : simples[i].basis) all.push_back(b);
        off += simples[i].basis.size();
    }
    if (unit_block == simples.size())
        throw Error(Errc::Internal, "no k.1 simple subcoalgebra found");
    SpanCoords sc(h.field, h.dim, all);
    Vec coords = sc.coords(lambda);
    // the unit block is one-dimensional: component = coeff * basis = lam1 * 1
    Vec unit_basis = simples[unit_block].basis[0];
    SpanCoords unit_sc(h.field, h.dim, {h.unit});
    FieldElement scale = unit_sc.coords(unit_basis)[0] * coords[unit_off];
    if (scale.is_zero()) throw Error(Errc::ZeroOneComponent, "integral has no component along k.1");
    CoradicalIntegral out;
    out.lambda0 = vec_scale(lambda, scale.inverse());
    for (std::size_t b = 0; b < k; ++b) {
        Vec lhs = h.multiply(data.h0_basis[b], out.lambda0);
        Vec rhs = vec_scale(out.lambda0, h.counit_of(data.h0_basis[b]));
        if (lhs != rhs) throw Error(Errc::Internal, "integral property failed after normalization");
    }
    return out;
}

bool lambda_pairing_check(const HopfAlgebra& h, const HMatrix& x, const Vec& lambda0) {
    HMatrix left = hmat_scale_left(h, lambda0, x);
    HMatrix right = hmat_scale_right(h, x, lambda0);
    return !left.is_zero() && !right.is_zero();
}

// --- S^2 eigenstructure -----------------------------------------------------------------

std::vector<std::pair<FieldElement, HMatrix>> s2_primitive_eigens(const HopfAlgebra& h,
                                                                  const MultiplicativeMatrix& c) {
    if (h.field.characteristic() != 0)
        throw Error(Errc::NotChar0, "eigen decomposition is stated in characteristic 0");
    if (!is_dual_chevalley(h))
        throw Error(Errc::CoradicalUnavailable, "dual Chevalley property required");
    Matrix s2 = h.antipode * h.antipode;
    if (!(hmat_apply(s2, c) == c))
        throw Error(Errc::Internal, "S^2 does not fix the multiplicative matrix");

    PrimitiveMatrixSpace p = primitive_space(h, c, unit_multiplicative_matrix(h));
    if (p.nontrivial_basis.empty()) return {};
    const std::size_t r = p.c.rows, s = p.d.rows, n = h.dim;

    // N = exp(H_0); H_0 is involutory here so both exponents agree
    CoradicalData data = coradical(h);
    auto [h0alg, incl] = sub_hopf_algebra(h, data.h0_basis);
    if (!(h0alg.antipode * h0alg.antipode).is_identity())
        throw Error(Errc::Internal, "H_0 is not involutory");
    ExponentResult e0 = exponent_2i(h0alg, 0);
    ExponentResult em = exponent_2i(h0alg, -1);
    if (!e0.finite() || !em.finite() || !(*e0.value == *em.value))
        throw Error(Errc::Internal, "exponents of the involutory H_0 disagree");
    const std::int64_t big_n = e0.value_i64();

    // S^{2N} must fix every primitive matrix of the space
    Matrix s2n = s2.pow(mpz_class(static_cast<long>(big_n)));
    for (const auto& x : p.basis)
        if (!(hmat_apply(s2n, x) == x))
            throw Error(Errc::FieldLacksRoots, "S^{2N} does not fix the primitive space");

    // coordinates over the solution space, trivial part first
    auto flat_of = [&](const HMatrix& x) {
        Vec flat = vec_zero(h.field, r * s * n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t t = 0; t < n; ++t) flat[(i * s + j) * n + t] = x.at(i, j)[t];
        return flat;
    };
    std::vector<Vec> kernel_cols;
    for (const auto& x : p.basis) kernel_cols.push_back(flat_of(x));
    Matrix kmat = Matrix::from_columns(h.field, r * s * n, kernel_cols);
    auto kcoords = [&](const HMatrix& x) {
        SolveResult res = solve_linear(kmat, flat_of(x));
        if (!res.ok()) throw Error(Errc::Internal, "S^2 image leaves the primitive space");
        return *res.solution;
    };
    Echelon tracked(h.field, p.basis.size(), /*track=*/true);
    for (const auto& t : p.trivial_basis)
        if (!tracked.insert(kcoords(t))) throw Error(Errc::Internal, "dependent trivial basis");
    const std::size_t tt = p.trivial_basis.size();
    for (const auto& x : p.nontrivial_basis)
        if (!tracked.insert(kcoords(x))) throw Error(Errc::Internal, "dependent nontrivial rep");
    const std::size_t m = p.nontrivial_basis.size();

    Matrix action(h.field, m, m);
    for (std::size_t t = 0; t < m; ++t) {
        auto coords = tracked.express(kcoords(hmat_apply(s2, p.nontrivial_basis[t])));
        if (!coords) throw Error(Errc::Internal, "S^2 action not expressible");
        for (std::size_t u = 0; u < m; ++u) action.at(u, t) = (*coords)[tt + u];
    }
    if (!action.pow(mpz_class(static_cast<long>(big_n))).is_identity())
        throw Error(Errc::FieldLacksRoots, "quotient action is not N-periodic");

    std::vector<std::pair<FieldElement, HMatrix>> out;
    std::size_t total = 0;
    for (const auto& q : roots_of_unity(h.field, big_n)) {
        Matrix shifted = action;
        for (std::size_t i = 0; i < m; ++i) shifted.at(i, i) -= q;
        for (const auto& v : kernel_basis(shifted)) {
            HMatrix x(h, r, s);
            for (std::size_t t = 0; t < m; ++t)
                if (!v[t].is_zero())
                    x = hmat_add(x, [&] {
                        HMatrix scaled = p.nontrivial_basis[t];
                        return hmat_scale(scaled, v[t]);
                    }());
            out.emplace_back(q, std::move(x));
            ++total;
        }
    }
    if (total != m)
        throw Error(Errc::FieldLacksRoots,
                    "the S^2 action does not diagonalize over the available roots of unity");
    return out;
}

// --- xpower report ------------------------------------------------------------------------

bool XPowerReport::all_ok() const {
    if (!sands2_ok || !commuting_ok) return false;
    for (const auto& e : per_n)
        if (!e.power_formula_ok || !e.pairing_ok || !e.nonzero) return false;
    return true;
}

XPowerReport xpower_identity_report(const HopfAlgebra& h, const MultiplicativeMatrix& c,
                                    const HMatrix& x, const FieldElement& q, std::int64_t n_max) {
    XPowerReport rep;
    Matrix s2 = h.antipode * h.antipode;
    HMatrix sc = hmat_apply(h.antipode, c);
    // S(X) = -S(C) X
    rep.sands2_ok = hmat_apply(h.antipode, x) == hmat_scale(hmat_mul(h, sc, x),
                                                            -FieldElement::one(h.field));
    // S(C) X = q (X^T S(C)^T)^T
    rep.commuting_ok =
        hmat_mul(h, sc, x) ==
        hmat_scale(hmat_transpose(hmat_mul(h, hmat_transpose(x), hmat_transpose(sc))), q);

    Vec lambda0 = integral_coradical(h).lambda0;
    HMatrix x_lambda = hmat_scale_right(h, x, lambda0);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        XPowerReport::PerN pn{n, false, false, false};
        // sum_{i<n} q^i C^i X
        HMatrix rhs(h, x.rows, x.cols);
        HMatrix cpow = hmat_identity(h, c.rows);
        FieldElement qpow = FieldElement::one(h.field);
        for (std::int64_t i = 0; i < n; ++i) {
            rhs = hmat_add(rhs, hmat_scale(hmat_mul(h, cpow, x), qpow));
            cpow = hmat_mul(h, cpow, c);
            qpow = qpow * q;
        }
        Matrix tn = h.twisted_power_map(1, n);
        pn.power_formula_ok = hmat_apply(tn, x) == rhs;
        // q^{-n+1} S(C)^{n-1} (rhs) Lambda_0 = n X Lambda_0
        HMatrix scpow = hmat_pow(h, sc, n - 1);
        HMatrix lhs2 = hmat_scale(hmat_scale_right(h, hmat_mul(h, scpow, rhs), lambda0),
                                  q.pow(mpz_class(static_cast<long>(1 - n))));
        HMatrix rhs2 = hmat_scale(x_lambda, FieldElement::from_integer(h.field, static_cast<long>(n)));
        pn.pairing_ok = lhs2 == rhs2;
        pn.nonzero = !rhs.is_zero() && !rhs2.is_zero();
        rep.per_n.push_back(pn);
    }
    return rep;
}

// --- declared-coradical fallback --------------------------------------------------------

bool verify_declared_coradical(const HopfAlgebra& h, const std::vector<Vec>& declared) {
    const std::size_t k = declared.size();
    if (k == 0) return false;
    // subcoalgebra: Delta(v) in V (x) V
    Matrix pairs(h.field, h.dim * h.dim, k * k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t i = 0; i < h.dim; ++i)
                for (std::size_t j = 0; j < h.dim; ++j)
                    pairs.at(i * h.dim + j, x * k + y) = declared[x][i] * declared[y][j];
    std::vector<std::vector<FieldElement>> delta_coords;
    for (const auto& v : declared) {
        TensorElem d = h.comult_elem(v);
        Vec dense = vec_zero(h.field, h.dim * h.dim);
        for (const auto& [idx, cc] : d.terms) dense[static_cast<std::size_t>(idx)] = cc;
        SolveResult r = solve_linear(pairs, dense);
        if (!r.ok()) return false;
        delta_coords.push_back(*r.solution);
    }
    // dual algebra of V semisimple: structure constants from the solved coproducts
    SCAlgebra va;
    va.f = h.field;
    va.dim = k;
    va.mult.assign(k * k * k, FieldElement::zero(h.field));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) va.at(a, b, i) = delta_coords[i][a * k + b];
    va.unit = vec_zero(h.field, k);
    for (std::size_t i = 0; i < k; ++i) va.unit[i] = h.counit_of(declared[i]);
    if (!radical_basis(va).empty()) return false;
    // annihilator ideal V^perp nilpotent in H^*
    SCAlgebra a = dual_algebra(h);
    std::vector<Vec> vperp = annihilator(declared, h.dim, h.field);
    std::vector<Vec> power = vperp;
    for (std::size_t iter = 0; iter <= h.dim; ++iter) {
        if (power.empty()) return true;
        // next power: span of products (two-sided, V^perp is an ideal)
        Echelon span(h.field, h.dim);
        std::vector<Vec> next;
        for (const auto& u : power)
            for (const auto& v : vperp) {
                Vec w = a.multiply(u, v);
                if (span.insert(w)) next.push_back(std::move(w));
            }
        power = std::move(next);
    }
    return false;
}

}  // namespace hopfexp
