#include "hopfexp/exponent.hpp"

#include <sstream>

#include "hopfexp/coradical.hpp"

namespace hopfexp {

std::int64_t ExponentResult::value_i64() const {
    if (!value) throw Error(Errc::Internal, "infinite exponent has no integer value");
    if (!value->fits_slong_p()) throw Error(Errc::Internal, "exponent out of int64 range");
    return value->get_si();
}

std::string ExponentResult::to_string() const {
    std::ostringstream ss;
    ss << "exp_{2*(" << i << ")} = " << (value ? value->get_str() : "infinite");
    ss << " [" << (method == Method::Decision ? "decision" : "brute force") << "]";
    return ss.str();
}

namespace {

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

Matrix unflatten(const Vec& v, const FieldDescriptor& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
    return m;
}

}  // namespace

ExponentResult exponent_2i(const HopfAlgebra& h, std::int64_t i) {
    ExponentResult res;
    res.i = i;
    res.method = ExponentResult::Method::Decision;
    res.certificate.i_raw = i;

    const std::int64_t d = h.s2_order();
    const std::int64_t i_norm = ((i % d) + d) % d;
    res.certificate.i_normalized = i_norm;
    Matrix a = h.s2_power(i_norm);

    // relative minimal polynomial of the step operator at id
    auto apply = [&](const Vec& flat) {
        return flatten(h.power_step(a, unflatten(flat, h.field, h.dim)));
    };
    Matrix id = Matrix::identity(h.field, h.dim);
    Polynomial g = relative_min_poly_apply(apply, flatten(id), h.field);
    res.certificate.min_poly = g;
    OrderResult order = root_of_unity_order(g);
    res.certificate.order = order;

    if (!order.finite()) {
        // an occurrence of u.eps at index n would force T_{n+1} = id (the step
        // operator sends u.eps to id), so the orbit would be purely periodic and
        // the order certificate finite; infinite order rules u.eps out
        res.value = std::nullopt;
        return res;
    }
    if (!order.value->fits_slong_p())
        throw Error(Errc::Internal, "periodicity bound out of range");
    std::int64_t period = order.value->get_si();
    Matrix ue = h.u_eps();
    Matrix t = id;
    for (std::int64_t n = 1; n <= period; ++n) {
        if (n > 1) t = h.power_step(a, t);
        if (t == ue) {
            res.value = mpz_class(static_cast<long>(n));
            res.certificate.cycle_index = n;
            return res;
        }
    }
    res.value = std::nullopt;  // u.eps absent from the full cycle
    return res;
}

BruteForceOutcome brute_force_exponent(const HopfAlgebra& h, std::int64_t i, std::int64_t bound) {
    if (bound < 1) throw Error(Errc::DimensionMismatch, "brute force bound must be >= 1");
    BruteForceOutcome out;
    out.bound = bound;
    Matrix a = h.s2_power(i);
    Matrix ue = h.u_eps();
    Matrix t = Matrix::identity(h.field, h.dim);
    for (std::int64_t n = 1; n <= bound; ++n) {
        if (n > 1) t = h.power_step(a, t);
        if (t == ue) {
            out.value = n;
            return out;
        }
    }
    return out;
}

std::int64_t default_brute_force_bound(const HopfAlgebra& h) {
    return 4 * static_cast<std::int64_t>(h.dim) * static_cast<std::int64_t>(h.dim) + 16;
}

std::vector<GrouplikeElement> grouplikes(const HopfAlgebra& h) {
    std::vector<SimpleSubcoalgebra> simples = simple_decomposition(h);
    std::vector<GrouplikeElement> out;
    for (const auto& s : simples) {
        if (s.basis.size() != 1) continue;
        Vec v = s.basis[0];
        FieldElement e = h.counit_of(v);
        if (e.is_zero())
            throw Error(Errc::Internal, "one-dimensional simple subcoalgebra with vanishing counit");
        Vec g = vec_scale(v, e.inverse());
        if (!h.is_grouplike(g)) throw Error(Errc::Internal, "normalized simple is not grouplike");
        GrouplikeElement ge;
        ge.coordinates = g;
        // order: the grouplikes form a group of size <= dim
        Vec cur = g;
        std::int64_t ord = 1;
        while (cur != h.unit) {
            cur = h.multiply(cur, g);
            ++ord;
            if (ord > static_cast<std::int64_t>(h.dim) + 1)
                throw Error(Errc::Internal, "grouplike order exceeds dimension bound");
        }
        ge.order = ord;
        out.push_back(std::move(ge));
    }
    // closure under multiplication
    for (const auto& a : out)
        for (const auto& b : out) {
            Vec p = h.multiply(a.coordinates, b.coordinates);
            bool found = false;
            for (const auto& c : out)
                if (c.coordinates == p) { found = true; break; }
            if (!found)
                throw Error(Errc::Internal, "grouplikes are not closed under multiplication");
        }
    return out;
}

Matrix conjugation_matrix(const HopfAlgebra& h, const GrouplikeElement& g) {
    Vec ginv = h.unit;
    for (std::int64_t k = 1; k < g.order; ++k) ginv = h.multiply(ginv, g.coordinates);
    Matrix m(h.field, h.dim, h.dim);
    for (std::size_t j = 0; j < h.dim; ++j)
        m.set_col(j, h.multiply(h.multiply(g.coordinates, h.basis_vector(j)), ginv));
    return m;
}

bool pivotal_power_identity_check(const HopfAlgebra& h, const GrouplikeElement& g, std::int64_t n,
                                  const Vec& elem) {
    if (n < 1) throw Error(Errc::DimensionMismatch, "pivotal identity needs n >= 1");
    // left side: [n](h g)
    Vec hg = h.multiply(elem, g.coordinates);
    Vec lhs = h.twisted_power_map(0, n) * hg;
    // right side: (m . (id (x) phi R_{k}) . Delta iterated)(h) * g^n
    Matrix phi = conjugation_matrix(h, g);
    Matrix r = Matrix::identity(h.field, h.dim);
    for (std::int64_t k = 1; k < n; ++k) r = h.power_step(phi, r);
    Vec gn = h.unit;
    for (std::int64_t k = 0; k < n; ++k) gn = h.multiply(gn, g.coordinates);
    Vec rhs = h.multiply(r * elem, gn);
    return lhs == rhs;
}

std::optional<GrouplikeElement> find_pivotal(const HopfAlgebra& h) {
    Matrix s2 = h.antipode * h.antipode;
    if (s2.is_identity()) return GrouplikeElement{h.unit, 1};
    for (const auto& g : grouplikes(h))
        if (conjugation_matrix(h, g) == s2) return g;
    return std::nullopt;
}

}  // namespace hopfexp
