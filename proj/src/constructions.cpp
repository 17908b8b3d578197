#include "hopfexp/constructions.hpp"

#include <numeric>

namespace hopfexp {

int FiniteGroupTable::inverse(int i) const {
    for (int j = 0; j < order; ++j)
        if (at(i, j) == identity_index) return j;
    throw Error(Errc::InvalidGroupTable, "no inverse for index " + std::to_string(i));
}

void FiniteGroupTable::validate() const {
    if (order <= 0 || table.size() != static_cast<std::size_t>(order) * order)
        throw Error(Errc::InvalidGroupTable, "table size does not match order");
    for (int v : table)
        if (v < 0 || v >= order) throw Error(Errc::InvalidGroupTable, "index out of range");
    for (int i = 0; i < order; ++i)
        if (at(identity_index, i) != i || at(i, identity_index) != i)
            throw Error(Errc::InvalidGroupTable, "identity fails at index " + std::to_string(i));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            for (int k = 0; k < order; ++k)
                if (at(at(i, j), k) != at(i, at(j, k)))
                    throw Error(Errc::InvalidGroupTable,
                                "associativity fails at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + ")");
    for (int i = 0; i < order; ++i) inverse(i);  // throws when missing
}

std::int64_t FiniteGroupTable::exponent() const {
    std::int64_t e = 1;
    for (int i = 0; i < order; ++i) {
        int cur = i;
        std::int64_t ord = 1;
        while (cur != identity_index) {
            cur = at(cur, i);
            ++ord;
        }
        e = std::lcm(e, ord);
    }
    return e;
}

FiniteGroupTable FiniteGroupTable::cyclic(std::int64_t n) {
    FiniteGroupTable g;
    g.order = n;
    g.identity_index = 0;
    g.table.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    return g;
}

FiniteGroupTable FiniteGroupTable::klein4() {
    FiniteGroupTable g;
    g.order = 4;
    g.identity_index = 0;
    // indices encode (a, b) in Z2 x Z2 as 2a + b
    g.table.resize(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.table[static_cast<std::size_t>(i) * 4 + j] = i ^ j;
    return g;
}

FiniteGroupTable FiniteGroupTable::symmetric3() {
    // permutations of {0,1,2} in one-line notation, composition p*q = p after q
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto find = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    FiniteGroupTable g;
    g.order = 6;
    g.identity_index = 0;
    g.table.resize(36);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            g.table[static_cast<std::size_t>(i) * 6 + j] = find(comp);
        }
    return g;
}

FiniteGroupTable FiniteGroupTable::named(const std::string& name) {
    if (name == "z2x2" || name == "k4") return klein4();
    if (name == "s3") return symmetric3();
    if (name.size() >= 2 && name[0] == 'z') {
        std::int64_t n = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw Error(Errc::InvalidGroupTable, "unknown group name: " + name);
            n = n * 10 + (name[i] - '0');
        }
        if (n < 1 || n > 512) throw Error(Errc::InvalidGroupTable, "cyclic order out of range");
        return cyclic(n);
    }
    throw Error(Errc::InvalidGroupTable, "unknown group name: " + name);
}

HopfAlgebra group_algebra(const FiniteGroupTable& g, const FieldDescriptor& f) {
    g.validate();
    const std::size_t n = static_cast<std::size_t>(g.order);
    HopfAlgebra h(f, n);
    for (std::size_t i = 0; i < n; ++i)
        h.basis_names[i] = i == static_cast<std::size_t>(g.identity_index)
                               ? "1"
                               : "g" + std::to_string(i);
    FieldElement one = FieldElement::one(f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            h.mult_at(i, j, static_cast<std::size_t>(g.at(static_cast<int>(i), static_cast<int>(j)))) = one;
        h.comult_at(i, i, i) = one;
        h.counit[i] = one;
    }
    h.unit[static_cast<std::size_t>(g.identity_index)] = one;
    Matrix s(f, n, n), si(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        s.at(static_cast<std::size_t>(g.inverse(static_cast<int>(i))), i) = one;
        si.at(static_cast<std::size_t>(g.inverse(static_cast<int>(i))), i) = one;
    }
    h.antipode = std::move(s);
    h.antipode_inverse = std::move(si);
    h.finalize();
    require_axioms(h, "group_algebra");
    return h;
}

HopfAlgebra dual_group_algebra(const FiniteGroupTable& g, const FieldDescriptor& f) {
    g.validate();
    HopfAlgebra d = dual(group_algebra(g, f));
    for (std::size_t i = 0; i < d.dim; ++i)
        d.basis_names[i] = "p" + std::to_string(i);  // indicator of group element i
    require_axioms(d, "dual_group_algebra");
    return d;
}

HopfAlgebra taft(std::int64_t n, const FieldDescriptor& f) {
    if (n < 2) throw Error(Errc::NoPrimitiveRoot, "taft needs n >= 2");
    auto q_opt = primitive_root_of_unity(f, n);
    if (!q_opt)
        throw Error(Errc::NoPrimitiveRoot,
                    "no primitive " + std::to_string(n) + "-th root of unity in " + f.to_string());
    FieldElement q = *q_opt;
    const std::size_t N = static_cast<std::size_t>(n);
    const std::size_t dim = N * N;
    // basis g^a x^b at index a*n + b
    auto ix = [N](std::size_t a, std::size_t b) { return a * N + b; };
    HopfAlgebra h(f, dim);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            std::string name;
            if (a == 0 && b == 0) name = "1";
            if (a == 1) name += "g";
            if (a > 1) name += "g^" + std::to_string(a);
            if (b == 1) name += (name.empty() ? "x" : " x");
            if (b > 1) name += (name.empty() ? "x^" : " x^") + std::to_string(b);
            h.basis_names[ix(a, b)] = name;
        }
    // normal form: (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d}, zero when b+d >= n
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            for (std::size_t c = 0; c < N; ++c)
                for (std::size_t d = 0; d < N; ++d) {
                    if (b + d >= N) continue;
                    FieldElement coeff = q.pow(mpz_class(static_cast<long>(b * c)));
                    h.mult_at(ix(a, b), ix(c, d), ix((a + c) % N, b + d)) = coeff;
                }
    h.unit[ix(0, 0)] = FieldElement::one(f);
    // Delta is the algebra map with Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x;
    // products are taken in the tensor-square algebra so no q-binomial bookkeeping
    h.finalize();  // mult views needed for tensor products below
    TensorElem dg, dx;
    dg.dim = dim;
    dg.legs = 2;
    dg.terms.emplace_back(static_cast<std::int64_t>(ix(1, 0)) * dim + ix(1, 0), FieldElement::one(f));
    dx.dim = dim;
    dx.legs = 2;
    dx.terms.emplace_back(static_cast<std::int64_t>(ix(0, 1)) * dim + ix(0, 0), FieldElement::one(f));
    dx.terms.emplace_back(static_cast<std::int64_t>(ix(1, 0)) * dim + ix(0, 1), FieldElement::one(f));
    dx.normalize();
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            TensorElem acc = tensor_unit(h, 2);
            for (std::size_t t = 0; t < a; ++t) acc = tensor_mul(h, acc, dg);
            for (std::size_t t = 0; t < b; ++t) acc = tensor_mul(h, acc, dx);
            for (const auto& [idx, c] : acc.terms)
                h.comult_at(ix(a, b), static_cast<std::size_t>(idx / dim),
                            static_cast<std::size_t>(idx % dim)) = c;
            h.counit[ix(a, b)] = b == 0 ? FieldElement::one(f) : FieldElement::zero(f);
        }
    h.finalize();
    h.antipode = derive_antipode(h);
    h.antipode_inverse = inverse(h.antipode);
    require_axioms(h, "taft");
    return h;
}

HopfAlgebra sweedler_h4(const FieldDescriptor& f) { return taft(2, f); }

}  // namespace hopfexp
