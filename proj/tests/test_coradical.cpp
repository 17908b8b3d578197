#include <doctest.h>

#include "corpus.hpp"
#include "hopfexp/coradical.hpp"
#include "hopfexp/deform.hpp"
#include "hopfexp/exponent.hpp"

using namespace hopfexp;
using namespace hopfexp::corpus;

namespace {

bool same_span(const FieldDescriptor& f, std::size_t ambient, const std::vector<Vec>& a,
               const std::vector<Vec>& b) {
    if (a.size() != b.size()) return false;
    Echelon ea(f, ambient);
    for (const auto& v : a) ea.insert(v);
    for (const auto& v : b)
        if (!ea.contains(v)) return false;
    return true;
}

}  // namespace

TEST_CASE("coradical dimensions across the corpus") {
    CHECK(coradical(group_algebra(FiniteGroupTable::cyclic(6), Q())).h0_basis.size() == 6);
    CHECK(coradical(dual_group_algebra(FiniteGroupTable::symmetric3(), Q())).h0_basis.size() == 6);
    CHECK(coradical(sweedler_h4(Q())).h0_basis.size() == 2);
    CHECK(coradical(sweedler_h4(F3())).h0_basis.size() == 2);
    CHECK(coradical(taft(3, Qz3())).h0_basis.size() == 3);
    CHECK(coradical(taft(3, F7())).h0_basis.size() == 3);
}

TEST_CASE("pointed coradicals equal the span of the grouplikes") {
    for (auto h : {sweedler_h4(Q()), taft(3, Qz3()), taft(3, F7()),
                   smash_s2(sweedler_h4(F3())).result}) {
        CoradicalData cd = coradical(h);
        std::vector<Vec> gl;
        for (const auto& g : grouplikes(h)) gl.push_back(g.coordinates);
        CHECK(same_span(h.field, h.dim, cd.h0_basis, gl));
    }
}

TEST_CASE("coradical filtration and Loewy lengths") {
    CHECK(coradical_filtration(group_algebra(FiniteGroupTable::cyclic(4), Q())).loewy_length == 1);
    CHECK(coradical_filtration(dual_group_algebra(FiniteGroupTable::symmetric3(), Q())).loewy_length == 1);
    CoradicalData h4 = coradical_filtration(sweedler_h4(Q()));
    CHECK(h4.loewy_length == 2);
    CHECK(h4.filtration.size() == 2);
    CHECK(h4.filtration[1].size() == 4);
    CHECK(coradical_filtration(sweedler_h4(F5())).loewy_length == 2);
    CoradicalData t3 = coradical_filtration(taft(3, Qz3()));
    CHECK(t3.loewy_length == 3);
    CHECK(t3.filtration[0].size() == 3);
    CHECK(t3.filtration[1].size() == 6);  // wedge grows by the skew-primitive layers
    CHECK(t3.filtration[2].size() == 9);
    CHECK(coradical_filtration(taft(3, F7())).loewy_length == 3);
}

TEST_CASE("filtration levels are subcoalgebras in the wedge sense") {
    HopfAlgebra t3 = taft(3, Qz3());
    CoradicalData cd = coradical_filtration(t3);
    // Delta(H_k) lies inside H (x) H_{k-1} + H_0 (x) H
    for (std::size_t k = 1; k < cd.filtration.size(); ++k) {
        std::vector<Vec> w;
        for (std::size_t i = 0; i < t3.dim; ++i) {
            for (const auto& b : cd.filtration[k - 1]) {
                Vec tvec = vec_zero(t3.field, t3.dim * t3.dim);
                for (std::size_t y = 0; y < t3.dim; ++y)
                    if (!b[y].is_zero()) tvec[i * t3.dim + y] = b[y];
                w.push_back(std::move(tvec));
            }
            for (const auto& b : cd.h0_basis) {
                Vec tvec = vec_zero(t3.field, t3.dim * t3.dim);
                for (std::size_t x = 0; x < t3.dim; ++x)
                    if (!b[x].is_zero()) tvec[x * t3.dim + i] = b[x];
                w.push_back(std::move(tvec));
            }
        }
        Echelon span(t3.field, t3.dim * t3.dim);
        for (const auto& v : w) span.insert(v);
        for (const auto& v : cd.filtration[k]) {
            TensorElem d = t3.comult_elem(v);
            Vec dense = vec_zero(t3.field, t3.dim * t3.dim);
            for (const auto& [idx, c] : d.terms) dense[static_cast<std::size_t>(idx)] = c;
            CHECK(span.contains(dense));
        }
    }
}

TEST_CASE("dual Chevalley predicate") {
    CHECK(is_dual_chevalley(group_algebra(FiniteGroupTable::symmetric3(), Q())));
    CHECK(is_dual_chevalley(sweedler_h4(Q())));
    CHECK(is_dual_chevalley(taft(3, Qz3())));
    CHECK(is_dual_chevalley(taft(3, F7())));
    CHECK(is_dual_chevalley(dual_group_algebra(FiniteGroupTable::cyclic(3), Q())));
}

TEST_CASE("multiplicativity of the filtration under dual Chevalley") {
    for (auto h : {sweedler_h4(Q()), taft(3, Qz3())}) {
        CoradicalData cd = coradical_filtration(h);
        const auto& h1 = cd.filtration.size() > 1 ? cd.filtration[1] : cd.filtration[0];
        Echelon span(h.field, h.dim);
        for (const auto& v : h1) span.insert(v);
        for (const auto& a : cd.h0_basis)
            for (const auto& b : h1) {
                CHECK(span.contains(h.multiply(a, b)));
                CHECK(span.contains(h.multiply(b, a)));
            }
    }
}

TEST_CASE("simple subcoalgebra decompositions") {
    auto dims_of = [](const std::vector<SimpleSubcoalgebra>& ss) {
        std::vector<std::size_t> out;
        for (const auto& s : ss) out.push_back(s.dim);
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(dims_of(simple_decomposition(dual_group_algebra(FiniteGroupTable::cyclic(2), Q()))) ==
          std::vector<std::size_t>{1, 1});
    CHECK(dims_of(simple_decomposition(sweedler_h4(Q()))) == std::vector<std::size_t>{1, 1});
    CHECK(dims_of(simple_decomposition(dual_group_algebra(FiniteGroupTable::symmetric3(), Q()))) ==
          std::vector<std::size_t>{1, 1, 4});
    // over Q the dual of Q[Z3] splits as k1 + a two-dimensional simple
    CHECK(dims_of(simple_decomposition(dual_group_algebra(FiniteGroupTable::cyclic(3), Q()))) ==
          std::vector<std::size_t>{1, 2});
    // the simples sum to H_0
    for (const auto& [name, h] : standard()) {
        INFO(name);
        auto simples = simple_decomposition(h);
        std::size_t total = 0;
        std::vector<Vec> all;
        for (const auto& s : simples) {
            total += s.dim;
            for (const auto& b : s.basis) all.push_back(b);
        }
        CoradicalData cd = coradical(h);
        CHECK(total == cd.h0_basis.size());
        CHECK(same_span(h.field, h.dim, cd.h0_basis, all));
        // exactly one simple carries the unit
        int units = 0;
        for (const auto& s : simples) units += s.contains_unit ? 1 : 0;
        CHECK(units == 1);
    }
}

TEST_CASE("basic multiplicative matrices") {
    // grouplike blocks give 1x1 matrices
    HopfAlgebra h4 = sweedler_h4(Q());
    for (const auto& s : simple_decomposition(h4)) {
        auto bm = basic_multiplicative_matrix(h4, s);
        REQUIRE(bm);
        CHECK(bm->rows == 1);
        CHECK(is_basic_multiplicative_matrix(h4, *bm));
    }
    // split 4-dimensional blocks give verified 2x2 matrices
    for (auto f : {Q(), F7()}) {
        HopfAlgebra ds3 = dual_group_algebra(FiniteGroupTable::symmetric3(), f);
        bool found = false;
        for (const auto& s : simple_decomposition(ds3)) {
            if (s.dim != 4) continue;
            auto bm = basic_multiplicative_matrix(ds3, s);
            REQUIRE(bm);
            CHECK(bm->rows == 2);
            CHECK(is_basic_multiplicative_matrix(ds3, *bm));
            found = true;
        }
        CHECK(found);
    }
    // a division-algebra block over Q has no split
    HopfAlgebra dz3 = dual_group_algebra(FiniteGroupTable::cyclic(3), Q());
    for (const auto& s : simple_decomposition(dz3)) {
        if (s.dim != 2) continue;
        CHECK(!basic_multiplicative_matrix(dz3, s).has_value());
    }
}

namespace {

MultiplicativeMatrix grouplike_matrix(const HopfAlgebra& h, const Vec& g) {
    MultiplicativeMatrix m(h, 1, 1);
    m.at(0, 0) = g;
    return m;
}

MultiplicativeMatrix taft_g_matrix(const HopfAlgebra& t, std::int64_t n) {
    return grouplike_matrix(t, t.basis_vector(static_cast<std::size_t>(n)));  // g = e_{(1,0)}
}

}  // namespace

TEST_CASE("primitive spaces") {
    // cosemisimple: no nontrivial solutions
    HopfAlgebra z3 = group_algebra(FiniteGroupTable::cyclic(3), Q());
    PrimitiveMatrixSpace triv =
        primitive_space(z3, grouplike_matrix(z3, z3.basis_vector(1)), unit_multiplicative_matrix(z3));
    CHECK(!triv.has_nontrivial());

    // H4: the skew-primitive x spans the nontrivial quotient for C = (g), D = (1)
    HopfAlgebra h4 = sweedler_h4(Q());
    PrimitiveMatrixSpace p4 =
        primitive_space(h4, grouplike_matrix(h4, h4.basis_vector(2)), unit_multiplicative_matrix(h4));
    CHECK(p4.has_nontrivial());
    CHECK(p4.nontrivial_basis.size() == 1);
    // Delta(x) = g (x) x + x (x) 1 holds for every solution by construction; x itself solves it
    bool x_in_space = false;
    for (const auto& b : p4.basis)
        if (!vec_is_zero(b.at(0, 0)) && b.at(0, 0)[1] == FieldElement::one(Q())) x_in_space = true;
    CHECK(x_in_space);

    HopfAlgebra t3 = taft(3, Qz3());
    PrimitiveMatrixSpace p3 = primitive_space(t3, taft_g_matrix(t3, 3), unit_multiplicative_matrix(t3));
    CHECK(p3.has_nontrivial());
}

TEST_CASE("rank-two (C,D)-primitive spaces on a cosemisimple algebra are all trivial") {
    HopfAlgebra ds3 = dual_group_algebra(FiniteGroupTable::symmetric3(), F7());
    std::optional<MultiplicativeMatrix> c2;
    for (const auto& s : simple_decomposition(ds3))
        if (s.dim == 4) c2 = basic_multiplicative_matrix(ds3, s);
    REQUIRE(c2);
    PrimitiveMatrixSpace p = primitive_space(ds3, *c2, *c2);
    CHECK(!p.has_nontrivial());
    CHECK(p.basis.size() == p.trivial_basis.size() + p.nontrivial_basis.size());
    CHECK(p.basis.size() == p.trivial_basis.size());
}

TEST_CASE("modular group algebras have no coradical integral") {
    HopfAlgebra h = group_algebra(FiniteGroupTable::cyclic(2), FieldDescriptor::prime_field(2));
    CHECK_THROWS_AS(integral_coradical(h), Error);
    try {
        integral_coradical(h);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSemisimpleCoradical);
    }
}

TEST_CASE("coradical integrals") {
    // Q[Z2]: Lambda_0 = 1 + g after unit-component normalization
    HopfAlgebra z2 = group_algebra(FiniteGroupTable::cyclic(2), Q());
    CHECK(integral_coradical(z2).lambda0 == vec_add(z2.basis_vector(0), z2.basis_vector(1)));

    HopfAlgebra h4 = sweedler_h4(Q());
    CHECK(integral_coradical(h4).lambda0 == vec_add(h4.basis_vector(0), h4.basis_vector(2)));

    HopfAlgebra t7 = taft(3, F7());
    Vec expect = vec_add(vec_add(t7.basis_vector(0), t7.basis_vector(3)), t7.basis_vector(6));
    CHECK(integral_coradical(t7).lambda0 == expect);

    // defining property
    for (auto h : {sweedler_h4(Q()), taft(3, Qz3())}) {
        Vec lam = integral_coradical(h).lambda0;
        for (const auto& b : coradical(h).h0_basis)
            CHECK(h.multiply(b, lam) == vec_scale(lam, h.counit_of(b)));
    }
}

TEST_CASE("integral pairing with nontrivial primitives") {
    HopfAlgebra h4 = sweedler_h4(Q());
    Vec lam = integral_coradical(h4).lambda0;
    PrimitiveMatrixSpace p4 =
        primitive_space(h4, grouplike_matrix(h4, h4.basis_vector(2)), unit_multiplicative_matrix(h4));
    for (const auto& x : p4.nontrivial_basis) CHECK(lambda_pairing_check(h4, x, lam));
    // explicitly: Lambda_0 x = (1 + g) x != 0
    HMatrix xm(h4, 1, 1);
    xm.at(0, 0) = h4.basis_vector(1);
    CHECK(lambda_pairing_check(h4, xm, lam));

    HopfAlgebra t3 = taft(3, Qz3());
    Vec lam3 = integral_coradical(t3).lambda0;
    PrimitiveMatrixSpace p3 = primitive_space(t3, taft_g_matrix(t3, 3), unit_multiplicative_matrix(t3));
    for (const auto& x : p3.nontrivial_basis) CHECK(lambda_pairing_check(t3, x, lam3));
}

TEST_CASE("S^2 eigenstructure on primitive spaces") {
    HopfAlgebra h4 = sweedler_h4(Q());
    auto eig4 = s2_primitive_eigens(h4, grouplike_matrix(h4, h4.basis_vector(2)));
    REQUIRE(eig4.size() == 1);
    CHECK(eig4[0].first == FieldElement::from_integer(Q(), -1));  // S^2(x) = -x, N = 2

    HopfAlgebra t3 = taft(3, Qz3());
    auto eig3 = s2_primitive_eigens(t3, taft_g_matrix(t3, 3));
    REQUIRE(eig3.size() == 1);
    FieldElement q = eig3[0].first;
    CHECK(q.pow(mpz_class(3)) == FieldElement::one(Qz3()));
    CHECK(!q.is_one());

    // characteristic p is rejected
    CHECK_THROWS_AS(s2_primitive_eigens(taft(3, F7()), taft_g_matrix(taft(3, F7()), 3)), Error);
}

TEST_CASE("xpower identity report") {
    HopfAlgebra h4 = sweedler_h4(Q());
    MultiplicativeMatrix c4 = grouplike_matrix(h4, h4.basis_vector(2));
    auto eig4 = s2_primitive_eigens(h4, c4);
    REQUIRE(!eig4.empty());
    XPowerReport rep = xpower_identity_report(h4, c4, eig4[0].second, eig4[0].first, 8);
    CHECK(rep.all_ok());
    CHECK(rep.per_n.size() == 8);

    HopfAlgebra t3 = taft(3, Qz3());
    MultiplicativeMatrix c3 = taft_g_matrix(t3, 3);
    auto eig3 = s2_primitive_eigens(t3, c3);
    REQUIRE(!eig3.empty());
    CHECK(xpower_identity_report(t3, c3, eig3[0].second, eig3[0].first, 9).all_ok());

    // n = 1 always reduces to X = X
    XPowerReport one = xpower_identity_report(h4, c4, eig4[0].second, eig4[0].first, 1);
    CHECK(one.per_n.size() == 1);
    CHECK(one.per_n[0].power_formula_ok);
}

TEST_CASE("S^{2N} fixes the primitive space (through the eigen checks)") {
    // the eigen routine verifies S^{2N} X = X internally; additionally check directly
    HopfAlgebra t3 = taft(3, Qz3());
    Matrix s2n = (t3.antipode * t3.antipode).pow(mpz_class(3));  // N = exp(H_0) = 3
    PrimitiveMatrixSpace p3 = primitive_space(t3, taft_g_matrix(t3, 3), unit_multiplicative_matrix(t3));
    for (const auto& x : p3.basis) CHECK(hmat_apply(s2n, x) == x);
}

TEST_CASE("Loewy length is preserved by the smash product") {
    HopfAlgebra h4 = sweedler_h4(Q());
    CHECK(coradical_filtration(smash_s2(h4).result).loewy_length ==
          coradical_filtration(h4).loewy_length);
    HopfAlgebra t7 = taft(3, F7());
    CHECK(coradical_filtration(smash_s2(t7).result).loewy_length ==
          coradical_filtration(t7).loewy_length);
}

TEST_CASE("declared coradical verification") {
    HopfAlgebra h4 = sweedler_h4(Q());
    CoradicalData cd = coradical(h4);
    CHECK(verify_declared_coradical(h4, cd.h0_basis));
    // too small: k.1 alone misses the grouplike g
    CHECK(!verify_declared_coradical(h4, {h4.unit}));
    // too large: the whole algebra is not cosemisimple
    std::vector<Vec> whole;
    for (std::size_t i = 0; i < h4.dim; ++i) whole.push_back(h4.basis_vector(i));
    CHECK(!verify_declared_coradical(h4, whole));
}

TEST_CASE("multiplicative matrix arithmetic helpers") {
    HopfAlgebra h4 = sweedler_h4(Q());
    HMatrix a = hmat_identity(h4, 2);
    CHECK(hmat_mul(h4, a, a) == a);
    CHECK(hmat_transpose(a) == a);
    HMatrix b(h4, 2, 2);
    b.at(0, 1) = h4.basis_vector(1);
    CHECK(hmat_add(b, b) == hmat_scale(b, FieldElement::from_integer(Q(), 2)));
    CHECK(hmat_sub(b, b).is_zero());
    CHECK(hmat_pow(h4, b, 2).is_zero());  // strictly upper triangular squares to zero
}
