#include <doctest.h>

#include "corpus.hpp"

using namespace hopfexp;
using namespace hopfexp::corpus;

TEST_CASE("group table validation") {
    FiniteGroupTable s3 = FiniteGroupTable::symmetric3();
    s3.validate();
    CHECK(s3.exponent() == 6);
    CHECK(FiniteGroupTable::klein4().exponent() == 2);
    CHECK(FiniteGroupTable::cyclic(12).exponent() == 12);

    FiniteGroupTable bad = FiniteGroupTable::cyclic(3);
    bad.table[4] = 0;  // breaks the group law
    CHECK_THROWS_AS(bad.validate(), Error);
    CHECK_THROWS_AS(FiniteGroupTable::named("frobnitz"), Error);
    CHECK(FiniteGroupTable::named("z2x2").order == 4);
}

TEST_CASE("group algebras are involutory with grouplike comultiplication") {
    for (auto f : {Q(), F3()}) {
        HopfAlgebra h = group_algebra(FiniteGroupTable::symmetric3(), f);
        CHECK(h.dim == 6);
        CHECK((h.antipode * h.antipode).is_identity());
        for (std::size_t i = 0; i < h.dim; ++i) CHECK(h.is_grouplike(h.basis_vector(i)));
        // noncommutative: rs != sr somewhere
        bool noncomm = false;
        for (std::size_t i = 0; i < 6 && !noncomm; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                if (h.multiply(h.basis_vector(i), h.basis_vector(j)) !=
                    h.multiply(h.basis_vector(j), h.basis_vector(i))) {
                    noncomm = true;
                    break;
                }
        CHECK(noncomm);
    }
    CHECK(group_algebra(FiniteGroupTable::cyclic(4), F3()).dim == 4);
    CHECK(group_algebra(FiniteGroupTable::cyclic(2), Q()).antipode.is_identity());
}

TEST_CASE("dual group algebra equals the dual, structure constants and all") {
    for (auto f : {Q(), F5()}) {
        for (auto table : {FiniteGroupTable::cyclic(4), FiniteGroupTable::symmetric3()}) {
            HopfAlgebra d1 = dual_group_algebra(table, f);
            HopfAlgebra d2 = dual(group_algebra(table, f));
            CHECK(d1.mult == d2.mult);
            CHECK(d1.comult == d2.comult);
            CHECK(d1.unit == d2.unit);
            CHECK(d1.counit == d2.counit);
            CHECK(d1.antipode == d2.antipode);
        }
    }
    // indicator idempotents sum to 1
    HopfAlgebra d = dual_group_algebra(FiniteGroupTable::cyclic(2), Q());
    Vec sum = vec_add(d.basis_vector(0), d.basis_vector(1));
    CHECK(sum == d.unit);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(d.multiply(d.basis_vector(i), d.basis_vector(i)) == d.basis_vector(i));
    // commutative
    HopfAlgebra ds3 = dual_group_algebra(FiniteGroupTable::symmetric3(), Q());
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(ds3.multiply(ds3.basis_vector(i), ds3.basis_vector(j)) ==
                  ds3.multiply(ds3.basis_vector(j), ds3.basis_vector(i)));
}

TEST_CASE("Taft algebras") {
    CHECK_THROWS_AS(taft(3, Q()), Error);  // no primitive cube root in Q

    for (auto [n, f] : std::vector<std::pair<std::int64_t, FieldDescriptor>>{
             {2, Q()}, {3, Qz3()}, {3, F7()}}) {
        HopfAlgebra t = taft(n, f);
        INFO(f.to_string());
        CHECK(t.dim == static_cast<std::size_t>(n * n));
        // relations: x g = q g x, g^n = 1, x^n = 0
        FieldElement q = *primitive_root_of_unity(f, n);
        Vec g = t.basis_vector(static_cast<std::size_t>(n));  // index (a=1, b=0)
        Vec x = t.basis_vector(1);                            // index (a=0, b=1)
        CHECK(t.multiply(x, g) == vec_scale(t.multiply(g, x), q));
        Vec gpow = t.unit;
        for (std::int64_t k = 0; k < n; ++k) gpow = t.multiply(gpow, g);
        CHECK(gpow == t.unit);
        Vec xpow = t.unit;
        for (std::int64_t k = 0; k < n; ++k) xpow = t.multiply(xpow, x);
        CHECK(vec_is_zero(xpow));
        // antipode closed form: S(g) = g^{n-1}, S(x) = -g^{n-1} x
        Vec gn1 = t.unit;
        for (std::int64_t k = 0; k + 1 < n; ++k) gn1 = t.multiply(gn1, g);
        CHECK(t.antipode * g == gn1);
        CHECK(t.antipode * x == vec_scale(t.multiply(gn1, x), FieldElement::from_integer(f, -1)));
        // S^2 has multiplicative order n
        CHECK(t.s2_order() == n);
    }
}

TEST_CASE("taft(2) is the Sweedler algebra") {
    HopfAlgebra h4 = sweedler_h4(Q());
    CHECK(h4.dim == 4);
    Vec x = h4.basis_vector(1);
    TensorElem dx = h4.comult_elem(x);
    // Delta(x) = x (x) 1 + g (x) x
    TensorElem expect = tensor_add(
        tensor_outer(tensor_from_vec(x), tensor_from_vec(h4.unit)),
        tensor_outer(tensor_from_vec(h4.basis_vector(2)), tensor_from_vec(x)));
    CHECK(dx == expect);
}
