#include <doctest.h>

#include "corpus.hpp"
#include "hopfexp/coradical.hpp"
#include "hopfexp/deform.hpp"
#include "hopfexp/exponent.hpp"

using namespace hopfexp;
using namespace hopfexp::corpus;

TEST_CASE("group algebra exponents equal the group exponent") {
    for (std::int64_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}) {
        HopfAlgebra h = group_algebra(FiniteGroupTable::cyclic(n), Q());
        CHECK(exp0(h).value_i64() == n);
        CHECK(exp_classic(h).value_i64() == n);
    }
    CHECK(exp0(group_algebra(FiniteGroupTable::symmetric3(), F5())).value_i64() == 6);
    CHECK(exp0(group_algebra(FiniteGroupTable::klein4(), Q())).value_i64() == 2);
    // modular case: F5[Z5] still has exponent 5
    CHECK(exp0(group_algebra(FiniteGroupTable::cyclic(5), F5())).value_i64() == 5);
}

TEST_CASE("frozen corpus exponents, decision vs brute force") {
    struct Row {
        HopfAlgebra h;
        std::int64_t i;
        std::int64_t expect;
    };
    std::vector<Row> rows;
    rows.push_back({sweedler_h4(F3()), 0, 6});
    rows.push_back({sweedler_h4(F3()), -1, 6});
    rows.push_back({sweedler_h4(F5()), 0, 10});
    rows.push_back({sweedler_h4(F5()), -1, 10});
    rows.push_back({taft(3, F7()), 0, 21});
    rows.push_back({taft(3, F7()), -1, 21});
    rows.push_back({taft(3, F7()), 1, 21});
    for (const auto& row : rows) {
        ExponentResult dec = exponent_2i(row.h, row.i);
        CHECK(dec.value_i64() == row.expect);
        BruteForceOutcome bf = brute_force_exponent(row.h, row.i, 200);
        REQUIRE(bf.known());
        CHECK(*bf.value == row.expect);
        // decision certificate: the value divides the certified period
        REQUIRE(dec.certificate.order.finite());
        CHECK(*dec.certificate.order.value % *dec.value == 0);
    }
}

TEST_CASE("characteristic zero infinitude with certificates") {
    for (auto h : {sweedler_h4(Q()), taft(3, Qz3())}) {
        for (std::int64_t i : {0, -1}) {
            ExponentResult r = exponent_2i(h, i);
            CHECK(!r.finite());
            bool certified = std::holds_alternative<NonSquarefree>(r.certificate.order.evidence) ||
                             std::holds_alternative<NonCyclotomicFactor>(r.certificate.order.evidence);
            CHECK(certified);
        }
        BruteForceOutcome bf = brute_force_exponent(h, 0, 100);
        CHECK(!bf.known());
        CHECK(bf.bound == 100);
    }
}

TEST_CASE("the step operator sends u.eps to the identity") {
    for (const auto& [name, h] : standard()) {
        INFO(name);
        for (std::int64_t i : {0, -1, 1}) {
            Matrix a = h.s2_power(i);
            CHECK(h.power_step(a, h.u_eps()).is_identity());
        }
    }
}

TEST_CASE("divisibility: T_n hits u.eps exactly at multiples of the exponent") {
    for (auto h : {group_algebra(FiniteGroupTable::cyclic(6), Q()), sweedler_h4(F3())}) {
        for (std::int64_t i : {0, -1}) {
            std::int64_t e = exponent_2i(h, i).value_i64();
            Matrix a = h.s2_power(i);
            Matrix ue = h.u_eps();
            Matrix t = Matrix::identity(h.field, h.dim);
            for (std::int64_t n = 1; n <= 4 * e; ++n) {
                if (n > 1) t = h.power_step(a, t);
                CHECK((t == ue) == (n % e == 0));
            }
        }
    }
}

TEST_CASE("default brute force bound") {
    HopfAlgebra h4 = sweedler_h4(Q());
    CHECK(default_brute_force_bound(h4) == 4 * 16 + 16);
}

TEST_CASE("involutory algebras have one exponent for every i") {
    HopfAlgebra h = group_algebra(FiniteGroupTable::symmetric3(), Q());
    std::int64_t e = exp0(h).value_i64();
    for (std::int64_t i : {-2, -1, 0, 1, 2, 5}) CHECK(exponent_2i(h, i).value_i64() == e);
}

TEST_CASE("duality and op/cop invariance, both exponents") {
    for (const auto& [name, h] : standard()) {
        INFO(name);
        for (std::int64_t i : {0, -1}) {
            auto base = exponent_2i(h, i);
            CHECK(exponent_2i(dual(h), i).value == base.value);
            CHECK(exponent_2i(opposite(h), i).value == base.value);
            CHECK(exponent_2i(coopposite(h), i).value == base.value);
        }
    }
}

TEST_CASE("tensor products take the lcm of exponents") {
    HopfAlgebra z2 = group_algebra(FiniteGroupTable::cyclic(2), Q());
    HopfAlgebra z3 = group_algebra(FiniteGroupTable::cyclic(3), Q());
    CHECK(exp0(tensor_product(z2, z3)).value_i64() == 6);
    // lcm with an infinite side is infinite
    HopfAlgebra mix = tensor_product(sweedler_h4(Q()), z3);
    CHECK(!exp0(mix).finite());
    // finite char p pair
    HopfAlgebra p1 = sweedler_h4(F3());
    HopfAlgebra pair = tensor_product(p1, group_algebra(FiniteGroupTable::cyclic(4), F3()));
    CHECK(exp0(pair).value_i64() == 12);  // lcm(6, 4)
}

TEST_CASE("normalized twist index appears in the certificate") {
    HopfAlgebra h4 = sweedler_h4(F3());
    ExponentResult r = exponent_2i(h4, -5);
    CHECK(r.certificate.i_raw == -5);
    CHECK(r.certificate.i_normalized == 1);  // mod ord(S^2) = 2
    CHECK(r.value == exponent_2i(h4, 1).value);
}

TEST_CASE("grouplikes") {
    HopfAlgebra z3 = group_algebra(FiniteGroupTable::cyclic(3), Q());
    auto g3 = grouplikes(z3);
    CHECK(g3.size() == 3);

    auto g4 = grouplikes(sweedler_h4(Q()));
    CHECK(g4.size() == 2);
    std::vector<std::int64_t> orders;
    for (const auto& g : g4) orders.push_back(g.order);
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<std::int64_t>{1, 2});

    // grouplikes of the dual are the characters: S3 has two over Q
    auto gd = grouplikes(dual_group_algebra(FiniteGroupTable::symmetric3(), Q()));
    CHECK(gd.size() == 2);
}

TEST_CASE("pivotal power identity") {
    SplitMix64 rng(9);
    for (auto h : {group_algebra(FiniteGroupTable::symmetric3(), Q()), sweedler_h4(Q())}) {
        for (const auto& g : grouplikes(h)) {
            for (std::int64_t n = 1; n <= 4; ++n) {
                for (int trial = 0; trial < 3; ++trial) {
                    Vec v = vec_zero(h.field, h.dim);
                    for (auto& c : v)
                        c = FieldElement::from_integer(h.field, static_cast<long>(rng.below(7)) - 3);
                    CHECK(pivotal_power_identity_check(h, g, n, v));
                }
            }
        }
    }
    // H4 with g and h = x at n = 2, 3 (the skew-primitive case)
    HopfAlgebra h4 = sweedler_h4(Q());
    for (const auto& g : grouplikes(h4))
        for (std::int64_t n : {2, 3}) CHECK(pivotal_power_identity_check(h4, g, n, h4.basis_vector(1)));
}

TEST_CASE("find_pivotal") {
    // involutory: the identity element is pivotal
    HopfAlgebra s3 = group_algebra(FiniteGroupTable::symmetric3(), Q());
    auto p = find_pivotal(s3);
    REQUIRE(p);
    CHECK(p->coordinates == s3.unit);

    // H4: conjugation by g realizes S^2
    HopfAlgebra h4 = sweedler_h4(Q());
    auto p4 = find_pivotal(h4);
    REQUIRE(p4);
    CHECK(p4->coordinates == h4.basis_vector(2));
    CHECK(conjugation_matrix(h4, *p4) == h4.antipode * h4.antipode);

    // smash products carry the canonical pivot
    SmashProduct sp = smash_s2(sweedler_h4(F3()));
    auto psm = find_pivotal(sp.result);
    REQUIRE(psm);
    GrouplikeElement canonical{sp.pivot, sp.d};
    CHECK(conjugation_matrix(sp.result, canonical) == sp.result.antipode * sp.result.antipode);
}

TEST_CASE("pivotal implies equal exponents") {
    for (auto h : {smash_s2(sweedler_h4(F3())).result, smash_s2(taft(3, F7())).result}) {
        REQUIRE(find_pivotal(h).has_value());
        CHECK(exp0(h).value == exp_classic(h).value);
    }
}

TEST_CASE("quasitriangular twisted-exponent collapse on doubles") {
    // exp_{4i} = exp_0 and exp_{4i-2} = exp on D(H)
    for (auto h : {sweedler_h4(F3()), group_algebra(FiniteGroupTable::cyclic(3), Q())}) {
        HopfAlgebra d = drinfeld_double(h).result;
        auto e0 = exp0(d).value;
        auto em = exp_classic(d).value;
        for (std::int64_t i : {0, 1, 2}) {
            CHECK(exponent_2i(d, 2 * i).value == e0);
            CHECK(exponent_2i(d, 2 * i - 1).value == em);
        }
    }
}

TEST_CASE("semisimple-cosemisimple exponent divides dim cubed") {
    for (const auto& [name, h] : standard()) {
        if (!(h.antipode * h.antipode).is_identity()) continue;
        INFO(name);
        std::int64_t e = exp_classic(h).value_i64();
        mpz_class d3(static_cast<long>(h.dim));
        d3 = d3 * d3 * d3;
        CHECK(d3 % e == 0);
    }
}
