#include <doctest.h>

#include "corpus.hpp"
#include "hopfexp/deform.hpp"
#include "hopfexp/exponent.hpp"

using namespace hopfexp;
using namespace hopfexp::corpus;

TEST_CASE("twist validation") {
    HopfAlgebra h4 = sweedler_h4(Q());
    CHECK(validate_twist(h4, TwistElement::trivial(h4)).ok);

    HopfAlgebra dk4 = dual_group_algebra(FiniteGroupTable::klein4(), Q());
    TwistElement beta = klein_beta_twist(dk4);
    CHECK(validate_twist(dk4, beta).ok);

    // J = 1 (x) 1 + x (x) x in H4 fails
    Vec j = vec_zero(Q(), 16);
    j[0 * 4 + 0] = FieldElement::one(Q());
    j[1 * 4 + 1] = FieldElement::one(Q());
    TwistReport rep = validate_twist(h4, TwistElement::from_coords(h4, j, j));
    CHECK(!rep.ok);
    CHECK(!rep.failed_invariant.empty());
    CHECK_THROWS_AS(twist(h4, TwistElement::from_coords(h4, j, j)), Error);
}

TEST_CASE("trivial twist returns the same structure constants") {
    for (const auto& [name, h] : standard()) {
        INFO(name);
        HopfAlgebra t = twist(h, TwistElement::trivial(h));
        CHECK(t.mult == h.mult);
        CHECK(t.comult == h.comult);
        CHECK(t.antipode == h.antipode);
    }
}

TEST_CASE("beta twist of the dual Klein four group") {
    HopfAlgebra dk4 = dual_group_algebra(FiniteGroupTable::klein4(), Q());
    TwistElement beta = klein_beta_twist(dk4);
    HopfAlgebra tw = twist(dk4, beta);
    CHECK(verify_axioms(tw).all_pass());
    CHECK(exp0(tw).value_i64() == 2);
    CHECK(exp_classic(tw).value_i64() == 2);

    // untwisting recovers the algebra bit-exactly
    TwistElement inv;
    inv.j = beta.j_inverse;
    inv.j_inverse = beta.j;
    HopfAlgebra back = twist(tw, inv);
    CHECK(back.mult == dk4.mult);
    CHECK(back.comult == dk4.comult);
    CHECK(back.antipode == dk4.antipode);
    CHECK(back.unit == dk4.unit);
    CHECK(back.counit == dk4.counit);
}

TEST_CASE("twisted Sweedler powers, bracket formula vs direct path") {
    HopfAlgebra dk4 = dual_group_algebra(FiniteGroupTable::klein4(), Q());
    TwistElement beta = klein_beta_twist(dk4);
    HopfAlgebra tw = twist(dk4, beta);
    SplitMix64 rng(5);
    for (int trial = 0; trial < 4; ++trial) {
        Vec v = vec_zero(Q(), 4);
        for (auto& c : v) c = FieldElement::from_integer(Q(), static_cast<long>(rng.below(9)) - 4);
        CHECK(twisted_sweedler_power(dk4, beta, v, 0) == v);  // (n = 0) -> h^{[1]} = h
        for (std::int64_t n = 1; n <= 6; ++n) {
            Vec bracket = twisted_sweedler_power(dk4, beta, v, n);
            Vec direct = tw.twisted_power_map(0, n + 1) * v;
            CHECK(bracket == direct);
        }
    }
    // trivial twist reduces to the plain power
    HopfAlgebra h4 = sweedler_h4(Q());
    Vec x = h4.basis_vector(1);
    CHECK(twisted_sweedler_power(h4, TwistElement::trivial(h4), x, 2) ==
          h4.twisted_power_map(0, 3) * x);
}

TEST_CASE("Drinfeld double of a small group algebra") {
    HopfAlgebra z2 = group_algebra(FiniteGroupTable::cyclic(2), Q());
    DrinfeldDouble d = drinfeld_double(z2);
    CHECK(d.result.dim == 4);
    CHECK(verify_axioms(d.result).all_pass());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(d.result.multiply(d.result.basis_vector(i), d.result.basis_vector(j)) ==
                  d.result.multiply(d.result.basis_vector(j), d.result.basis_vector(i)));
    CHECK(quasitriangular_checks(d.result, d.r_matrix).all());
}

TEST_CASE("double embeddings are Hopf algebra maps") {
    for (auto h : {group_algebra(FiniteGroupTable::cyclic(3), Q()), sweedler_h4(F3())}) {
        DrinfeldDouble d = drinfeld_double(h);
        CHECK(is_hopf_map(h, d.result, d.embed_h));
        CHECK(is_hopf_map(coopposite(dual(h)), d.result, d.embed_dual));
        CHECK(quasitriangular_checks(d.result, d.r_matrix).all());
    }
}

TEST_CASE("exponents are invariant under the double on small algebras") {
    for (auto h : {group_algebra(FiniteGroupTable::cyclic(3), Q()), sweedler_h4(F3())}) {
        DrinfeldDouble d = drinfeld_double(h);
        CHECK(exp0(d.result).value == exp0(h).value);
        CHECK(exp_classic(d.result).value == exp_classic(h).value);
    }
}

TEST_CASE("smash product structure") {
    // involutory: d = 1 and the result is H again
    HopfAlgebra z3 = group_algebra(FiniteGroupTable::cyclic(3), Q());
    SmashProduct triv = smash_s2(z3);
    CHECK(triv.d == 1);
    CHECK(triv.result.dim == 3);
    CHECK(triv.result.mult == z3.mult);

    SmashProduct sp4 = smash_s2(sweedler_h4(F3()));
    CHECK(sp4.d == 2);
    CHECK(sp4.result.dim == 8);
    CHECK(verify_axioms(sp4.result).all_pass());

    SmashProduct sp7 = smash_s2(taft(3, F7()));
    CHECK(sp7.d == 3);
    CHECK(sp7.result.dim == 27);
    CHECK(verify_axioms(sp7.result).all_pass());

    for (const SmashProduct& sp : {sp4, sp7}) {
        const HopfAlgebra& sm = sp.result;
        CHECK(sm.is_grouplike(sp.pivot));
        // conjugation by the pivot realizes S^2 of the smash
        Vec piv_inv = sp.pivot;
        for (std::int64_t k = 2; k < sp.d; ++k) piv_inv = sm.multiply(piv_inv, sp.pivot);
        if (sp.d == 1) piv_inv = sm.unit;
        Matrix s2 = sm.antipode * sm.antipode;
        for (std::size_t i = 0; i < sm.dim; ++i)
            CHECK(sm.multiply(sm.multiply(sp.pivot, sm.basis_vector(i)), piv_inv) == s2.col(i));
    }
    // embedding is a Hopf map
    HopfAlgebra h4 = sweedler_h4(F3());
    SmashProduct sp = smash_s2(h4);
    CHECK(is_hopf_map(h4, sp.result, sp.embed));
}

TEST_CASE("double of a noncommutative group algebra keeps the group exponent") {
    DrinfeldDouble d = drinfeld_double(group_algebra(FiniteGroupTable::symmetric3(), Q()));
    CHECK(d.result.dim == 36);
    CHECK(exp_classic(d.result).value_i64() == 6);
}

TEST_CASE("S^2 order passes to the double") {
    for (auto h : {group_algebra(FiniteGroupTable::cyclic(3), Q()), sweedler_h4(F3())}) {
        DrinfeldDouble d = drinfeld_double(h);
        CHECK(d.result.s2_order() == h.s2_order());
    }
}

TEST_CASE("sub-divisibility through the embeddings") {
    // exp(H) | exp(D(H)) and exp(H) | exp(smash), seen through equal or lcm values
    HopfAlgebra h = sweedler_h4(F3());
    std::int64_t e = exp_classic(h).value_i64();
    CHECK(exp_classic(drinfeld_double(h).result).value_i64() % e == 0);
    CHECK(exp_classic(smash_s2(h).result).value_i64() % e == 0);
}
