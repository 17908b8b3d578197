// Acceptance suite: one pass/fail line per criterion, exact equality throughout.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>

#include "corpus.hpp"
#include "hopfexp/coradical.hpp"
#include "hopfexp/deform.hpp"
#include "hopfexp/exponent.hpp"
#include "hopfexp/io.hpp"

using namespace hopfexp;
using namespace hopfexp::corpus;
using Clock = std::chrono::steady_clock;

namespace {

struct Suite {
    int failures = 0;

    // every decided exponent is registered for the oracle cross-check
    struct Item {
        std::string name;
        HopfAlgebra h;
        std::int64_t i;
        std::optional<mpz_class> value;
    };
    std::vector<Item> registry;

    ExponentResult decide(const std::string& name, const HopfAlgebra& h, std::int64_t i) {
        ExponentResult r = exponent_2i(h, i);
        registry.push_back({name, h, i, r.value});
        return r;
    }

    void criterion(int k, const std::string& label, const std::function<bool()>& body) {
        auto t0 = Clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(" [exception: ") + e.what() + "]";
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("criterion %2d %s (%.2fs): %s%s\n", k, ok ? "PASS" : "FAIL", secs, label.c_str(),
                    note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

bool check(bool cond, const char* what) {
    if (!cond) std::fprintf(stderr, "    check failed: %s\n", what);
    return cond;
}

bool eq_opt(const std::optional<mpz_class>& a, const std::optional<mpz_class>& b) {
    return a.has_value() == b.has_value() && (!a || *a == *b);
}

std::optional<mpz_class> lcm_opt(const std::optional<mpz_class>& a, const std::optional<mpz_class>& b) {
    if (!a || !b) return std::nullopt;
    return lcm_mpz(*a, *b);
}

}  // namespace

int main() {
    Suite s;

    // 1. group exponents over Q and F5
    s.criterion(1, "group algebra exponents equal the group exponent", [&] {
        bool ok = true;
        std::vector<std::pair<std::string, FiniteGroupTable>> groups;
        for (std::int64_t n = 1; n <= 12; ++n)
            groups.emplace_back("Z" + std::to_string(n), FiniteGroupTable::cyclic(n));
        groups.emplace_back("Z2xZ2", FiniteGroupTable::klein4());
        groups.emplace_back("S3", FiniteGroupTable::symmetric3());
        for (auto f : {Q(), F5()}) {
            for (const auto& [gname, table] : groups) {
                HopfAlgebra h = group_algebra(table, f);
                std::string name = f.to_string() + "[" + gname + "]";
                mpz_class expect(static_cast<long>(table.exponent()));
                ok &= check(eq_opt(s.decide(name + " exp0", h, 0).value, expect), "exp0 = exp(G)");
                ok &= check(eq_opt(s.decide(name + " exp", h, -1).value, expect), "exp = exp(G)");
            }
        }
        return ok;
    });

    // 2. duality, op/cop, tensor-lcm on the corpus
    s.criterion(2, "invariance laws: dual, op/cop, tensor lcm (both exponents)", [&] {
        bool ok = true;
        for (const auto& [name, h] : standard()) {
            for (std::int64_t i : {0, -1}) {
                auto base = s.decide(name, h, i).value;
                ok &= check(eq_opt(s.decide("dual " + name, dual(h), i).value, base), "dual invariance");
                ok &= check(eq_opt(s.decide("op " + name, opposite(h), i).value, base), "op invariance");
                ok &= check(eq_opt(s.decide("cop " + name, coopposite(h), i).value, base),
                            "cop invariance");
            }
        }
        std::vector<std::pair<HopfAlgebra, HopfAlgebra>> pairs;
        pairs.emplace_back(group_algebra(FiniteGroupTable::cyclic(6), Q()),
                           group_algebra(FiniteGroupTable::symmetric3(), Q()));
        pairs.emplace_back(sweedler_h4(F3()), group_algebra(FiniteGroupTable::cyclic(4), F3()));
        pairs.emplace_back(sweedler_h4(Q()), group_algebra(FiniteGroupTable::cyclic(3), Q()));
        pairs.emplace_back(taft(3, F7()), group_algebra(FiniteGroupTable::cyclic(2), F7()));
        int idx = 0;
        for (const auto& [a, b] : pairs) {
            HopfAlgebra t = tensor_product(a, b);
            std::string name = "tensor pair " + std::to_string(idx++);
            for (std::int64_t i : {0, -1}) {
                auto lhs = s.decide(name, t, i).value;
                auto rhs = lcm_opt(s.decide(name + " left", a, i).value,
                                   s.decide(name + " right", b, i).value);
                ok &= check(eq_opt(lhs, rhs), "tensor lcm");
            }
        }
        return ok;
    });

    // 3. twist invariance
    s.criterion(3, "twist invariance and exact untwisting", [&] {
        bool ok = true;
        HopfAlgebra dk4 = dual_group_algebra(FiniteGroupTable::klein4(), Q());
        TwistElement beta = klein_beta_twist(dk4);
        HopfAlgebra tw = twist(dk4, beta);
        for (std::int64_t i : {0, -1}) {
            auto base = s.decide("dual K4", dk4, i).value;
            ok &= check(eq_opt(s.decide("beta twist", tw, i).value, base), "beta twist invariance");
            ok &= check(eq_opt(base, mpz_class(2)), "exp of dual K4 is 2");
        }
        TwistElement beta_inv{beta.j_inverse, beta.j};
        HopfAlgebra back = twist(tw, beta_inv);
        ok &= check(back.mult == dk4.mult && back.comult == dk4.comult && back.unit == dk4.unit &&
                        back.counit == dk4.counit && back.antipode == dk4.antipode,
                    "(H^J)^{J^-1} = H bit-exactly");
        for (const auto& [name, h] : standard()) {
            HopfAlgebra t = twist(h, TwistElement::trivial(h));
            for (std::int64_t i : {0, -1})
                ok &= check(eq_opt(s.decide("trivial twist " + name, t, i).value,
                                   s.decide(name, h, i).value),
                            "trivial twist invariance");
        }
        return ok;
    });

    // 4. double invariance + canonical R-matrix identities
    s.criterion(4, "Drinfeld double invariance and quasitriangularity", [&] {
        bool ok = true;
        std::vector<std::pair<std::string, HopfAlgebra>> hs;
        hs.emplace_back("Q[Z3]", group_algebra(FiniteGroupTable::cyclic(3), Q()));
        hs.emplace_back("F5[Z4]", group_algebra(FiniteGroupTable::cyclic(4), F5()));
        hs.emplace_back("H4/F3", sweedler_h4(F3()));
        hs.emplace_back("H4/Q", sweedler_h4(Q()));
        hs.emplace_back("taft3/F7", taft(3, F7()));
        for (const auto& [name, h] : hs) {
            DrinfeldDouble d = drinfeld_double(h);
            ok &= check(d.result.dim == h.dim * h.dim, "dim D(H) = dim(H)^2");
            for (std::int64_t i : {0, -1})
                ok &= check(eq_opt(s.decide("D(" + name + ")", d.result, i).value,
                                   s.decide(name, h, i).value),
                            "double invariance");
            ok &= check(quasitriangular_checks(d.result, d.r_matrix).all(), "R-matrix identities");
        }
        return ok;
    });

    // 5. smash product exponent formulas
    s.criterion(5, "smash exponent formulas and S^2 order on the double", [&] {
        bool ok = true;
        std::vector<std::pair<std::string, HopfAlgebra>> hs;
        hs.emplace_back("H4/F3", sweedler_h4(F3()));
        hs.emplace_back("taft3/F7", taft(3, F7()));
        hs.emplace_back("H4/Q", sweedler_h4(Q()));
        for (const auto& [name, h] : hs) {
            SmashProduct sp = smash_s2(h);
            auto direct = s.decide("smash " + name, sp.result, -1).value;
            std::optional<mpz_class> by_tw = mpz_class(1);
            for (std::int64_t i = 0; i < sp.d; ++i)
                by_tw = lcm_opt(by_tw, s.decide("tw " + name, h, i).value);
            ok &= check(eq_opt(direct, by_tw), "lcm of twisted exponents");
            auto by_pair = lcm_opt(s.decide(name, h, 0).value, s.decide(name, h, -1).value);
            ok &= check(eq_opt(direct, by_pair), "lcm(exp0, exp)");
            ok &= check(drinfeld_double(h).result.s2_order() == h.s2_order(), "ord(S^2) on D(H)");
        }
        return ok;
    });

    // 6. twisted exponents collapse on doubles
    s.criterion(6, "exp_{4i} and exp_{4i-2} on Drinfeld doubles", [&] {
        bool ok = true;
        for (auto [name, h] : std::vector<std::pair<std::string, HopfAlgebra>>{
                 {"H4/F3", sweedler_h4(F3())}, {"Q[Z3]", group_algebra(FiniteGroupTable::cyclic(3), Q())}}) {
            HopfAlgebra d = drinfeld_double(h).result;
            auto e0 = s.decide("D(" + name + ")", d, 0).value;
            auto em = s.decide("D(" + name + ")", d, -1).value;
            for (std::int64_t i : {0, 1, 2}) {
                ok &= check(eq_opt(s.decide("4i", d, 2 * i).value, e0), "exp_{4i} = exp0");
                ok &= check(eq_opt(s.decide("4i-2", d, 2 * i - 1).value, em), "exp_{4i-2} = exp");
            }
        }
        return ok;
    });

    // 7. characteristic-zero infinitude with certificates
    s.criterion(7, "infinitude in characteristic zero, certified", [&] {
        bool ok = true;
        for (auto [name, h] : std::vector<std::pair<std::string, HopfAlgebra>>{
                 {"H4/Q", sweedler_h4(Q())}, {"taft3/Qz3", taft(3, Qz3())}}) {
            for (std::int64_t i : {0, -1}) {
                ExponentResult r = exponent_2i(h, i);
                s.registry.push_back({name, h, i, r.value});
                ok &= check(!r.finite(), "exponent is infinite");
                ok &= check(std::holds_alternative<NonSquarefree>(r.certificate.order.evidence) ||
                                std::holds_alternative<NonCyclotomicFactor>(r.certificate.order.evidence),
                            "infinitude certificate present");
            }
        }
        return ok;
    });

    // 8. char-p finiteness and the divisibility bounds
    s.criterion(8, "char-p finiteness, N p^M bounds (and the N p^L variant)", [&] {
        bool ok = true;
        for (auto [name, h] : std::vector<std::pair<std::string, HopfAlgebra>>{
                 {"H4/F3", sweedler_h4(F3())}, {"H4/F5", sweedler_h4(F5())}, {"taft3/F7", taft(3, F7())}}) {
            std::int64_t p = h.field.characteristic();
            ExponentResult e0 = s.decide(name, h, 0);
            ExponentResult em = s.decide(name, h, -1);
            ok &= check(e0.finite() && em.finite(), "both exponents finite");
            CoradicalData cd = coradical_filtration(h);
            auto [h0, incl] = sub_hopf_algebra(h, cd.h0_basis);
            mpz_class n0 = *exp0(h0).value;
            mpz_class nboth = lcm_mpz(n0, *exp_classic(h0).value);
            std::int64_t lw = cd.loewy_length;
            mpz_class pm = 1;
            while (pm < lw) pm *= p;
            ok &= check((n0 * pm) % *e0.value == 0, "exp0 | N p^M");
            ok &= check((nboth * pm) % *em.value == 0, "exp | lcm(exp,exp0)(H0) p^M");
            mpz_class pl = 1;
            for (std::int64_t t = 0; t < lw; ++t) pl *= p;
            bool variant = (nboth * pl) % *em.value == 0 && (n0 * pl) % *e0.value == 0;
            std::printf("    [report] %s: N p^L variant %s (N p^M = %s, N p^L = %s)\n", name.c_str(),
                        variant ? "holds" : "fails", mpz_class(nboth * pm).get_str().c_str(),
                        mpz_class(nboth * pl).get_str().c_str());
            ok &= check(variant, "proof-variant divisibility");
        }
        return ok;
    });

    // 9. decision vs literal iteration for everything recorded so far
    s.criterion(9, "oracle agreement at bound 200 for every recorded exponent", [&] {
        bool ok = true;
        std::size_t finite_count = 0, infinite_count = 0;
        for (const auto& item : s.registry) {
            BruteForceOutcome bf = brute_force_exponent(item.h, item.i, 200);
            if (item.value) {
                ++finite_count;
                bool good = bf.known() && mpz_class(static_cast<long>(*bf.value)) == *item.value;
                if (!good) std::fprintf(stderr, "    oracle mismatch: %s\n", item.name.c_str());
                ok &= good;
            } else {
                ++infinite_count;
                bool good = !bf.known();
                if (!good) std::fprintf(stderr, "    oracle hit u.eps: %s\n", item.name.c_str());
                ok &= good;
            }
        }
        std::printf("    [report] %zu finite and %zu infinite exponents cross-checked\n", finite_count,
                    infinite_count);
        return ok && check(finite_count > 0 && infinite_count > 0, "registry covers both outcomes");
    });

    // 10. pivotal suite
    s.criterion(10, "pivotal identity, smash pivots, pivotal equality", [&] {
        bool ok = true;
        SplitMix64 rng(2024);
        std::vector<std::pair<std::string, HopfAlgebra>> hs;
        for (const auto& [name, h] : standard()) hs.emplace_back(name, h);
        hs.emplace_back("smash H4/F3", smash_s2(sweedler_h4(F3())).result);
        hs.emplace_back("smash H4/Q", smash_s2(sweedler_h4(Q())).result);
        for (const auto& [name, h] : hs) {
            for (const auto& g : grouplikes(h)) {
                for (std::int64_t n = 1; n <= 4; ++n) {
                    Vec v = vec_zero(h.field, h.dim);
                    for (auto& c : v)
                        c = FieldElement::from_integer(h.field, static_cast<long>(rng.below(7)) - 3);
                    ok &= check(pivotal_power_identity_check(h, g, n, v), "pivotal power identity");
                }
            }
        }
        for (auto h : {sweedler_h4(F3()), taft(3, F7()), sweedler_h4(Q())}) {
            SmashProduct sp = smash_s2(h);
            auto piv = find_pivotal(sp.result);
            ok &= check(piv.has_value(), "find_pivotal succeeds on the smash");
            GrouplikeElement canonical{sp.pivot, sp.d};
            ok &= check(conjugation_matrix(sp.result, canonical) ==
                            sp.result.antipode * sp.result.antipode,
                        "1 x| S^2 is pivotal");
            ok &= check(eq_opt(exp0(sp.result).value, exp_classic(sp.result).value),
                        "pivotal implies exp0 = exp");
        }
        return ok;
    });

    // 11. primitive-matrix suite on H4/Q and taft3/Q(zeta3)
    s.criterion(11, "primitive matrices: existence, pairing, eigenstructure, power identities", [&] {
        bool ok = true;
        for (auto [name, h] : std::vector<std::pair<std::string, HopfAlgebra>>{
                 {"H4/Q", sweedler_h4(Q())}, {"taft3/Qz3", taft(3, Qz3())}}) {
            std::optional<MultiplicativeMatrix> c_found;
            std::optional<PrimitiveMatrixSpace> space;
            for (const auto& simple : simple_decomposition(h)) {
                auto bm = basic_multiplicative_matrix(h, simple);
                if (!bm) continue;
                PrimitiveMatrixSpace p = primitive_space(h, *bm, unit_multiplicative_matrix(h));
                if (p.has_nontrivial()) {
                    c_found = *bm;
                    space = std::move(p);
                    break;
                }
            }
            ok &= check(space.has_value(), "nontrivial (C,1)-primitive exists");
            if (!space) continue;
            Vec lam = integral_coradical(h).lambda0;
            for (const auto& x : space->nontrivial_basis)
                ok &= check(lambda_pairing_check(h, x, lam), "Lambda_0 X != 0 and X Lambda_0 != 0");
            auto [h0, incl] = sub_hopf_algebra(h, coradical(h).h0_basis);
            std::int64_t big_n = exp_classic(h0).value_i64();
            Matrix s2n = (h.antipode * h.antipode).pow(mpz_class(static_cast<long>(big_n)));
            for (const auto& x : space->basis)
                ok &= check(hmat_apply(s2n, x) == x, "S^{2N}(X) = X");
            auto eigens = s2_primitive_eigens(h, *c_found);
            ok &= check(!eigens.empty(), "eigen-primitive exists");
            bool one_good = false;
            for (const auto& [q, x] : eigens) {
                ok &= check(q.pow(mpz_class(static_cast<long>(big_n))).is_one(), "q^N = 1");
                XPowerReport rep = xpower_identity_report(h, *c_found, x, q, 12);
                one_good = one_good || rep.all_ok();
            }
            ok &= check(one_good, "power identities hold to n = 12 with the n X Lambda_0 pairing");
        }
        return ok;
    });

    // 12. Loewy data
    s.criterion(12, "Loewy lengths, dual Chevalley, H0 H1 + H1 H0 in H1", [&] {
        bool ok = true;
        for (const auto& [name, h] : standard()) {
            CoradicalData cd = coradical_filtration(h);
            bool cosemisimple = cd.h0_basis.size() == h.dim;
            if (cosemisimple) ok &= check(cd.loewy_length == 1, "cosemisimple has Loewy length 1");
        }
        ok &= check(coradical_filtration(sweedler_h4(Q())).loewy_length == 2, "Lw(H4/Q) = 2");
        ok &= check(coradical_filtration(sweedler_h4(F3())).loewy_length == 2, "Lw(H4/F3) = 2");
        ok &= check(coradical_filtration(taft(3, Qz3())).loewy_length == 3, "Lw(taft3/Qz3) = 3");
        ok &= check(coradical_filtration(taft(3, F7())).loewy_length == 3, "Lw(taft3/F7) = 3");
        for (auto h : {sweedler_h4(Q()), sweedler_h4(F3()), taft(3, Qz3()), taft(3, F7())})
            ok &= check(is_dual_chevalley(h), "pointed members have the dual Chevalley property");
        for (auto h : {sweedler_h4(Q()), taft(3, Qz3())}) {
            CoradicalData cd = coradical_filtration(h);
            Echelon h1(h.field, h.dim);
            for (const auto& v : cd.filtration[1]) h1.insert(v);
            for (const auto& a : cd.h0_basis)
                for (const auto& b : cd.filtration[1]) {
                    ok &= check(h1.contains(h.multiply(a, b)), "H0 H1 in H1");
                    ok &= check(h1.contains(h.multiply(b, a)), "H1 H0 in H1");
                }
        }
        return ok;
    });

    // 13. dimension-cube divisibility
    s.criterion(13, "exp(H) divides dim(H)^3 for group algebras and their duals", [&] {
        bool ok = true;
        std::vector<FiniteGroupTable> tables;
        for (std::int64_t n = 1; n <= 12; ++n) tables.push_back(FiniteGroupTable::cyclic(n));
        tables.push_back(FiniteGroupTable::klein4());
        tables.push_back(FiniteGroupTable::symmetric3());
        for (auto f : {Q(), F5()}) {
            for (const auto& table : tables) {
                if (f.characteristic() != 0 && table.order % f.characteristic() == 0) {
                    // modular group algebras are not semisimple; the law is stated
                    // for the semisimple-cosemisimple case
                    continue;
                }
                for (HopfAlgebra h : {group_algebra(table, f), dual_group_algebra(table, f)}) {
                    mpz_class d3(static_cast<long>(h.dim));
                    d3 = d3 * d3 * d3;
                    ok &= check(d3 % *exp_classic(h).value == 0, "exp | dim^3");
                }
            }
        }
        return ok;
    });

    std::printf("%s: %d criterion(s) failed\n", s.failures ? "ACCEPTANCE FAIL" : "ACCEPTANCE PASS",
                s.failures);
    return s.failures ? 1 : 0;
}
