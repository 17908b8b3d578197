#include "hopfexp/theorems.hpp"

#include <functional>
#include <sstream>

#include "hopfexp/coradical.hpp"
#include "hopfexp/deform.hpp"

namespace hopfexp {

Suite suite_from_string(const std::string& s) {
    if (s == "invariance") return Suite::Invariance;
    if (s == "smash") return Suite::Smash;
    if (s == "finiteness") return Suite::Finiteness;
    if (s == "primitive") return Suite::Primitive;
    if (s == "all") return Suite::All;
    throw Error(Errc::UsageError, "unknown suite: " + s);
}

namespace {

std::string render(const ExponentResult& r) {
    return r.finite() ? r.value->get_str() : "infinite";
}

bool same_value(const ExponentResult& a, const ExponentResult& b) {
    if (a.finite() != b.finite()) return false;
    return !a.finite() || *a.value == *b.value;
}

std::optional<mpz_class> lcm_values(const std::optional<mpz_class>& a,
                                    const std::optional<mpz_class>& b) {
    if (!a || !b) return std::nullopt;  // lcm with infinity is infinity
    return lcm_mpz(*a, *b);
}

bool divides_opt(const std::optional<mpz_class>& a, const std::optional<mpz_class>& b) {
    // "a divides b" with the infinity conventions: everything divides infinity
    if (!b) return true;
    if (!a) return false;
    return *b % *a == 0;
}

struct Harness {
    VerificationReport rep;

    void run(const std::string& name, const std::string& anchor,
             const std::function<std::pair<bool, std::string>()>& body) {
        VerificationCheck c{name, anchor, "pass", ""};
        try {
            auto [ok, witness] = body();
            c.status = ok ? "pass" : "fail";
            c.witness = witness;
        } catch (const Error& e) {
            if (e.code() == Errc::FieldLacksRoots || e.code() == Errc::CoradicalUnavailable ||
                e.code() == Errc::NotChar0) {
                c.status = "skipped";
                c.witness = e.what();
            } else {
                c.status = "fail";
                c.witness = e.what();
            }
        }
        rep.checks.push_back(std::move(c));
    }

    void skip(const std::string& name, const std::string& anchor, const std::string& reason) {
        rep.checks.push_back({name, anchor, "skipped", reason});
    }
};

void invariance_suite(Harness& hx, const HopfAlgebra& h, const TheoremOptions& opts) {
    ExponentResult e0 = exp0(h);
    ExponentResult em = exp_classic(h);

    hx.run("dual invariance", "exp0(H*) = exp0(H), exp(H*) = exp(H)", [&] {
        HopfAlgebra d = dual(h);
        bool ok = same_value(exp0(d), e0) && same_value(exp_classic(d), em);
        return std::make_pair(ok, ok ? "" : "dual exponent differs");
    });
    hx.run("op/cop invariance", "exp_*(H^op) = exp_*(H^cop) = exp_*(H)", [&] {
        HopfAlgebra o = opposite(h);
        HopfAlgebra c = coopposite(h);
        bool ok = same_value(exp0(o), e0) && same_value(exp_classic(o), em) &&
                  same_value(exp0(c), e0) && same_value(exp_classic(c), em);
        return std::make_pair(ok, ok ? "" : "opposite exponent differs");
    });
    hx.run("tensor lcm", "exp_*(H (x) H) = lcm(exp_*(H), exp_*(H))", [&] {
        HopfAlgebra t = tensor_product(h, h);
        bool ok = same_value(exp0(t), e0) && same_value(exp_classic(t), em);
        return std::make_pair(ok, ok ? "" : "tensor square exponent differs");
    });
    hx.run("trivial twist", "exp_*(H^J) = exp_*(H), J = 1 (x) 1", [&] {
        HopfAlgebra tw = twist(h, TwistElement::trivial(h));
        bool ok = same_value(exp0(tw), e0) && same_value(exp_classic(tw), em);
        return std::make_pair(ok, ok ? "" : "trivial twist changed an exponent");
    });
    if (static_cast<std::int64_t>(h.dim) > opts.double_dim_limit) {
        hx.skip("double invariance", "exp0(D(H)) = exp0(H), exp(D(H)) = exp(H)",
                "dim(H) above the double limit");
        return;
    }
    hx.run("double invariance", "exp0(D(H)) = exp0(H), exp(D(H)) = exp(H)", [&] {
        DrinfeldDouble dd = drinfeld_double(h);
        bool ok = same_value(exp0(dd.result), e0) && same_value(exp_classic(dd.result), em);
        return std::make_pair(ok, ok ? "" : "double exponent differs");
    });
    hx.run("canonical R-matrix", "R Delta R^{-1} = Delta^cop; hexagon identities", [&] {
        DrinfeldDouble dd = drinfeld_double(h);
        QuasitriangularReport q = quasitriangular_checks(dd.result, dd.r_matrix);
        return std::make_pair(q.all(), q.all() ? "" : "a quasitriangularity identity failed");
    });
}

void smash_suite(Harness& hx, const HopfAlgebra& h, const TheoremOptions& opts) {
    SmashProduct sp = smash_s2(h);
    ExponentResult e_sm = exp_classic(sp.result);
    ExponentResult e0_sm = exp0(sp.result);
    ExponentResult e0_h = exp0(h);
    ExponentResult em_h = exp_classic(h);

    hx.run("smash lcm formula", "exp(H x| k<S^2>) = lcm(exp0(H), exp(H))", [&] {
        auto rhs = lcm_values(e0_h.value, em_h.value);
        bool ok = (!e_sm.finite() && !rhs) || (e_sm.finite() && rhs && *e_sm.value == *rhs);
        return std::make_pair(ok, ok ? "" : "lcm formula mismatch");
    });
    hx.run("smash twisted-exponent formula", "exp(H x| k<S^2>) = lcm_i exp_{2i}(H)", [&] {
        std::optional<mpz_class> acc = mpz_class(1);
        for (std::int64_t i = 0; i < sp.d; ++i) acc = lcm_values(acc, exponent_2i(h, i).value);
        bool ok = (!e_sm.finite() && !acc) || (e_sm.finite() && acc && *e_sm.value == *acc);
        return std::make_pair(ok, ok ? "" : "twisted lcm mismatch");
    });
    hx.run("smash pivot", "1 x| S^2 is a pivotal element", [&] {
        bool found = find_pivotal(sp.result).has_value();
        GrouplikeElement canonical{sp.pivot, sp.d};
        bool canonical_ok = conjugation_matrix(sp.result, canonical) ==
                            sp.result.antipode * sp.result.antipode;
        bool ok = found && canonical_ok;
        return std::make_pair(ok, ok ? "" : "conjugation by 1 x| S^2 is not S^2");
    });
    hx.run("pivotal equality on the smash", "exp0 = exp for pivotal Hopf algebras", [&] {
        bool ok = same_value(e0_sm, e_sm);
        return std::make_pair(ok, ok ? "" : "exponents differ on a pivotal algebra");
    });
    if (static_cast<std::int64_t>(h.dim) > opts.double_dim_limit) {
        hx.skip("S^2 order on the double", "ord(S^2 on D(H)) = ord(S^2 on H)",
                "dim(H) above the double limit");
        return;
    }
    hx.run("S^2 order on the double", "ord(S^2 on D(H)) = ord(S^2 on H)", [&] {
        DrinfeldDouble dd = drinfeld_double(h);
        bool ok = dd.result.s2_order() == h.s2_order();
        return std::make_pair(ok, ok ? "" : "S^2 orders differ");
    });
}

void finiteness_suite(Harness& hx, const HopfAlgebra& h, const TheoremOptions& opts) {
    ExponentResult e0 = exp0(h);
    ExponentResult em = exp_classic(h);
    const std::int64_t p = h.field.characteristic();
    CoradicalData cd = coradical_filtration(h);
    bool cosemisimple = cd.h0_basis.size() == h.dim;
    bool chevalley = is_dual_chevalley(h);

    if (p > 0) {
        hx.run("positive characteristic finiteness", "exp0(H) and exp(H) finite for char p > 0",
               [&] {
                   bool ok = e0.finite() && em.finite();
                   return std::make_pair(ok, ok ? "" : "an exponent is infinite in char p");
               });
        if (!chevalley) {
            hx.skip("char-p divisibility bound", "exp0(H) | N p^M", "dual Chevalley property fails");
        } else {
            auto [h0alg, incl] = sub_hopf_algebra(h, cd.h0_basis);
            ExponentResult n0 = exp0(h0alg);
            ExponentResult nm = exp_classic(h0alg);
            std::int64_t lw = cd.loewy_length;
            std::int64_t m_exp = 0;
            mpz_class pm = 1;
            while (pm < lw) { pm *= p; ++m_exp; }
            hx.run("char-p divisibility bound",
                   "exp0(H) | N p^M with N = exp0(H_0), p^M >= Lw(H) minimal", [&] {
                       std::optional<mpz_class> bound;
                       if (n0.finite()) bound = *n0.value * pm;
                       bool ok = n0.finite() && e0.finite() && divides_opt(e0.value, bound);
                       return std::make_pair(ok, ok ? "" : "divisibility fails");
                   });
            hx.run("char-p exp bound",
                   "exp(H) | N p^M with N = lcm(exp(H_0), exp0(H_0)), p^M >= Lw(H) minimal", [&] {
                       auto n_both = lcm_values(n0.value, nm.value);
                       std::optional<mpz_class> bound;
                       if (n_both) bound = *n_both * pm;
                       bool ok = n_both && em.finite() && divides_opt(em.value, bound);
                       return std::make_pair(ok, ok ? "" : "divisibility fails");
                   });
            hx.run("char-p proof-variant bound", "exp(H) | N p^L (proof form; reported)", [&] {
                mpz_class pl = 1;
                for (std::int64_t t = 0; t < lw; ++t) pl *= p;
                auto n_both = lcm_values(n0.value, nm.value);
                std::optional<mpz_class> bound;
                if (n_both) bound = *n_both * pl;
                bool ok = divides_opt(em.value, bound) && divides_opt(e0.value, bound);
                return std::make_pair(ok, ok ? "" : "proof-variant divisibility fails");
            });
        }
    } else {
        if (!cosemisimple && chevalley) {
            hx.run("characteristic-zero infinitude",
                   "exp0(H) = exp(H) = infinity for non-cosemisimple dual Chevalley H", [&] {
                       bool ok = !e0.finite() && !em.finite();
                       if (!ok) return std::make_pair(false, std::string("an exponent is finite"));
                       bool cert0 =
                           std::holds_alternative<NonSquarefree>(e0.certificate.order.evidence) ||
                           std::holds_alternative<NonCyclotomicFactor>(e0.certificate.order.evidence);
                       bool certm =
                           std::holds_alternative<NonSquarefree>(em.certificate.order.evidence) ||
                           std::holds_alternative<NonCyclotomicFactor>(em.certificate.order.evidence);
                       bool okc = cert0 && certm;
                       return std::make_pair(okc, okc ? std::string() : std::string("missing certificate"));
                   });
        } else {
            hx.skip("characteristic-zero infinitude", "exp0(H) = exp(H) = infinity",
                    cosemisimple ? "H is cosemisimple" : "dual Chevalley property fails");
        }
    }

    Matrix s2 = h.antipode * h.antipode;
    if (s2.is_identity()) {
        hx.run("involutory equality", "exp0(H) = exp(H) when S^2 = id", [&] {
            bool ok = same_value(e0, em);
            return std::make_pair(ok, ok ? "" : "involutory exponents differ");
        });
    } else {
        hx.skip("involutory equality", "exp0(H) = exp(H) when S^2 = id", "S^2 != id");
    }
    if (cosemisimple && s2.is_identity() && e0.finite()) {
        hx.run("dimension-cube divisibility", "exp(H) | dim(H)^3 (semisimple-cosemisimple)", [&] {
            mpz_class d3 = mpz_class(static_cast<long>(h.dim));
            d3 = d3 * d3 * d3;
            bool ok = em.finite() && d3 % *em.value == 0;
            return std::make_pair(ok, ok ? "" : "exp does not divide dim^3");
        });
    }
    (void)opts;
}

void primitive_suite(Harness& hx, const HopfAlgebra& h, const TheoremOptions& opts) {
    CoradicalData cd = coradical(h);
    if (cd.h0_basis.size() == h.dim) {
        hx.skip("nontrivial primitive matrix", "existence of a nontrivial (C,1)-primitive matrix",
                "H is cosemisimple (H_1 = H_0)");
        return;
    }
    if (!is_dual_chevalley(h)) {
        hx.skip("nontrivial primitive matrix", "existence of a nontrivial (C,1)-primitive matrix",
                "dual Chevalley property fails");
        return;
    }
    std::vector<SimpleSubcoalgebra> simples = simple_decomposition(h, opts.seed);
    std::optional<MultiplicativeMatrix> found_c;
    std::optional<PrimitiveMatrixSpace> found_space;
    for (const auto& s : simples) {
        auto bm = basic_multiplicative_matrix(h, s, opts.seed);
        if (!bm) continue;
        PrimitiveMatrixSpace space = primitive_space(h, *bm, unit_multiplicative_matrix(h));
        if (space.has_nontrivial()) {
            found_c = *bm;
            found_space = std::move(space);
            break;
        }
    }
    hx.run("nontrivial primitive matrix",
           "a nontrivial (C,1)-primitive matrix exists for some simple C", [&] {
               bool ok = found_space.has_value();
               return std::make_pair(ok, ok ? "" : "no nontrivial primitive matrix found");
           });
    if (!found_space) return;

    Vec lambda0 = integral_coradical(h).lambda0;
    hx.run("integral pairing", "Lambda_0 X != 0 and X Lambda_0 != 0", [&] {
        for (const auto& x : found_space->nontrivial_basis)
            if (!lambda_pairing_check(h, x, lambda0))
                return std::make_pair(false, std::string("a pairing vanished"));
        return std::make_pair(true, std::string());
    });

    if (h.field.characteristic() != 0) {
        hx.skip("S^2 eigen primitives", "S^2(X) = qX with q an N-th root of unity",
                "stated in characteristic 0");
        return;
    }
    hx.run("S^{2N} fixes primitives", "S^{2N}(X) = X with N = exp(H_0)", [&] {
        // s2_primitive_eigens performs the S^{2N} check internally
        auto eigens = s2_primitive_eigens(h, *found_c);
        return std::make_pair(!eigens.empty(), eigens.empty() ? "no eigenpair" : "");
    });
    hx.run("xpower identities", "S(X) = -S(C)X; commuting rule; sum q^i C^i X nonzero, n <= 12", [&] {
        auto eigens = s2_primitive_eigens(h, *found_c);
        for (const auto& [q, x] : eigens) {
            XPowerReport rep = xpower_identity_report(h, *found_c, x, q, 12);
            if (rep.all_ok()) return std::make_pair(true, std::string());
        }
        return std::make_pair(false, std::string("no eigenpair satisfies every identity"));
    });
}

}  // namespace

VerificationReport verify_theorems(const HopfAlgebra& h, Suite suite, const TheoremOptions& opts) {
    Harness hx;
    hx.rep.subject_digest = document_digest(document_from_algebra(h));
    if (suite == Suite::Invariance || suite == Suite::All) invariance_suite(hx, h, opts);
    if (suite == Suite::Smash || suite == Suite::All) smash_suite(hx, h, opts);
    if (suite == Suite::Finiteness || suite == Suite::All) finiteness_suite(hx, h, opts);
    if (suite == Suite::Primitive || suite == Suite::All) primitive_suite(hx, h, opts);
    hx.rep.exponents.emplace_back(0, render(exp0(h)));
    hx.rep.exponents.emplace_back(-1, render(exp_classic(h)));
    return hx.rep;
}

}  // namespace hopfexp
