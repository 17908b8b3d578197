#pragma once

#include "hopfexp/hopf.hpp"

namespace hopfexp {

struct ExponentCertificate {
    Polynomial min_poly;               // relative minimal polynomial of the step operator at id
    OrderResult order;                 // its root-of-unity order decision
    std::optional<std::int64_t> cycle_index;  // position of u.eps within the scanned cycle
    std::int64_t i_raw = 0;
    std::int64_t i_normalized = 0;     // i mod ord(S^2)

    ExponentCertificate() : min_poly(FieldDescriptor::rational()) {}
};

struct ExponentResult {
    std::optional<mpz_class> value;  // nullopt = infinite
    std::int64_t i = 0;
    enum class Method { Decision, BruteForce } method = Method::Decision;
    ExponentCertificate certificate;

    bool finite() const { return value.has_value(); }
    std::int64_t value_i64() const;
    std::string to_string() const;
};

/// exp_{2i}(H) = min{n >= 1 : m_n (id (x) S^{2i} (x) ... (x) S^{2(n-1)i}) Delta_n = u eps},
/// decided by the Krylov certificate of the step operator
/// L_i(f) = m . (id (x) (S^{2i} . f)) . Delta at f = id, then a bounded cycle scan.
/// exp_0 is i = 0; exp is i = -1. Always terminates.
ExponentResult exponent_2i(const HopfAlgebra& h, std::int64_t i);

inline ExponentResult exp0(const HopfAlgebra& h) { return exponent_2i(h, 0); }
inline ExponentResult exp_classic(const HopfAlgebra& h) { return exponent_2i(h, -1); }

struct BruteForceOutcome {
    std::optional<std::int64_t> value;  // least n <= bound with T_n = u.eps
    std::int64_t bound = 0;
    bool known() const { return value.has_value(); }
};

/// Literal iteration of the twisted power recursion up to the bound.
BruteForceOutcome brute_force_exponent(const HopfAlgebra& h, std::int64_t i, std::int64_t bound);

std::int64_t default_brute_force_bound(const HopfAlgebra& h);

struct GrouplikeElement {
    Vec coordinates;
    std::int64_t order = 1;
};

/// Grouplikes of H, read off the one-dimensional simple subcoalgebras of the
/// coradical; closed under multiplication.
std::vector<GrouplikeElement> grouplikes(const HopfAlgebra& h);

/// (h g)^{[n]} = sum h_(1) phi(h_(2)) ... phi^{n-1}(h_(n)) g^n, phi = conjugation by g.
bool pivotal_power_identity_check(const HopfAlgebra& h, const GrouplikeElement& g, std::int64_t n,
                                  const Vec& elem);

/// A grouplike whose conjugation action equals S^2, when one exists.
std::optional<GrouplikeElement> find_pivotal(const HopfAlgebra& h);

/// Conjugation matrix x -> g x g^{-1}.
Matrix conjugation_matrix(const HopfAlgebra& h, const GrouplikeElement& g);

}  // namespace hopfexp
