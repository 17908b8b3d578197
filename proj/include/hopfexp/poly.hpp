#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hopfexp/field.hpp"

namespace hopfexp {

/// Dense univariate polynomial, ascending coefficients, trailing coefficient
/// nonzero (empty vector = zero polynomial).
class Polynomial {
public:
    explicit Polynomial(FieldDescriptor f) : desc_(f) {}
    Polynomial(FieldDescriptor f, std::vector<FieldElement> coeffs);

    static Polynomial zero(const FieldDescriptor& f) { return Polynomial(f); }
    static Polynomial constant(const FieldElement& c);
    static Polynomial x(const FieldDescriptor& f);
    static Polynomial monomial(const FieldDescriptor& f, std::size_t deg, const FieldElement& c);
    /// x^n - 1
    static Polynomial x_pow_minus_one(const FieldDescriptor& f, std::int64_t n);

    const FieldDescriptor& descriptor() const { return desc_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const FieldElement& leading() const;
    FieldElement coeff(std::size_t i) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return desc_ == o.desc_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must have invertible leading coefficient.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial operator%(const Polynomial& o) const { return divmod(o).second; }
    Polynomial operator/(const Polynomial& o) const { return divmod(o).first; }

    Polynomial derivative() const;
    Polynomial monic() const;  // scale by leading^-1
    FieldElement eval(const FieldElement& at) const;
    Polynomial pow_mod(const mpz_class& e, const Polynomial& modulus) const;

    std::string to_string() const;

private:
    void trim();
    FieldDescriptor desc_;
    std::vector<FieldElement> c_;
};

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);  // monic output

/// Inverse of a modulo m (gcd(a, m) must be constant).
Polynomial poly_invmod(const Polynomial& a, const Polynomial& m);

/// Yun's squarefree decomposition; characteristic 0 only.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition_char0(const Polynomial& g);

/// Phi_n over the given field (coefficients mapped from the integers).
Polynomial cyclotomic_polynomial(std::int64_t n, const FieldDescriptor& f);

// --- order of x in k[x]/(g) -------------------------------------------------

struct CyclotomicCertificate {
    std::vector<std::int64_t> indices;  // g = prod of the cyclotomic parts of these orders
};
struct NonSquarefree {
    Polynomial witness_gcd;
};
struct NonCyclotomicFactor {
    Polynomial witness;
};
struct FiniteFieldOrder {
    std::vector<std::pair<mpz_class, std::int64_t>> factor_orders;  // (order of x mod f_i, deg f_i)
    std::int64_t p_power_exponent;  // least a with p^a >= max multiplicity
};

/// Result of the multiplicative-order decision; finite iff the evidence is a
/// CyclotomicCertificate or FiniteFieldOrder.
struct OrderResult {
    std::optional<mpz_class> value;  // nullopt = infinite
    std::variant<CyclotomicCertificate, NonSquarefree, NonCyclotomicFactor, FiniteFieldOrder> evidence;

    bool finite() const { return value.has_value(); }
    std::string to_string() const;
};

/// Multiplicative order of the coset of x in k[x]/(g); g monic, deg >= 1.
OrderResult root_of_unity_order(const Polynomial& g);

/// Factorization over F_p into monic irreducibles with multiplicities
/// (squarefree decomposition + distinct-degree + equal-degree splitting).
std::vector<std::pair<Polynomial, int>> factor_prime_field(const Polynomial& g,
                                                           std::uint64_t seed = 1);

}  // namespace hopfexp
