#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopfexp/util.hpp"

namespace hopfexp {

enum class FieldKind { Rational, Cyclotomic, PrimeField };

/// Identifies one of the supported exact base fields: Q, Q(zeta_n), F_p.
/// Cyclotomic(1) is normalized to Rational on construction.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rational;
    std::int64_t param = 0;  // n for Cyclotomic, p for PrimeField

    static FieldDescriptor rational() { return {FieldKind::Rational, 0}; }
    static FieldDescriptor cyclotomic(std::int64_t n);
    static FieldDescriptor prime_field(std::int64_t p);

    std::int64_t characteristic() const { return kind == FieldKind::PrimeField ? param : 0; }
    /// [K : Q] for characteristic zero, 1 for prime fields.
    std::int64_t extension_degree() const;

    bool operator==(const FieldDescriptor&) const = default;
    std::string to_string() const;
};

namespace detail {
/// Shared reduction data for Q(zeta_n): Phi_n and precomputed rows
/// x^{phi+t} mod Phi_n. Computed once per n, cached globally.
struct CyclotomicContext {
    std::int64_t n = 0;
    std::int64_t degree = 0;                       // phi(n)
    std::vector<mpz_class> phi_coeffs;             // monic, ascending, length degree+1
    std::vector<std::vector<mpz_class>> reduction;  // reduction[t] = x^{degree+t} mod Phi_n
};
const CyclotomicContext& cyclotomic_context(std::int64_t n);
}  // namespace detail

/// An exact scalar. Payload is canonical: reduced fraction, reduced power-basis
/// vector of length phi(n), or a residue in [0, p).
class FieldElement {
public:
    using CycVec = std::vector<mpq_class>;

    FieldElement() : desc_(FieldDescriptor::rational()), v_(mpq_class(0)) {}

    static FieldElement zero(const FieldDescriptor& f);
    static FieldElement one(const FieldDescriptor& f);
    static FieldElement from_integer(const FieldDescriptor& f, const mpz_class& v);
    static FieldElement from_rational(const FieldDescriptor& f, const mpq_class& v);
    /// Cyclotomic element from power-basis coordinates (length <= phi(n); reduced copies).
    static FieldElement from_power_basis(const FieldDescriptor& f, CycVec coords);
    /// zeta_n^k in Q(zeta_n).
    static FieldElement root_power(const FieldDescriptor& f, std::int64_t k);

    const FieldDescriptor& descriptor() const { return desc_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);

    FieldElement inverse() const;  // DivisionByZero on 0
    FieldElement pow(const mpz_class& e) const;

    /// acc += a * b, avoiding temporaries where the representation allows.
    static void add_mul(FieldElement& acc, const FieldElement& a, const FieldElement& b);

    /// Canonical string form for Rational ("a" or "a/b") and PrimeField ("r").
    /// Cyclotomic elements serialize as a list, see power_basis_literals().
    std::string to_literal() const;
    std::vector<std::string> power_basis_literals() const;

    /// Parse the canonical single-string encodings (Rational, PrimeField).
    static FieldElement parse_literal(const FieldDescriptor& f, const std::string& s);
    /// Parse a cyclotomic coefficient vector.
    static FieldElement parse_power_basis(const FieldDescriptor& f,
                                          const std::vector<std::string>& coords);

    std::string to_string() const;  // display form

    // payload access (rational / cyclotomic / prime residue)
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    const CycVec& cyc() const { return std::get<CycVec>(v_); }
    const mpz_class& residue() const { return std::get<mpz_class>(v_); }

private:
    FieldElement(FieldDescriptor d, std::variant<mpq_class, CycVec, mpz_class> v)
        : desc_(d), v_(std::move(v)) {}
    void check_same(const FieldElement& o) const;

    FieldDescriptor desc_;
    std::variant<mpq_class, CycVec, mpz_class> v_;
};

/// An element of exact multiplicative order n, when the field has one.
std::optional<FieldElement> primitive_root_of_unity(const FieldDescriptor& f, std::int64_t n);

/// All solutions of x^n = 1 in the field (exact, deduplicated).
std::vector<FieldElement> roots_of_unity(const FieldDescriptor& f, std::int64_t n);

/// Exact multiplicative order of a nonzero element, or nullopt when infinite.
std::optional<std::int64_t> element_order(const FieldElement& a, std::int64_t bound);

}  // namespace hopfexp
