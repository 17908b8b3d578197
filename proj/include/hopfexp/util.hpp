#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfexp {

enum class Errc {
    FieldMismatch,
    MalformedLiteral,
    NonReducibleResidue,
    DivisionByZero,
    DimensionMismatch,
    NotMonic,
    ZeroPolynomial,
    Singular,
    NoAntipode,
    AxiomViolation,
    InvalidGroupTable,
    NoPrimitiveRoot,
    ParseError,
    InvalidTwist,
    CoradicalUnavailable,
    NotSemisimpleCoradical,
    ZeroOneComponent,
    SeparatingElementNotFound,
    FieldLacksRoots,
    NotChar0,
    UnsupportedCharacteristic,
    UsageError,
    Internal,
};

/// The library-wide exception; CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

std::string errc_name(Errc code);

// --- integer number theory -------------------------------------------------

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_i64(std::int64_t n);

/// Primality for arbitrary-precision integers (BPSW + Miller-Rabin rounds).
bool is_prime_mpz(const mpz_class& n);

/// Full factorization, trial division plus Brent's rho. Deterministic.
std::vector<std::pair<mpz_class, int>> factor_mpz(const mpz_class& n);

std::vector<std::pair<std::int64_t, int>> factor_i64(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

mpz_class lcm_mpz(const mpz_class& a, const mpz_class& b);

// --- deterministic PRNG ----------------------------------------------------

/// splitmix64; used wherever a randomized step needs a reproducible stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

// --- hashing / file IO -----------------------------------------------------

std::string sha256_hex(std::string_view data);

/// Whole-file atomic write (temp file in the same directory, then rename).
void atomic_write_file(const std::string& path, std::string_view content);

std::string read_file(const std::string& path);

}  // namespace hopfexp
