#pragma once

#include "hopfexp/hopf.hpp"

namespace hopfexp {

/// Matrix over H: a grid of coordinate vectors with entrywise H-products.
struct HMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Vec> entries;  // row-major

    HMatrix() = default;
    HMatrix(const HopfAlgebra& h, std::size_t r, std::size_t c);
    const Vec& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    Vec& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    bool is_zero() const;
    bool operator==(const HMatrix& o) const { return rows == o.rows && cols == o.cols && entries == o.entries; }
};

HMatrix hmat_identity(const HopfAlgebra& h, std::size_t r);
HMatrix hmat_add(const HMatrix& a, const HMatrix& b);
HMatrix hmat_sub(const HMatrix& a, const HMatrix& b);
HMatrix hmat_mul(const HopfAlgebra& h, const HMatrix& a, const HMatrix& b);
HMatrix hmat_transpose(const HMatrix& a);
/// entrywise application of a linear endomorphism of H
HMatrix hmat_apply(const Matrix& endo, const HMatrix& a);
HMatrix hmat_scale(const HMatrix& a, const FieldElement& c);
HMatrix hmat_scale_left(const HopfAlgebra& h, const Vec& elem, const HMatrix& a);
HMatrix hmat_scale_right(const HopfAlgebra& h, const HMatrix& a, const Vec& elem);
HMatrix hmat_pow(const HopfAlgebra& h, const HMatrix& a, std::int64_t n);

/// r x r grid over H with Delta(c_ij) = sum_k c_ik (x) c_kj and eps(c_ij) = delta_ij.
using MultiplicativeMatrix = HMatrix;

bool is_multiplicative_matrix(const HopfAlgebra& h, const MultiplicativeMatrix& m);
/// basic = entries linearly independent
bool is_basic_multiplicative_matrix(const HopfAlgebra& h, const MultiplicativeMatrix& m);

struct SimpleSubcoalgebra {
    std::vector<Vec> basis;            // columns in H
    std::size_t dim = 0;
    bool contains_unit = false;        // the block k.1
    std::vector<Vec> dual_block_basis; // lifted functionals spanning the dual simple block
};

struct CoradicalData {
    std::vector<Vec> h0_basis;
    std::vector<SimpleSubcoalgebra> simples;
    std::vector<std::vector<Vec>> filtration;  // filtration[k] = basis of H_k
    std::int64_t loewy_length = 0;
};

/// Basis of the Jacobson radical of the dual algebra H^* (functional coordinates).
/// Characteristic 0 uses the trace-form kernel; prime fields use the iterated
/// p-power characteristic-coefficient chain.
std::vector<Vec> dual_radical_basis(const HopfAlgebra& h);

/// H_0 as the annihilator of the dual radical (h0_basis only).
CoradicalData coradical(const HopfAlgebra& h);

/// Full coradical filtration H_n = Delta^{-1}(H (x) H_{n-1} + H_0 (x) H) and
/// Loewy length.
CoradicalData coradical_filtration(const HopfAlgebra& h);

bool is_dual_chevalley(const HopfAlgebra& h);

/// Decomposition of H_0 into simple subcoalgebras through the central
/// idempotents of the semisimple dual quotient.
std::vector<SimpleSubcoalgebra> simple_decomposition(const HopfAlgebra& h, std::uint64_t seed = 1);

/// Basic multiplicative matrix of a simple subcoalgebra; nullopt when the dual
/// block is a division algebra over the base field (no split).
std::optional<MultiplicativeMatrix> basic_multiplicative_matrix(const HopfAlgebra& h,
                                                                const SimpleSubcoalgebra& s,
                                                                std::uint64_t seed = 1);

struct PrimitiveMatrixSpace {
    MultiplicativeMatrix c, d;
    std::vector<HMatrix> basis;             // all solutions of the primitivity identity
    std::vector<HMatrix> trivial_basis;     // solutions with every entry in H_0
    std::vector<HMatrix> nontrivial_basis;  // complement representatives
    bool has_nontrivial() const { return !nontrivial_basis.empty(); }
};

/// Solves Delta(x_ij) = sum_k c_ik (x) x_kj + sum_l x_il (x) d_lj for all entries.
PrimitiveMatrixSpace primitive_space(const HopfAlgebra& h, const MultiplicativeMatrix& c,
                                     const MultiplicativeMatrix& d);

/// The 1x1 multiplicative matrix (1).
MultiplicativeMatrix unit_multiplicative_matrix(const HopfAlgebra& h);

struct CoradicalIntegral {
    Vec lambda0;  // h Lambda_0 = eps(h) Lambda_0 on H_0, unit component normalized to 1
};

CoradicalIntegral integral_coradical(const HopfAlgebra& h);

/// Lambda_0 X != 0 and X Lambda_0 != 0, both products entrywise in H.
bool lambda_pairing_check(const HopfAlgebra& h, const HMatrix& x, const Vec& lambda0);

/// Eigenpairs of the S^2 action on the nontrivial quotient of the (C,1)-primitive
/// space; eigenvalues are N-th roots of unity with N = exp(H_0). Characteristic 0
/// with the dual Chevalley property only.
std::vector<std::pair<FieldElement, HMatrix>> s2_primitive_eigens(const HopfAlgebra& h,
                                                                  const MultiplicativeMatrix& c);

struct XPowerReport {
    bool sands2_ok = false;     // S(X) = -S(C) X
    bool commuting_ok = false;  // S(C) X = q (X^T S(C)^T)^T
    struct PerN {
        std::int64_t n;
        bool power_formula_ok;  // twisted power of X equals sum q^i C^i X
        bool pairing_ok;        // q^{-n+1} S(C)^{n-1} (sum q^i C^i X) Lambda_0 = n X Lambda_0
        bool nonzero;           // both sides nonzero
    };
    std::vector<PerN> per_n;
    bool all_ok() const;
};

XPowerReport xpower_identity_report(const HopfAlgebra& h, const MultiplicativeMatrix& c,
                                    const HMatrix& x, const FieldElement& q, std::int64_t n_max);

/// Verify-only path for documents that declare their coradical: subcoalgebra,
/// semisimple dual, and nilpotent annihilator ideal.
bool verify_declared_coradical(const HopfAlgebra& h, const std::vector<Vec>& declared);

}  // namespace hopfexp
