#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfexp/matrix.hpp"

namespace hopfexp {

/// Nonzero-entry views over the structure tensors; built once per algebra and
/// shared by every hot loop.
struct SparseViews {
    std::size_t dim = 0;
    /// per (i*dim+j): list of (k, coeff) with e_i e_j = sum coeff e_k
    std::vector<std::vector<std::pair<std::uint32_t, FieldElement>>> mult_pair;
    /// per i: list of (j, k, coeff) with Delta(e_i) = sum coeff e_j (x) e_k
    std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, FieldElement>>> comult_of;
};

namespace kernels {

/// Runtime switch between the serial reference kernels and the OpenMP ones.
/// Defaults to parallel when compiled with OpenMP; HOPFEXP_PARALLEL=0 disables.
bool parallel_enabled();
void set_parallel(bool on);
int thread_count();

Matrix matmul_serial(const Matrix& a, const Matrix& b);
Matrix matmul_parallel(const Matrix& a, const Matrix& b);
Matrix matmul(const Matrix& a, const Matrix& b);

/// One convolution-recursion step: F |-> m . (id (x) (A . F)) . Delta,
/// i.e. out(e_j) = sum_{(k,l) in Delta(e_j)} c * e_k * (A F)(e_l).
Matrix convolution_step_serial(const SparseViews& v, const Matrix& a, const Matrix& f);
Matrix convolution_step_parallel(const SparseViews& v, const Matrix& a, const Matrix& f);
Matrix convolution_step(const SparseViews& v, const Matrix& a, const Matrix& f);

/// Associativity residual scan: first (i,j,k) where (e_i e_j) e_k != e_i (e_j e_k),
/// or {-1,-1,-1} when none.
std::tuple<int, int, int> associativity_witness_serial(const SparseViews& v);
std::tuple<int, int, int> associativity_witness_parallel(const SparseViews& v);
std::tuple<int, int, int> associativity_witness(const SparseViews& v);

}  // namespace kernels

}  // namespace hopfexp
