#include "hopfexp/kernels.hpp"

#include <atomic>
#include <cstdlib>

#ifdef HOPFEXP_HAVE_OPENMP
#include <omp.h>
#endif

namespace hopfexp::kernels {

namespace {

bool initial_parallel() {
#ifdef HOPFEXP_HAVE_OPENMP
    const char* env = std::getenv("HOPFEXP_PARALLEL");
    if (env && env[0] == '0') return false;
    return true;
#else
    return false;
#endif
}

std::atomic<bool> g_parallel{initial_parallel()};

}  // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }

void set_parallel(bool on) {
#ifndef HOPFEXP_HAVE_OPENMP
    on = false;
#endif
    g_parallel.store(on, std::memory_order_relaxed);
}

int thread_count() {
#ifdef HOPFEXP_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// --- matmul ------------------------------------------------------------------

namespace {

inline void matmul_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const FieldElement& f = a.at(i, k);
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            const FieldElement& g = b.at(k, j);
            if (!g.is_zero()) FieldElement::add_mul(out.at(i, j), f, g);
        }
    }
}

}  // namespace

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "matmul shapes");
    if (a.descriptor() != b.descriptor()) throw Error(Errc::FieldMismatch, "matmul fields");
    Matrix out(a.descriptor(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, out, i);
    return out;
}

Matrix matmul_parallel(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "matmul shapes");
    if (a.descriptor() != b.descriptor()) throw Error(Errc::FieldMismatch, "matmul fields");
    Matrix out(a.descriptor(), a.rows(), b.cols());
#ifdef HOPFEXP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, out, i);
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    // the parallel path only pays off past a few thousand entry updates
    if (parallel_enabled() && a.rows() * b.cols() >= 1024) return matmul_parallel(a, b);
    return matmul_serial(a, b);
}

// --- convolution step ----------------------------------------------------------

namespace {

inline void step_column(const SparseViews& v, const Matrix& g, Matrix& out, std::size_t j) {
    const std::size_t dim = v.dim;
    for (const auto& [k, l, c] : v.comult_of[j]) {
        // e_k * (column l of G), scaled by c
        for (std::size_t lp = 0; lp < dim; ++lp) {
            const FieldElement& gv = g.at(lp, l);
            if (gv.is_zero()) continue;
            FieldElement cg = c * gv;
            for (const auto& [m, mc] : v.mult_pair[k * dim + lp])
                FieldElement::add_mul(out.at(m, j), cg, mc);
        }
    }
}

}  // namespace

Matrix convolution_step_serial(const SparseViews& v, const Matrix& a, const Matrix& f) {
    Matrix g = matmul_serial(a, f);
    Matrix out(f.descriptor(), v.dim, v.dim);
    for (std::size_t j = 0; j < v.dim; ++j) step_column(v, g, out, j);
    return out;
}

Matrix convolution_step_parallel(const SparseViews& v, const Matrix& a, const Matrix& f) {
    Matrix g = matmul_parallel(a, f);
    Matrix out(f.descriptor(), v.dim, v.dim);
#ifdef HOPFEXP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t j = 0; j < v.dim; ++j) step_column(v, g, out, j);
    return out;
}

Matrix convolution_step(const SparseViews& v, const Matrix& a, const Matrix& f) {
    if (parallel_enabled() && v.dim >= 24) return convolution_step_parallel(v, a, f);
    return convolution_step_serial(v, a, f);
}

// --- associativity scan ----------------------------------------------------------

namespace {

// scratch accumulators reused across the (j, k) sweep of one row
struct AssocScratch {
    Vec lhs, rhs;
    std::vector<std::uint32_t> touched_l, touched_r;

    AssocScratch(const FieldDescriptor& f, std::size_t dim)
        : lhs(vec_zero(f, dim)), rhs(vec_zero(f, dim)) {}

    bool check(const SparseViews& v, std::size_t i, std::size_t j, std::size_t k) {
        const std::size_t dim = v.dim;
        for (const auto& [l, c] : v.mult_pair[i * dim + j])
            for (const auto& [m, c2] : v.mult_pair[static_cast<std::size_t>(l) * dim + k]) {
                touched_l.push_back(m);
                FieldElement::add_mul(lhs[m], c, c2);
            }
        for (const auto& [l, c] : v.mult_pair[j * dim + k])
            for (const auto& [m, c2] : v.mult_pair[i * dim + static_cast<std::size_t>(l)]) {
                touched_r.push_back(m);
                FieldElement::add_mul(rhs[m], c, c2);
            }
        bool ok = true;
        for (auto m : touched_l)
            if (!(lhs[m] == rhs[m])) { ok = false; break; }
        if (ok)
            for (auto m : touched_r)
                if (!(lhs[m] == rhs[m])) { ok = false; break; }
        const FieldElement zero = FieldElement::zero(lhs.empty() ? FieldDescriptor::rational()
                                                                 : lhs[0].descriptor());
        for (auto m : touched_l) lhs[m] = zero;
        for (auto m : touched_r) rhs[m] = zero;
        touched_l.clear();
        touched_r.clear();
        return ok;
    }
};

FieldDescriptor views_field(const SparseViews& v) {
    for (const auto& cell : v.mult_pair)
        if (!cell.empty()) return cell[0].second.descriptor();
    return FieldDescriptor::rational();
}

}  // namespace

std::tuple<int, int, int> associativity_witness_serial(const SparseViews& v) {
    if (v.dim == 0) return {-1, -1, -1};
    FieldDescriptor f = views_field(v);
    AssocScratch scratch(f, v.dim);
    for (std::size_t i = 0; i < v.dim; ++i)
        for (std::size_t j = 0; j < v.dim; ++j)
            for (std::size_t k = 0; k < v.dim; ++k)
                if (!scratch.check(v, i, j, k))
                    return {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
    return {-1, -1, -1};
}

std::tuple<int, int, int> associativity_witness_parallel(const SparseViews& v) {
    if (v.dim == 0) return {-1, -1, -1};
    FieldDescriptor f = views_field(v);
    std::atomic<long long> first{-1};
#ifdef HOPFEXP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < v.dim; ++i) {
        if (first.load(std::memory_order_relaxed) >= 0) continue;
        AssocScratch scratch(f, v.dim);
        for (std::size_t j = 0; j < v.dim && first.load(std::memory_order_relaxed) < 0; ++j)
            for (std::size_t k = 0; k < v.dim; ++k)
                if (!scratch.check(v, i, j, k)) {
                    long long packed = static_cast<long long>((i * v.dim + j) * v.dim + k);
                    long long expect = -1;
                    first.compare_exchange_strong(expect, packed);
                    break;
                }
    }
    long long packed = first.load();
    if (packed < 0) return {-1, -1, -1};
    std::size_t k = packed % v.dim, j = (packed / v.dim) % v.dim, i = packed / v.dim / v.dim;
    return {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
}

std::tuple<int, int, int> associativity_witness(const SparseViews& v) {
    if (parallel_enabled() && v.dim >= 24) {
        auto w = associativity_witness_parallel(v);
        // failures re-scan serially so the reported witness is deterministic
        if (std::get<0>(w) < 0) return w;
        return associativity_witness_serial(v);
    }
    return associativity_witness_serial(v);
}

}  // namespace hopfexp::kernels
