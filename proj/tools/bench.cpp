#include <chrono>
#include <iostream>

#include "hopfexp/constructions.hpp"
#include "hopfexp/deform.hpp"

using namespace hopfexp;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Matrix random_matrix(const FieldDescriptor& f, std::size_t n, SplitMix64& rng) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = FieldElement::from_integer(f, static_cast<long>(rng.below(97)) - 48);
    return m;
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = Clock::now();
        fn();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-38s %10.2f ms %10.2f ms   x%.2f\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", kernels::thread_count());
    std::printf("%-38s %13s %13s\n", "kernel", "serial", "parallel");

    SplitMix64 rng(42);
    {
        auto f = FieldDescriptor::prime_field(7);
        Matrix a = random_matrix(f, 96, rng), b = random_matrix(f, 96, rng);
        double s = time_best_of(3, [&] { kernels::matmul_serial(a, b); });
        double p = time_best_of(3, [&] { kernels::matmul_parallel(a, b); });
        if (!(kernels::matmul_serial(a, b) == kernels::matmul_parallel(a, b))) {
            std::fprintf(stderr, "kernel outputs differ\n");
            return 1;
        }
        row("matmul 96x96 over F_7", s, p);
    }
    {
        auto f = FieldDescriptor::rational();
        Matrix a = random_matrix(f, 64, rng), b = random_matrix(f, 64, rng);
        double s = time_best_of(3, [&] { kernels::matmul_serial(a, b); });
        double p = time_best_of(3, [&] { kernels::matmul_parallel(a, b); });
        row("matmul 64x64 over Q", s, p);
    }
    {
        HopfAlgebra big = drinfeld_double(taft(3, FieldDescriptor::prime_field(7))).result;
        Matrix a = Matrix::identity(big.field, big.dim);
        Matrix t = big.twisted_power_map(0, 3);
        double s = time_best_of(3, [&] { kernels::convolution_step_serial(big.views, a, t); });
        double p = time_best_of(3, [&] { kernels::convolution_step_parallel(big.views, a, t); });
        if (!(kernels::convolution_step_serial(big.views, a, t) ==
              kernels::convolution_step_parallel(big.views, a, t))) {
            std::fprintf(stderr, "kernel outputs differ\n");
            return 1;
        }
        row("convolution step on D(T_3(q)/F_7)", s, p);

        double sa = time_best_of(3, [&] { kernels::associativity_witness_serial(big.views); });
        double pa = time_best_of(3, [&] { kernels::associativity_witness_parallel(big.views); });
        row("associativity scan, dim 81", sa, pa);
    }
    {
        HopfAlgebra dz = drinfeld_double(group_algebra(FiniteGroupTable::cyclic(3),
                                                       FieldDescriptor::rational()))
                             .result;
        Matrix a = Matrix::identity(dz.field, dz.dim);
        Matrix t = dz.twisted_power_map(0, 2);
        double s = time_best_of(3, [&] { kernels::convolution_step_serial(dz.views, a, t); });
        double p = time_best_of(3, [&] { kernels::convolution_step_parallel(dz.views, a, t); });
        row("convolution step on D(Q[Z_3])", s, p);
    }
    return 0;
}
