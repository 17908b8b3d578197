#include <doctest.h>

#include "hopfexp/constructions.hpp"
#include "hopfexp/kernels.hpp"

using namespace hopfexp;

namespace {

Matrix random_matrix(const FieldDescriptor& f, std::size_t n, SplitMix64& rng) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = FieldElement::from_integer(f, static_cast<long>(rng.below(19)) - 9);
    return m;
}

}  // namespace

TEST_CASE("serial and parallel matmul agree exactly") {
    SplitMix64 rng(101);
    for (auto f : {FieldDescriptor::rational(), FieldDescriptor::prime_field(7),
                   FieldDescriptor::cyclotomic(4)}) {
        for (std::size_t n : {1, 3, 17, 40}) {
            Matrix a = random_matrix(f, n, rng);
            Matrix b = random_matrix(f, n, rng);
            CHECK(kernels::matmul_serial(a, b) == kernels::matmul_parallel(a, b));
        }
    }
}

TEST_CASE("serial and parallel convolution steps agree exactly") {
    SplitMix64 rng(7);
    auto h = taft(3, FieldDescriptor::prime_field(7));
    Matrix a = h.s2_power(1);
    Matrix t = random_matrix(h.field, h.dim, rng);
    CHECK(kernels::convolution_step_serial(h.views, a, t) ==
          kernels::convolution_step_parallel(h.views, a, t));
    // and both satisfy the recursion against the twisted power map
    Matrix t2 = h.twisted_power_map(1, 2);
    CHECK(kernels::convolution_step_serial(h.views, a, Matrix::identity(h.field, h.dim)) == t2);
}

TEST_CASE("associativity scans agree and report the same first witness") {
    auto h = group_algebra(FiniteGroupTable::symmetric3(), FieldDescriptor::rational());
    CHECK(std::get<0>(kernels::associativity_witness_serial(h.views)) == -1);
    CHECK(std::get<0>(kernels::associativity_witness_parallel(h.views)) == -1);

    HopfAlgebra bad = h;
    bad.mult_at(1, 2, 3) += FieldElement::one(bad.field);
    bad.finalize();
    auto ws = kernels::associativity_witness_serial(bad.views);
    auto wp = kernels::associativity_witness_parallel(bad.views);
    CHECK(std::get<0>(ws) >= 0);
    CHECK(std::get<0>(wp) >= 0);
    CHECK(kernels::associativity_witness(bad.views) == ws);  // deterministic dispatch
}

TEST_CASE("parallel mode switch") {
    bool was = kernels::parallel_enabled();
    kernels::set_parallel(false);
    CHECK(!kernels::parallel_enabled());
    kernels::set_parallel(was);
}
