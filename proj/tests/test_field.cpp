#include <doctest.h>

#include "hopfexp/field.hpp"
#include <numeric>

using namespace hopfexp;

TEST_CASE("fraction literals reduce canonically") {
    auto Q = FieldDescriptor::rational();
    CHECK(FieldElement::parse_literal(Q, "-3/6") == FieldElement::from_rational(Q, mpq_class(-1, 2)));
    // U+2212 minus is accepted on input
    CHECK(FieldElement::parse_literal(Q, "−3/6").to_literal() == "-1/2");
    CHECK(FieldElement::parse_literal(Q, "4/2").to_literal() == "2");
    CHECK_THROWS_AS(FieldElement::parse_literal(Q, "1/0"), Error);
    CHECK_THROWS_AS(FieldElement::parse_literal(Q, "x"), Error);
    CHECK_THROWS_AS(FieldElement::parse_literal(Q, ""), Error);
}

TEST_CASE("cyclotomic payloads reduce mod Phi_n") {
    auto F = FieldDescriptor::cyclotomic(3);
    // zeta^2 = -1 - zeta
    FieldElement z = FieldElement::root_power(F, 1);
    FieldElement z2 = FieldElement::root_power(F, 2);
    CHECK(z * z == z2);
    CHECK(z2 == FieldElement::parse_power_basis(F, {"-1", "-1"}));
    CHECK(z * z2 == FieldElement::one(F));
    CHECK(z.inverse() == z2);
    CHECK(FieldDescriptor::cyclotomic(1) == FieldDescriptor::rational());
}

TEST_CASE("prime field residues") {
    auto F7 = FieldDescriptor::prime_field(7);
    CHECK(FieldElement::parse_literal(F7, "9") == FieldElement::from_integer(F7, 2));
    CHECK(FieldElement::from_integer(F7, 2).inverse() == FieldElement::from_integer(F7, 4));
    CHECK_THROWS_AS(FieldElement::parse_literal(F7, "1/2"), Error);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(6), Error);
    CHECK_THROWS_AS(FieldElement::from_integer(F7, 0).inverse(), Error);
}

TEST_CASE("rational inverse") {
    auto Q = FieldDescriptor::rational();
    CHECK(FieldElement::from_rational(Q, mpq_class(1, 2)).inverse() ==
          FieldElement::from_integer(Q, 2));
}

namespace {

std::vector<FieldElement> sample_elements(const FieldDescriptor& f, SplitMix64& rng, int count) {
    std::vector<FieldElement> out;
    for (int t = 0; t < count; ++t) {
        switch (f.kind) {
            case FieldKind::Rational: {
                long num = static_cast<long>(rng.below(41)) - 20;
                long den = 1 + static_cast<long>(rng.below(9));
                out.push_back(FieldElement::from_rational(f, mpq_class(num, den)));
                break;
            }
            case FieldKind::PrimeField:
                out.push_back(FieldElement::from_integer(f, static_cast<long>(rng.below(100))));
                break;
            case FieldKind::Cyclotomic: {
                FieldElement acc = FieldElement::zero(f);
                for (std::int64_t k = 0; k < f.extension_degree(); ++k) {
                    long c = static_cast<long>(rng.below(11)) - 5;
                    acc += FieldElement::root_power(f, k) *
                           FieldElement::from_integer(f, c);
                }
                out.push_back(acc);
                break;
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("field axioms on randomized triples") {
    SplitMix64 rng(7);
    for (auto f : {FieldDescriptor::rational(), FieldDescriptor::cyclotomic(5),
                   FieldDescriptor::cyclotomic(8), FieldDescriptor::prime_field(7),
                   FieldDescriptor::prime_field(2)}) {
        auto xs = sample_elements(f, rng, 18);
        for (std::size_t t = 0; t + 2 < xs.size(); t += 3) {
            const auto &a = xs[t], &b = xs[t + 1], &c = xs[t + 2];
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == FieldElement::zero(f));
            if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement::one(f));
        }
    }
}

TEST_CASE("literal round trip is the identity") {
    SplitMix64 rng(11);
    for (auto f : {FieldDescriptor::rational(), FieldDescriptor::prime_field(13)}) {
        for (const auto& a : sample_elements(f, rng, 20))
            CHECK(FieldElement::parse_literal(f, a.to_literal()) == a);
    }
    auto cf = FieldDescriptor::cyclotomic(12);
    for (const auto& a : sample_elements(cf, rng, 20))
        CHECK(FieldElement::parse_power_basis(cf, a.power_basis_literals()) == a);
}

TEST_CASE("primitive roots of unity") {
    auto Q = FieldDescriptor::rational();
    CHECK(*primitive_root_of_unity(Q, 2) == FieldElement::from_integer(Q, -1));
    CHECK(!primitive_root_of_unity(Q, 3));
    auto F7 = FieldDescriptor::prime_field(7);
    auto r = primitive_root_of_unity(F7, 3);
    REQUIRE(r);
    CHECK(*element_order(*r, 10) == 3);
}

TEST_CASE("root existence matches the divisibility laws, with exact order verification") {
    for (std::int64_t p : {3, 5, 7, 13}) {
        auto F = FieldDescriptor::prime_field(p);
        for (std::int64_t n = 1; n <= 14; ++n) {
            auto r = primitive_root_of_unity(F, n);
            CHECK(r.has_value() == ((p - 1) % n == 0));
            if (r) CHECK(*element_order(*r, 2 * n) == n);
        }
    }
    for (std::int64_t m : {3, 4, 5, 12}) {
        auto F = FieldDescriptor::cyclotomic(m);
        std::int64_t full = std::lcm<std::int64_t>(2, m);
        for (std::int64_t n = 1; n <= 14; ++n) {
            auto r = primitive_root_of_unity(F, n);
            CHECK(r.has_value() == (full % n == 0));
            if (r) CHECK(*element_order(*r, 2 * n) == n);
        }
    }
    for (std::int64_t n = 1; n <= 8; ++n) {
        auto r = primitive_root_of_unity(FieldDescriptor::rational(), n);
        CHECK(r.has_value() == (n <= 2));
    }
}
