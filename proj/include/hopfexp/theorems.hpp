#pragma once

#include "hopfexp/io.hpp"

namespace hopfexp {

enum class Suite { Invariance, Smash, Finiteness, Primitive, All };

Suite suite_from_string(const std::string& s);

struct TheoremOptions {
    std::uint64_t seed = 1;
    std::int64_t double_dim_limit = 9;  // build D(H) only up to this dim(H)
};

/// Runs every applicable law of the verification suite against one algebra,
/// skipping inapplicable checks with a reason.
VerificationReport verify_theorems(const HopfAlgebra& h, Suite suite,
                                   const TheoremOptions& opts = {});

}  // namespace hopfexp
