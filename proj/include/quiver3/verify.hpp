#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace quiver3 {

/// One named exhaustive or sampled check over a box of triples.
struct CheckResult {
    std::string name;
    bool passed;
    std::size_t cases;
    std::string detail;  // first counterexample, empty when passed
};

/// Re-proves the core identities on [0,N]^3 (and signed boxes where signs
/// matter). Throws std::domain_error when N < 5.
std::vector<CheckResult> verify_harness(int N);

}  // namespace quiver3
