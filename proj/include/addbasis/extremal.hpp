#pragma once

#include <cstdint>
#include <vector>

#include "addbasis/int_set.hpp"

namespace addbasis {

// Largest n with [0, n] covered by A+A over all k-element bases A (0 counts
// as an element), plus the witnesses found for that n.
struct ExtremalRecord {
    int k = 0;
    Elem n = 0;
    // Lexicographically smallest witnesses first; capped at sixteen so ties
    // stay bounded.  Every entry has k elements, contains 0 and reaches n.
    std::vector<IntSet> witnesses;
    bool exhaustive = false;
};

struct NkOptions {
    std::uint64_t node_budget = 0; // 0 = unlimited; budgeted runs are sequential
    int threads = 1;
};

// Branch and bound over strictly increasing prefixes: the next element never
// exceeds the first gap of the prefix sums (a larger one could never help
// before the gap, so such sets are reachable by padding instead), and each
// subtree is cut when an upper bound on its final range falls below the best
// value already found.
ExtremalRecord n_of_k(int k, const NkOptions& opts = {});

// n(25), the largest k for which the exact value has been established by
// published large-scale computation.  Kept as reference output; recomputing
// it is far beyond this tool's exhaustive range.
inline constexpr Elem kReferenceN25 = 212;

} // namespace addbasis
