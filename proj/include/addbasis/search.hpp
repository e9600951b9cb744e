#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "addbasis/coverage.hpp"
#include "addbasis/placement.hpp"
#include "addbasis/rational.hpp"

namespace addbasis {

// Complete depth-first enumeration driven by the first uncovered location:
// every branch is a minimal set of segment additions that covers the current
// frontier, so placements whose segments all pull their weight are reached
// exactly once up to the J <-> K exchange (the root fixes a V copy and an S
// copy at location 0).
struct ExhaustiveMode {};

// Keep only the `width` most promising states per depth level.
struct BeamMode {
    int width = 16;
};

// Repeated random greedy walks; deterministic for a fixed seed.
struct RestartMode {
    int restarts = 100;
    std::uint64_t seed = 1;
};

using SearchMode = std::variant<ExhaustiveMode, BeamMode, RestartMode>;

struct SearchConfig {
    int total_segments = 1; // l: number of segment copies available
    int max_location = 0;   // L: copies may sit at locations 0..L (L <= 127)
    SearchMode mode = ExhaustiveMode{};
    int threads = 1;

    // Stop an exhaustive run early once best_m / l^2 reaches this ratio, or
    // after this many visited nodes.  Either option forces a sequential
    // single-pass run so that truncation stays deterministic.
    std::optional<Rational> target_ratio;
    std::uint64_t node_budget = 0; // 0 = unlimited

    // The counting-bound prune is always sound; switching it off is only
    // useful for cross-checking the search against brute force.
    bool counting_prune = true;
};

struct SearchOutcome {
    Elem best_m = 0;
    Placement witness; // normalized; re-scoring it reproduces best_m
    Rational ratio;    // best_m / l^2
    bool complete = false;

    // For full exhaustive runs these come from the deterministic
    // certification pass (fixed pruning bound = best_m), so they do not
    // depend on thread count or timing.
    std::uint64_t nodes_expanded = 0;
    std::uint64_t nodes_pruned = 0;
};

SearchOutcome search(const SearchConfig& cfg);

// Canonical representative under the J <-> K exchange: swaps h_locs and
// s_locs when the swap makes the (I, J, K) triple lexicographically smaller.
Placement normalize(const Placement& p);

} // namespace addbasis
