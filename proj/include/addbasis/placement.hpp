#pragma once

#include "addbasis/int_set.hpp"

namespace addbasis {

// Where translated copies of the three elementary segments go, in units of
// t^2.  v_locs is the location set I (copies of V), h_locs is J (copies of
// H), s_locs is K (copies of S).
struct Placement {
    IntSet v_locs;
    IntSet h_locs;
    IntSet s_locs;

    // l — the total number of segment copies placed.
    [[nodiscard]] std::int64_t total_segments() const {
        return std::int64_t(v_locs.size() + h_locs.size() + s_locs.size());
    }

    bool operator==(const Placement& o) const = default;
    // Component-wise lexicographic: compare I, then J, then K.
    auto operator<=>(const Placement& o) const = default;
};

} // namespace addbasis
