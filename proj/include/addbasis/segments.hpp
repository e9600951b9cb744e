#pragma once

#include "addbasis/int_set.hpp"
#include "addbasis/placement.hpp"

namespace addbasis {

// The three elementary segments over a scale parameter t >= 2:
//   V = [0, t]                 (t+1 elements, the dense run)
//   H = {0, t, 2t, ..., t^2-t} (t elements, step t)
//   S = {0, t+1, ..., t^2-1}   (t elements, step t+1)
enum class SegmentKind { V, H, S };

const char* to_string(SegmentKind kind);

// Largest t accepted by the builders; keeps t^2 and every translated copy
// comfortably inside the element capacity.
inline constexpr int kMaxSegmentT = (1 << 20) - 1;

IntSet build_segment(SegmentKind kind, int t);

// [0, t^2 - 1]: what V covers when paired with H or S.
IntSet square(int t);

// H + S: the wider block used by consecutive-location coverage.
IntSet parallelogram(int t);

// Union of segment copies: V translated to t^2 * i for i in v_locs, H to
// t^2 * j for j in h_locs, S to t^2 * k for k in s_locs.  Overlapping copies
// merge silently; the placement must have at least one segment.
IntSet build_basis(const Placement& p, int t);

// [0, t] together with {2t, 3t, ..., t^2}: the classical 2t-element basis
// reaching n = t^2 + t.
IntSet simple_basis(int t);

} // namespace addbasis
