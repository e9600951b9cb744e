#pragma once

#include <string>
#include <string_view>

#include "addbasis/placement.hpp"

namespace addbasis {

// Placement text format, one labelled location list per line:
//
//   # anything after '#' is a comment
//   I: 0 5 112..(5)..137
//   J: 10..(6)..106
//   K: 0..4 224..229 367..372
//
// Tokens are integers, ranges "a..b" (step 1) or stepped ranges
// "a..(s)..b"; commas may be used instead of spaces.  A label may appear at
// most once; a missing label means the empty set.  Errors carry the 1-based
// line number.
Placement parse_placement(std::string_view text);

// Canonical text form: one line per label, elements written out in full.
std::string format_placement(const Placement& p);

Placement load_placement_file(const std::string& path);

} // namespace addbasis
