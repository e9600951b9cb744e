#pragma once

#include <optional>

#include "addbasis/int_set.hpp"
#include "addbasis/rational.hpp"

namespace addbasis {

// Size and range accounting for a concrete basis.  k counts every element,
// including the mandatory 0.  For segment-built bases the parameter t is
// carried along with the per-segment efficiency r = (t/(t+1))^2.
struct BasisReport {
    std::int64_t k = 0;
    Elem n = 0;
    Rational ratio; // n / k^2
    std::optional<int> t;
    std::optional<Rational> r;
};

BasisReport make_report(const IntSet& basis);
BasisReport make_report(const IntSet& basis, int t);

} // namespace addbasis
