#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "addbasis/placement.hpp"
#include "addbasis/rational.hpp"

namespace addbasis {

// How a square location x can be covered by a placement (I, J, K):
//   square-IJ:  x in I+J   — a V copy meets an H copy
//   square-IK:  x in I+K   — a V copy meets an S copy
//   pair-JK:    x >= 1 and both x-1 and x in J+K — two H+S parallelograms at
//               consecutive locations overlap enough to fill the square at x
enum CoverRule : unsigned {
    kSquareIJ = 1u << 0,
    kSquareIK = 1u << 1,
    kPairJK = 1u << 2,
};

// "square-IJ|pair-JK" for a mask; "-" for an empty mask.
std::string rule_names(unsigned mask);

// Covered square locations of a placement, with the rules that cover each,
// plus the covered prefix length m (locations 0..m-1 covered, m not) and the
// density proxy c = m / l^2.
struct CoverageResult {
    std::vector<std::pair<Elem, unsigned>> covered; // sorted by location, mask != 0
    Elem m = 0;
    Rational c;

    [[nodiscard]] bool is_covered(Elem x) const { return rules_at(x) != 0; }
    [[nodiscard]] unsigned rules_at(Elem x) const;
};

CoverageResult covered_set(const Placement& p);

// Same model evaluated from precomputed location sumsets I+J, I+K and J+K;
// lets callers study coverage without materializing a placement.
CoverageResult covered_set_from_sumsets(const IntSet& ij, const IntSet& ik,
                                        const IntSet& jk, std::int64_t total_segments);

// Every covered location needs a rule instance, and there are at most
// li*lj + li*lk + lj*lk of those, so m can never exceed this product sum.
std::int64_t counting_bound(std::int64_t li, std::int64_t lj, std::int64_t lk);

// One row of the coverage certificate for the 42-segment placement: the
// locations lo..hi are covered using only the listed rules.
struct CertificateCase {
    std::string label;
    Elem lo = 0;
    Elem hi = 0;
    unsigned rules = 0;
    bool holds = false;
};

// Re-derives the ten-interval certificate that the 42-segment preset covers
// exactly [0, 509].  Rejects any other placement: the intervals are specific
// to that preset.
std::vector<CertificateCase> verify_kohonen42_cases(const Placement& p);

// Throws VerificationError naming the first failing case (or a wrong m) if
// the certificate does not check out.
void require_kohonen42_certificate(const Placement& p);

} // namespace addbasis
