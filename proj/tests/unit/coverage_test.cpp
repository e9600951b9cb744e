#include "doctest.h"

#include <map>

#include "addbasis/coverage.hpp"
#include "addbasis/presets.hpp"
#include "addbasis/report.hpp"
#include "addbasis/segments.hpp"

#include "test_util.hpp"

using namespace addbasis;

namespace {

// Definition-level oracle: mark every location each rule covers, then read
// off the covered prefix.
struct NaiveCoverage {
    std::map<Elem, unsigned> marks;
    Elem m = 0;
};

NaiveCoverage naive_covered(const Placement& p) {
    auto I = oracle::to_std(p.v_locs);
    auto J = oracle::to_std(p.h_locs);
    auto K = oracle::to_std(p.s_locs);
    NaiveCoverage res;
    for (auto i : I)
        for (auto j : J) res.marks[i + j] |= kSquareIJ;
    for (auto i : I)
        for (auto k : K) res.marks[i + k] |= kSquareIK;
    auto jk = oracle::sumset(J, K);
    for (auto x : jk)
        if (x >= 1 && jk.count(x - 1) != 0) res.marks[x] |= kPairJK;
    while (res.marks.count(res.m) != 0) ++res.m;
    return res;
}

Placement random_placement(std::mt19937_64& rng, int max_loc, int max_part) {
    auto part = [&](bool force_zero) {
        std::size_t size = rng() % std::size_t(max_part + 1);
        if (force_zero && size == 0) size = 1;
        if (size == 0) return IntSet{};
        return oracle::random_set(rng, max_loc, size, force_zero ? std::vector<Elem>{0}
                                                                 : std::vector<Elem>{});
    };
    // Keep 0 in at least one part so the placement is anchored.
    int anchor = int(rng() % 3);
    Placement p{part(anchor == 0), part(anchor == 1), part(anchor == 2)};
    return p;
}

} // namespace

TEST_CASE("covered set of the seven-segment presets") {
    for (Preset preset : {Preset::Mrose7, Preset::Klove7}) {
        CoverageResult cov = covered_set(preset_placement(preset));
        CHECK(cov.m == 14);
        CHECK(cov.c == Rational(2, 7));
        CHECK(cov.is_covered(0));
        CHECK(cov.is_covered(13));
        CHECK_FALSE(cov.is_covered(14));
    }
    // The mrose7 form covers 14 locations and nothing else.
    CoverageResult cov = covered_set(preset_placement(Preset::Mrose7));
    Elem count = 0;
    for (Elem x = 0; x < 14; ++x) count += cov.is_covered(x);
    CHECK(count == 14);
}

TEST_CASE("covered set of the forty-two-segment preset") {
    CoverageResult cov = covered_set(preset_placement(Preset::Kohonen42));
    CHECK(cov.m == 510);
    CHECK(cov.c == Rational(85, 294));
    CHECK_FALSE(cov.is_covered(510));
}

TEST_CASE("coverage matches the naive oracle on random placements") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int iter = 0; iter < 200; ++iter) {
        Placement p = random_placement(rng, 12, 4);
        if (p.total_segments() == 0) continue;
        ++checked;
        NaiveCoverage expect = naive_covered(p);
        CoverageResult got = covered_set(p);
        CHECK(got.m == expect.m);
        for (const auto& [loc, mask] : expect.marks) CHECK(got.rules_at(loc) == mask);
        CHECK(got.covered.size() == expect.marks.size());
    }
    CHECK(checked > 150);
}

TEST_CASE("covered_set_from_sumsets agrees with the placement form") {
    std::mt19937_64 rng(4711);
    for (int iter = 0; iter < 100; ++iter) {
        Placement p = random_placement(rng, 12, 4);
        if (p.total_segments() == 0) continue;
        auto maybe = [](const IntSet& a, const IntSet& b) {
            return (a.empty() || b.empty()) ? IntSet{} : sumset(a, b);
        };
        CoverageResult direct = covered_set(p);
        CoverageResult via = covered_set_from_sumsets(
            maybe(p.v_locs, p.h_locs), maybe(p.v_locs, p.s_locs),
            maybe(p.h_locs, p.s_locs), p.total_segments());
        CHECK(direct.m == via.m);
        CHECK(direct.covered == via.covered);
        CHECK(direct.c == via.c);
    }
}

TEST_CASE("square coverage translates with I, pair coverage does not") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 50; ++iter) {
        Placement p = random_placement(rng, 10, 3);
        if (p.v_locs.empty() || p.total_segments() == 0) continue;
        Elem shift = Elem(rng() % 5);
        Placement q{translate(p.v_locs, shift), p.h_locs, p.s_locs};
        CoverageResult a = covered_set(p);
        CoverageResult b = covered_set(q);
        for (Elem x = 0; x <= 40; ++x) {
            unsigned squares = a.rules_at(x) & (kSquareIJ | kSquareIK);
            CHECK((b.rules_at(x + shift) & (kSquareIJ | kSquareIK)) == squares);
            CHECK((b.rules_at(x) & kPairJK) == (a.rules_at(x) & kPairJK));
        }
    }
}

TEST_CASE("coverage soundness: the built basis reaches m*t^2 - 1") {
    std::mt19937_64 rng(2024);
    int interesting = 0;
    for (int iter = 0; iter < 200; ++iter) {
        Placement p = random_placement(rng, 12, 3);
        if (p.total_segments() == 0) continue;
        CoverageResult cov = covered_set(p);
        for (int t : {2, 3, 5}) {
            IntSet basis = build_basis(p, t);
            if (!basis.contains(0)) break; // range is undefined without 0
            Elem n = range_n(basis);
            CHECK(n >= cov.m * Elem(t) * t - 1);
            if (cov.m > 0) ++interesting;
        }
    }
    CHECK(interesting > 50);
}

TEST_CASE("counting bound dominates every covered prefix") {
    CHECK(counting_bound(3, 3, 1) == 15);
    CHECK(counting_bound(2, 3, 2) == 16);
    CHECK(counting_bound(8, 17, 17) == 8 * 17 + 8 * 17 + 17 * 17);
    CHECK(counting_bound(0, 0, 0) == 0);
    CHECK_THROWS_AS(counting_bound(-1, 2, 2), InputError);

    std::mt19937_64 rng(55);
    for (int iter = 0; iter < 200; ++iter) {
        Placement p = random_placement(rng, 12, 4);
        if (p.total_segments() == 0) continue;
        CoverageResult cov = covered_set(p);
        CHECK(cov.m <= counting_bound(std::int64_t(p.v_locs.size()),
                                      std::int64_t(p.h_locs.size()),
                                      std::int64_t(p.s_locs.size())));
    }
}

TEST_CASE("the ten-case certificate holds for the forty-two-segment preset") {
    const Placement& p = preset_placement(Preset::Kohonen42);
    auto cases = verify_kohonen42_cases(p);
    REQUIRE(cases.size() == 10);
    CHECK(cases.front().lo == 0);
    CHECK(cases.back().hi == 509);
    Elem next = 0;
    for (const auto& c : cases) {
        CHECK(c.holds);
        CHECK(c.lo == next); // the intervals tile [0, 509] without gaps
        next = c.hi + 1;
    }
    CHECK(next == 510);
    CHECK_NOTHROW(require_kohonen42_certificate(p));
    CHECK_THROWS_AS(verify_kohonen42_cases(preset_placement(Preset::Mrose7)), InputError);
}

TEST_CASE("rule name formatting") {
    CHECK(rule_names(kSquareIJ) == "square-IJ");
    CHECK(rule_names(kSquareIJ | kPairJK) == "square-IJ|pair-JK");
    CHECK(rule_names(0) == "-");
}
