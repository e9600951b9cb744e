#include "addbasis/coverage.hpp"

#include <algorithm>

#include "addbasis/presets.hpp"

namespace addbasis {

std::string rule_names(unsigned mask) {
    std::string out;
    auto add = [&](const char* name) {
        if (!out.empty()) out += "|";
        out += name;
    };
    if (mask & kSquareIJ) add("square-IJ");
    if (mask & kSquareIK) add("square-IK");
    if (mask & kPairJK) add("pair-JK");
    return out.empty() ? "-" : out;
}

unsigned CoverageResult::rules_at(Elem x) const {
    auto it = std::lower_bound(covered.begin(), covered.end(), x,
                               [](const auto& e, Elem v) { return e.first < v; });
    if (it == covered.end() || it->first != x) return 0;
    return it->second;
}

CoverageResult covered_set_from_sumsets(const IntSet& ij, const IntSet& ik,
                                        const IntSet& jk, std::int64_t total_segments) {
    if (total_segments <= 0) throw InputError("placement has no segments");

    std::vector<std::pair<Elem, unsigned>> marks;
    for (Elem x : ij.elements()) marks.emplace_back(x, kSquareIJ);
    for (Elem x : ik.elements()) marks.emplace_back(x, kSquareIK);
    const auto& jks = jk.elements();
    for (std::size_t i = 1; i < jks.size(); ++i)
        if (jks[i] == jks[i - 1] + 1) marks.emplace_back(jks[i], kPairJK);

    std::sort(marks.begin(), marks.end());
    CoverageResult res;
    for (const auto& [loc, rule] : marks) {
        if (!res.covered.empty() && res.covered.back().first == loc)
            res.covered.back().second |= rule;
        else
            res.covered.emplace_back(loc, rule);
    }

    while (res.is_covered(res.m)) ++res.m;
    res.c = Rational(res.m, total_segments * total_segments);
    return res;
}

CoverageResult covered_set(const Placement& p) {
    auto maybe_sum = [](const IntSet& a, const IntSet& b) {
        return (a.empty() || b.empty()) ? IntSet{} : sumset(a, b);
    };
    return covered_set_from_sumsets(maybe_sum(p.v_locs, p.h_locs),
                                    maybe_sum(p.v_locs, p.s_locs),
                                    maybe_sum(p.h_locs, p.s_locs), p.total_segments());
}

std::int64_t counting_bound(std::int64_t li, std::int64_t lj, std::int64_t lk) {
    if (li < 0 || lj < 0 || lk < 0) throw InputError("segment counts must be non-negative");
    __int128 b = __int128(li) * lj + __int128(li) * lk + __int128(lj) * lk;
    if (b > INT64_MAX) throw InputError("counting bound overflows 64 bits");
    return std::int64_t(b);
}

std::vector<CertificateCase> verify_kohonen42_cases(const Placement& p) {
    if (p != preset_placement(Preset::Kohonen42))
        throw InputError("certificate cases are specific to the kohonen42 placement");

    CoverageResult cov = covered_set(p);
    std::vector<CertificateCase> cases = {
        {"i", 0, 9, kSquareIK, false},
        {"ii", 10, 111, kSquareIJ | kPairJK, false},
        {"iii", 112, 141, kSquareIK, false},
        {"iv", 142, 223, kSquareIJ, false},
        {"v", 224, 234, kSquareIK, false},
        {"vi", 235, 335, kPairJK, false},
        {"vii", 336, 366, kSquareIK, false},
        {"viii", 367, 377, kSquareIK, false},
        {"ix", 378, 478, kPairJK, false},
        {"x", 479, 509, kSquareIK, false},
    };
    for (auto& c : cases) {
        c.holds = true;
        for (Elem x = c.lo; x <= c.hi && c.holds; ++x)
            c.holds = (cov.rules_at(x) & c.rules) != 0;
    }
    return cases;
}

void require_kohonen42_certificate(const Placement& p) {
    for (const auto& c : verify_kohonen42_cases(p)) {
        if (!c.holds)
            throw VerificationError("certificate case " + c.label + " fails on [" +
                                    std::to_string(c.lo) + ", " + std::to_string(c.hi) +
                                    "] with rules " + rule_names(c.rules));
    }
    Elem m = covered_set(p).m;
    if (m != 510)
        throw VerificationError("covered prefix is " + std::to_string(m) +
                                ", certificate expects 510");
}

} // namespace addbasis
