#include "doctest.h"

#include <vector>

#include "addbasis/extremal.hpp"

#include "test_util.hpp"

using namespace addbasis;

namespace {

// Reference solver: enumerate every k-subset of [0, k(k+1)/2] containing 0
// and keep the best range.  Returns the value and the lexicographically
// least witness.
std::pair<Elem, std::vector<Elem>> naive_nk(int k) {
    int cap = k * (k + 1) / 2;
    std::pair<Elem, std::vector<Elem>> best{-1, {}};

    // pick[0] = 0 is forced; choose the remaining k-1 elements ascending.
    std::vector<int> idx(std::size_t(k) - 1);
    for (int i = 0; i < k - 1; ++i) idx[std::size_t(i)] = i + 1;
    for (;;) {
        std::set<Elem> a{0};
        for (int v : idx) a.insert(v);
        Elem n = oracle::range_n(a);
        if (n > best.first) best = {n, std::vector<Elem>(a.begin(), a.end())};
        // next combination
        int i = k - 2;
        while (i >= 0 && idx[std::size_t(i)] == cap - (k - 2 - i)) --i;
        if (i < 0) break;
        ++idx[std::size_t(i)];
        for (int j = i + 1; j < k - 1; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
    }
    return best;
}

} // namespace

TEST_CASE("n_of_k matches the exhaustive oracle up to k = 6") {
    for (int k = 2; k <= 6; ++k) {
        CAPTURE(k);
        auto [n, witness] = naive_nk(k);
        ExtremalRecord rec = n_of_k(k);
        CHECK(rec.n == n);
        CHECK(rec.exhaustive);
        REQUIRE_FALSE(rec.witnesses.empty());
        CHECK(rec.witnesses.front().elements() == witness);
    }
}

TEST_CASE("known small values") {
    CHECK(n_of_k(2).n == 2);
    CHECK(n_of_k(3).n == 4);
    CHECK(n_of_k(4).n == 8);
    CHECK(n_of_k(5).n == 12);
    CHECK(n_of_k(6).n == 16);
    CHECK(n_of_k(7).n == 20);
    CHECK(n_of_k(8).n == 26);
    CHECK(n_of_k(4).witnesses.front() == IntSet{0, 1, 3, 4});
}

TEST_CASE("every reported witness is a genuine k-element basis for n") {
    for (int k = 2; k <= 8; ++k) {
        ExtremalRecord rec = n_of_k(k);
        CAPTURE(k);
        REQUIRE_FALSE(rec.witnesses.empty());
        for (const IntSet& w : rec.witnesses) {
            CHECK(w.size() == std::size_t(k));
            CHECK(w.contains(0));
            CHECK(range_n(w) == rec.n);
        }
        // stored sorted and unique
        for (std::size_t i = 1; i < rec.witnesses.size(); ++i)
            CHECK(rec.witnesses[i - 1] < rec.witnesses[i]);
    }
}

TEST_CASE("n grows strictly with k") {
    Elem prev = -1;
    for (int k = 2; k <= 8; ++k) {
        Elem n = n_of_k(k).n;
        CHECK(n > prev);
        prev = n;
    }
}

TEST_CASE("thread count changes nothing observable") {
    NkOptions seq{0, 1};
    NkOptions par{0, 4};
    for (int k : {5, 7, 8}) {
        ExtremalRecord a = n_of_k(k, seq);
        ExtremalRecord b = n_of_k(k, par);
        CAPTURE(k);
        CHECK(a.n == b.n);
        CHECK(a.exhaustive == b.exhaustive);
        CHECK(a.witnesses == b.witnesses);
    }
}

TEST_CASE("a node budget truncates to a sound lower bound") {
    ExtremalRecord full = n_of_k(7);
    NkOptions tight{5, 1};
    ExtremalRecord cut = n_of_k(7, tight);
    CHECK_FALSE(cut.exhaustive);
    CHECK(cut.n <= full.n);
    CHECK(cut.n >= 0);
    REQUIRE_FALSE(cut.witnesses.empty());
    CHECK(range_n(cut.witnesses.front()) == cut.n);

    ExtremalRecord again = n_of_k(7, tight);
    CHECK(again.n == cut.n);
    CHECK(again.witnesses == cut.witnesses);

    NkOptions loose{std::uint64_t(1) << 40, 1};
    CHECK(n_of_k(7, loose).exhaustive);
    CHECK(n_of_k(7, loose).n == full.n);
}

TEST_CASE("k is validated") {
    CHECK_THROWS_AS(n_of_k(1), InputError);
    CHECK_THROWS_AS(n_of_k(32), InputError);
    NkOptions bad{0, 0};
    CHECK_THROWS_AS(n_of_k(5, bad), InputError);
}

TEST_CASE("the stored reference value for k = 25") {
    CHECK(kReferenceN25 == 212);
}
