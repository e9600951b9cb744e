#include "doctest.h"

#include "addbasis/int_set.hpp"
#include "addbasis/rational.hpp"
#include "addbasis/report.hpp"

#include "test_util.hpp"

using namespace addbasis;

TEST_CASE("construction sorts, deduplicates and validates") {
    IntSet s{4, 0, 4, 1};
    CHECK(s.elements() == std::vector<Elem>{0, 1, 4});
    CHECK(s.size() == 3);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(2));
    CHECK(s.min() == 0);
    CHECK(s.max() == 4);
    CHECK(s.str() == "{0, 1, 4}");

    CHECK_THROWS_AS(IntSet{-1}, InputError);
    CHECK_THROWS_AS(IntSet{kMaxElement + 1}, InputError);
    CHECK_NOTHROW(IntSet{kMaxElement});
    CHECK_THROWS_AS((void)IntSet{}.min(), InputError);
}

TEST_CASE("arithmetic progressions") {
    CHECK(IntSet::ap(0, 3, 9).elements() == std::vector<Elem>{0, 3, 6, 9});
    CHECK(IntSet::ap(5, 1, 5).elements() == std::vector<Elem>{5});
    CHECK(IntSet::interval(2, 5).elements() == std::vector<Elem>{2, 3, 4, 5});
    CHECK_THROWS_AS(IntSet::ap(0, 3, 10), InputError); // step does not divide
    CHECK_THROWS_AS(IntSet::ap(3, 1, 2), InputError);  // descending
    CHECK_THROWS_AS(IntSet::ap(0, 0, 4), InputError);  // zero step
    CHECK_THROWS_AS(IntSet::ap(-2, 1, 2), InputError);
}

TEST_CASE("translate and scale") {
    IntSet s{0, 2, 7};
    CHECK(translate(s, 5).elements() == std::vector<Elem>{5, 7, 12});
    CHECK(translate(translate(s, 5), -5) == s);
    CHECK_THROWS_AS(translate(s, -1), InputError); // 0 would go negative
    CHECK_THROWS_AS(translate(s, kMaxElement), InputError);

    CHECK(scale(3, s).elements() == std::vector<Elem>{0, 6, 21});
    CHECK(scale(0, s).elements() == std::vector<Elem>{0});
    CHECK_THROWS_AS(scale(-2, s), InputError);
    CHECK_THROWS_AS(scale(kMaxElement, IntSet{2}), InputError);
}

TEST_CASE("union and inclusion") {
    IntSet a{0, 1, 5};
    IntSet b{1, 2};
    CHECK(a.unite(b).elements() == std::vector<Elem>{0, 1, 2, 5});
    CHECK(a.unite(IntSet{}) == a);
    CHECK(a.includes(IntSet{0, 5}));
    CHECK_FALSE(a.includes(b));
    CHECK(a.includes(IntSet{}));
}

TEST_CASE("lexicographic order on sorted elements") {
    CHECK(IntSet{0, 2} < IntSet{1});
    CHECK(IntSet{1} < IntSet{1, 5});
    CHECK(IntSet{} < IntSet{0});
    CHECK(IntSet{0, 1} < IntSet{0, 2});
}

TEST_CASE("sumset matches the quadratic oracle") {
    IntSet a{0, 1, 3, 4};
    CHECK(sumset(a, a).elements() == std::vector<Elem>{0, 1, 2, 3, 4, 5, 6, 7, 8});

    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        IntSet x = oracle::random_set(rng, 300, 1 + std::size_t(rng() % 12));
        IntSet y = oracle::random_set(rng, 300, 1 + std::size_t(rng() % 12));
        auto expect = oracle::sumset(oracle::to_std(x), oracle::to_std(y));
        auto got = sumset(x, y);
        CHECK(oracle::to_std(got) == expect);
    }

    CHECK_THROWS_AS(sumset(IntSet{}, a), InputError);
    CHECK_THROWS_AS(sumset(IntSet{0, kMaxDenseSum - 1}, IntSet{0, 1}), InputError);
}

TEST_CASE("range matches the oracle and requires 0") {
    CHECK(range_n(IntSet{0, 1, 3, 4}) == 8);
    CHECK(range_n(IntSet{0}) == 0);
    CHECK(range_n(IntSet{0, 2}) == 0); // 1 is not a sum
    CHECK_THROWS_AS(range_n(IntSet{1, 2}), InputError);

    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        IntSet a = oracle::random_set(rng, 60, 2 + std::size_t(rng() % 10), {0});
        CHECK(range_n(a) == oracle::range_n(oracle::to_std(a)));
    }
}

TEST_CASE("rational arithmetic stays exact and reduced") {
    Rational c(510, 42 * 42);
    CHECK(c.num() == 85);
    CHECK(c.den() == 294);
    CHECK(c.str() == "85/294");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 7) * Rational(7, 2) == Rational(1));
    CHECK(Rational(1, 3) < Rational(2, 5));
    CHECK(Rational(1, 2) / Rational(2) == Rational(1, 4));
    CHECK(Rational(1) - Rational(3, 2) < Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), InputError);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), InputError);
    CHECK(Rational(510, 1764).to_double() == doctest::Approx(0.2891156));
}

TEST_CASE("basis report") {
    BasisReport rep = make_report(IntSet{0, 1, 3, 4});
    CHECK(rep.k == 4);
    CHECK(rep.n == 8);
    CHECK(rep.ratio == Rational(1, 2));
    CHECK_FALSE(rep.t.has_value());

    BasisReport rep3 = make_report(IntSet{0, 1, 3, 4}, 3);
    CHECK(rep3.t == 3);
    CHECK(rep3.r == Rational(9, 16));
    CHECK_THROWS_AS(make_report(IntSet{1, 2}), InputError);
}
