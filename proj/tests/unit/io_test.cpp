#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "addbasis/placement_io.hpp"
#include "addbasis/presets.hpp"

using namespace addbasis;

TEST_CASE("basic placement parsing") {
    Placement p = parse_placement("I: 0 6 10\nJ: 0 1 2\nK: 3\n");
    CHECK(p == preset_placement(Preset::Mrose7));
}

TEST_CASE("ranges, stepped ranges, commas and comments") {
    Placement p = parse_placement(
        "# the forty-two segment placement\n"
        "I: 0, 5, 112..(5)..137\n"
        "\n"
        "J: 10..(6)..106   # seventeen H copies\n"
        "K: 0..4 224..229 367..372\n");
    CHECK(p == preset_placement(Preset::Kohonen42));
}

TEST_CASE("a missing label is an empty part") {
    Placement p = parse_placement("I: 1 2\n");
    CHECK(p.v_locs == IntSet{1, 2});
    CHECK(p.h_locs.empty());
    CHECK(p.s_locs.empty());

    Placement empty = parse_placement("# nothing\n");
    CHECK(empty.total_segments() == 0);

    Placement labelled_empty = parse_placement("I:\nJ: 4\n");
    CHECK(labelled_empty.v_locs.empty());
    CHECK(labelled_empty.h_locs == IntSet{4});
}

TEST_CASE("format and parse round-trip") {
    for (Preset preset : {Preset::Mrose7, Preset::Klove7, Preset::Kohonen42}) {
        const Placement& p = preset_placement(preset);
        CHECK(parse_placement(format_placement(p)) == p);
    }
    CHECK(format_placement(Placement{IntSet{0, 2}, IntSet{}, IntSet{1}}) ==
          "I: 0 2\nJ:\nK: 1\n");
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_placement(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("I: 0\nI: 1\n") == 2);         // duplicate label
    CHECK(line_of("Q: 1\n") == 1);               // unknown label
    CHECK(line_of("I: 0\nJ: 3..x\n") == 2);      // malformed bound
    CHECK(line_of("I: 0\nJ: 1\nK: 5..3\n") == 3);  // descending range
    CHECK(line_of("I: 0..(4)..10\n") == 1);      // step does not divide
    CHECK(line_of("I: 0..(0)..8\n") == 1);       // zero step
    CHECK(line_of("I: -3\n") == 1);              // negative location
    CHECK(line_of("I: 1..(2..5\n") == 1);        // unterminated step
    CHECK(line_of("I: 0 garbage\n") == 1);
}

TEST_CASE("duplicate elements within one label merge") {
    Placement p = parse_placement("I: 1 1 0..2\n");
    CHECK(p.v_locs == IntSet{0, 1, 2});
}

TEST_CASE("file loading") {
    std::string path = "io_test_placement.tmp";
    {
        std::ofstream out(path);
        out << "# comment\nI: 0 6 10\nJ: 0..2\nK: 3\n";
    }
    Placement p = load_placement_file(path);
    CHECK(p == preset_placement(Preset::Mrose7));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_placement_file("definitely-missing.txt"), InputError);
}
