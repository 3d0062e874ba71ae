#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knot/gauss_code.hpp"

using namespace knot;

TEST_CASE("parse plain word") {
    GaussCode c = GaussCode::parse("1 2 3 1 2 3");
    CHECK(c.crossings() == 3);
    CHECK(c.length() == 6);
    CHECK_FALSE(c.has_ou());
    CHECK_FALSE(c.has_sign());
    CHECK(c.letters() == std::vector<int>{0, 1, 2, 0, 1, 2});
    CHECK(c.to_string() == "1 2 3 1 2 3");
}

TEST_CASE("parse keeps original spellings") {
    GaussCode c = GaussCode::parse("7 3 9 7 3 9");
    CHECK(c.letters() == std::vector<int>{0, 1, 2, 0, 1, 2});
    CHECK(c.to_string() == "7 3 9 7 3 9");
}

TEST_CASE("parse ou word") {
    GaussCode c = GaussCode::parse("O1 U2 O3 U1 O2 U3");
    CHECK(c.has_ou());
    CHECK_FALSE(c.has_sign());
    CHECK(c.ou()[0] == Strand::Over);
    CHECK(c.ou()[1] == Strand::Under);
    CHECK(c.to_string() == "O1 U2 O3 U1 O2 U3");
}

TEST_CASE("parse signed word") {
    GaussCode c = GaussCode::parse("O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(c.has_ou());
    CHECK(c.has_sign());
    CHECK(c.sign() == std::vector<int>{1, 1, 1});
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(GaussCode::parse("1 2 3"), Error);          // odd length
    CHECK_THROWS_AS(GaussCode::parse("1 1 1 2 2 1"), Error);    // not double occurrence
    CHECK_THROWS_AS(GaussCode::parse("1 2 1"), Error);
    CHECK_THROWS_AS(GaussCode::parse("O1 2 O1 2"), Error);      // mixed token kinds
    CHECK_THROWS_AS(GaussCode::parse("O1 O2 O1 U2"), Error);    // label 1 twice over
    CHECK_THROWS_AS(GaussCode::parse("O1+ U2+ U1- O2+"), Error); // sign disagrees
    CHECK_THROWS_AS(GaussCode::parse("x y x y"), Error);
    CHECK(GaussCode::parse("").empty());  // empty line is the empty code

    try {
        GaussCode::parse("1 2 3");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDoubleOccurrence);
    }
    try {
        GaussCode::parse("1 1 1 2 2 1");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDoubleOccurrence);
    }
    try {
        GaussCode::parse("O1 O2 O1 U2");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InconsistentOU);
    }
}

TEST_CASE("occurrences and gaps") {
    GaussCode c = GaussCode::parse("1 2 1 3 2 3");
    CHECK(c.occurrences(0) == std::pair<int, int>{0, 2});
    CHECK(c.gap(0) == 2);
    CHECK_FALSE(c.all_gaps_odd());
    GaussCode t = GaussCode::parse("1 2 3 1 2 3");
    CHECK(t.all_gaps_odd());
}

TEST_CASE("reduced detects cyclically adjacent repeats") {
    CHECK(GaussCode::parse("1 2 3 1 2 3").reduced());
    CHECK_FALSE(GaussCode::parse("1 1 2 3 2 3").reduced());
    CHECK_FALSE(GaussCode::parse("1 2 3 2 3 1").reduced());  // wraparound
}

TEST_CASE("canonicalize plain") {
    GaussCode c = canonicalize(GaussCode::parse("2 3 1 2 3 1"));
    CHECK(c.to_string() == "1 2 3 1 2 3");
}

TEST_CASE("canonicalize is rotation and reversal invariant") {
    GaussCode base = GaussCode::parse("O1+ U2+ O3+ U1+ O2+ U3+");
    std::string key = canonicalize(base).to_string();
    CHECK(key == "O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(canonicalize(reverse(base)).to_string() == key);
    // rotated spelling of the same cyclic word
    GaussCode rot = GaussCode::parse("U2+ O3+ U1+ O2+ U3+ O1+");
    CHECK(canonicalize(rot).to_string() == key);
}

TEST_CASE("mirror") {
    GaussCode c = GaussCode::parse("O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(mirror(c).to_string() == "U1- O2- U3- O1- U2- O3-");
    CHECK_THROWS_AS(mirror(GaussCode::parse("1 2 3 1 2 3")), Error);
}

TEST_CASE("reverse") {
    GaussCode c = GaussCode::parse("O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(reverse(c).to_string() == "U3+ O2+ U1+ O3+ U2+ O1+");
    CHECK(reverse(reverse(c)) == c);
}

TEST_CASE("assign_alternating") {
    GaussCode c = assign_alternating(GaussCode::parse("1 2 3 1 2 3"));
    CHECK(c.to_string() == "O1 U2 O3 U1 O2 U3");
    CHECK_THROWS_AS(assign_alternating(GaussCode::parse("1 2 1 3 2 3")), Error);
    try {
        assign_alternating(GaussCode::parse("1 2 1 3 2 3"));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OddGap);
    }
}

TEST_CASE("equality ignores spelling") {
    CHECK(GaussCode::parse("1 2 3 1 2 3") == GaussCode::parse("5 7 9 5 7 9"));
    CHECK_FALSE(GaussCode::parse("1 2 3 1 2 3") == GaussCode::parse("1 2 1 3 2 3"));
}
