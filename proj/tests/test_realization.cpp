#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordlab/realization.hpp"

#include <algorithm>
#include <map>

using namespace ordlab;

TEST_CASE("ball enumeration basics") {
    auto b0 = enumerate_ball({0});
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].is_identity());

    auto b1 = enumerate_ball({1});
    CHECK(b1.size() == 7);  // identity + t, t^-1, s, s^-1, b, b^-1, all distinct
    CHECK(b1[0].is_identity());
    for (std::size_t i = 0; i < b1.size(); ++i)
        for (std::size_t j = i + 1; j < b1.size(); ++j) CHECK(!(b1[i] == b1[j]));

    // Length-1 elements appear in letter order t < t^-1 < s < s^-1 < b < b^-1.
    CHECK(b1[1] == from_word("t"));
    CHECK(b1[2] == from_word("T"));
    CHECK(b1[5] == from_word("b"));
    CHECK(b1[6] == from_word("B"));
}

TEST_CASE("ball growth and prefix stability") {
    std::vector<GroupElement> prev;
    for (int L = 0; L <= 4; ++L) {
        auto ball = enumerate_ball({L});
        CHECK(ball.size() >= prev.size());
        // Enlarging the radius extends the enumeration without reordering.
        for (std::size_t i = 0; i < prev.size(); ++i) CHECK(ball[i] == prev[i]);
        prev = std::move(ball);
    }
}

TEST_CASE("ball dedup matches brute-force word expansion") {
    // Oracle: evaluate all words of length <= 3 and collect distinct normal forms.
    std::map<GroupElement, int, ElemLess> seen;
    std::vector<Word> frontier{""};
    seen[GroupElement{}] = 1;
    for (int len = 1; len <= 3; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (char c : std::string("tTsSbB")) {
                Word u = w + c;
                next.push_back(u);
                seen[from_word(u)] = 1;
            }
        frontier = std::move(next);
    }
    auto ball = enumerate_ball({3});
    CHECK(ball.size() == seen.size());
    for (const auto& g : ball) CHECK(seen.count(g) == 1);
}

TEST_CASE("coordinate rules on hand-built sequences") {
    // (1, g2, g3) with 1 < g3 < g2 in the extension order: coords 0, 1, 1/2.
    GroupElement one;
    GroupElement g2{0, 0, Dyadic(1)};            // dyadic 1
    GroupElement g3{0, 0, Dyadic(Int(1), -1)};   // dyadic 1/2
    auto st = assign_coordinates({one, g2, g3});
    CHECK(st.coords[0] == 0);
    CHECK(st.coords[1] == 1);
    CHECK(st.coords[2] == make_rat(1, 2));

    // (1, g) with g < 1: coord -1.
    auto st2 = assign_coordinates({one, inverse(g2)});
    CHECK(st2.coords[1] == -1);
}

TEST_CASE("coordinates are an order isomorphism") {
    auto ball = enumerate_ball({4});
    auto st = assign_coordinates(ball);
    CHECK(st.coords[0] == 0);
    for (std::size_t i = 0; i < ball.size(); ++i)
        for (std::size_t j = i + 1; j < ball.size(); ++j) {
            bool group_less = compare_extension(ball[i], ball[j]) == Ord::Less;
            CHECK(group_less == (st.coords[i] < st.coords[j]));
        }
}

TEST_CASE("coordinate assignment is deterministic") {
    auto ball = enumerate_ball({4});
    auto a = assign_coordinates(ball);
    auto b = assign_coordinates(ball);
    CHECK(a.coords == b.coords);
}

TEST_CASE("realized maps act as the orbit action") {
    auto ball = enumerate_ball({4});
    auto st = assign_coordinates(ball);
    for (const GroupElement& g :
         {from_word("t"), from_word("S"), from_word("b"), from_word("tb"), from_word("Bs")}) {
        PLHomeo fg = realize_element(st, g);
        for (std::size_t i = 0; i < ball.size(); ++i) {
            const Rat* target = st.coord_of(multiply(g, ball[i]));
            if (!target) continue;
            CHECK(fg.evaluate(st.coords[i]) == *target);
        }
    }
    CHECK(realize_element(st, GroupElement{}).is_identity());
}

TEST_CASE("partial homomorphism at shared orbit points") {
    auto ball = enumerate_ball({3});
    auto st = assign_coordinates(ball);
    GroupElement g = from_word("t"), h = from_word("b");
    PLHomeo fg = realize_element(st, g);
    PLHomeo fh = realize_element(st, h);
    PLHomeo fgh = realize_element(st, multiply(g, h));
    for (std::size_t i = 0; i < ball.size(); ++i) {
        const GroupElement& x = ball[i];
        // need h x and g h x enumerated for all three evaluations to be exact
        if (!st.coord_of(multiply(h, x))) continue;
        if (!st.coord_of(multiply(g, multiply(h, x)))) continue;
        CHECK(fg.evaluate(fh.evaluate(st.coords[i])) == fgh.evaluate(st.coords[i]));
    }
}

TEST_CASE("survey: serial and parallel agree") {
    auto ball = enumerate_ball({4});
    auto st = assign_coordinates(ball);
    auto serial = fixed_point_survey_serial(st);
    auto parallel = fixed_point_survey(st);
    CHECK(serial.n_elements == parallel.n_elements);
    CHECK(serial.max_isolated == parallel.max_isolated);
    CHECK(serial.any_fixed_interval == parallel.any_fixed_interval);
    CHECK(serial.isolated_counts == parallel.isolated_counts);
    CHECK(serial.hull_lo == parallel.hull_lo);
    CHECK(serial.hull_hi == parallel.hull_hi);
}

TEST_CASE("survey: the translation-like generator has no interior fixed points") {
    auto ball = enumerate_ball({4});
    auto st = assign_coordinates(ball);
    Rat lo = *std::min_element(st.coords.begin(), st.coords.end());
    Rat hi = *std::max_element(st.coords.begin(), st.coords.end());
    PLHomeo fb = realize_element(st, from_word("b"));
    auto census = fixed_point_census(fb, lo, hi);
    CHECK(census.isolated.empty());
    CHECK(census.intervals.empty());
}

TEST_CASE("trivial one-element realization gives an empty survey") {
    auto st = assign_coordinates({GroupElement{}});
    auto rep = fixed_point_survey_serial(st);
    CHECK(rep.n_elements == 1);
    CHECK(rep.max_isolated == 0);
    CHECK(!rep.argmax.has_value());
    CHECK(rep.isolated_counts.size() <= 1);
}

TEST_CASE("realize on too little data is rejected") {
    auto st = assign_coordinates({GroupElement{}});
    CHECK_THROWS_AS(realize_element(st, from_word("t")), std::runtime_error);
}
