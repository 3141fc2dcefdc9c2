#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordlab/pl_homeo.hpp"

#include <random>

using namespace ordlab;

namespace {

Rat r(long n, long d = 1) { return make_rat(n, d); }

// "Tent" map of [0,1]: 0 -> 0, mid -> peak, 1 -> 1, slope-1 tails.
PLHomeo tent(const Rat& mid, const Rat& peak) {
    return PLHomeo({{r(0), r(0)}, {mid, peak}, {r(1), r(1)}}, r(1), r(1));
}

PLHomeo random_map(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<int> num(1, 6);
    std::vector<std::pair<Rat, Rat>> pts;
    Rat x = r(-num(rng), num(rng)), y = r(-num(rng), num(rng));
    pts.emplace_back(x, y);
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        x += r(num(rng), num(rng));
        y += r(num(rng), num(rng));
        pts.emplace_back(x, y);
    }
    return PLHomeo(std::move(pts), r(num(rng), num(rng)), r(num(rng), num(rng)));
}

Rat random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 12);
    return r(num(rng), den(rng));
}

} // namespace

TEST_CASE("evaluation") {
    CHECK(PLHomeo::identity().evaluate(r(3, 7)) == r(3, 7));

    PLHomeo f = tent(r(1, 2), r(1, 4));
    CHECK(f.evaluate(r(1, 4)) == r(1, 8));  // interpolation on the first piece
    CHECK(f.evaluate(r(0)) == 0);
    CHECK(f.evaluate(r(1)) == 1);

    PLHomeo g({{r(0), r(0)}, {r(1), r(1)}}, r(1), r(2));
    CHECK(g.evaluate(r(2)) == 3);  // affine tail of slope 2 past (1,1)
}

TEST_CASE("canonical form") {
    // Collinear middle point disappears.
    PLHomeo f({{r(0), r(0)}, {r(1, 2), r(1, 2)}, {r(1), r(1)}}, r(1), r(1));
    CHECK(f.is_identity());

    // A globally affine map is anchored at zero.
    PLHomeo g({{r(3), r(7)}}, r(2), r(2));
    CHECK(g == PLHomeo::affine(r(2), r(1)));
    CHECK(g.breakpoints().size() == 1);
    CHECK(g.breakpoints()[0] == 0);

    CHECK_THROWS(PLHomeo({{r(0), r(1)}, {r(1), r(1, 2)}}, r(1), r(1)));
    CHECK_THROWS(PLHomeo({{r(0), r(0)}}, r(-1), r(1)));
}

TEST_CASE("compose agrees with nested evaluation") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        PLHomeo f = random_map(rng), g = random_map(rng);
        PLHomeo fg = compose(f, g);
        for (int i = 0; i < 100; ++i) {
            Rat x = random_point(rng);
            CHECK(fg.evaluate(x) == f.evaluate(g.evaluate(x)));
        }
    }
}

TEST_CASE("composition round-trips and associativity") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        PLHomeo f = random_map(rng), g = random_map(rng), h = random_map(rng);
        CHECK(compose(f, f.inverse()).is_identity());
        CHECK(compose(f.inverse(), f).is_identity());
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("monotonicity") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        PLHomeo f = random_map(rng);
        for (int i = 0; i < 500; ++i) {
            Rat x = random_point(rng), y = random_point(rng);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            CHECK(f.evaluate(x) < f.evaluate(y));
        }
    }
}

TEST_CASE("C0 distance to identity") {
    CHECK(c0_distance_to_identity(PLHomeo::identity(), r(0), r(1)) == 0);
    CHECK(c0_distance_to_identity(tent(r(1, 2), r(1, 4)), r(0), r(1)) == r(1, 4));

    // Grid sampling never exceeds the exact value, and matches once the grid
    // contains the breakpoints.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        PLHomeo f = compose(tent(r(1, 2), r(1, 4)), random_map(rng));
        PLHomeo h = compose(f, f.inverse());  // identity; use f itself below
        Rat exact = c0_distance_to_identity(f, r(0), r(1));
        Rat grid_best(0);
        for (int i = 0; i <= 64; ++i) {
            Rat x = r(i, 64);
            Rat d = abs(f.evaluate(x) - x);
            if (d > grid_best) grid_best = d;
        }
        for (const Rat& x : f.breakpoints()) {
            if (x < 0 || x > 1) continue;
            Rat d = abs(f.evaluate(x) - x);
            if (d > grid_best) grid_best = d;
        }
        CHECK(grid_best == exact);
        CHECK(h.is_identity());
    }
}

TEST_CASE("fixed point census: basic shapes") {
    auto idc = fixed_point_census(PLHomeo::identity(), r(0), r(1));
    CHECK(idc.isolated.empty());
    REQUIRE(idc.intervals.size() == 1);
    CHECK(idc.intervals[0].first == 0);
    CHECK(idc.intervals[0].second == 1);

    // f < x on (0,1): no interior fixed points.
    auto below = fixed_point_census(tent(r(1, 2), r(1, 4)), r(0), r(1));
    CHECK(below.isolated.empty());
    CHECK(below.intervals.empty());

    // One interior crossing: above the diagonal before 1/2, below after.
    PLHomeo crossing({{r(0), r(0)}, {r(1, 4), r(3, 8)}, {r(1, 2), r(1, 2)},
                      {r(3, 4), r(5, 8)}, {r(1), r(1)}},
                     r(1), r(1));
    auto census = fixed_point_census(crossing, r(0), r(1));
    REQUIRE(census.isolated.size() == 1);
    CHECK(census.isolated[0] == r(1, 2));
    CHECK(crossing.evaluate(census.isolated[0]) == census.isolated[0]);
    CHECK(census.count_in(r(1, 4), r(3, 4)) == 1);
    CHECK(census.intervals.empty());
}

TEST_CASE("fixed point census matches sign-scan oracle") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 1000; ++trial) {
        PLHomeo f = random_map(rng);
        Rat lo(-10), hi(10);
        auto census = fixed_point_census(f, lo, hi);
        // Oracle: walk breakpoints and midpoints, track sign of f(x)-x; count
        // strict sign changes and flat stretches.
        std::vector<Rat> samples{lo};
        for (const Rat& x : f.breakpoints())
            if (x > lo && x < hi) samples.push_back(x);
        samples.push_back(hi);
        std::vector<Rat> dense;
        for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
            dense.push_back(samples[i]);
            dense.push_back((samples[i] + samples[i + 1]) / 2);
        }
        dense.push_back(hi);
        for (const Rat& x : dense) {
            int sign = cmp(f.evaluate(x), x);
            bool in_isolated = false;
            for (const Rat& p : census.isolated)
                if (p == x) in_isolated = true;
            bool in_interval = false;
            for (auto& [a, b] : census.intervals)
                if (x >= a && x <= b) in_interval = true;
            if (sign == 0 && x > lo && x < hi) CHECK((in_isolated || in_interval));
            if (sign != 0) CHECK((!in_isolated && !in_interval));
        }
    }
}

TEST_CASE("slope range") {
    auto [a, b] = slope_range(PLHomeo::identity(), r(0), r(1));
    CHECK(a == 1);
    CHECK(b == 1);

    PLHomeo f = tent(r(1, 2), r(1, 4));  // slopes 1/2 and 3/2 inside [0,1]
    auto [mn, mx] = slope_range(f, r(0), r(1));
    CHECK(mn == r(1, 2));
    CHECK(mx == r(3, 2));

    auto [m2, x2] = slope_range(f, r(1, 8), r(3, 8));  // single piece
    CHECK(m2 == r(1, 2));
    CHECK(x2 == r(1, 2));

    // ratio^8 for slopes {1/2, 3/2} is 3^8
    Rat ratio = mx / mn;
    Rat p = ratio;
    for (int i = 1; i < 8; ++i) p *= ratio;
    CHECK(p == 6561);
}
