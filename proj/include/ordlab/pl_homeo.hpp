#pragma once

#include "ordlab/scalars.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ordlab {

// Piecewise-linear orientation-preserving homeomorphism of R with rational
// breakpoints and affine tails. Canonical form:
//   - no collinear breakpoints (so map equality is structural equality),
//   - a globally affine map is anchored at x = 0,
//   - the identity has no breakpoints at all.
// Maps of [0,1] are represented as maps of R fixing 0 and 1 with slope-1
// tails outside.
class PLHomeo {
public:
    PLHomeo() : ltail_(1), rtail_(1) {}  // identity

    // Interpolation points (strictly increasing in x and y) plus tail slopes.
    PLHomeo(std::vector<std::pair<Rat, Rat>> points, Rat left_tail, Rat right_tail);

    static PLHomeo identity() { return PLHomeo(); }
    static PLHomeo affine(const Rat& slope, const Rat& offset);

    bool is_identity() const { return xs_.empty(); }
    const std::vector<Rat>& breakpoints() const { return xs_; }
    const std::vector<Rat>& values() const { return ys_; }
    const Rat& left_tail_slope() const { return ltail_; }
    const Rat& right_tail_slope() const { return rtail_; }

    Rat operator()(const Rat& x) const { return evaluate(x); }
    Rat evaluate(const Rat& x) const;
    Rat evaluate_inverse(const Rat& y) const;

    PLHomeo inverse() const;
    // Slope of the linear piece immediately to the right of x.
    Rat slope_right_of(const Rat& x) const;

    bool operator==(const PLHomeo& o) const {
        return xs_ == o.xs_ && ys_ == o.ys_ && ltail_ == o.ltail_ && rtail_ == o.rtail_;
    }
    // Total order on canonical data; used for exact distinctness sets.
    bool operator<(const PLHomeo& o) const;

private:
    void canonicalize();
    std::vector<Rat> xs_, ys_;
    Rat ltail_, rtail_;
};

// f o g, exact: evaluate(compose(f,g), x) == f(g(x)) for all x.
PLHomeo compose(const PLHomeo& f, const PLHomeo& g);

// Exact sup of |f(x) - x| over [lo, hi]; attained on the finite candidate
// set of breakpoints and endpoints.
Rat c0_distance_to_identity(const PLHomeo& f, const Rat& lo, const Rat& hi);

struct FixedPointCensus {
    std::vector<Rat> isolated;                    // sorted, strictly inside the domain
    std::vector<std::pair<Rat, Rat>> intervals;   // maximal pointwise-fixed, clipped, a < b
    long count_in(const Rat& a, const Rat& b) const;
};

// Exact fixed points of f in the open interval (lo, hi).
FixedPointCensus fixed_point_census(const PLHomeo& f, const Rat& lo, const Rat& hi);

// Exact min and max piece slope over the closed interval [a, b].
std::pair<Rat, Rat> slope_range(const PLHomeo& f, const Rat& a, const Rat& b);

} // namespace ordlab
