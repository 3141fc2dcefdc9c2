#pragma once

#include "ordlab/group.hpp"
#include "ordlab/orders.hpp"
#include "ordlab/pl_homeo.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ordlab {

struct BallSpec {
    int radius = 0;
    std::string generators = "tsb";  // subset of "tsb"; inverses are implied
};

// All distinct normal forms of words of length <= radius, identity first,
// then by word length and lexicographic letter order t < t^-1 < s < s^-1 <
// b < b^-1. Enlarging the radius extends the list without reordering it.
std::vector<GroupElement> enumerate_ball(const BallSpec& spec, std::size_t cap = 4000000);

struct RealizationState {
    std::vector<GroupElement> elements;  // enumeration order, elements[0] = 1
    std::vector<Rat> coords;             // coords[i] is elements[i](0)
    ZkLexVariant variant = ZkLexVariant::TDominant;
    std::map<GroupElement, std::size_t, ElemLess> index;

    const Rat* coord_of(const GroupElement& g) const {
        auto it = index.find(g);
        return it == index.end() ? nullptr : &coords[it->second];
    }
};

// Orbit coordinates in enumeration order: first element gets 0, each next
// goes one above the running maximum, one below the running minimum, or at
// the midpoint of its order-neighbors. The result is an exact order
// isomorphism onto its image.
RealizationState assign_coordinates(const std::vector<GroupElement>& elements,
                                    ZkLexVariant variant = ZkLexVariant::TDominant);

// PL interpolation of coord(h) -> coord(g h) over every enumerated h with
// g h enumerated too; slope-1 tails beyond the hull. Throws if fewer than
// two interpolation points exist.
PLHomeo realize_element(const RealizationState& state, const GroupElement& g);

struct SurveyReport {
    std::size_t n_elements = 0;
    Rat hull_lo, hull_hi;
    long max_isolated = 0;
    std::optional<GroupElement> argmax;
    bool any_fixed_interval = false;
    std::vector<long> isolated_counts;  // per element, identity counted as 0
};

// Fixed-point census of every realized non-identity element, restricted to
// the open orbit hull. The serial version is the reference implementation;
// fixed_point_survey runs the same per-element work under OpenMP.
SurveyReport fixed_point_survey_serial(const RealizationState& state);
SurveyReport fixed_point_survey(const RealizationState& state);

} // namespace ordlab
