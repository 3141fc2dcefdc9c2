#include "ordlab/realization.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ordlab {

std::vector<GroupElement> enumerate_ball(const BallSpec& spec, std::size_t cap) {
    if (spec.radius < 0) throw std::invalid_argument("negative ball radius");
    std::string letters;
    for (char g : std::string("tsb")) {
        if (spec.generators.find(g) == std::string::npos) continue;
        letters.push_back(g);
        letters.push_back(static_cast<char>(g - 'a' + 'A'));
    }
    // Letter order is t T s S b B.
    std::string order;
    for (char c : std::string("tTsSbB"))
        if (letters.find(c) != std::string::npos) order.push_back(c);

    std::vector<GroupElement> out{GroupElement{}};
    std::map<GroupElement, std::size_t, ElemLess> seen;
    seen.emplace(GroupElement{}, 0);
    std::size_t level_begin = 0;
    for (int len = 1; len <= spec.radius; ++len) {
        std::size_t level_end = out.size();
        // Frontier order matches minimal length-lex words, so appending each
        // letter in order keeps the next level sorted the same way.
        for (std::size_t i = level_begin; i < level_end; ++i) {
            GroupElement base = out[i];
            for (char c : order) {
                GroupElement next = multiply(base, generator_image(c));
                if (seen.emplace(next, out.size()).second) {
                    out.push_back(next);
                    if (out.size() > cap) throw std::length_error("ball cap exceeded");
                }
            }
        }
        level_begin = level_end;
    }
    return out;
}

RealizationState assign_coordinates(const std::vector<GroupElement>& elements,
                                    ZkLexVariant variant) {
    RealizationState state;
    state.variant = variant;
    if (elements.empty()) return state;
    if (!elements[0].is_identity())
        throw std::invalid_argument("first element must be the identity");

    state.elements = elements;
    state.coords.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (!state.index.emplace(elements[i], i).second)
            throw std::invalid_argument("duplicate element in enumeration");

    // Indices of already placed elements, sorted by the group order.
    std::vector<std::size_t> sorted;
    sorted.reserve(elements.size());
    auto group_less = [&](std::size_t a, std::size_t b) {
        return compare_extension(elements[a], elements[b], variant) == Ord::Less;
    };

    state.coords.emplace_back(0);
    sorted.push_back(0);
    for (std::size_t n = 1; n < elements.size(); ++n) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), n, group_less);
        Rat coord;
        if (it == sorted.end()) {
            coord = state.coords[sorted.back()] + 1;            // above all: max + 1
        } else if (it == sorted.begin()) {
            coord = state.coords[sorted.front()] - 1;           // below all: min - 1
        } else {
            coord = (state.coords[*(it - 1)] + state.coords[*it]) / 2;  // midpoint
        }
        state.coords.push_back(coord);
        sorted.insert(it, n);
    }
    return state;
}

PLHomeo realize_element(const RealizationState& state, const GroupElement& g) {
    if (g.is_identity()) return PLHomeo::identity();
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(state.elements.size());
    for (std::size_t i = 0; i < state.elements.size(); ++i) {
        const Rat* img = state.coord_of(multiply(g, state.elements[i]));
        if (img) pts.emplace_back(state.coords[i], *img);
    }
    if (pts.size() < 2)
        throw std::runtime_error("fewer than 2 orbit points for " + element_str(g));
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return PLHomeo(std::move(pts), Rat(1), Rat(1));
}

namespace {

SurveyReport survey_impl(const RealizationState& state, bool parallel) {
    SurveyReport rep;
    rep.n_elements = state.elements.size();
    if (state.elements.size() < 2) return rep;

    auto [lo_it, hi_it] = std::minmax_element(state.coords.begin(), state.coords.end());
    rep.hull_lo = *lo_it;
    rep.hull_hi = *hi_it;
    rep.isolated_counts.assign(state.elements.size(), 0);

    std::vector<char> has_interval(state.elements.size(), 0);
    long n = static_cast<long>(state.elements.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
    for (long i = 1; i < n; ++i) {
        PLHomeo f = realize_element(state, state.elements[i]);
        FixedPointCensus census = fixed_point_census(f, rep.hull_lo, rep.hull_hi);
        rep.isolated_counts[i] = static_cast<long>(census.isolated.size());
        has_interval[i] = census.intervals.empty() ? 0 : 1;
    }
    (void)parallel;

    for (long i = 1; i < n; ++i) {
        if (has_interval[i]) rep.any_fixed_interval = true;
        if (rep.isolated_counts[i] > rep.max_isolated || !rep.argmax) {
            rep.max_isolated = rep.isolated_counts[i];
            rep.argmax = state.elements[i];
        }
    }
    return rep;
}

} // namespace

SurveyReport fixed_point_survey_serial(const RealizationState& state) {
    return survey_impl(state, false);
}

SurveyReport fixed_point_survey(const RealizationState& state) {
    return survey_impl(state, true);
}

} // namespace ordlab
