#pragma once

#include "ordlab/scalars.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace ordlab {

// Normal form for Gamma = <t, s, b | tbt^-1 = b^2, sbs^-1 = b^2, [t,s] = 1>,
// i.e. Z^2 acting on the additive group of Z[1/2], both generators of Z^2
// acting by multiplication by 2. Letters: t s b, uppercase = inverse.
struct GroupElement {
    long t = 0;
    long s = 0;
    Dyadic d;

    bool is_identity() const { return t == 0 && s == 0 && d.is_zero(); }
    bool operator==(const GroupElement& o) const { return t == o.t && s == o.s && d == o.d; }
};

inline long twist_exponent(const GroupElement& x) { return x.t + x.s; }

inline GroupElement multiply(const GroupElement& x, const GroupElement& y) {
    return {x.t + y.t, x.s + y.s, x.d + y.d.scale_pow2(twist_exponent(x))};
}

inline GroupElement inverse(const GroupElement& x) {
    return {-x.t, -x.s, (-x.d).scale_pow2(-twist_exponent(x))};
}

GroupElement generator_image(char letter);  // one of "tsbTSB"

// A word is a string of letters over a declared alphabet. For Gamma the
// alphabet is "tsbTSB"; the search module uses "abAB" (alpha, beta).
using Word = std::string;

GroupElement from_word(const Word& w);

// Signed per-generator letter counts, keyed by lowercase letter.
std::map<char, long> abelianization(const Word& w);

std::string element_str(const GroupElement& g);

// Strict weak ordering on normal forms (not the group order); for containers.
struct ElemLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const {
        if (a.t != b.t) return a.t < b.t;
        if (a.s != b.s) return a.s < b.s;
        if (a.d.exponent() != b.d.exponent()) return a.d.exponent() < b.d.exponent();
        return cmp(a.d.mantissa(), b.d.mantissa()) < 0;
    }
};

} // namespace ordlab
