#pragma once

#include "ordlab/affine.hpp"
#include "ordlab/group.hpp"
#include "ordlab/pl_homeo.hpp"
#include "ordlab/scalars.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ordlab {

// Which lexicographic order stands in for "the natural left order" on the
// Z^2 factor; the t-dominant variant is the default.
enum class ZkLexVariant { TDominant, SDominant };

Ord compare_zk_lex(long t1, long s1, long t2, long s2,
                   ZkLexVariant variant = ZkLexVariant::TDominant);

// The extension order on Gamma = Z^2 |x Z[1/2]: the dyadic part dominates
// (natural real order), ties broken by the lexicographic order on Z^2.
Ord compare_extension(const GroupElement& x, const GroupElement& y,
                      ZkLexVariant variant = ZkLexVariant::TDominant);

// Pointwise order on Aff_+(R): compare at 0, then at 1.
Ord compare_affine(const AffineMap& f, const AffineMap& g);

// Germ order at 0+ for PL maps fixing 0; total on the PL category by
// comparing at the first point of difference (right of 0 first, then left).
// Equal only for identical maps. Throws if a map does not fix 0.
Ord compare_germ(const PLHomeo& f, const PLHomeo& g);

struct AuditReport {
    std::string order;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

// Left-invariance audit on `samples` random triples (a, x, y) with x < y:
// checks ax < ay. Known orders: "extension", "extension-st", "dyadic-natural",
// "affine", "germ", and the deliberately broken "corrupted-abs" fixture.
// "germ" additionally audits right-invariance (the germ order is a bi-order).
AuditReport audit_left_invariance(const std::string& order, int samples, std::uint64_t seed);

} // namespace ordlab
