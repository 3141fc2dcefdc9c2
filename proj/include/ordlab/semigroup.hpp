#pragma once

#include "ordlab/group.hpp"
#include "ordlab/pl_homeo.hpp"

#include <optional>
#include <string>
#include <utility>

namespace ordlab {

// An interval (a, b) whose endpoints the fixer fixes with no other fixed
// point inside, while the mover sends a or b strictly into (a, b).
struct CrossedPairWitness {
    PLHomeo fixer;
    PLHomeo mover;
    Rat a, b;
    std::string description;
};

// Exhaustive scan over candidate intervals cut out by the exact fixed-point
// censuses of both maps, in both role assignments. Maps must fix 0 and 1.
std::optional<CrossedPairWitness> detect_crossed(const PLHomeo& f, const PLHomeo& g);

// Re-verifies every witnessed condition directly from the maps.
bool verify_crossed(const CrossedPairWitness& w);

struct ConstructOutcome {
    std::optional<CrossedPairWitness> witness;
    long conjugation_exponent = 0;  // 0 when the direct pair already crosses
    std::string note;
};

// Constructive crossed-pair search: locate a fixed point of one map moved by
// the other, try the direct pairs, then conjugate by growing powers until a
// bracketing fixed point is pushed past the far one. The exponent search is
// capped; a capped run returns no witness and an explanatory note.
ConstructOutcome construct_crossed(const PLHomeo& f, const PLHomeo& g, long exponent_cap = 64);

struct DistinctnessReport {
    int max_len = 0;
    std::size_t word_count = 0;
    bool all_distinct = false;
    std::optional<std::pair<Word, Word>> counterexample;  // words over 'a' (=f), 'b' (=g)
};

// Composes every positive word in {f, g} of length 1..max_len and tests
// pairwise distinctness by exact canonical-form equality. Distinctness up to
// a finite length is necessary evidence for semigroup freeness, not a proof.
DistinctnessReport positive_word_distinctness(const PLHomeo& f, const PLHomeo& g, int max_len,
                                              std::size_t cap = 1u << 20);

} // namespace ordlab
