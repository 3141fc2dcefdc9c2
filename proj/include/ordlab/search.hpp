#pragma once

#include "ordlab/group.hpp"
#include "ordlab/pl_homeo.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ordlab {

// Parameters of the near-identity search. All scalars are exact rationals;
// the irrational thresholds theta^{8N} and 1.9^{n/(2N)} are only ever used
// through integer-power cross-multiplication.
struct SearchParams {
    Rat epsilon;
    long grid_N = 4;  // grid x_i = i/N
    Rat delta;
    Rat M;
    Rat theta;
    Rat lambda;
    long n = 8;  // word scale
    long m = 0;  // exponent appearing in condition (ii), caller-supplied
};

// Words over 'a' (= alpha) and 'b' (= beta). Every enumerated word is a
// positive word U followed by the mandatory suffix "ba" (beta then alpha,
// applied first). Order: |U| ascending, then lexicographic with a < b.
std::vector<Word> enumerate_Sn(int n);
// Subset with the exponent sum of alpha in U equal to floor(n/2).
std::vector<Word> enumerate_Sn_prime(int n);

// Closed form |S_n'| = C(n+1, floor(n/2)+1).
Int count_Sn_prime(int n);
// Exact decision of |S_n'| >= 1.9^n via count * 10^n >= 19^n.
bool check_growth(int n);
// Smallest n0 such that check_growth holds for every n in [n0, max_n];
// nullopt if even max_n fails.
std::optional<int> growth_threshold(int max_n);

struct ParamReport {
    bool theta_in_range = false;       // 1 < theta and theta^{8N} < 1.9
    bool slope_ratio_f = false;        // (max/min)^8 < theta on [1-delta, 1]
    bool slope_ratio_g = false;
    bool slope_ratio_f_inv = false;
    bool slope_ratio_g_inv = false;
    bool displacement_f = false;       // f(x) > x on [1-delta, 1)
    bool displacement_g = false;
    bool condition_ii = false;         // M^{2m+4} theta^{4n} 1.9^{-n/(2N)} < eps
    bool all_pass() const {
        return theta_in_range && slope_ratio_f && slope_ratio_g && slope_ratio_f_inv &&
               slope_ratio_g_inv && displacement_f && displacement_g && condition_ii;
    }
};

ParamReport validate_params(const SearchParams& p, const PLHomeo& f, const PLHomeo& g);

// Exact check of |w(J)| < lambda^n * theta^{n/8} for the image of J = [a, b]
// under the realized word w.
bool contraction_bound_holds(const PLHomeo& word_map, const Rat& a, const Rat& b,
                             const SearchParams& p);

struct SearchResult {
    bool found = false;
    Word w1, w2;
    Rat grid_distance;          // max_i |g1 W(x_i) - g2 W(x_i)| for the pair
    PLHomeo h;                  // (g1 W)^-1 (g2 W)
    Rat c0_distance;            // exact sup |h(x) - x| over [0, 1]
    bool commutator_certified = false;
    std::map<char, long> abelianization_vector;  // of w1^-1 w2
    std::size_t explored = 0;   // words evaluated
    std::optional<Rat> min_pair_distance;  // best observed when nothing collides
};

// Evaluates every element of S_n' composed with W on the interior grid
// points, then scans pairs for agreement below the exact condition-(i)
// threshold (10/19)^{n/(2N)}. Among colliding pairs, the ones with the
// smallest exact grid distance are kept and the pair whose h has the
// smallest exact C0 distance is returned; remaining ties fall to
// enumeration order. The evaluation phase has a serial reference and an
// OpenMP kernel.
SearchResult pigeonhole_search(const PLHomeo& alpha, const PLHomeo& beta, const PLHomeo& W,
                               int n, const SearchParams& p, bool parallel = true);

// Grid-value kernel exposed for the serial/parallel equivalence test and
// the benchmark. values[w][i] = (word_w W)(x_i).
std::vector<std::vector<Rat>> grid_values(const std::vector<Word>& words, const PLHomeo& alpha,
                                          const PLHomeo& beta, const PLHomeo& W,
                                          const std::vector<Rat>& grid, bool parallel);

struct CommutatorAudit {
    bool certified = false;
    std::map<char, long> vector;  // abelianization of w1^-1 w2
};

CommutatorAudit commutator_membership_audit(const Word& w1, const Word& w2);

// Realize a word over 'a'/'b' as the composition of its letters
// (leftmost letter applied last).
PLHomeo word_to_map(const Word& w, const PLHomeo& alpha, const PLHomeo& beta);

} // namespace ordlab
