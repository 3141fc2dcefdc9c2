#include "ordlab/search.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ordlab {

namespace {

// All positive words of length exactly len in lexicographic order (a < b).
void append_words_of_length(int len, std::vector<Word>& out, int required_a = -1) {
    if (len == 0) {
        if (required_a <= 0) out.emplace_back();
        return;
    }
    for (unsigned long bits = 0; bits < (1ul << len); ++bits) {
        Word w(static_cast<std::size_t>(len), 'a');
        int a_count = len;
        for (int i = 0; i < len; ++i) {
            if (bits & (1ul << (len - 1 - i))) {
                w[static_cast<std::size_t>(i)] = 'b';
                --a_count;
            }
        }
        if (required_a < 0 || a_count == required_a) out.push_back(std::move(w));
    }
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

// |d| < (10/19)^{n/(2N)}, decided as |d|^{2N} * 19^n < 10^n.
bool below_threshold(const Rat& d, unsigned long two_N, const Int& p19n, const Int& p10n) {
    Rat a = abs(d);
    Int num = int_pow(a.get_num(), two_N);
    Int den = int_pow(a.get_den(), two_N);
    return num * p19n < den * p10n;
}

} // namespace

std::vector<Word> enumerate_Sn(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    std::vector<Word> out;
    for (int len = 0; len <= n; ++len) append_words_of_length(len, out);
    for (Word& w : out) w += "ba";
    return out;
}

std::vector<Word> enumerate_Sn_prime(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    int k = n / 2;
    std::vector<Word> out;
    for (int len = 0; len <= n; ++len) append_words_of_length(len, out, k);
    for (Word& w : out) w += "ba";
    return out;
}

Int count_Sn_prime(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + 1),
                 static_cast<unsigned long>(n / 2 + 1));
    return c;
}

bool check_growth(int n) {
    Int lhs = count_Sn_prime(n) * int_pow(Int(10), static_cast<unsigned long>(n));
    return lhs >= int_pow(Int(19), static_cast<unsigned long>(n));
}

std::optional<int> growth_threshold(int max_n) {
    std::optional<int> n0;
    for (int n = 0; n <= max_n; ++n) {
        if (check_growth(n)) {
            if (!n0) n0 = n;
        } else {
            n0.reset();
        }
    }
    return n0;
}

ParamReport validate_params(const SearchParams& p, const PLHomeo& f, const PLHomeo& g) {
    if (p.grid_N < 1 || p.n < 0) throw std::invalid_argument("bad grid_N or n");
    if (p.delta <= 0 || p.delta >= 1 || p.epsilon <= 0 || p.M <= 0 || p.theta <= 0)
        throw std::invalid_argument("bad scalar parameter");
    ParamReport rep;
    unsigned long N = static_cast<unsigned long>(p.grid_N);
    unsigned long n = static_cast<unsigned long>(p.n);

    // 1 < theta, theta^{8N} < 19/10
    rep.theta_in_range = p.theta > 1 && rat_pow(p.theta, 8 * N) < make_rat(19, 10);

    Rat lo = 1 - p.delta, hi(1);
    auto ratio_ok = [&](const PLHomeo& map) {
        auto [mn, mx] = slope_range(map, lo, hi);
        return rat_pow(mx / mn, 8) < p.theta;
    };
    rep.slope_ratio_f = ratio_ok(f);
    rep.slope_ratio_g = ratio_ok(g);
    rep.slope_ratio_f_inv = ratio_ok(f.inverse());
    rep.slope_ratio_g_inv = ratio_ok(g.inverse());

    auto displaced = [&](const PLHomeo& map) {
        if (map.evaluate(hi) < hi) return false;
        std::vector<Rat> candidates{lo};
        for (const Rat& x : map.breakpoints())
            if (x > lo && x < hi) candidates.push_back(x);
        for (const Rat& x : candidates)
            if (map.evaluate(x) <= x) return false;
        return true;
    };
    rep.displacement_f = displaced(f);
    rep.displacement_g = displaced(g);

    // M^{2m+4} theta^{4n} (10/19)^{n/(2N)} < eps,
    // i.e. (M^{2m+4} theta^{4n} / eps)^{2N} * 10^n < 19^n.
    long e = 2 * p.m + 4;
    if (e < 0) throw std::invalid_argument("m too negative");
    Rat lhs = rat_pow(p.M, static_cast<unsigned long>(e)) * rat_pow(p.theta, 4 * n) / p.epsilon;
    if (lhs <= 0) throw std::invalid_argument("degenerate condition (ii)");
    Rat lhs_pow = rat_pow(lhs, 2 * N);
    Int p10n = int_pow(Int(10), n), p19n = int_pow(Int(19), n);
    rep.condition_ii = lhs_pow.get_num() * p10n < lhs_pow.get_den() * p19n;
    return rep;
}

bool contraction_bound_holds(const PLHomeo& word_map, const Rat& a, const Rat& b,
                             const SearchParams& p) {
    if (a >= b) throw std::invalid_argument("empty interval");
    Rat len = word_map.evaluate(b) - word_map.evaluate(a);
    // |w(J)| < lambda^n theta^{n/8}  iff  |w(J)|^8 < lambda^{8n} theta^n
    unsigned long n = static_cast<unsigned long>(p.n);
    return rat_pow(len, 8) < rat_pow(p.lambda, 8 * n) * rat_pow(p.theta, n);
}

PLHomeo word_to_map(const Word& w, const PLHomeo& alpha, const PLHomeo& beta) {
    PLHomeo acc = PLHomeo::identity();
    for (char c : w) {
        switch (c) {
            case 'a': acc = compose(acc, alpha); break;
            case 'b': acc = compose(acc, beta); break;
            default: throw std::invalid_argument(std::string("bad letter: ") + c);
        }
    }
    return acc;
}

std::vector<std::vector<Rat>> grid_values(const std::vector<Word>& words, const PLHomeo& alpha,
                                          const PLHomeo& beta, const PLHomeo& W,
                                          const std::vector<Rat>& grid, bool parallel) {
    std::vector<std::vector<Rat>> values(words.size());
    long count = static_cast<long>(words.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
    for (long wi = 0; wi < count; ++wi) {
        const Word& w = words[static_cast<std::size_t>(wi)];
        std::vector<Rat> row;
        row.reserve(grid.size());
        for (const Rat& x : grid) {
            Rat v = W.evaluate(x);
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                v = (*it == 'a' ? alpha : beta).evaluate(v);
            row.push_back(std::move(v));
        }
        values[static_cast<std::size_t>(wi)] = std::move(row);
    }
    (void)parallel;
    return values;
}

CommutatorAudit commutator_membership_audit(const Word& w1, const Word& w2) {
    CommutatorAudit audit;
    auto c1 = abelianization(w1);
    auto c2 = abelianization(w2);
    for (auto& [letter, count] : c2) audit.vector[letter] += count;
    for (auto& [letter, count] : c1) audit.vector[letter] -= count;
    audit.certified = true;
    for (auto& [letter, count] : audit.vector)
        if (count != 0) audit.certified = false;
    return audit;
}

SearchResult pigeonhole_search(const PLHomeo& alpha, const PLHomeo& beta, const PLHomeo& W,
                               int n, const SearchParams& p, bool parallel) {
    if (p.grid_N < 2) throw std::invalid_argument("grid_N must be >= 2");
    std::vector<Word> words = enumerate_Sn_prime(n);
    std::vector<Rat> grid;
    for (long i = 1; i < p.grid_N; ++i) grid.push_back(make_rat(i, p.grid_N));

    SearchResult res;
    res.explored = words.size();
    auto values = grid_values(words, alpha, beta, W, grid, parallel);

    unsigned long two_N = 2 * static_cast<unsigned long>(p.grid_N);
    Int p19n = int_pow(Int(19), static_cast<unsigned long>(n));
    Int p10n = int_pow(Int(10), static_cast<unsigned long>(n));

    // Pass 1: the smallest grid distance among colliding pairs.
    std::optional<Rat> best_dist;
    std::optional<Rat> min_any;
    for (std::size_t j = 1; j < words.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Rat dist(0);
            bool collide = true;
            for (std::size_t gi = 0; gi < grid.size(); ++gi) {
                Rat d = abs(values[i][gi] - values[j][gi]);
                if (d > dist) dist = d;
                if (collide && !below_threshold(d, two_N, p19n, p10n)) collide = false;
            }
            if (!min_any || dist < *min_any) min_any = dist;
            if (collide && (!best_dist || dist < *best_dist)) best_dist = dist;
        }
    }

    if (!best_dist) {
        res.min_pair_distance = min_any;
        return res;
    }

    // Pass 2: among the pairs attaining that distance, minimize the exact C0
    // distance of h = (g1 W)^-1 (g2 W); ties fall to enumeration order.
    std::vector<std::optional<PLHomeo>> maps(words.size());
    auto map_of = [&](std::size_t i) -> const PLHomeo& {
        if (!maps[i]) maps[i] = compose(word_to_map(words[i], alpha, beta), W);
        return *maps[i];
    };
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::optional<Rat> best_c0;
    std::optional<PLHomeo> best_h;
    for (std::size_t j = 1; j < words.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Rat dist(0);
            for (std::size_t gi = 0; gi < grid.size(); ++gi) {
                Rat d = abs(values[i][gi] - values[j][gi]);
                if (d > dist) dist = d;
            }
            if (dist != *best_dist) continue;
            PLHomeo h = compose(map_of(i).inverse(), map_of(j));
            Rat c0 = c0_distance_to_identity(h, Rat(0), Rat(1));
            if (!best_c0 || c0 < *best_c0) {
                best_c0 = c0;
                best = {i, j};
                best_h = std::move(h);
            }
        }
    }

    res.found = true;
    res.w1 = words[best->first];
    res.w2 = words[best->second];
    res.grid_distance = *best_dist;
    res.h = *best_h;
    res.c0_distance = *best_c0;
    CommutatorAudit audit = commutator_membership_audit(res.w1, res.w2);
    res.commutator_certified = audit.certified;
    res.abelianization_vector = audit.vector;
    return res;
}

} // namespace ordlab
