#pragma once

#include "ordlab/scalars.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ordlab {

// Orientation-preserving affine map x -> a*x + b, a > 0.
struct AffineMap {
    Rat a{1};
    Rat b{0};

    Rat operator()(const Rat& x) const { return a * x + b; }
    bool is_identity() const { return a == 1 && b == 0; }
    bool operator==(const AffineMap& o) const { return a == o.a && b == o.b; }
};

inline AffineMap compose(const AffineMap& f, const AffineMap& g) {
    return {f.a * g.a, f.a * g.b + f.b};
}

inline AffineMap affine_inverse(const AffineMap& f) { return {1 / f.a, -f.b / f.a}; }

// Exact f^n for any integer n: slope a^n, offset b*(a^n-1)/(a-1) (n*b if a=1).
AffineMap affine_power(const AffineMap& f, long n);

struct OrbitBoundedness {
    bool bounded_above;
    std::optional<Rat> witness;  // f^n(x0) <= witness for all n >= 1
};

// Decides boundedness above of the orbit (f^n(x0))_{n>=1} in closed form.
OrbitBoundedness affine_orbit_bounded(const AffineMap& f, const Rat& x0);

struct P1Verdict {
    bool hypotheses_hold = false;
    std::string note;
    // +1: (g^n d g^k) is increasing and unbounded; -1: same for (g^-n d g^k);
    // 0: neither (only possible in the degenerate tie case, see note).
    int branch = 0;
};

// Instance-level check of the one-push property for Aff_+(R) with the
// pointwise order "f < g iff f(0) < g(0), or f(0) = g(0) and f(1) < g(1)".
// Hypotheses checked exactly: (g^n) increasing and bounded; delta*g^k > g^m
// for all k, m > M. No horizon needed: everything is closed-form.
P1Verdict check_P1_affine(const AffineMap& g, const AffineMap& delta, long k, long M);

// n-th element of the branch sequence g^{branch*n} . delta . g^k.
AffineMap p1_sequence_element(const AffineMap& g, const AffineMap& delta, long k, int branch, long n);

// f < g in the pointwise order "f(0) < g(0), or f(0) = g(0) and f(1) < g(1)".
bool affine_pointwise_less(const AffineMap& f, const AffineMap& g);

// Finite-horizon (P_N) instance check, generic over an exactly ordered group.
struct PNInstance {
    std::vector<long> signs;      // eps_1 .. eps_{N-1}
    std::vector<long> exponents;  // k_1 .. k_{N-1}
    long M = 1;
    long horizon = 64;
};

struct PNOutcome {
    // For i = 1..N-1, whether sequence i stayed below some candidate bound
    // over the whole horizon (condition (i) evidence).
    std::vector<bool> prefix_bounded;
    bool unbounded = false;  // conclusion witnessed within the horizon
    int eps_N = 0;
    long witness_n = 0;
    bool semi_decision = true;  // bounded-at-horizon is never a proof
};

// Elem must support mul(a,b), inv(a), and less(a,b) exactly. "Unbounded" means
// the sequence exceeds every element of `candidates` at some n <= horizon.
template <class Elem, class Mul, class Inv, class Less>
PNOutcome check_pn_horizon(const Elem& g, const std::vector<Elem>& deltas,
                           const PNInstance& inst, const std::vector<Elem>& candidates,
                           Mul mul, Inv inv, Less less) {
    size_t n_delta = deltas.size();
    if (inst.signs.size() != n_delta || inst.exponents.size() != n_delta)
        throw std::invalid_argument("signs/exponents must match delta count");
    if (inst.horizon < 1 || inst.M < 1 || inst.horizon < inst.M)
        throw std::invalid_argument("need horizon >= M >= 1");

    auto power = [&](const Elem& x, long n) {
        Elem acc = x;  // n != 0 below
        Elem base = n > 0 ? x : inv(x);
        long cnt = n > 0 ? n : -n;
        acc = base;
        for (long i = 1; i < cnt; ++i) acc = mul(acc, base);
        return acc;
    };

    PNOutcome out;
    // Tail product delta_i g^{e_i k_i} ... delta_1 g^{e_1 k_1}, built up per level.
    std::optional<Elem> tail;  // empty = identity (level 0)
    auto run_level = [&](long eps, long level) -> bool {
        // true iff the sequence g^{eps n} * tail exceeds every candidate.
        std::vector<bool> beaten(candidates.size(), false);
        size_t beaten_count = 0;
        Elem gp = eps > 0 ? g : inv(g);
        std::optional<Elem> cur;
        for (long n = 1; n <= inst.horizon; ++n) {
            cur = cur ? mul(*cur, gp) : gp;  // g^{eps n} (powers commute)
            Elem value = tail ? mul(*cur, *tail) : *cur;
            for (size_t c = 0; c < candidates.size(); ++c) {
                if (!beaten[c] && less(candidates[c], value)) {
                    beaten[c] = true;
                    ++beaten_count;
                }
            }
            if (beaten_count == candidates.size()) {
                out.witness_n = n;
                return true;
            }
        }
        (void)level;
        return false;
    };

    for (size_t i = 0; i < n_delta; ++i) {
        bool exceeded = run_level(inst.signs[i], static_cast<long>(i + 1));
        out.prefix_bounded.push_back(!exceeded);
        Elem gk = power(g, inst.signs[i] * inst.exponents[i]);
        Elem step = mul(deltas[i], gk);
        tail = tail ? mul(step, *tail) : step;
    }
    for (int eps : {+1, -1}) {
        if (run_level(eps, static_cast<long>(n_delta + 1))) {
            out.unbounded = true;
            out.eps_N = eps;
            out.semi_decision = false;  // unboundedness against the candidate set is witnessed
            return out;
        }
    }
    out.unbounded = false;
    out.semi_decision = true;
    return out;
}

} // namespace ordlab
