#include "ordlab/affine.hpp"

namespace ordlab {

AffineMap affine_power(const AffineMap& f, long n) {
    if (n == 0) return {};
    Rat a = f.a, b = f.b;
    if (n < 0) {
        AffineMap inv = affine_inverse(f);
        a = inv.a;
        b = inv.b;
        n = -n;
    }
    Rat an;
    mpz_pow_ui(an.get_num_mpz_t(), a.get_num().get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(an.get_den_mpz_t(), a.get_den().get_mpz_t(), static_cast<unsigned long>(n));
    an.canonicalize();
    Rat offset = (a == 1) ? Rat(Rat(n) * b) : Rat(b * (an - 1) / (a - 1));
    return {an, offset};
}

OrbitBoundedness affine_orbit_bounded(const AffineMap& f, const Rat& x0) {
    if (f.a == 1) {
        if (f.b <= 0) return {true, x0 + f.b};  // non-increasing orbit
        return {false, std::nullopt};
    }
    Rat fix = f.b / (1 - f.a);
    if (f.a < 1) {
        // converges monotonically to fix
        Rat w = x0 > fix ? x0 : fix;
        return {true, w};
    }
    // a > 1: f(x) - x = (a-1)(x - fix)
    if (x0 <= fix) return {true, x0};  // orbit non-increasing
    return {false, std::nullopt};
}

namespace {

// f < g in the pointwise affine order.
bool aff_less(const AffineMap& f, const AffineMap& g) {
    if (f.b != g.b) return f.b < g.b;
    return f.a + f.b < g.a + g.b;
}

} // namespace

P1Verdict check_P1_affine(const AffineMap& g, const AffineMap& delta, long k, long M) {
    P1Verdict v;
    if (M < 1 || k < M) {
        v.note = "need k >= M >= 1";
        return v;
    }
    bool positive = g.b > 0 || (g.b == 0 && g.a > 1);
    if (!positive) {
        v.note = "(g^n) is not increasing: g is not a positive element";
        return v;
    }
    // (g^n) bounded above: contracting with positive offset, or pure dilation.
    bool bounded = (g.a < 1) || (g.a > 1 && g.b == 0);
    if (!bounded) {
        v.note = "(g^n) is unbounded: no push needed";
        return v;
    }

    if (g.a < 1) {
        Rat limit = g.b / (1 - g.a);  // sup of the offsets of g^n
        // delta g^k' > g^m for all k', m > M  iff  offset(delta g^{M+1}) >= limit
        AffineMap dgM1 = compose(delta, affine_power(g, M + 1));
        if (dgM1.b < limit) {
            v.note = "delta g^k > g^m fails for large m";
            return v;
        }
        v.hypotheses_hold = true;
        Rat c = compose(delta, affine_power(g, k)).b;
        if (c > limit) {
            v.branch = -1;
            v.note = "(g^-n delta g^k) is increasing and unbounded";
        } else {
            // c == limit: the minus branch increases only in the slope
            // coordinate and stays below any translation past the limit.
            v.branch = 0;
            v.note = "degenerate: offset of delta g^k equals the orbit limit";
        }
        return v;
    }

    // a > 1, b == 0 (pure dilation): hypothesis needs offset(delta) > 0.
    if (delta.b <= 0) {
        v.note = "delta g^k > g^m fails: delta has non-positive offset";
        return v;
    }
    v.hypotheses_hold = true;
    v.branch = +1;
    v.note = "(g^n delta g^k) is increasing and unbounded";
    return v;
}

AffineMap p1_sequence_element(const AffineMap& g, const AffineMap& delta, long k, int branch, long n) {
    return compose(affine_power(g, branch * n), compose(delta, affine_power(g, k)));
}

bool affine_pointwise_less(const AffineMap& f, const AffineMap& g) { return aff_less(f, g); }

} // namespace ordlab
