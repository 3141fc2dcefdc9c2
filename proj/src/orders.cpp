#include "ordlab/orders.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace ordlab {

Ord compare_zk_lex(long t1, long s1, long t2, long s2, ZkLexVariant variant) {
    long a1 = t1, b1 = s1, a2 = t2, b2 = s2;
    if (variant == ZkLexVariant::SDominant) {
        std::swap(a1, b1);
        std::swap(a2, b2);
    }
    if (a1 != a2) return a1 < a2 ? Ord::Less : Ord::Greater;
    if (b1 != b2) return b1 < b2 ? Ord::Less : Ord::Greater;
    return Ord::Equal;
}

Ord compare_extension(const GroupElement& x, const GroupElement& y, ZkLexVariant variant) {
    Ord d = x.d.compare(y.d);
    if (d != Ord::Equal) return d;
    return compare_zk_lex(x.t, x.s, y.t, y.s, variant);
}

Ord compare_affine(const AffineMap& f, const AffineMap& g) {
    Ord at0 = rat_compare(f.b, g.b);
    if (at0 != Ord::Equal) return at0;
    return rat_compare(f.a + f.b, g.a + g.b);
}

Ord compare_germ(const PLHomeo& f, const PLHomeo& g) {
    if (f.evaluate(Rat(0)) != 0 || g.evaluate(Rat(0)) != 0)
        throw std::domain_error("germ order requires maps fixing 0");
    if (f == g) return Ord::Equal;

    // Sample at breakpoints and piece midpoints; the first point of
    // difference right of 0 decides (PL maps agree near 0+ only if they
    // agree up to their first differing breakpoint).
    std::set<Rat> cuts;
    for (const Rat& x : f.breakpoints()) cuts.insert(x);
    for (const Rat& x : g.breakpoints()) cuts.insert(x);

    auto scan = [&](bool rightward) -> Ord {
        std::vector<Rat> pts;
        Rat anchor(0);
        std::vector<Rat> side;
        for (const Rat& c : cuts) {
            if (rightward && c > 0) side.push_back(c);
            if (!rightward && c < 0) side.push_back(c);
        }
        std::sort(side.begin(), side.end());
        if (rightward) {
            Rat beyond = side.empty() ? Rat(1) : side.back() + 1;
            side.push_back(beyond);
        } else {
            std::reverse(side.begin(), side.end());
            Rat beyond = side.empty() ? Rat(-1) : side.back() - 1;
            side.push_back(beyond);
        }
        Rat prev = anchor;
        for (const Rat& c : side) {
            Rat mid = (prev + c) / 2;
            for (const Rat& x : {mid, c}) {
                Ord o = rat_compare(f.evaluate(x), g.evaluate(x));
                if (o != Ord::Equal) return o;
            }
            prev = c;
        }
        return Ord::Equal;
    };

    Ord right = scan(true);
    if (right != Ord::Equal) return right;
    return scan(false);
}

namespace {

using Rng = std::mt19937_64;

Rat random_rat(Rng& rng, int num_range, int den_range) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return make_rat(num(rng), den(rng));
}

Rat random_positive_rat(Rng& rng, int range) {
    std::uniform_int_distribution<int> d(1, range);
    return make_rat(d(rng), d(rng));
}

Dyadic random_dyadic(Rng& rng) {
    std::uniform_int_distribution<int> mant(-99, 99);
    std::uniform_int_distribution<int> expo(-6, 6);
    return Dyadic(Int(mant(rng)), expo(rng));
}

GroupElement random_element(Rng& rng) {
    std::uniform_int_distribution<int> v(-5, 5);
    return {v(rng), v(rng), random_dyadic(rng)};
}

AffineMap random_affine(Rng& rng) {
    return {random_positive_rat(rng, 8), random_rat(rng, 8, 8)};
}

// Random PL map of R fixing 0, with a few breakpoints on each side.
PLHomeo random_pl_fixing_zero(Rng& rng) {
    std::uniform_int_distribution<int> count(0, 2);
    std::vector<std::pair<Rat, Rat>> pts;
    pts.emplace_back(Rat(0), Rat(0));
    Rat x(0), y(0);
    int right = count(rng);
    for (int i = 0; i < right; ++i) {
        x += random_positive_rat(rng, 6);
        y += random_positive_rat(rng, 6);
        pts.emplace_back(x, y);
    }
    x = 0;
    y = 0;
    int left = count(rng);
    for (int i = 0; i < left; ++i) {
        x -= random_positive_rat(rng, 6);
        y -= random_positive_rat(rng, 6);
        pts.insert(pts.begin(), {x, y});
    }
    return PLHomeo(std::move(pts), random_positive_rat(rng, 4), random_positive_rat(rng, 4));
}

template <class Elem, class MulFn, class LessFn, class GenFn, class ShowFn>
AuditReport run_audit(const std::string& name, int samples, std::uint64_t seed, MulFn mul,
                      LessFn less, GenFn gen, ShowFn show, bool also_right_invariance) {
    AuditReport rep{name, samples, seed, {}};
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        Elem a = gen(rng), x = gen(rng), y = gen(rng);
        if (!less(x, y)) {
            if (!less(y, x)) continue;  // x == y
            std::swap(x, y);
        }
        if (!less(mul(a, x), mul(a, y)))
            rep.violations.push_back("left: a=" + show(a) + " x=" + show(x) + " y=" + show(y));
        if (also_right_invariance && !less(mul(x, a), mul(y, a)))
            rep.violations.push_back("right: a=" + show(a) + " x=" + show(x) + " y=" + show(y));
        if (rep.violations.size() >= 20) break;
    }
    return rep;
}

} // namespace

AuditReport audit_left_invariance(const std::string& order, int samples, std::uint64_t seed) {
    auto mul_elem = [](const GroupElement& a, const GroupElement& b) { return multiply(a, b); };
    auto show_elem = [](const GroupElement& g) { return element_str(g); };

    if (order == "extension" || order == "extension-st") {
        ZkLexVariant v = order == "extension" ? ZkLexVariant::TDominant : ZkLexVariant::SDominant;
        auto less = [v](const GroupElement& a, const GroupElement& b) {
            return compare_extension(a, b, v) == Ord::Less;
        };
        return run_audit<GroupElement>(order, samples, seed, mul_elem, less,
                                       [](Rng& r) { return random_element(r); }, show_elem, false);
    }
    if (order == "corrupted-abs") {
        // Deliberately broken: compares |d|, not left-invariant.
        auto less = [](const GroupElement& a, const GroupElement& b) {
            Dyadic da = a.d.mantissa() < 0 ? -a.d : a.d;
            Dyadic db = b.d.mantissa() < 0 ? -b.d : b.d;
            Ord o = da.compare(db);
            if (o != Ord::Equal) return o == Ord::Less;
            return compare_zk_lex(a.t, a.s, b.t, b.s) == Ord::Less;
        };
        return run_audit<GroupElement>(order, samples, seed, mul_elem, less,
                                       [](Rng& r) { return random_element(r); }, show_elem, false);
    }
    if (order == "dyadic-natural") {
        auto mul = [](const Dyadic& a, const Dyadic& b) { return a + b; };
        auto less = [](const Dyadic& a, const Dyadic& b) { return a.compare(b) == Ord::Less; };
        return run_audit<Dyadic>(order, samples, seed, mul, less,
                                 [](Rng& r) { return random_dyadic(r); },
                                 [](const Dyadic& d) { return d.str(); }, false);
    }
    if (order == "affine") {
        auto mul = [](const AffineMap& a, const AffineMap& b) { return compose(a, b); };
        auto less = [](const AffineMap& a, const AffineMap& b) {
            return compare_affine(a, b) == Ord::Less;
        };
        auto show = [](const AffineMap& f) { return rat_str(f.a) + "x+" + rat_str(f.b); };
        return run_audit<AffineMap>(order, samples, seed, mul, less,
                                    [](Rng& r) { return random_affine(r); }, show, false);
    }
    if (order == "germ") {
        auto mul = [](const PLHomeo& a, const PLHomeo& b) { return compose(a, b); };
        auto less = [](const PLHomeo& a, const PLHomeo& b) {
            return compare_germ(a, b) == Ord::Less;
        };
        auto show = [](const PLHomeo& f) {
            std::string s = "pl[";
            for (size_t i = 0; i < f.breakpoints().size(); ++i)
                s += rat_str(f.breakpoints()[i]) + "->" + rat_str(f.values()[i]) + " ";
            return s + "]";
        };
        return run_audit<PLHomeo>(order, samples, seed, mul, less,
                                  [](Rng& r) { return random_pl_fixing_zero(r); }, show, true);
    }
    throw std::invalid_argument("unknown order: " + order);
}

} // namespace ordlab
