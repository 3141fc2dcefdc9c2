#include "ordlab/semigroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ordlab {

namespace {

void require_fixes_01(const PLHomeo& f, const char* name) {
    Rat zero(0), one(1);
    if (f.evaluate(zero) != 0 || f.evaluate(one) != 1)
        throw std::invalid_argument(std::string(name) + " must fix 0 and 1");
}

// Fixed set of f in [0,1] as sorted points {0, interior isolated..., 1};
// empty result means the census had pointwise-fixed intervals and the
// candidate-interval cut is not clean.
std::optional<std::vector<Rat>> fixed_cut_points(const PLHomeo& f) {
    FixedPointCensus census = fixed_point_census(f, Rat(0), Rat(1));
    if (!census.intervals.empty()) return std::nullopt;
    std::vector<Rat> pts;
    pts.emplace_back(0);
    for (const Rat& x : census.isolated) pts.push_back(x);
    pts.emplace_back(1);
    return pts;
}

std::optional<CrossedPairWitness> scan_role(const PLHomeo& fixer, const PLHomeo& mover,
                                            const std::string& label) {
    auto cuts = fixed_cut_points(fixer);
    if (!cuts) return std::nullopt;
    for (std::size_t i = 0; i + 1 < cuts->size(); ++i) {
        const Rat& a = (*cuts)[i];
        const Rat& b = (*cuts)[i + 1];
        for (const Rat& endpoint : {a, b}) {
            Rat image = mover.evaluate(endpoint);
            if (image > a && image < b) {
                CrossedPairWitness w{fixer, mover, a, b,
                                     label + " fixes (" + rat_str(a) + "," + rat_str(b) +
                                         "); other maps " + rat_str(endpoint) + " to " +
                                         rat_str(image)};
                return w;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<CrossedPairWitness> detect_crossed(const PLHomeo& f, const PLHomeo& g) {
    require_fixes_01(f, "f");
    require_fixes_01(g, "g");
    if (auto w = scan_role(f, g, "first map")) return w;
    return scan_role(g, f, "second map");
}

bool verify_crossed(const CrossedPairWitness& w) {
    if (!(w.a < w.b)) return false;
    if (w.fixer.evaluate(w.a) != w.a || w.fixer.evaluate(w.b) != w.b) return false;
    FixedPointCensus census = fixed_point_census(w.fixer, w.a, w.b);
    if (!census.isolated.empty() || !census.intervals.empty()) return false;
    for (const Rat& endpoint : {w.a, w.b}) {
        Rat image = w.mover.evaluate(endpoint);
        if (image > w.a && image < w.b) return true;
    }
    return false;
}

ConstructOutcome construct_crossed(const PLHomeo& f, const PLHomeo& g, long exponent_cap) {
    require_fixes_01(f, "f");
    require_fixes_01(g, "g");
    ConstructOutcome out;

    // Orient the roles: F has an interior fixed point that G moves.
    for (auto [F, G] : {std::pair{f, g}, std::pair{g, f}}) {
        FixedPointCensus fc = fixed_point_census(F, Rat(0), Rat(1));
        if (!fc.intervals.empty()) continue;
        std::optional<Rat> p;
        for (const Rat& x : fc.isolated) {
            if (G.evaluate(x) != x) {
                p = x;
                break;
            }
        }
        if (!p) continue;

        // G-fixed points bracketing p.
        auto gcuts = fixed_cut_points(G);
        if (!gcuts) continue;
        Rat a(0), b(1);
        for (const Rat& x : *gcuts) {
            if (x < *p && x > a) a = x;
            if (x > *p && x < b) b = x;
        }

        // Branch on whether F fixes both bracketing points. When it does not,
        // one of the direct pairs is crossed; otherwise conjugate.
        if (F.evaluate(a) != a || F.evaluate(b) != b) {
            if (auto w = detect_crossed(F, G)) {
                out.witness = w;
                out.note = "direct pair is crossed";
                return out;
            }
            if (auto w = detect_crossed(F.inverse(), G)) {
                out.witness = w;
                out.note = "pair with inverted first map is crossed";
                return out;
            }
            continue;
        }

        PLHomeo Gp = G.evaluate(*p) > *p ? G : G.inverse();  // Gp > id on (a, b)

        FixedPointCensus inner = fixed_point_census(F, a, b);
        if (!inner.intervals.empty() || inner.isolated.empty()) continue;
        Rat q_low = inner.isolated.front();
        Rat q_high = inner.isolated.back();

        PLHomeo Gn = PLHomeo::identity();
        PLHomeo Gn_inv = PLHomeo::identity();
        Rat pushed = q_low;
        for (long n = 1; n <= exponent_cap; ++n) {
            Gn = compose(Gp, Gn);
            Gn_inv = compose(Gn_inv, Gp.inverse());
            pushed = Gp.evaluate(pushed);
            if (pushed <= q_high) continue;
            for (const PLHomeo& core : {F, F.inverse()}) {
                PLHomeo conj = compose(Gn, compose(core, Gn_inv));
                if (auto w = detect_crossed(conj, F)) {
                    out.witness = w;
                    out.conjugation_exponent = n;
                    out.note = "conjugated pair crossed at exponent " + std::to_string(n);
                    return out;
                }
            }
        }
        out.note = "conjugation exponent cap " + std::to_string(exponent_cap) +
                   " exceeded without a verified witness";
        return out;
    }
    out.note = "no interior fixed point of one map is moved by the other";
    return out;
}

DistinctnessReport positive_word_distinctness(const PLHomeo& f, const PLHomeo& g, int max_len,
                                              std::size_t cap) {
    if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
    std::size_t total = (std::size_t{2} << max_len) - 2;  // 2^(L+1) - 2
    if (total > cap) throw std::length_error("word count exceeds cap");

    DistinctnessReport rep;
    rep.max_len = max_len;
    std::map<PLHomeo, Word> seen;

    // DFS with incremental composition: map(w + c) = map(w) o gen(c).
    struct Frame {
        Word word;
        PLHomeo map;
    };
    std::vector<Frame> stack;
    stack.push_back({"b", g});
    stack.push_back({"a", f});
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        ++rep.word_count;
        auto [it, inserted] = seen.emplace(fr.map, fr.word);
        if (!inserted && !rep.counterexample)
            rep.counterexample = {it->second, fr.word};
        if (fr.word.size() < static_cast<std::size_t>(max_len)) {
            stack.push_back({fr.word + "b", compose(fr.map, g)});
            stack.push_back({fr.word + "a", compose(fr.map, f)});
        }
    }
    rep.all_distinct = !rep.counterexample.has_value();
    return rep;
}

} // namespace ordlab
