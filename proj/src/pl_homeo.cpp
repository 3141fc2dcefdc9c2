#include "ordlab/pl_homeo.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ordlab {

PLHomeo::PLHomeo(std::vector<std::pair<Rat, Rat>> points, Rat left_tail, Rat right_tail)
    : ltail_(std::move(left_tail)), rtail_(std::move(right_tail)) {
    xs_.reserve(points.size());
    ys_.reserve(points.size());
    for (auto& [x, y] : points) {
        xs_.push_back(std::move(x));
        ys_.push_back(std::move(y));
    }
    canonicalize();
}

PLHomeo PLHomeo::affine(const Rat& slope, const Rat& offset) {
    if (slope <= 0) throw std::invalid_argument("affine map must have positive slope");
    if (slope == 1 && offset == 0) return identity();
    return PLHomeo({{Rat(0), offset}}, slope, slope);
}

void PLHomeo::canonicalize() {
    if (ltail_ <= 0 || rtail_ <= 0) throw std::invalid_argument("tail slopes must be positive");
    size_t n = xs_.size();
    if (n == 0) {
        if (ltail_ != 1 || rtail_ != 1)
            throw std::invalid_argument("breakpoint-free map must be the identity");
        return;
    }
    for (size_t i = 0; i + 1 < n; ++i) {
        if (xs_[i] >= xs_[i + 1]) throw std::invalid_argument("breakpoints must strictly increase");
        if (ys_[i] >= ys_[i + 1]) throw std::invalid_argument("values must strictly increase");
    }

    // Extended slope sequence: tail, per-segment slopes, tail. Point i stays
    // only if the slopes on its two sides differ.
    std::vector<Rat> slopes;
    slopes.reserve(n + 1);
    slopes.push_back(ltail_);
    for (size_t i = 0; i + 1 < n; ++i)
        slopes.push_back((ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]));
    slopes.push_back(rtail_);

    std::vector<Rat> kx, ky;
    for (size_t i = 0; i < n; ++i) {
        if (slopes[i] != slopes[i + 1]) {
            kx.push_back(xs_[i]);
            ky.push_back(ys_[i]);
        }
    }
    if (kx.empty()) {
        // Globally affine: anchor at 0; identity becomes breakpoint-free.
        Rat slope = ltail_;
        Rat offset = ys_[0] - slope * xs_[0];
        xs_.clear();
        ys_.clear();
        if (slope == 1 && offset == 0) {
            ltail_ = rtail_ = 1;
        } else {
            xs_.push_back(Rat(0));
            ys_.push_back(offset);
            ltail_ = rtail_ = slope;
        }
        return;
    }
    xs_ = std::move(kx);
    ys_ = std::move(ky);
}

Rat PLHomeo::evaluate(const Rat& x) const {
    if (xs_.empty()) return x;
    if (x <= xs_.front()) return ys_.front() + ltail_ * (x - xs_.front());
    if (x >= xs_.back()) return ys_.back() + rtail_ * (x - xs_.back());
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    size_t i = static_cast<size_t>(it - xs_.begin()) - 1;
    Rat slope = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    return ys_[i] + slope * (x - xs_[i]);
}

Rat PLHomeo::evaluate_inverse(const Rat& y) const {
    if (xs_.empty()) return y;
    if (y <= ys_.front()) return xs_.front() + (y - ys_.front()) / ltail_;
    if (y >= ys_.back()) return xs_.back() + (y - ys_.back()) / rtail_;
    auto it = std::upper_bound(ys_.begin(), ys_.end(), y);
    size_t i = static_cast<size_t>(it - ys_.begin()) - 1;
    Rat slope = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    return xs_[i] + (y - ys_[i]) / slope;
}

PLHomeo PLHomeo::inverse() const {
    if (xs_.empty()) return identity();
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(xs_.size());
    for (size_t i = 0; i < xs_.size(); ++i) pts.emplace_back(ys_[i], xs_[i]);
    return PLHomeo(std::move(pts), 1 / ltail_, 1 / rtail_);
}

Rat PLHomeo::slope_right_of(const Rat& x) const {
    if (xs_.empty()) return Rat(1);
    if (x < xs_.front()) return ltail_;
    if (x >= xs_.back()) return rtail_;
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    size_t i = static_cast<size_t>(it - xs_.begin()) - 1;
    return (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
}

bool PLHomeo::operator<(const PLHomeo& o) const {
    if (xs_.size() != o.xs_.size()) return xs_.size() < o.xs_.size();
    for (size_t i = 0; i < xs_.size(); ++i) {
        int c = cmp(xs_[i], o.xs_[i]);
        if (c != 0) return c < 0;
        c = cmp(ys_[i], o.ys_[i]);
        if (c != 0) return c < 0;
    }
    int c = cmp(ltail_, o.ltail_);
    if (c != 0) return c < 0;
    return cmp(rtail_, o.rtail_) < 0;
}

PLHomeo compose(const PLHomeo& f, const PLHomeo& g) {
    if (f.is_identity()) return g;
    if (g.is_identity()) return f;
    std::set<Rat> candidates(g.breakpoints().begin(), g.breakpoints().end());
    for (const Rat& bx : f.breakpoints()) candidates.insert(g.evaluate_inverse(bx));
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(candidates.size());
    for (const Rat& x : candidates) pts.emplace_back(x, f.evaluate(g.evaluate(x)));
    return PLHomeo(std::move(pts), f.left_tail_slope() * g.left_tail_slope(),
                   f.right_tail_slope() * g.right_tail_slope());
}

Rat c0_distance_to_identity(const PLHomeo& f, const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::invalid_argument("empty domain");
    Rat best = abs(f.evaluate(lo) - lo);
    Rat at_hi = abs(f.evaluate(hi) - hi);
    if (at_hi > best) best = at_hi;
    for (const Rat& x : f.breakpoints()) {
        if (x <= lo || x >= hi) continue;
        Rat d = abs(f.evaluate(x) - x);
        if (d > best) best = d;
    }
    return best;
}

long FixedPointCensus::count_in(const Rat& a, const Rat& b) const {
    long n = 0;
    for (const Rat& x : isolated)
        if (x > a && x < b) ++n;
    return n;
}

FixedPointCensus fixed_point_census(const PLHomeo& f, const Rat& lo, const Rat& hi) {
    FixedPointCensus census;
    if (lo >= hi) return census;
    if (f.is_identity()) {
        census.intervals.emplace_back(lo, hi);
        return census;
    }

    std::vector<Rat> bounds;
    bounds.push_back(lo);
    for (const Rat& x : f.breakpoints())
        if (x > lo && x < hi) bounds.push_back(x);
    bounds.push_back(hi);

    std::set<Rat> isolated;
    std::vector<std::pair<Rat, Rat>> fixed;
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
        const Rat& u = bounds[i];
        const Rat& v = bounds[i + 1];
        Rat s = f.slope_right_of(u);
        Rat yu = f.evaluate(u);
        if (s == 1) {
            if (yu == u) fixed.emplace_back(u, v);
            continue;
        }
        Rat root = (yu - s * u) / (1 - s);
        if (root >= u && root <= v && root > lo && root < hi) isolated.insert(root);
    }

    // Merge touching fixed segments.
    for (auto& seg : fixed) {
        if (!census.intervals.empty() && census.intervals.back().second == seg.first)
            census.intervals.back().second = seg.second;
        else
            census.intervals.push_back(seg);
    }
    for (const Rat& x : isolated) {
        bool in_interval = false;
        for (auto& [a, b] : census.intervals)
            if (x >= a && x <= b) { in_interval = true; break; }
        if (!in_interval) census.isolated.push_back(x);
    }
    return census;
}

std::pair<Rat, Rat> slope_range(const PLHomeo& f, const Rat& a, const Rat& b) {
    if (a > b) throw std::invalid_argument("bad interval");
    const auto& xs = f.breakpoints();
    if (xs.empty()) return {Rat(1), Rat(1)};

    std::vector<Rat> hit;
    auto overlaps = [&](bool linf, const Rat& l, bool rinf, const Rat& r) {
        if (a == b) return (linf || l <= a) && (rinf || a <= r);
        Rat lo = (linf || a > l) ? a : l;
        Rat hi = (rinf || b < r) ? b : r;
        return lo < hi;
    };
    Rat zero(0);
    if (overlaps(true, zero, false, xs.front())) hit.push_back(f.left_tail_slope());
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (overlaps(false, xs[i], false, xs[i + 1]))
            hit.push_back((f.values()[i + 1] - f.values()[i]) / (xs[i + 1] - xs[i]));
    if (overlaps(false, xs.back(), true, zero)) hit.push_back(f.right_tail_slope());

    auto [mn, mx] = std::minmax_element(hit.begin(), hit.end());
    return {*mn, *mx};
}

} // namespace ordlab
