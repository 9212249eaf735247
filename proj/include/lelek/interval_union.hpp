#pragma once

#include <lelek/config.hpp>
#include <lelek/rational.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lelek {

/// Closed subinterval of [0,1]. Degenerate (lo == hi) is allowed.
struct Interval {
    Rational lo, hi;

    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }
    Rational diam() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Normalized finite union of disjoint closed rational subintervals of [0,1].
/// Parts are ascending and non-adjacent (touching parts are merged). May be empty.
class IntervalUnion {
public:
    IntervalUnion() = default;

    static IntervalUnion empty_set() { return IntervalUnion(); }

    static IntervalUnion of(const Rational& lo, const Rational& hi) {
        return from_intervals({Interval(lo, hi)});
    }

    static IntervalUnion from_intervals(std::vector<Interval> parts,
                                        std::size_t cap = caps().intervals) {
        for (const auto& p : parts)
            if (p.lo < Rational(0) || p.hi > Rational(1))
                throw std::invalid_argument("IntervalUnion: parts must lie in [0,1]");
        IntervalUnion u;
        u.parts_ = normalize(std::move(parts), cap);
        return u;
    }

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    bool contains(const Rational& x) const {
        auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                                   [](const Rational& v, const Interval& p) { return v < p.lo; });
        if (it == parts_.begin()) return false;
        return std::prev(it)->contains(x);
    }

    /// True iff the closed interval [lo,hi] is contained in one part.
    bool covers(const Interval& t) const {
        auto it = std::upper_bound(parts_.begin(), parts_.end(), t.lo,
                                   [](const Rational& v, const Interval& p) { return v < p.lo; });
        if (it == parts_.begin()) return false;
        return std::prev(it)->contains(t);
    }

    bool subset_of(const IntervalUnion& other) const {
        for (const auto& p : parts_)
            if (!other.covers(p)) return false;
        return true;
    }

    IntervalUnion unite(const IntervalUnion& other, std::size_t cap = caps().intervals) const {
        std::vector<Interval> all = parts_;
        all.insert(all.end(), other.parts_.begin(), other.parts_.end());
        IntervalUnion u;
        u.parts_ = normalize(std::move(all), cap);
        return u;
    }

    /// w*A intersected with [0,1]; w > 0. Preserves ordering, so no re-sort.
    IntervalUnion scale_clip(const Rational& w) const {
        if (w <= Rational(0)) throw std::invalid_argument("scale_clip: factor must be positive");
        IntervalUnion out;
        const Rational one(1);
        for (const auto& p : parts_) {
            Rational lo = p.lo * w;
            if (lo > one) break;  // parts ascend, everything later clips away
            Rational hi = p.hi * w;
            out.parts_.emplace_back(std::move(lo), min(hi, one));
        }
        return out;
    }

    friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
        return a.parts_ == b.parts_;
    }

private:
    static std::vector<Interval> normalize(std::vector<Interval> parts, std::size_t cap) {
        if (parts.empty()) return parts;
        std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
            return a.lo == b.lo ? a.hi < b.hi : a.lo < b.lo;
        });
        std::vector<Interval> out;
        out.reserve(parts.size());
        out.push_back(parts.front());
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (parts[i].lo <= out.back().hi) {
                if (out.back().hi < parts[i].hi) out.back().hi = parts[i].hi;
            } else {
                out.push_back(parts[i]);
            }
        }
        if (out.size() > cap)
            throw CapExceeded("IntervalUnion: " + std::to_string(out.size()) +
                              " components exceed cap " + std::to_string(cap) +
                              " (raise LELEK_MAX_INTERVALS or reduce n)");
        return out;
    }

    std::vector<Interval> parts_;
};

/// Exact Hausdorff distance d_H(A, [0,1]) for nonempty A contained in [0,1]:
/// the farthest any point of [0,1] sits from A. Interior gaps contribute half
/// their length, boundary gaps their full length.
inline Rational hausdorff_to_unit(const IntervalUnion& a) {
    if (a.empty()) throw std::invalid_argument("hausdorff_to_unit: distance to the empty set is undefined");
    const auto& parts = a.parts();
    Rational best = parts.front().lo;                 // gap [0, first)
    best = max(best, Rational(1) - parts.back().hi);  // gap (last, 1]
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        best = max(best, (parts[i + 1].lo - parts[i].hi) / Rational(2));
    return best;
}

}  // namespace lelek
