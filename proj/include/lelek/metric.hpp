#pragma once

#include <lelek/point.hpp>

#include <limits>
#include <stdexcept>

namespace lelek {

/// Certified enclosure of the sup-metric value. lower == upper exactly when
/// both tails are resolved.
struct MetricBound {
    Rational lower, upper;
    bool exact() const { return lower == upper; }
};

namespace detail {

/// Streaming view of a point's coordinates beyond (and inside) its window.
/// advance_to(i) walks monotonically rightward.
class CoordStream {
public:
    CoordStream(const TruncatedPoint& p, const SlopeSet& omega) : p_(p) {
        wmin_ = omega.smallest();
        if (p.tail == TailKind::zero && wmin_ >= Rational(1) && !p.coords.back().is_zero())
            throw std::invalid_argument("metric: zero tail needs a contracting slope");
        cur_index_ = p.start - 1;
    }

    bool known_at(long i) const {
        if (p_.in_window(i)) return true;
        if (i > p_.end_index()) return p_.tail != TailKind::unknown;
        return p_.tail != TailKind::unknown;  // left of a two-sided window
    }

    /// Value at index i; requires known_at(i) and i nondecreasing across calls
    /// for indices right of the window.
    Rational value_at(long i) {
        if (p_.in_window(i)) return p_.at(i);
        if (i < p_.start) {
            switch (p_.tail) {
                case TailKind::constant: return p_.tail_value;
                case TailKind::zero:
                    if (!p_.coords.front().is_zero())
                        throw std::invalid_argument("metric: ill-formed left zero tail");
                    return Rational(0);
                case TailKind::unknown: break;
            }
            throw std::logic_error("metric: value_at on unknown tail");
        }
        switch (p_.tail) {
            case TailKind::constant: return p_.tail_value;
            case TailKind::zero: {
                if (cur_index_ < p_.end_index()) {
                    cur_index_ = p_.end_index();
                    cur_value_ = p_.coords.back();
                }
                while (cur_index_ < i) {
                    cur_value_ = cur_value_ * wmin_;
                    ++cur_index_;
                }
                if (cur_index_ != i) throw std::logic_error("metric: stream walked backwards");
                return cur_value_;
            }
            case TailKind::unknown: break;
        }
        throw std::logic_error("metric: value_at on unknown tail");
    }

    TailKind tail() const { return p_.tail; }
    const Rational& contraction() const { return wmin_; }

private:
    const TruncatedPoint& p_;
    Rational wmin_;
    long cur_index_ = 0;
    Rational cur_value_;
};

inline Rational weight_term(const Rational& diff, long i) {
    long a = i < 0 ? -i : i;
    return abs(diff) * pow2(-a);
}

/// Sup of |x_i - y_i| / 2^i over i > from, both points in resolved tail mode
/// beyond `from`, from >= 0. Exact. Tail values beyond the window are the
/// constant tail value, or the window edge decayed by the contraction factor.
inline Rational resolved_right_sup(const TruncatedPoint& x, const TruncatedPoint& y,
                                   CoordStream& sx, CoordStream& sy, long from,
                                   const Rational& seen_max) {
    if (x.tail == TailKind::constant && y.tail == TailKind::constant)
        return weight_term(x.tail_value - y.tail_value, from + 1);
    if (x.tail == TailKind::zero && y.tail == TailKind::zero) {
        // Same contraction factor: the difference decays geometrically, first term wins.
        Rational bx = sx.value_at(from), by = sy.value_at(from);
        return weight_term((bx - by) * sx.contraction(), from + 1);
    }
    // Mixed constant / zero: walk until the remaining envelope drops below the max.
    bool x_const = x.tail == TailKind::constant;
    Rational c = x_const ? x.tail_value : y.tail_value;
    Rational z = x_const ? sy.value_at(from) : sx.value_at(from);
    const Rational& w = x_const ? sy.contraction() : sx.contraction();
    Rational best = seen_max;
    long i = from;
    while (true) {
        ++i;
        z = z * w;
        best = max(best, weight_term(c - z, i));
        Rational envelope = weight_term(c + z * w, i + 1);
        if (envelope <= best) break;
    }
    return best;
}

}  // namespace detail

/// The sequence-space metric sup |x_i - y_i| / 2^(one-sided: i, two-sided: |i|),
/// over truncated knowledge. The bound is exact when both tails are resolved;
/// with unknown tails the enclosure widens by the weight of the first unknown
/// index.
inline MetricBound metric_D(const SlopeSet& omega, const TruncatedPoint& x, const TruncatedPoint& y) {
    if (x.two_sided() != y.two_sided())
        throw std::invalid_argument("metric_D: mismatched sidedness");
    if (x.coords.empty() || y.coords.empty())
        throw std::invalid_argument("metric_D: empty coordinate window");

    detail::CoordStream sx(x, omega), sy(y, omega);
    const long kInf = std::numeric_limits<long>::max() / 2;

    long whi = std::max(x.end_index(), y.end_index());
    long unknown_right = kInf;
    if (x.tail == TailKind::unknown) unknown_right = std::min(unknown_right, x.end_index() + 1);
    if (y.tail == TailKind::unknown) unknown_right = std::min(unknown_right, y.end_index() + 1);

    Rational lower(0);

    if (!x.two_sided()) {
        long walk_hi = std::min(whi, unknown_right - 1);
        for (long i = 1; i <= walk_hi; ++i)
            lower = max(lower, detail::weight_term(sx.value_at(i) - sy.value_at(i), i));
        if (unknown_right == kInf) {
            lower = max(lower, detail::resolved_right_sup(x, y, sx, sy, whi, lower));
            return {lower, lower};
        }
        Rational slack = pow2(-unknown_right);
        return {lower, max(lower, slack)};
    }

    long wlo = std::min(x.start, y.start);
    long unknown_left = -kInf;
    if (x.tail == TailKind::unknown) unknown_left = std::max(unknown_left, x.start - 1);
    if (y.tail == TailKind::unknown) unknown_left = std::max(unknown_left, y.start - 1);

    long right_anchor = std::max(whi, 0l);  // weights decrease strictly beyond
    long left_anchor = std::min(wlo, 0l);
    long walk_lo = std::max(left_anchor, unknown_left + 1);
    long walk_hi = std::min(right_anchor, unknown_right - 1);
    for (long i = walk_lo; i <= walk_hi; ++i)
        lower = max(lower, detail::weight_term(sx.value_at(i) - sy.value_at(i), i));

    Rational upper_extra(0);
    if (unknown_right == kInf) {
        // Two-sided resolved tails are constant-valued (zero tails are all-zero).
        Rational ax = x.tail == TailKind::constant ? x.tail_value : Rational(0);
        Rational ay = y.tail == TailKind::constant ? y.tail_value : Rational(0);
        lower = max(lower, detail::weight_term(ax - ay, right_anchor + 1));
    } else {
        upper_extra = max(upper_extra, pow2(-std::max(0l, unknown_right)));
    }
    if (unknown_left == -kInf) {
        Rational lx = x.tail == TailKind::constant ? x.tail_value : Rational(0);
        Rational ly = y.tail == TailKind::constant ? y.tail_value : Rational(0);
        lower = max(lower, detail::weight_term(lx - ly, left_anchor - 1));
    } else {
        upper_extra = max(upper_extra, pow2(-std::max(0l, -unknown_left)));
    }
    return {lower, max(lower, upper_extra)};
}

}  // namespace lelek
