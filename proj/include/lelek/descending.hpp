#pragma once

#include <lelek/interval_union.hpp>
#include <lelek/slope_set.hpp>

#include <stdexcept>
#include <vector>

namespace lelek {

/// Intervals nested forward under the relation: each [a_{i+1}, b_{i+1}] sits
/// inside the image of [a_i, b_i], witnessed by a single slope per step
/// (1 for the flat stretches).
struct DescendingIntervalTrajectory {
    std::vector<Interval> intervals;
    std::vector<Rational> step_slope;  // slope carrying interval i into i+1
};

namespace detail {

/// Core descent for trajectories starting at or above eps/3: keeps b_i = y_i
/// and pulls a_i up to max(ratio * a_prev, y_i - eps). Flattens after the last
/// index with y_i >= eps/3.
inline DescendingIntervalTrajectory descend_from(const std::vector<Rational>& y,
                                                 const Rational& eps, const Rational& a0) {
    DescendingIntervalTrajectory out;
    std::size_t p = y.size() - 1;
    std::size_t last_big = 0;
    for (std::size_t i = 0; i <= p; ++i)
        if (y[i] >= eps / Rational(3)) last_big = i;
    // last_big >= 0 is guaranteed by the caller (y[0] >= eps/3).
    out.intervals.emplace_back(a0, y[0]);
    for (std::size_t i = 1; i <= last_big; ++i) {
        Rational ratio = y[i] / y[i - 1];
        Rational a = max(ratio * out.intervals.back().lo, y[i] - eps);
        out.intervals.emplace_back(a, y[i]);
        out.step_slope.push_back(ratio);
    }
    for (std::size_t i = last_big + 1; i <= p; ++i) {
        out.intervals.push_back(out.intervals.back());
        out.step_slope.push_back(Rational(1));
    }
    return out;
}

}  // namespace detail

/// Descending interval trajectory around a finite trajectory (y_i), satisfying
/// the three guarantees: the start interval sits in [eps/9, 1], every interval
/// sits in the closed eps-ball of its y_i, and the final diameter is at least
/// eps^2/9. Dispatch: y_0 < eps goes through the flat [eps/9, eps] prefix;
/// otherwise the descent starts at a_0 = y_0 - 2eps/9.
inline DescendingIntervalTrajectory descending_trajectory(const SlopeSet& omega,
                                                          const std::vector<Rational>& y,
                                                          const Rational& eps) {
    if (y.empty()) throw std::invalid_argument("descending_trajectory: empty trajectory");
    if (!(Rational(0) < eps && eps <= Rational(1)))
        throw std::invalid_argument("descending_trajectory: need 0 < eps <= 1");
    if (!validate_slope_set(omega, SlopeProfile::trace_family).pass)
        throw std::invalid_argument("descending_trajectory: slope set fails trace-family validation");
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        bool ok = false;
        if (y[i].is_zero()) {
            ok = y[i + 1].is_zero();
        } else {
            for (const auto& s : omega.slopes) ok = ok || y[i + 1] == s * y[i];
        }
        if (!ok)
            throw std::invalid_argument("descending_trajectory: values do not form a trajectory");
    }
    if (!omega.contains(Rational(1)))
        throw std::invalid_argument("descending_trajectory: the identity line is required");

    const Rational eps9 = eps / Rational(9);
    const std::size_t p = y.size() - 1;

    if (y[0] >= eps) return detail::descend_from(y, eps, y[0] - Rational(2) * eps9);

    // y_0 < eps: flat prefix until the first index reaching eps, if any.
    std::size_t first_big = p + 1;
    for (std::size_t i = 0; i <= p; ++i)
        if (y[i] >= eps) {
            first_big = i;
            break;
        }
    if (first_big == p + 1) {
        // The whole trajectory stays below eps.
        DescendingIntervalTrajectory out;
        for (std::size_t i = 0; i <= p; ++i) {
            out.intervals.emplace_back(eps9, eps);
            if (i > 0) out.step_slope.push_back(Rational(1));
        }
        return out;
    }
    // y_{k-1} lands in [eps/3, eps); descend from there with a_0 = eps/9.
    std::size_t k = first_big;
    std::vector<Rational> suffix(y.begin() + static_cast<long>(k) - 1, y.end());
    DescendingIntervalTrajectory tail = detail::descend_from(suffix, eps, eps9);
    DescendingIntervalTrajectory out;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        out.intervals.emplace_back(eps9, y[k - 1]);
        if (i > 0) out.step_slope.push_back(Rational(1));
    }
    if (k >= 2) out.step_slope.push_back(Rational(1));
    out.intervals.insert(out.intervals.end(), tail.intervals.begin(), tail.intervals.end());
    out.step_slope.insert(out.step_slope.end(), tail.step_slope.begin(), tail.step_slope.end());
    return out;
}

}  // namespace lelek
