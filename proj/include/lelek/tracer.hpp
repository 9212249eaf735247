#pragma once

#include <lelek/descending.hpp>
#include <lelek/reach.hpp>
#include <lelek/specification.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lelek {

/// Spacing failure carrying the horizon that would have been needed.
struct SpacingViolation : std::invalid_argument {
    unsigned required;
    SpacingViolation(unsigned n, long got)
        : std::invalid_argument("specification is not N-spaced: need gaps >= " + std::to_string(n) +
                                ", got " + std::to_string(got)),
          required(n) {}
};

struct TraceDistance {
    std::size_t segment;  // 0-based segment number
    long index;
    Rational distance;
};

struct TraceCertificate {
    Rational eps;
    std::vector<TraceDistance> distances;  // one entry per constrained index
};

struct TraceResult {
    TruncatedPoint y;
    TraceCertificate certificate;
    ReachWitness reach;
    std::vector<DescendingIntervalTrajectory> trajectories;
};

namespace detail {

/// Minimal-(m+n) pair with 3^m/2^n inside [lo, hi] and m+n <= budget, if any.
/// Per m at most two candidate n (the window spans less than a factor 2 in the
/// narrow case but may span more in general, so scan the short n range).
inline std::optional<std::pair<unsigned, unsigned>> three_smooth_in_closed(
    const Rational& lo, const Rational& hi, unsigned budget) {
    std::optional<std::pair<unsigned, unsigned>> best;
    mpz_class three_m(1);
    for (unsigned m = 0; m <= budget; ++m, three_m *= 3) {
        // smallest n with 3^m/2^n <= hi, i.e. 2^n >= 3^m/hi
        unsigned n = 0;
        mpz_class two_n(1);
        mpz_class target = three_m * hi.den();  // compare 2^n * hi.num against it
        while (two_n * hi.num() < target) {
            two_n <<= 1;
            ++n;
        }
        for (;; ++n, two_n <<= 1) {
            if (m + n > budget) break;
            if (three_m * lo.den() < two_n * lo.num()) break;  // value dropped below lo
            if (!best || m + n < best->first + best->second) best = {{m, n}};
            break;  // the smallest admissible n already minimizes m+n for this m
        }
        if (best && best->first + best->second <= m + 1) break;  // cannot improve further
    }
    return best;
}

}  // namespace detail

/// Constructive tracing: one orbit that stays within eps of every segment at
/// that segment's own indices. Segments are shadowed through descending
/// interval trajectories; the gaps are bridged by explicit contract-then-expand
/// orbits whose product lands in the required window; the prefix and suffix
/// ride the identity line.
inline TraceResult trace_specification(const SlopeSet& omega, const Specification& s,
                                       const Rational& eps) {
    if (!(Rational(0) < eps && eps <= Rational(1)))
        throw std::invalid_argument("trace_specification: need 0 < eps <= 1");
    if (!validate_slope_set(omega, SlopeProfile::trace_family).pass)
        throw std::invalid_argument("trace_specification: slope set fails trace-family validation");
    validate_specification(omega, s);

    const Rational delta = eps * eps / Rational(9);
    const Rational gamma = eps / Rational(18);
    ReachWitness reach = reach_horizon(omega, delta, gamma);
    if (s.segments.size() >= 2 && s.min_gap() < static_cast<long>(reach.horizon))
        throw SpacingViolation(reach.horizon, s.min_gap());

    std::vector<DescendingIntervalTrajectory> trajs;
    trajs.reserve(s.segments.size());
    for (const auto& seg : s.segments)
        trajs.push_back(descending_trajectory(omega, seg.values, eps));

    const long first_k = s.segments.front().k;
    const long last_l = s.segments.back().l;
    std::vector<Rational> y(static_cast<std::size_t>(last_l), Rational(0));  // index i at y[i-1]
    auto put = [&](long i, const Rational& v) { y[static_cast<std::size_t>(i - 1)] = v; };
    auto get = [&](long i) -> const Rational& { return y[static_cast<std::size_t>(i - 1)]; };

    // Back to front: exit value, in-segment back-propagation, then the bridge
    // into the previous segment's final interval.
    for (std::size_t j = s.segments.size(); j-- > 0;) {
        const auto& seg = s.segments[j];
        const auto& traj = trajs[j];
        if (j + 1 == s.segments.size()) {
            put(seg.l, traj.intervals.back().hi);
        }
        for (long i = seg.l - 1; i >= seg.k; --i) {
            const Rational& slope = traj.step_slope[static_cast<std::size_t>(i - seg.k)];
            put(i, get(i + 1) / slope);
        }
        if (j == 0) break;
        const auto& prev = s.segments[j - 1];
        const Interval& source = trajs[j - 1].intervals.back();
        const Rational t = get(seg.k);
        const long gap = seg.k - prev.l;
        auto hit = detail::three_smooth_in_closed(t / source.hi, t / source.lo,
                                                  static_cast<unsigned>(gap));
        if (!hit)
            throw std::logic_error(
                "trace_specification: bridge search exhausted; gap=" + std::to_string(gap) +
                " target=" + t.str() + " source=[" + source.lo.str() + "," + source.hi.str() +
                "] (contradicts the reach guarantee)");
        auto [m, n] = *hit;
        Rational z = t * pow2(static_cast<long>(n)) / pow_nonneg(Rational(3), m);
        // Order: halvings, identity padding, triplings. Every prefix stays in
        // (0, 1]: descents first, then flat, then a climb capped by t <= 1.
        put(prev.l, z);
        Rational v = z;
        long i = prev.l;
        for (unsigned tdown = 0; tdown < n; ++tdown) {
            v = v / Rational(2);
            put(++i, v);
        }
        for (long flat = 0; flat < gap - static_cast<long>(m + n); ++flat) put(++i, v);
        for (unsigned tup = 0; tup < m; ++tup) {
            v = v * Rational(3);
            put(++i, v);
        }
        if (!(i == seg.k && v == t))
            throw std::logic_error("trace_specification: bridge reassembly mismatch");
    }
    for (long i = 1; i < first_k; ++i) put(i, get(first_k));

    // Assemble the point with the identity tail at the last value.
    std::vector<int> word;
    word.reserve(y.size() - 1);
    int identity_letter = static_cast<int>(omega.index_of(Rational(1)) + 1);
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        if (y[i].is_zero()) {
            word.push_back(identity_letter);
            continue;
        }
        std::size_t idx = omega.index_of(y[i + 1] / y[i]);
        if (idx == SlopeSet::npos)
            throw std::logic_error("trace_specification: assembled orbit left the relation");
        word.push_back(static_cast<int>(idx + 1));
    }
    TruncatedPoint point = TruncatedPoint::one_sided(y, TailKind::constant, get(last_l), word);

    TraceCertificate cert;
    cert.eps = eps;
    for (std::size_t j = 0; j < s.segments.size(); ++j) {
        const auto& seg = s.segments[j];
        for (long i = seg.k; i <= seg.l; ++i) {
            Rational d = abs(seg.values[static_cast<std::size_t>(i - seg.k)] - get(i));
            if (d > eps)
                throw std::logic_error("trace_specification: certificate violation at index " +
                                       std::to_string(i));
            cert.distances.push_back({j, i, d});
        }
    }
    return {std::move(point), std::move(cert), std::move(reach), std::move(trajs)};
}

}  // namespace lelek
