#pragma once

#include <lelek/metric.hpp>
#include <lelek/point.hpp>
#include <lelek/slope_set.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lelek {

struct PseudoOrbit {
    std::vector<TruncatedPoint> points;
    Rational delta;
};

enum class PseudoOrbitStatus { valid, invalid, undecidable };

struct PseudoOrbitCheck {
    PseudoOrbitStatus status = PseudoOrbitStatus::valid;
    std::size_t failing_step = 0;
    MetricBound bound{Rational(0), Rational(0)};
};

/// Definitional check: every consecutive distance D(shift(x_k), x_{k+1}) is
/// certified strictly below delta. Truncated knowledge can leave a step
/// undecidable (bound straddling delta); that is reported, never guessed.
inline PseudoOrbitCheck verify_pseudo_orbit(const SlopeSet& omega, const PseudoOrbit& po) {
    PseudoOrbitCheck out;
    if (po.points.size() < 2) return out;
    for (std::size_t k = 0; k + 1 < po.points.size(); ++k) {
        MetricBound b = metric_D(omega, shift(po.points[k], omega), po.points[k + 1]);
        if (b.upper < po.delta) continue;
        out.failing_step = k;
        out.bound = b;
        out.status = b.lower >= po.delta ? PseudoOrbitStatus::invalid
                                         : PseudoOrbitStatus::undecidable;
        return out;
    }
    return out;
}

/// The climbing staircase of constant sequences: 1/2, 1/2 + 1/(2n0), ..., 1,
/// then fixed at the top. Consecutive distances are exactly 1/(4n0), so the
/// default advertised delta 1/(2n0) validates strictly.
inline PseudoOrbit staircase_pseudo_orbit(unsigned n0) {
    if (n0 == 0) throw std::invalid_argument("staircase_pseudo_orbit: n0 must be >= 1");
    PseudoOrbit po;
    po.delta = Rational(1, 2 * static_cast<long>(n0));
    for (unsigned k = 0; k <= n0; ++k)
        po.points.push_back(TruncatedPoint::constant(
            Rational(1, 2) + Rational(static_cast<long>(k), 2 * static_cast<long>(n0))));
    for (unsigned k = 0; k < n0 + 4; ++k)
        po.points.push_back(TruncatedPoint::constant(Rational(1)));
    return po;
}

/// Pseudo-orbit of M-periodic loops climbing from `a` to 1, for a slope word
/// whose product is exactly 1. The word must be sorted ascending so that every
/// partial product stays at or below 1. Points are two-sided windows wide
/// enough to make the delta check decidable.
inline PseudoOrbit diagonal_pseudo_orbit(const SlopeSet& omega, const std::vector<int>& word,
                                         const Rational& a, const Rational& delta) {
    if (word.empty()) throw std::invalid_argument("diagonal_pseudo_orbit: empty word");
    if (!(Rational(0) < a && a < Rational(1)))
        throw std::invalid_argument("diagonal_pseudo_orbit: need 0 < a < 1");
    if (delta <= Rational(0)) throw std::invalid_argument("diagonal_pseudo_orbit: delta must be positive");
    const long m = static_cast<long>(word.size());
    Rational prod(1);
    Rational prev(0);
    bool first = true;
    for (int letter : word) {
        if (letter < 1 || static_cast<std::size_t>(letter) > omega.size())
            throw std::invalid_argument("diagonal_pseudo_orbit: slope index out of range");
        const Rational& s = omega[static_cast<std::size_t>(letter - 1)];
        if (!first && s < prev)
            throw std::invalid_argument("diagonal_pseudo_orbit: word must be sorted ascending");
        prev = s;
        first = false;
        prod *= s;
    }
    if (!prod.is_one())
        throw std::invalid_argument("diagonal_pseudo_orbit: slope product is " + prod.str() +
                                    ", not 1");

    // Climb a = z_0 < z_1 < ... < z_kc = 1 with steps strictly below delta.
    Rational span = Rational(1) - a;
    long kc = 1;
    while (!(span / Rational(kc) < delta)) ++kc;
    std::vector<Rational> z;
    for (long t = 0; t <= kc; ++t) z.push_back(a + span * Rational(t) / Rational(kc));

    // Loop values: hat z^t_n = (partial product up to n) * z_t, n mod M.
    std::vector<Rational> partial{Rational(1)};
    for (int letter : word)
        partial.push_back(partial.back() * omega[static_cast<std::size_t>(letter - 1)]);
    // partial[M] == 1; drop it so indexing is by n mod M.
    partial.pop_back();

    const long w = m + static_cast<long>(ceil_log2_inverse(delta)) + 1;
    auto loop_point = [&](long t, long phase) {
        std::vector<Rational> cs;
        std::vector<int> ws;
        for (long i = -w; i <= w; ++i) {
            long r = (i + phase) % m;
            if (r < 0) r += m;
            cs.push_back(partial[static_cast<std::size_t>(r)] * z[static_cast<std::size_t>(t)]);
            if (i < w) {
                long rr = r + 1 == m ? 0 : r + 1;
                (void)rr;
                ws.push_back(word[static_cast<std::size_t>(r)]);
            }
        }
        return TruncatedPoint::two_sided_window(-w, std::move(cs), TailKind::unknown, Rational(0),
                                                std::move(ws));
    };

    PseudoOrbit po;
    po.delta = delta;
    for (long t = 0; t <= kc; ++t)
        for (long phase = 0; phase < m; ++phase) {
            if (t == kc && phase > 0) break;
            po.points.push_back(loop_point(t, phase));
        }
    // A few shifts of the top loop so a climb-covering horizon has successors.
    for (long phase = 1; phase <= m + 2; ++phase)
        po.points.push_back(loop_point(kc, phase % m));
    return po;
}

}  // namespace lelek
