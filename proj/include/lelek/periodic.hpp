#pragma once

#include <lelek/metric.hpp>
#include <lelek/point.hpp>

#include <stdexcept>
#include <vector>

namespace lelek {

struct PeriodicResult {
    TruncatedPoint z;
    unsigned period;       // verified period of the built point
    unsigned block_len;    // 4N, the raw concatenation period
    MetricBound distance;  // certified D(z, p)
};

/// Periodic point near a two-sided point, built by alternating the window block
/// with its reversal. Needs the slope set closed under reciprocals so that
/// reversed pairs stay in the relation. N is minimal with 2^-(N+1) < eps; the
/// input window must cover [-N, N].
inline PeriodicResult periodic_approximant(const SlopeSet& omega, const TruncatedPoint& p,
                                           const Rational& eps) {
    if (eps <= Rational(0)) throw std::invalid_argument("periodic_approximant: eps must be positive");
    if (!p.two_sided()) throw std::invalid_argument("periodic_approximant: two-sided points only");
    if (!omega.reciprocal_closed())
        throw std::invalid_argument("periodic_approximant: slope set is not closed under reciprocals");
    auto chk = validate_point(omega, p);
    if (!chk.ok) throw std::invalid_argument("periodic_approximant: invalid point: " + chk.reason);

    long n = static_cast<long>(ceil_log2_inverse(eps));  // 2^-n < eps
    if (n < 1) n = 1;
    // 2^-(N+1) < eps with N minimal, i.e. N = n - 1 unless that drops below 1.
    long N = std::max(1l, n - 1);
    if (p.start > -N || p.end_index() < N)
        throw std::invalid_argument("periodic_approximant: window must cover [-" +
                                    std::to_string(N) + ", " + std::to_string(N) + "]");

    // Block y = x_{-N}..x_{N-1}, then its reversal x_N..x_{-(N-1)}.
    const long two_n = 2 * N;
    std::vector<Rational> block;
    block.reserve(static_cast<std::size_t>(2 * two_n));
    for (long i = -N; i <= N - 1; ++i) block.push_back(p.at(i));
    for (long i = N; i >= -(N - 1); --i) block.push_back(p.at(i));
    const long L = static_cast<long>(block.size());  // 4N

    // Minimal period divides the construction period.
    unsigned period = static_cast<unsigned>(L);
    for (long d = 1; d <= L; ++d) {
        if (L % d != 0) continue;
        bool ok = true;
        for (long i = 0; i < L && ok; ++i) ok = block[static_cast<std::size_t>(i)] ==
                                                block[static_cast<std::size_t>((i + d) % L)];
        if (ok) {
            period = static_cast<unsigned>(d);
            break;
        }
    }

    // Materialize a window wide enough to cover p's window plus full periods.
    long reach = std::max(std::max(-p.start, p.end_index()), 2 * L) + L;
    auto block_at = [&](long i) -> const Rational& {
        long r = (i + N) % L;
        if (r < 0) r += L;
        return block[static_cast<std::size_t>(r)];
    };
    std::vector<Rational> cs;
    std::vector<int> w;
    cs.reserve(static_cast<std::size_t>(2 * reach + 1));
    for (long i = -reach; i <= reach; ++i) {
        cs.push_back(block_at(i));
        if (i < reach) {
            const Rational &a = block_at(i), &b = block_at(i + 1);
            std::size_t idx;
            if (a.is_zero()) {
                idx = 0;  // any line continues the zero point
            } else {
                idx = omega.index_of(b / a);
                if (idx == SlopeSet::npos)
                    throw std::logic_error("periodic_approximant: block pair left the relation");
            }
            w.push_back(static_cast<int>(idx + 1));
        }
    }
    TruncatedPoint z = TruncatedPoint::two_sided_window(-reach, std::move(cs), TailKind::unknown,
                                                        Rational(0), std::move(w));

    // Verify the period on the stored window: shifting by `period` relabels, so
    // compare coordinates directly.
    for (long i = -reach; i + static_cast<long>(period) <= reach; ++i)
        if (!(z.at(i) == z.at(i + static_cast<long>(period))))
            throw std::logic_error("periodic_approximant: period verification failed");

    MetricBound d = metric_D(omega, z, p);
    if (!(d.upper < eps))
        throw std::logic_error("periodic_approximant: distance certificate failed, bound " +
                               d.upper.str());
    return {std::move(z), period, static_cast<unsigned>(L), std::move(d)};
}

}  // namespace lelek
