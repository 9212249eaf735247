#pragma once

#include <lelek/config.hpp>
#include <lelek/interval_union.hpp>
#include <lelek/relation.hpp>
#include <lelek/slope_set.hpp>

#include <algorithm>
#include <vector>

namespace lelek {

/// One grid block's expansion witness: 3^p/2^q maps the block [i0/k, (i0+1)/k]
/// over the top of the interval, i.e. 3^p/2^q * i0/k < 1 < 3^p/2^q * (i0+1)/k.
struct BlockWitness {
    unsigned block_index;
    unsigned p, q;
    Rational a_delta;  // 3^p/2^q * i0/k, the guaranteed covered left end
};

/// One descent step: [l*c, 1] is reachable from [l, 1] in m+n moves, c = 3^m/2^n in [l, 1).
struct ChainStep {
    unsigned m, n;
    Rational c;
    Rational lower;  // left end after this step
};

struct ReachWitness {
    Rational delta, gamma;
    unsigned k = 0;  // grid count, 1/k < delta/2
    std::vector<BlockWitness> blocks;
    Rational a_star;  // worst (largest) covered-left-end over all blocks
    std::vector<ChainStep> chain;
    unsigned block_steps = 0;  // max p+q over blocks
    unsigned chain_steps = 0;  // sum of m+n over the chain
    unsigned horizon = 0;      // block_steps + chain_steps
};

namespace detail {

/// Smallest p such that some q puts 3^p/2^q inside (lo, hi]; returns (p, q).
/// p+q is then minimal as well, since admissible q grows like p*log2(3).
inline std::pair<unsigned, unsigned> three_smooth_in(const Rational& lo, const Rational& hi) {
    if (!(Rational(0) < lo && lo < hi))
        throw std::invalid_argument("three_smooth_in: empty window");
    unsigned long long budget = caps().witness_search;
    mpz_class three_p(1);
    for (unsigned p = 0;; ++p) {
        // Need 3^p / hi <= 2^q < 3^p / lo, i.e. 2^q in [3^p*hd/hn, 3^p*ld/ln).
        mpz_class lo_num = three_p * hi.den();   // against hi: 2^q * hi >= 3^p
        mpz_class hi_num = three_p * lo.den();   // against lo: 2^q * lo < 3^p
        // Smallest q with 2^q * hi.num >= lo_num:
        mpz_class t = (lo_num + hi.num() - 1) / hi.num();
        unsigned q = 0;
        mpz_class two_q(1);
        while (two_q < t) {
            two_q <<= 1;
            ++q;
        }
        if (two_q * lo.num() < hi_num) return {p, q};
        if (budget-- == 0) throw CapExceeded("three_smooth_in: witness search budget exhausted");
        three_p *= 3;
    }
}

}  // namespace detail

/// Uniform horizon N such that every interval [a,b] in (0,1] with b-a > delta
/// reaches [gamma,1] under the three-line relation within n steps, for every
/// n >= N. Constructive: per-block expansion witnesses followed by a single
/// descent chain below gamma. Requires a slope set containing 3, 1, 1/2.
inline ReachWitness reach_horizon(const SlopeSet& omega, const Rational& delta,
                                  const Rational& gamma) {
    if (!(Rational(0) < delta && delta < Rational(1)) ||
        !(Rational(0) < gamma && gamma < Rational(1)))
        throw std::invalid_argument("reach_horizon: delta and gamma must lie in (0,1)");
    auto rep = validate_slope_set(omega, SlopeProfile::trace_family);
    if (!rep.pass)
        throw std::invalid_argument("reach_horizon: slope set fails trace-family validation");

    ReachWitness w;
    w.delta = delta;
    w.gamma = gamma;

    // Smallest k with 1/k < delta/2, i.e. floor(2/delta) + 1. Then any
    // admissible [a,b] fully contains a block [i0/k, (i0+1)/k] with
    // 1 <= i0 <= k-2.
    {
        Rational bound = Rational(2) / delta;
        mpz_class kfloor = bound.num() / bound.den();
        if (!kfloor.fits_uint_p())
            throw std::invalid_argument("reach_horizon: delta too small for a sane grid");
        w.k = static_cast<unsigned>(kfloor.get_ui()) + 1;
    }

    Rational a_star(0);
    for (unsigned i0 = 1; i0 + 1 < w.k; ++i0) {
        Rational lo = Rational(static_cast<long>(w.k)) / Rational(static_cast<long>(i0 + 1));
        Rational hi = Rational(static_cast<long>(w.k)) / Rational(static_cast<long>(i0));
        // Cap at the window midpoint: keeps the covered left end away from 1,
        // which keeps the descent chain short.
        Rational mid = (lo + hi) / Rational(2);
        auto [p, q] = detail::three_smooth_in(lo, mid);
        Rational v = pow_nonneg(Rational(3), p) / pow2(static_cast<long>(q));
        Rational a_delta = v * Rational(static_cast<long>(i0)) / Rational(static_cast<long>(w.k));
        w.blocks.push_back({i0, p, q, a_delta});
        w.block_steps = std::max(w.block_steps, p + q);
        a_star = max(a_star, a_delta);
    }
    w.a_star = a_star;

    // Greedy descent: from [l, 1], one factor c = 3^m/2^n in [l, 1) extends the
    // reach to [l*c, 1] in m+n moves. Repeated until the left end drops below
    // gamma. Per m the only candidate is the smallest n with 2^n > 3^m (larger
    // n shrink c below l), so the first valid m minimizes m+n.
    Rational l = a_star;
    unsigned long long budget = caps().witness_search;
    while (l >= gamma) {
        mpz_class three_m(1);
        for (unsigned m = 0;; ++m, three_m *= 3) {
            unsigned n = 0;
            mpz_class two_n(1);
            while (two_n <= three_m) {
                two_n <<= 1;
                ++n;
            }
            if (budget-- == 0)
                throw CapExceeded("reach_horizon: descent witness budget exhausted");
            // c = 3^m/2^n >= l?
            if (three_m * l.den() >= two_n * l.num()) {
                Rational c(three_m, two_n);
                w.chain.push_back({m, n, c, l * c});
                w.chain_steps += m + n;
                l = l * c;
                break;
            }
        }
    }
    w.horizon = w.block_steps + w.chain_steps;
    return w;
}

/// Exact containment check [gamma, 1] inside the n-step image of [a, b].
/// For slope sets inside {3, 1, 1/2} this walks the exponent lattice near the
/// target range; otherwise it iterates the image directly.
inline bool verify_reach(const SlopeSet& omega, const Rational& a, const Rational& b,
                         const Rational& gamma, unsigned n) {
    if (!(Rational(0) < a && a <= b && b <= Rational(1)))
        throw std::invalid_argument("verify_reach: need 0 < a <= b <= 1");
    if (!(Rational(0) < gamma && gamma <= Rational(1)))
        throw std::invalid_argument("verify_reach: gamma must lie in (0,1]");
    Interval target(gamma, Rational(1));
    if (n == 0) return Interval(a, b).contains(target);

    bool three_smooth = true;
    bool has_identity = false;
    for (const auto& s : omega.slopes) {
        if (s == Rational(1))
            has_identity = true;
        else if (s != Rational(3) && s != Rational(1, 2))
            three_smooth = false;
    }

    if (!three_smooth) {
        IntervalUnion img = iterate_image(omega, IntervalUnion::of(a, b), n);
        return img.covers(target);
    }

    // Products over words of length n are 3^i/2^j with i+j == n (i+j <= n when
    // the identity line is present; apply all contracting factors first to see
    // every product is realizable). Only factors whose scaled copy can touch
    // [gamma, 1] matter for the cover.
    std::vector<Interval> pieces;
    mpz_class three_i(1);
    for (unsigned i = 0; i <= n; ++i, three_i *= 3) {
        Rational base = Rational(three_i);
        // j range: 3^i/2^j * b >= gamma and 3^i/2^j * a <= 1.
        // Walk j upward from the smallest admissible value.
        unsigned j = 0;
        {
            // smallest j with 3^i/2^j * a <= 1, i.e. 2^j >= 3^i * a
            mpz_class t = three_i * a.num();
            mpz_class den = a.den();
            mpz_class two_j(1);
            while (two_j * den < t) {
                two_j <<= 1;
                ++j;
            }
        }
        for (;; ++j) {
            if (!has_identity && j > n - i) break;
            if (has_identity && i + j > n) break;
            if (!has_identity && i + j != n) continue;
            Rational f = base / pow2(static_cast<long>(j));
            if (f * b < gamma) break;  // further j only shrink
            Rational lo = f * a;
            if (lo > Rational(1)) continue;
            pieces.emplace_back(lo, min(f * b, Rational(1)));
        }
    }
    if (pieces.empty()) return false;
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    Rational reach(-1);
    bool started = false;
    for (const auto& piece : pieces) {
        if (piece.hi < gamma) continue;
        if (!started) {
            if (piece.lo > gamma) return false;
            reach = piece.hi;
            started = true;
        } else {
            if (piece.lo > reach) return false;  // gap inside [gamma, 1]
            reach = max(reach, piece.hi);
        }
        if (reach >= Rational(1)) return true;
    }
    return false;
}

/// Convenience overload on an interval union consisting of a single part.
inline bool verify_reach(const SlopeSet& omega, const Interval& ab, const Rational& gamma,
                         unsigned n) {
    return verify_reach(omega, ab.lo, ab.hi, gamma, n);
}

}  // namespace lelek
