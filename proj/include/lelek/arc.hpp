#pragma once

#include <lelek/config.hpp>
#include <lelek/metric.hpp>
#include <lelek/point.hpp>
#include <lelek/slope_set.hpp>

#include <utility>
#include <vector>

namespace lelek {

/// Per-coordinate maxima of the arc cut out by a finite slope word: the set of
/// admissible sequences (x_1..x_N) with x_{j+1} = w_{a(j)} x_j inside [0,1]^N.
/// Coordinate j tops out at P_{j-1} / max_i P_i where P are prefix products.
inline std::vector<Rational> arc_range(const SlopeSet& omega, const std::vector<int>& word) {
    if (word.empty()) throw std::invalid_argument("arc_range: word must be nonempty");
    std::vector<Rational> prefix{Rational(1)};
    for (int letter : word) {
        if (letter < 1 || static_cast<std::size_t>(letter) > omega.size())
            throw std::invalid_argument("arc_range: slope index out of range");
        prefix.push_back(prefix.back() * omega[static_cast<std::size_t>(letter - 1)]);
    }
    Rational top = prefix.front();
    for (const auto& p : prefix) top = max(top, p);
    std::vector<Rational> maxima;
    maxima.reserve(prefix.size());
    for (const auto& p : prefix) maxima.push_back(p / top);
    return maxima;
}

struct ArcEntry {
    std::vector<int> word;
    std::vector<Rational> maxima;
};

/// All arcs of the given word depth, lexicographic by word.
inline std::vector<ArcEntry> enumerate_arcs(const SlopeSet& omega, unsigned depth,
                                            std::size_t cap = caps().arcs) {
    if (depth == 0) throw std::invalid_argument("enumerate_arcs: depth must be >= 1");
    double count = 1;
    for (unsigned i = 0; i < depth; ++i) count *= static_cast<double>(omega.size());
    if (count > static_cast<double>(cap))
        throw CapExceeded("enumerate_arcs: M^depth exceeds cap " + std::to_string(cap));
    std::vector<ArcEntry> out;
    std::vector<int> word(depth, 1);
    while (true) {
        out.push_back({word, arc_range(omega, word)});
        // odometer increment
        unsigned pos = depth;
        while (pos > 0) {
            if (static_cast<std::size_t>(word[pos - 1]) < omega.size()) {
                ++word[pos - 1];
                break;
            }
            word[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

namespace detail {

/// Minimal-(j+k) pair with base * lo_slope^j * hi_slope^k inside (win_lo, win_hi],
/// where lo_slope < 1 < hi_slope. Dense because the pair never connects.
inline std::pair<unsigned, unsigned> lattice_hit(const Rational& base, const Rational& lo_slope,
                                                 const Rational& hi_slope, const Rational& win_lo,
                                                 const Rational& win_hi) {
    unsigned long long budget = caps().witness_search;
    Rational step = hi_slope / lo_slope;
    for (unsigned s = 0;; ++s) {
        Rational v = base * pow_nonneg(lo_slope, s);
        for (unsigned k = 0; k <= s; ++k) {
            if (win_lo < v && v <= win_hi) return {s - k, k};
            v *= step;
            if (budget-- == 0)
                throw CapExceeded("lattice_hit: witness search budget exhausted");
        }
    }
}

}  // namespace detail

struct EndpointResult {
    TruncatedPoint endpoint;
    MetricBound certificate;
};

/// Nearby arc-maximal point: returns e with the same leading word as p, whose
/// first coordinate equals the arc maximum of e's word, certified within eps.
/// The word past p's depth mixes the never-connecting pair so that the arc
/// maximum lands just above p's first coordinate, then contracts forever.
inline EndpointResult endpoint_approx(const SlopeSet& omega, const TruncatedPoint& p,
                                      const Rational& eps) {
    if (eps <= Rational(0)) throw std::invalid_argument("endpoint_approx: eps must be positive");
    if (p.two_sided()) throw std::invalid_argument("endpoint_approx: one-sided points only");
    auto rep = validate_slope_set(omega, SlopeProfile::lf_inducing);
    if (!rep.pass) throw std::invalid_argument("endpoint_approx: slope set is not LF-inducing");
    auto chk = validate_point(omega, p);
    if (!chk.ok) throw std::invalid_argument("endpoint_approx: invalid point: " + chk.reason);

    // The contracting/expanding never-connect pair used for the word extension.
    std::size_t ci = SlopeSet::npos, ei = SlopeSet::npos;
    for (std::size_t i = 0; i < omega.size() && ci == SlopeSet::npos; ++i)
        for (std::size_t j = 0; j < omega.size(); ++j) {
            if (i == j) continue;
            const Rational &a = omega[i], &b = omega[j];
            if (a < Rational(1) && Rational(1) < b && never_connect(a, b)) {
                ci = i;
                ei = j;
                break;
            }
        }
    const Rational& contract = omega[ci];
    const Rational& expand = omega[ei];

    unsigned needed = ceil_log2_inverse(eps) + 1;
    if (p.tail == TailKind::unknown && p.coords.size() < needed)
        throw std::invalid_argument(
            "endpoint_approx: point window too shallow to certify at this eps; "
            "provide a resolved tail or at least " + std::to_string(needed) + " coordinates");

    // Working depth: explicit coordinates, extended along resolved tails.
    std::size_t depth = std::max<std::size_t>(p.coords.size(), needed);
    std::vector<Rational> px(p.coords);
    std::vector<int> pword(p.word);
    if (pword.size() + 1 != px.size()) {
        pword.clear();
        for (std::size_t i = 0; i + 1 < px.size(); ++i) {
            if (px[i].is_zero()) {
                pword.push_back(static_cast<int>(ci + 1));
                continue;
            }
            std::size_t idx = omega.index_of(px[i + 1] / px[i]);
            if (idx == SlopeSet::npos)
                throw std::invalid_argument("endpoint_approx: point has no derivable word");
            pword.push_back(static_cast<int>(idx + 1));
        }
    }
    std::size_t min_idx = omega.index_of(omega.smallest());
    if (p.tail != TailKind::unknown) {
        while (px.size() < depth) {
            if (p.tail == TailKind::constant) {
                px.push_back(p.tail_value);
                std::size_t one = p.tail_value.is_zero() ? ci : omega.index_of(Rational(1));
                pword.push_back(static_cast<int>(one + 1));
            } else {
                px.push_back(px.back() * omega.smallest());
                pword.push_back(static_cast<int>(min_idx + 1));
            }
        }
    } else {
        depth = px.size();
    }

    // Prefix products and running maximum along p's word.
    std::vector<Rational> prefix{Rational(1)};
    for (std::size_t i = 0; i + 1 < depth; ++i)
        prefix.push_back(prefix.back() * omega[static_cast<std::size_t>(pword[i] - 1)]);
    Rational pmax = prefix.front();
    for (const auto& q : prefix) pmax = max(pmax, q);

    const Rational& x1 = px.front();
    TruncatedPoint e;
    if (x1.is_zero()) {
        // The origin: a steep short arc is endpoint-close to the top. The worst
        // metric term is at coordinate 1 when the expander is below 2, at the
        // last climbing coordinate otherwise; grow the climb until both shrink.
        unsigned m = 1;
        while (!(pow2(-static_cast<long>(m + 1)) < eps &&
                 Rational(1) / (pow_nonneg(expand, m) * Rational(2)) < eps))
            ++m;
        std::vector<Rational> cs;
        std::vector<int> w;
        Rational v = Rational(1) / pow_nonneg(expand, m);
        cs.push_back(v);
        for (unsigned i = 0; i < m; ++i) {
            w.push_back(static_cast<int>(ei + 1));
            v *= expand;
            cs.push_back(v);
        }
        e = TruncatedPoint::one_sided(std::move(cs), TailKind::zero, Rational(0), std::move(w));
    } else {
        Rational tau_prefix = Rational(1) / pmax;
        std::vector<Rational> cs;
        std::vector<int> w = pword;
        Rational tau;
        if (x1 == tau_prefix) {
            tau = tau_prefix;  // already arc-maximal, keep the word
        } else {
            // Land the total product in (1/upper, 1/x1]; the resulting arc
            // maximum 1/product sits in [x1, upper).
            Rational upper = min(tau_prefix, x1 * (Rational(1) + eps / Rational(4)));
            auto [j, k] = detail::lattice_hit(prefix.back(), contract, expand,
                                              Rational(1) / upper, Rational(1) / x1);
            for (unsigned t = 0; t < j; ++t) w.push_back(static_cast<int>(ci + 1));
            for (unsigned t = 0; t < k; ++t) w.push_back(static_cast<int>(ei + 1));
            Rational product = prefix.back() * pow_nonneg(contract, j) * pow_nonneg(expand, k);
            tau = Rational(1) / product;
        }
        Rational v = tau;
        cs.push_back(v);
        for (int letter : w) {
            v *= omega[static_cast<std::size_t>(letter - 1)];
            cs.push_back(v);
        }
        e = TruncatedPoint::one_sided(std::move(cs), TailKind::zero, Rational(0), std::move(w));
    }

    MetricBound cert = metric_D(omega, p, e);
    if (!(cert.upper < eps))
        throw std::logic_error("endpoint_approx: certificate failed, bound " + cert.upper.str());
    return {std::move(e), std::move(cert)};
}

/// True iff the point's first coordinate equals the arc maximum of its word,
/// with the zero tail read as repeated contraction.
inline bool is_arc_maximal(const SlopeSet& omega, const TruncatedPoint& e) {
    if (e.two_sided() || e.coords.empty()) return false;
    if (e.coords.front().is_zero()) return true;  // degenerate arc, the top itself
    if (e.word.size() + 1 != e.coords.size()) return false;
    Rational prod(1), pmax(1);
    for (int letter : e.word) {
        prod *= omega[static_cast<std::size_t>(letter - 1)];
        pmax = max(pmax, prod);
    }
    if (e.tail == TailKind::unknown) return false;  // cannot certify beyond the window
    // A constant tail keeps products flat; the zero tail contracts. Either way
    // the running maximum is final.
    return e.coords.front() * pmax == Rational(1);
}

}  // namespace lelek
