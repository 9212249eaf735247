#pragma once

#include <lelek/config.hpp>
#include <lelek/interval_union.hpp>
#include <lelek/slope_set.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace lelek {

/// Image of a single point under the relation: { w*x : w*x <= 1 }, sorted, deduplicated.
inline std::vector<Rational> point_image(const SlopeSet& omega, const Rational& x) {
    if (x < Rational(0) || x > Rational(1))
        throw std::invalid_argument("point_image: x outside [0,1]");
    std::set<Rational> out;
    for (const auto& w : omega.slopes) {
        Rational y = w * x;
        if (y <= Rational(1)) out.insert(y);
    }
    return {out.begin(), out.end()};
}

enum class ImageDirection { forward, inverse };

/// One-step set image of an interval union. Inverse uses reciprocal slopes,
/// i.e. the relation read right to left.
inline IntervalUnion interval_image(const SlopeSet& omega, const IntervalUnion& a,
                                    ImageDirection dir = ImageDirection::forward,
                                    std::size_t cap = caps().intervals) {
    std::vector<Interval> pieces;
    for (const auto& w : omega.slopes) {
        Rational factor = dir == ImageDirection::forward ? w : Rational(1) / w;
        auto scaled = a.scale_clip(factor);
        pieces.insert(pieces.end(), scaled.parts().begin(), scaled.parts().end());
    }
    return IntervalUnion::from_intervals(std::move(pieces), cap);
}

/// n-fold composition of interval_image; n = 0 returns the input unchanged.
inline IntervalUnion iterate_image(const SlopeSet& omega, IntervalUnion a, unsigned n,
                                   ImageDirection dir = ImageDirection::forward,
                                   std::size_t cap = caps().intervals) {
    for (unsigned i = 0; i < n; ++i) a = interval_image(omega, a, dir, cap);
    return a;
}

/// The set of all products of exactly M slope factors (set semantics).
inline std::set<Rational> slope_products(const SlopeSet& omega, unsigned m) {
    if (m == 0) throw std::invalid_argument("slope_products: M must be >= 1");
    // Multisets over an ordered alphabet: extend only with slopes at or past the
    // last one used. Tracking (product, min allowed index) avoids permutations.
    std::set<std::pair<Rational, std::size_t>> states{{Rational(1), 0}};
    for (unsigned step = 0; step < m; ++step) {
        std::set<std::pair<Rational, std::size_t>> next;
        for (const auto& [prod, from] : states)
            for (std::size_t j = from; j < omega.size(); ++j)
                next.insert({prod * omega[j], j});
        states = std::move(next);
    }
    std::set<Rational> out;
    for (const auto& [prod, from] : states) out.insert(prod);
    return out;
}

/// Largest element of the M-fold product set strictly below 1, if any.
inline std::optional<Rational> alpha_max(const SlopeSet& omega, unsigned m) {
    auto prods = slope_products(omega, m);
    auto it = prods.lower_bound(Rational(1));
    if (it == prods.begin()) return std::nullopt;
    return *std::prev(it);
}

/// True iff 1 is an n-fold slope product, i.e. the diagonal sits inside the
/// n-th relation power.
inline bool diagonal_in_power(const SlopeSet& omega, unsigned n) {
    if (n == 0) throw std::invalid_argument("diagonal_in_power: n must be >= 1");
    if (omega.contains(Rational(1))) return true;
    std::set<std::pair<Rational, std::size_t>> states{{Rational(1), 0}};
    for (unsigned step = 0; step < n; ++step) {
        std::set<std::pair<Rational, std::size_t>> next;
        for (const auto& [prod, from] : states)
            for (std::size_t j = from; j < omega.size(); ++j) {
                Rational p = prod * omega[j];
                if (step + 1 == n && p.is_one()) return true;
                next.insert({p, j});
            }
        states = std::move(next);
    }
    return false;
}

namespace detail {

/// Largest nonnegative integer not representable as a sum of the generators,
/// or -1 when every nonnegative integer is. Requires gcd(generators) == 1.
/// Apery-style shortest path over residues modulo the smallest generator.
inline long frobenius_number(const std::vector<unsigned>& gens) {
    unsigned g1 = *std::min_element(gens.begin(), gens.end());
    if (g1 == 1) return -1;
    const unsigned long long inf = ~0ull;
    std::vector<unsigned long long> dist(g1, inf);
    dist[0] = 0;
    // Bellman-Ford over the residue cycle graph; g1 is tiny here.
    for (unsigned pass = 0; pass < g1; ++pass) {
        bool changed = false;
        for (unsigned r = 0; r < g1; ++r) {
            if (dist[r] == inf) continue;
            for (unsigned g : gens) {
                unsigned nr = (r + g) % g1;
                if (dist[r] + g < dist[nr]) {
                    dist[nr] = dist[r] + g;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    unsigned long long worst = 0;
    for (unsigned r = 0; r < g1; ++r) {
        if (dist[r] == inf) return -2;  // gcd > 1, caller should have checked
        worst = std::max(worst, dist[r]);
    }
    return static_cast<long>(worst) - static_cast<long>(g1);
}

}  // namespace detail

/// Smallest K <= horizon such that the diagonal lies in every power n in
/// [K, horizon] AND the additive closure of the observed hit lengths proves the
/// same for every n >= K (gcd of hits is 1 and K exceeds their Frobenius number).
/// Returns nullopt when no such K is certifiable within the horizon.
inline std::optional<unsigned> eventual_diagonal_threshold(const SlopeSet& omega, unsigned horizon) {
    if (horizon == 0) throw std::invalid_argument("eventual_diagonal_threshold: horizon must be >= 1");
    std::vector<unsigned> hits;
    for (unsigned n = 1; n <= horizon; ++n)
        if (diagonal_in_power(omega, n)) hits.push_back(n);
    if (hits.empty()) return std::nullopt;
    unsigned g = 0;
    for (unsigned h : hits) g = std::gcd(g, h);
    if (g != 1) return std::nullopt;
    long frob = detail::frobenius_number(hits);
    unsigned k_semigroup = static_cast<unsigned>(std::max(frob + 1, 1l));
    // Smallest start of an unbroken observed run ending at the horizon.
    unsigned k_observed = horizon;
    for (unsigned n = horizon; n >= 1; --n) {
        if (!diagonal_in_power(omega, n)) break;
        k_observed = n;
        if (n == 1) break;
    }
    unsigned k = std::max(k_semigroup, k_observed);
    if (k > horizon || !diagonal_in_power(omega, k)) return std::nullopt;
    return k;
}

}  // namespace lelek
