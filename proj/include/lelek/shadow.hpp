#pragma once

#include <lelek/config.hpp>
#include <lelek/pseudo_orbit.hpp>
#include <lelek/relation.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace lelek {

/// Radius rho around a point a of (0,1) inside which the M-th relation power
/// admits only the diagonal: if (x, y) lies in the M-th power and both x and y
/// are within rho of a, then y = x. From |alpha - 1| (a - rho) <= |alpha x - x|
/// < 2 rho, any non-diagonal branch alpha needs rho > a|alpha-1| / (2+|alpha-1|),
/// so the minimum over branches is a valid radius.
inline Rational separation_radius(const SlopeSet& omega, unsigned m, const Rational& a) {
    if (!(Rational(0) < a && a < Rational(1)))
        throw std::invalid_argument("separation_radius: a must lie in (0,1)");
    auto products = slope_products(omega, m);
    std::optional<Rational> best;
    for (const auto& alpha : products) {
        if (alpha.is_one()) continue;
        Rational gap = abs(alpha - Rational(1));
        Rational candidate = a * gap / (Rational(2) + gap);
        if (!best || candidate < *best) best = candidate;
    }
    if (!best) throw std::invalid_argument("separation_radius: every product is the identity");
    return *best;
}

enum class ShadowStatus { sat, unsat, inconclusive };

struct ShadowConstraint {
    long coord;       // index of the orbit coordinate being constrained
    std::size_t k;    // pseudo-orbit step the constraint comes from
    long offset;      // coordinate offset within that step's point
    Rational center;
    Rational radius;  // strict: |y(coord) - center| < radius
};

struct ShadowWitness {
    std::vector<int> word;  // slope letters between consecutive coordinates
    long first_index;       // index of the first materialized coordinate
    Rational chosen;        // feasible first-coordinate value used for the point
    Rational feasible_lo, feasible_hi;
    TruncatedPoint point;
};

struct NoShadowCertificate {
    Rational eps;
    unsigned horizon = 0;
    long depth = 0;  // number of materialized coordinates
    unsigned long long exhausted_branches = 0;
    std::vector<ShadowConstraint> constraints;
};

struct ShadowResult {
    ShadowStatus status = ShadowStatus::inconclusive;
    std::optional<ShadowWitness> witness;
    std::optional<NoShadowCertificate> certificate;
    unsigned long long nodes = 0;
};

namespace detail {

/// Rational interval with independently strict endpoints.
struct OpenInterval {
    Rational lo{0}, hi{1};
    bool lo_strict = false, hi_strict = false;

    bool empty() const {
        if (lo > hi) return true;
        return lo == hi && (lo_strict || hi_strict);
    }
    void clamp_lo(const Rational& v, bool strict) {
        if (v > lo) {
            lo = v;
            lo_strict = strict;
        } else if (v == lo && strict) {
            lo_strict = true;
        }
    }
    void clamp_hi(const Rational& v, bool strict) {
        if (v < hi) {
            hi = v;
            hi_strict = strict;
        } else if (v == hi && strict) {
            hi_strict = true;
        }
    }
    Rational pick() const { return (lo + hi) / Rational(2); }
};

struct ShadowProblem {
    // Constraints grouped by coordinate, relative to the base coordinate.
    std::vector<std::vector<ShadowConstraint>> by_coord;
    long first_index = 1;  // absolute index of slot 0
    long base_slot = 0;    // slot whose value is the free variable
    long slots = 0;
};

inline void apply_at(OpenInterval& v, const ShadowProblem& prob, long slot, const Rational& prod) {
    // y(slot) = prod * y(base) must stay in [0,1] and inside each open ball.
    v.clamp_hi(Rational(1) / prod, false);
    for (const auto& c : prob.by_coord[static_cast<std::size_t>(slot)]) {
        v.clamp_lo((c.center - c.radius) / prod, true);
        v.clamp_hi((c.center + c.radius) / prod, true);
    }
}

struct ShadowSearch {
    const SlopeSet& omega;
    const ShadowProblem& prob;
    unsigned long long budget;
    unsigned long long nodes = 0;
    unsigned long long dead_ends = 0;
    std::vector<int> word;
    std::optional<ShadowWitness> found;

    ShadowSearch(const SlopeSet& o, const ShadowProblem& p, unsigned long long b)
        : omega(o), prob(p), budget(b) {
        word.assign(static_cast<std::size_t>(std::max(0l, prob.slots - 1)), 0);
    }

    // Phase 1: extend right of the base; phase 2: extend left. Products carry
    // y(slot) = prod * y(base) throughout.
    bool right(long slot, const Rational& prod, OpenInterval v) {
        if (++nodes > budget) throw CapExceeded("shadow_feasible: branch budget exhausted");
        apply_at(v, prob, slot, prod);
        if (v.empty()) {
            ++dead_ends;
            return false;
        }
        if (slot + 1 == prob.slots) return left(prob.base_slot, Rational(1), v);
        for (std::size_t s = 0; s < omega.size(); ++s) {
            word[static_cast<std::size_t>(slot)] = static_cast<int>(s + 1);
            if (right(slot + 1, prod * omega[s], v)) return true;
        }
        return false;
    }

    bool left(long slot, const Rational& prod, OpenInterval v) {
        if (slot == 0) {
            finish(v);
            return true;
        }
        if (++nodes > budget) throw CapExceeded("shadow_feasible: branch budget exhausted");
        for (std::size_t s = 0; s < omega.size(); ++s) {
            OpenInterval vv = v;
            Rational p = prod / omega[s];
            apply_at(vv, prob, slot - 1, p);
            if (vv.empty()) {
                ++dead_ends;
                continue;
            }
            word[static_cast<std::size_t>(slot - 1)] = static_cast<int>(s + 1);
            if (left(slot - 1, p, vv)) return true;
        }
        return false;
    }

    void finish(const OpenInterval& v) {
        ShadowWitness w;
        w.word = word;
        w.first_index = prob.first_index;
        w.feasible_lo = v.lo;
        w.feasible_hi = v.hi;
        w.chosen = v.pick();
        // Rebuild the coordinates from the base value: walk left products
        // backward then forward.
        std::vector<Rational> coords(static_cast<std::size_t>(prob.slots));
        coords[static_cast<std::size_t>(prob.base_slot)] = w.chosen;
        for (long i = prob.base_slot - 1; i >= 0; --i)
            coords[static_cast<std::size_t>(i)] =
                coords[static_cast<std::size_t>(i + 1)] /
                omega[static_cast<std::size_t>(w.word[static_cast<std::size_t>(i)] - 1)];
        for (long i = prob.base_slot + 1; i < prob.slots; ++i)
            coords[static_cast<std::size_t>(i)] =
                coords[static_cast<std::size_t>(i - 1)] *
                omega[static_cast<std::size_t>(w.word[static_cast<std::size_t>(i - 1)] - 1)];
        if (prob.first_index >= 1)
            w.point = TruncatedPoint::one_sided(coords, TailKind::unknown, Rational(0), w.word);
        else
            w.point = TruncatedPoint::two_sided_window(prob.first_index, coords, TailKind::unknown,
                                                       Rational(0), w.word);
        found = std::move(w);
    }
};

}  // namespace detail

/// Decides whether any valid point can eps-shadow the pseudo-orbit through the
/// given horizon, by exhaustive slope-word search with exact interval
/// propagation on the first coordinate. SAT returns a concrete witness; UNSAT
/// returns a certificate whose finite refutation extends to every horizon
/// beyond (constraint sets only grow). A blown branch budget is inconclusive.
inline ShadowResult shadow_feasible(const SlopeSet& omega, const PseudoOrbit& po,
                                    const Rational& eps, unsigned horizon, long depth,
                                    unsigned long long budget = caps().shadow_nodes) {
    if (po.points.empty()) throw std::invalid_argument("shadow_feasible: empty pseudo-orbit");
    if (horizon >= po.points.size())
        throw std::invalid_argument("shadow_feasible: horizon exceeds pseudo-orbit length");
    if (eps <= Rational(0)) throw std::invalid_argument("shadow_feasible: eps must be positive");
    const bool two_sided = po.points.front().two_sided();
    for (const auto& pt : po.points)
        if (pt.two_sided() != two_sided)
            throw std::invalid_argument("shadow_feasible: mixed sidedness in pseudo-orbit");

    detail::ShadowProblem prob;
    std::vector<ShadowConstraint> all;

    long lo_idx = 1, hi_idx = depth;
    if (two_sided) {
        lo_idx = 0;
        hi_idx = 0;
        for (unsigned k = 0; k <= horizon; ++k) {
            const auto& pt = po.points[k];
            lo_idx = std::min(lo_idx, static_cast<long>(k) + pt.start);
            hi_idx = std::max(hi_idx, static_cast<long>(k) + pt.end_index());
        }
        if (depth > 0 && hi_idx - lo_idx + 1 > depth)
            throw std::invalid_argument("shadow_feasible: depth smaller than the constrained range");
    } else {
        if (depth < 2) throw std::invalid_argument("shadow_feasible: depth must be >= 2");
    }
    prob.first_index = lo_idx;
    prob.base_slot = two_sided ? -lo_idx : 0;
    prob.slots = hi_idx - lo_idx + 1;
    prob.by_coord.assign(static_cast<std::size_t>(prob.slots), {});

    auto add = [&](long coord, std::size_t k, long offset, Rational center, Rational radius) {
        if (coord < lo_idx || coord > hi_idx) return;
        if (radius > Rational(1)) return;  // vacuous against |diff| <= 1
        ShadowConstraint c{coord, k, offset, std::move(center), std::move(radius)};
        prob.by_coord[static_cast<std::size_t>(coord - lo_idx)].push_back(c);
        all.push_back(prob.by_coord[static_cast<std::size_t>(coord - lo_idx)].back());
    };

    for (unsigned k = 0; k <= horizon; ++k) {
        const auto& pt = po.points[k];
        if (!two_sided) {
            // D(sigma^k y, x_k) < eps constrains y(k+j) within eps * 2^j.
            long jmax = pt.end_index();
            if (pt.tail != TailKind::unknown) {
                long vac = static_cast<long>(ceil_log2_inverse(eps));
                jmax = std::max(jmax, vac + 1);
            }
            Rational zval = pt.coords.back();
            const Rational wmin = omega.smallest();
            for (long j = 1; j <= jmax && static_cast<long>(k) + j <= hi_idx; ++j) {
                Rational center;
                if (pt.in_window(j)) {
                    center = pt.at(j);
                } else if (pt.tail == TailKind::constant) {
                    center = pt.tail_value;
                } else if (pt.tail == TailKind::zero) {
                    zval = zval * wmin;
                    center = zval;
                } else {
                    break;
                }
                add(static_cast<long>(k) + j, k, j, center, eps * pow2(j));
            }
        } else {
            for (long off = pt.start; off <= pt.end_index(); ++off)
                add(static_cast<long>(k) + off, k, off, pt.at(off),
                    eps * pow2(off < 0 ? -off : off));
        }
    }

    detail::ShadowSearch search(omega, prob, budget);
    ShadowResult res;
    try {
        detail::OpenInterval v;
        bool sat = search.right(prob.base_slot, Rational(1), v);
        res.nodes = search.nodes;
        if (sat) {
            res.status = ShadowStatus::sat;
            res.witness = std::move(search.found);
        } else {
            res.status = ShadowStatus::unsat;
            NoShadowCertificate cert;
            cert.eps = eps;
            cert.horizon = horizon;
            cert.depth = prob.slots;
            cert.exhausted_branches = search.dead_ends;
            cert.constraints = std::move(all);
            res.certificate = std::move(cert);
        }
    } catch (const CapExceeded&) {
        res.status = ShadowStatus::inconclusive;
        res.nodes = search.nodes;
    }
    return res;
}

}  // namespace lelek
