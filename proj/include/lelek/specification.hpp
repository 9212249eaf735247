#pragma once

#include <lelek/point.hpp>
#include <lelek/slope_set.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lelek {

/// Finite stretch of an orbit: values x(k)..x(l) at consecutive indices.
struct OrbitSegment {
    long k = 1;
    long l = 1;
    std::vector<Rational> values;

    long length() const { return l - k + 1; }
};

/// Ordered list of orbit segments with strictly increasing index ranges.
struct Specification {
    std::vector<OrbitSegment> segments;

    /// Smallest gap k_{j+1} - l_j between consecutive segments; meaningless for
    /// fewer than two segments.
    long min_gap() const {
        long g = std::numeric_limits<long>::max();
        for (std::size_t j = 0; j + 1 < segments.size(); ++j)
            g = std::min(g, segments[j + 1].k - segments[j].l);
        return g;
    }
};

/// Structural checks: index sanity, value count, trajectory validity of each
/// segment under the relation, ordering between segments.
inline void validate_specification(const SlopeSet& omega, const Specification& s,
                                   long min_index = 1) {
    if (s.segments.empty()) throw std::invalid_argument("specification: no segments");
    long prev_l = std::numeric_limits<long>::min();
    bool first = true;
    for (const auto& seg : s.segments) {
        if (seg.k < min_index || seg.k > seg.l)
            throw std::invalid_argument("specification: bad segment range [" +
                                        std::to_string(seg.k) + ", " + std::to_string(seg.l) + "]");
        if (static_cast<long>(seg.values.size()) != seg.length())
            throw std::invalid_argument("specification: value count does not match range");
        for (const auto& v : seg.values)
            if (v < Rational(0) || v > Rational(1))
                throw std::invalid_argument("specification: value outside [0,1]");
        for (std::size_t i = 0; i + 1 < seg.values.size(); ++i)
            if (!pair_in_relation(omega, seg.values[i], seg.values[i + 1]))
                throw std::invalid_argument("specification: segment is not a trajectory at offset " +
                                            std::to_string(i));
        if (!first && seg.k <= prev_l)
            throw std::invalid_argument("specification: segment ranges must be strictly increasing");
        prev_l = seg.l;
        first = false;
    }
}

/// Definitional trace check: the point matches every segment value within eps
/// at that value's own index. Exact arithmetic; the point must cover all
/// segment indices (window or resolved tail).
inline bool verify_trace(const Specification& s, const TruncatedPoint& y, const Rational& eps) {
    if (y.two_sided()) throw std::invalid_argument("verify_trace: one-sided points only");
    auto value_at = [&](long i) -> Rational {
        if (y.in_window(i)) return y.at(i);
        if (i > y.end_index()) {
            if (y.tail == TailKind::constant) return y.tail_value;
            throw std::out_of_range("verify_trace: point does not cover index " + std::to_string(i));
        }
        throw std::out_of_range("verify_trace: index below the window start");
    };
    for (const auto& seg : s.segments)
        for (long i = seg.k; i <= seg.l; ++i) {
            Rational d = abs(seg.values[static_cast<std::size_t>(i - seg.k)] - value_at(i));
            if (d > eps) return false;
        }
    return true;
}

enum class SpecTranslation { shift_to_cr, cr_to_shift };

struct TranslatedSpec {
    Specification spec;
    unsigned extension = 0;  // N with 1/2^N < eps (shift_to_cr only)
    /// How the spacing requirement moves: an (M+N)-spaced shift specification
    /// becomes an M-spaced coordinate specification, and an N-spaced coordinate
    /// specification reindexes to an N-spaced shift specification.
    std::string spacing_note;
};

/// Translation between shift-orbit-segment specifications and coordinate
/// (per-index) specifications. shift_to_cr extends every segment N indices to
/// the right, continuing each trajectory deterministically (identity line when
/// available, smallest slope otherwise); cr_to_shift reindexes by -1.
inline TranslatedSpec translate_spec(const SlopeSet& omega, const Specification& s,
                                     const Rational& eps, SpecTranslation dir) {
    if (eps <= Rational(0)) throw std::invalid_argument("translate_spec: eps must be positive");
    TranslatedSpec out;
    if (dir == SpecTranslation::shift_to_cr) {
        unsigned n = ceil_log2_inverse(eps);
        out.extension = n;
        out.spec = s;
        bool has_identity = omega.contains(Rational(1));
        Rational wmin = omega.smallest();
        for (auto& seg : out.spec.segments) {
            for (unsigned t = 0; t < n; ++t) {
                const Rational& last = seg.values.back();
                if (has_identity) {
                    seg.values.push_back(last);
                } else {
                    Rational next = last * wmin;
                    seg.values.push_back(next);
                }
            }
            seg.l += static_cast<long>(n);
        }
        out.spacing_note = "an (M+" + std::to_string(n) +
                           ")-spaced shift specification yields an M-spaced coordinate "
                           "specification after the +" + std::to_string(n) + " extension";
    } else {
        out.spec = s;
        for (auto& seg : out.spec.segments) {
            seg.k -= 1;
            seg.l -= 1;
        }
        out.spacing_note = "an N-spaced coordinate specification reindexes (by -1) to an "
                           "N-spaced shift specification";
    }
    return out;
}

}  // namespace lelek
