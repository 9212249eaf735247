#pragma once

#include <lelek/relation.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace lelek {

struct SeriesEntry {
    unsigned n;
    Rational value;  // d_H(F^n(A), [0,1])
};

enum class SeriesVerdict { consistent_with_mixing, mixing_obstructed, inconclusive };

struct HausdorffSeries {
    std::vector<SeriesEntry> entries;  // n = 0..n_max
    SeriesVerdict verdict = SeriesVerdict::inconclusive;
};

inline const char* to_string(SeriesVerdict v) {
    switch (v) {
        case SeriesVerdict::consistent_with_mixing: return "consistent-with-mixing";
        case SeriesVerdict::mixing_obstructed: return "mixing-obstructed";
        case SeriesVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Exact distance-to-full series of the iterated images. Verdict rule:
/// a non-increasing series that reaches zero or ends below its start reads as
/// consistent-with-mixing; otherwise a positive floor across the last ten
/// entries reads as mixing-obstructed.
inline HausdorffSeries growing_images_series(const SlopeSet& omega, const IntervalUnion& a,
                                             unsigned n_max,
                                             std::size_t cap = caps().intervals) {
    if (a.empty()) throw std::invalid_argument("growing_images_series: empty start set");
    HausdorffSeries out;
    IntervalUnion cur = a;
    out.entries.push_back({0, hausdorff_to_unit(cur)});
    for (unsigned n = 1; n <= n_max; ++n) {
        cur = interval_image(omega, cur, ImageDirection::forward, cap);
        out.entries.push_back({n, hausdorff_to_unit(cur)});
    }

    bool non_increasing = true;
    for (std::size_t i = 1; i < out.entries.size(); ++i)
        if (out.entries[i].value > out.entries[i - 1].value) non_increasing = false;
    bool all_zero = true;
    for (const auto& e : out.entries) all_zero = all_zero && e.value.is_zero();

    if (non_increasing && (all_zero || out.entries.back().value < out.entries.front().value)) {
        out.verdict = SeriesVerdict::consistent_with_mixing;
    } else if (out.entries.size() >= 10) {
        Rational floor = out.entries.back().value;
        for (std::size_t i = out.entries.size() - 10; i < out.entries.size(); ++i)
            floor = min(floor, out.entries[i].value);
        out.verdict = floor > Rational(0) ? SeriesVerdict::mixing_obstructed
                                          : SeriesVerdict::inconclusive;
    }
    return out;
}

/// CSV export: header row, exact numerator/denominator columns, and a tagged
/// decimal annotation column.
inline std::string series_csv(const HausdorffSeries& s, unsigned decimal_digits = 12) {
    std::ostringstream os;
    os << "n,numerator,denominator,decimal_approx_" << decimal_digits << "digits\n";
    for (const auto& e : s.entries)
        os << e.n << ',' << e.value.num_string() << ',' << e.value.den_string() << ','
           << e.value.decimal(decimal_digits) << '\n';
    return os.str();
}

}  // namespace lelek
