#pragma once

#include <lelek/rational.hpp>
#include <lelek/slope_set.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lelek {

enum class Sidedness { one_sided, two_sided };

/// Finite sequence of 1-based slope indices, read as consecutive line choices.
struct SlopeWord {
    std::vector<int> letters;
    Sidedness side = Sidedness::one_sided;
};

enum class TailKind { unknown, zero, constant };

/// Finite window of coordinates of a point of the one- or two-sided sequence
/// space of a line relation.
///
/// Indexing: one-sided points start at 1; two-sided windows start at a
/// nonpositive index (the window [-N, N] convention). Tail semantics beyond the
/// window: `zero` continues by repeating the smallest slope (coordinates decay
/// to 0 geometrically), `constant` repeats the given value, `unknown` promises
/// nothing and widens metric bounds accordingly.
struct TruncatedPoint {
    long start = 1;
    std::vector<Rational> coords;
    TailKind tail = TailKind::unknown;
    Rational tail_value;  // meaningful only when tail == constant
    /// Slope index (1-based) between coords[i] and coords[i+1]; empty means
    /// "derive from coordinates where needed".
    std::vector<int> word;

    bool two_sided() const { return start <= 0; }
    long end_index() const { return start + static_cast<long>(coords.size()) - 1; }
    bool in_window(long i) const { return i >= start && i <= end_index(); }
    const Rational& at(long i) const { return coords.at(static_cast<std::size_t>(i - start)); }

    static TruncatedPoint one_sided(std::vector<Rational> cs, TailKind t = TailKind::unknown,
                                    Rational cval = Rational(0), std::vector<int> w = {}) {
        TruncatedPoint p;
        p.start = 1;
        p.coords = std::move(cs);
        p.tail = t;
        p.tail_value = std::move(cval);
        p.word = std::move(w);
        return p;
    }

    static TruncatedPoint two_sided_window(long start_index, std::vector<Rational> cs,
                                           TailKind t = TailKind::unknown,
                                           Rational cval = Rational(0), std::vector<int> w = {}) {
        if (start_index > 0)
            throw std::invalid_argument("two_sided_window: start index must be <= 0");
        TruncatedPoint p;
        p.start = start_index;
        p.coords = std::move(cs);
        p.tail = t;
        p.tail_value = std::move(cval);
        p.word = std::move(w);
        return p;
    }

    /// Constant sequence (one-sided), valid whenever (c,c) is in the relation.
    static TruncatedPoint constant(const Rational& c) {
        return one_sided({c}, TailKind::constant, c);
    }
};

struct PointCheck {
    bool ok = true;
    long failing_index = 0;  // absolute index of the left member of the bad pair
    std::string reason;
};

/// Relation membership: is (x, y) on some line of the set?
inline bool pair_in_relation(const SlopeSet& omega, const Rational& x, const Rational& y) {
    if (x.is_zero()) return y.is_zero();
    for (const auto& w : omega.slopes)
        if (y == w * x) return true;
    return false;
}

/// Consecutive-pair validity plus tail admissibility.
inline PointCheck validate_point(const SlopeSet& omega, const TruncatedPoint& p) {
    PointCheck chk;
    if (p.coords.empty()) {
        chk.ok = false;
        chk.reason = "empty coordinate window";
        return chk;
    }
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (p.coords[i] < Rational(0) || p.coords[i] > Rational(1)) {
            chk.ok = false;
            chk.failing_index = p.start + static_cast<long>(i);
            chk.reason = "coordinate outside [0,1]";
            return chk;
        }
    }
    const bool word_given = p.word.size() + 1 == p.coords.size() && !p.word.empty();
    for (std::size_t i = 0; i + 1 < p.coords.size(); ++i) {
        const Rational &x = p.coords[i], &y = p.coords[i + 1];
        bool ok;
        if (word_given) {
            int letter = p.word[i];
            ok = letter >= 1 && static_cast<std::size_t>(letter) <= omega.size() &&
                 y == omega[static_cast<std::size_t>(letter - 1)] * x;
        } else {
            ok = pair_in_relation(omega, x, y);
        }
        if (!ok) {
            chk.ok = false;
            chk.failing_index = p.start + static_cast<long>(i);
            chk.reason = "pair (" + x.str() + ", " + y.str() + ") not on any line";
            return chk;
        }
    }
    switch (p.tail) {
        case TailKind::unknown:
            break;
        case TailKind::constant: {
            const Rational& c = p.tail_value;
            if (!pair_in_relation(omega, p.coords.back(), c) || !pair_in_relation(omega, c, c)) {
                chk.ok = false;
                chk.failing_index = p.end_index();
                chk.reason = "constant tail " + c.str() + " not admissible";
            }
            if (p.two_sided() && chk.ok &&
                (!pair_in_relation(omega, c, p.coords.front()))) {
                chk.ok = false;
                chk.failing_index = p.start;
                chk.reason = "constant tail " + c.str() + " not admissible on the left";
            }
            break;
        }
        case TailKind::zero: {
            bool has_contraction = false;
            for (const auto& w : omega.slopes)
                if (w < Rational(1)) has_contraction = true;
            if (!has_contraction && !p.coords.back().is_zero()) {
                chk.ok = false;
                chk.failing_index = p.end_index();
                chk.reason = "zero tail needs a contracting slope or a zero last coordinate";
            }
            if (p.two_sided() && !p.coords.front().is_zero()) {
                chk.ok = false;
                chk.failing_index = p.start;
                chk.reason = "two-sided zero tail needs zero boundary coordinates";
            }
            break;
        }
    }
    return chk;
}

/// Shift map. One-sided: drops the first coordinate (a length-1 window with an
/// unknown tail cannot be shifted). Two-sided: pure relabeling, the window
/// start decrements.
inline TruncatedPoint shift(const TruncatedPoint& p, const SlopeSet& omega) {
    TruncatedPoint q = p;
    if (p.two_sided()) {
        q.start -= 1;
        return q;
    }
    if (p.coords.size() >= 2) {
        q.coords.erase(q.coords.begin());
        if (!q.word.empty()) q.word.erase(q.word.begin());
        return q;
    }
    switch (p.tail) {
        case TailKind::constant:
            q.coords = {p.tail_value};
            q.word.clear();
            return q;
        case TailKind::zero:
            q.coords = {p.coords.front() * omega.smallest()};
            q.word.clear();
            return q;
        case TailKind::unknown:
            throw std::invalid_argument("shift: length-1 window with unknown tail");
    }
    return q;  // unreachable
}

}  // namespace lelek
