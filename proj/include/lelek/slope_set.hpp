#pragma once

#include <lelek/exponent_vector.hpp>
#include <lelek/rational.hpp>

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lelek {

/// Clause (2) of the never-connect condition: multiplicative independence of the
/// pair. The ordering clause r < 1 < rho is checked by validate_slope_set.
inline bool never_connect(const Rational& r, const Rational& rho) {
    return multiplicatively_independent(r, rho);
}

/// Ordered finite set of positive slopes defining the union-of-lines relation
/// y = omega_j * x on the unit square.
struct SlopeSet {
    std::vector<Rational> slopes;
    /// Optional designated pair (0-based indices) expected to straddle 1 and
    /// never connect.
    std::optional<std::pair<std::size_t, std::size_t>> designated_nc_pair;

    SlopeSet() = default;
    explicit SlopeSet(std::vector<Rational> s) : slopes(std::move(s)) {}
    SlopeSet(std::initializer_list<Rational> s) : slopes(s) {}

    std::size_t size() const { return slopes.size(); }
    const Rational& operator[](std::size_t i) const { return slopes[i]; }

    static SlopeSet parse(const std::string& csv) {
        SlopeSet out;
        std::size_t pos = 0;
        while (pos <= csv.size()) {
            auto comma = csv.find(',', pos);
            auto len = (comma == std::string::npos ? csv.size() : comma) - pos;
            out.slopes.push_back(Rational::parse(csv.substr(pos, len)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    }

    Rational smallest() const {
        Rational m = slopes.at(0);
        for (const auto& s : slopes) m = min(m, s);
        return m;
    }

    bool contains(const Rational& w) const {
        for (const auto& s : slopes)
            if (s == w) return true;
        return false;
    }

    /// Index (0-based) of the given slope, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(const Rational& w) const {
        for (std::size_t i = 0; i < slopes.size(); ++i)
            if (slopes[i] == w) return i;
        return npos;
    }

    bool reciprocal_closed() const {
        for (const auto& s : slopes)
            if (!contains(Rational(1) / s)) return false;
        return !slopes.empty();
    }
};

enum class SlopeProfile { lf_inducing, trace_family };

struct ValidationIssue {
    std::string clause;
    std::string detail;
};

struct ValidationReport {
    bool pass = true;
    std::vector<ValidationIssue> failures;

    void fail(std::string clause, std::string detail) {
        pass = false;
        failures.push_back({std::move(clause), std::move(detail)});
    }
};

/// Checks a slope set against one of the two profiles the library works with.
/// lf_inducing: some pair (designated or searched) satisfies w_i < 1 < w_j and
/// never-connect. trace_family: first three slopes are 3, 1, 1/2 and every slope
/// lies in [1/3, 3].
inline ValidationReport validate_slope_set(const SlopeSet& omega, SlopeProfile profile) {
    ValidationReport rep;
    if (omega.slopes.empty()) {
        rep.fail("nonempty", "slope list is empty");
        return rep;
    }
    for (const auto& s : omega.slopes)
        if (s <= Rational(0)) rep.fail("positive", "slope " + s.str() + " is not positive");
    {
        std::set<Rational> seen;
        for (const auto& s : omega.slopes)
            if (!seen.insert(s).second) rep.fail("distinct", "duplicate slope " + s.str());
    }
    if (!rep.pass) return rep;

    if (profile == SlopeProfile::lf_inducing) {
        if (omega.size() < 2) rep.fail("size", "lf_inducing needs at least two slopes");
        auto pair_ok = [&](std::size_t i, std::size_t j) {
            const Rational &a = omega[i], &b = omega[j];
            const Rational &lo = min(a, b), &hi = max(a, b);
            return lo < Rational(1) && Rational(1) < hi && never_connect(lo, hi);
        };
        bool found = false;
        if (omega.designated_nc_pair) {
            auto [i, j] = *omega.designated_nc_pair;
            if (i >= omega.size() || j >= omega.size() || i == j)
                rep.fail("designated-pair", "designated pair indices out of range");
            else
                found = pair_ok(i, j);
            if (!found && rep.pass)
                rep.fail("never-connect",
                         "designated pair (" + omega[omega.designated_nc_pair->first].str() + ", " +
                             omega[omega.designated_nc_pair->second].str() +
                             ") does not straddle 1 with multiplicative independence");
        } else {
            for (std::size_t i = 0; i < omega.size() && !found; ++i)
                for (std::size_t j = i + 1; j < omega.size() && !found; ++j)
                    found = pair_ok(i, j);
            if (!found)
                rep.fail("never-connect", "no pair w_i < 1 < w_j with never-connect found");
        }
    } else {
        if (omega.size() < 3) {
            rep.fail("prefix", "trace_family needs at least the three slopes 3, 1, 1/2");
        } else {
            if (omega[0] != Rational(3)) rep.fail("prefix", "first slope must be 3, got " + omega[0].str());
            if (omega[1] != Rational(1)) rep.fail("prefix", "second slope must be 1, got " + omega[1].str());
            if (omega[2] != Rational(1, 2)) rep.fail("prefix", "third slope must be 1/2, got " + omega[2].str());
        }
        for (const auto& s : omega.slopes)
            if (s < Rational(1, 3) || s > Rational(3))
                rep.fail("range", "slope " + s.str() + " outside [1/3, 3]");
    }
    return rep;
}

}  // namespace lelek
