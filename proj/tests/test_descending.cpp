#include <lelek/descending.hpp>
#include <lelek/relation.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using lelek::DescendingIntervalTrajectory;
using lelek::Rational;
using lelek::SlopeSet;

namespace {

const SlopeSet kThreeLine{Rational(3), Rational(1), Rational(1, 2)};
const SlopeSet kFamilyFive{Rational(3), Rational(1), Rational(1, 2), Rational(3, 2),
                           Rational(2, 3)};

std::vector<Rational> random_trajectory(const SlopeSet& omega, std::mt19937& rng,
                                        std::size_t len) {
    std::uniform_int_distribution<int> me(-6, 6), ne(0, 6);
    Rational y0 = lelek::pow_nonneg(Rational(3), static_cast<unsigned>(ne(rng))) /
                  lelek::pow2(ne(rng) + 4);
    while (y0 > Rational(1)) y0 /= Rational(2);
    std::vector<Rational> y{y0};
    std::uniform_int_distribution<std::size_t> pick(0, omega.size() - 1);
    while (y.size() < len) {
        Rational next;
        do {
            next = y.back() * omega[pick(rng)];
        } while (next > Rational(1));
        y.push_back(next);
    }
    return y;
}

void check_conclusions(const SlopeSet& omega, const std::vector<Rational>& y,
                       const Rational& eps, const DescendingIntervalTrajectory& d) {
    REQUIRE(d.intervals.size() == y.size());
    REQUIRE(d.step_slope.size() + 1 == d.intervals.size());
    // start interval inside [eps/9, 1]
    CHECK(d.intervals.front().lo >= eps / Rational(9));
    CHECK(d.intervals.front().hi <= Rational(1));
    // every interval inside the closed eps-ball of its trajectory value
    for (std::size_t i = 0; i < y.size(); ++i) {
        CHECK(d.intervals[i].lo >= lelek::max(Rational(0), y[i] - eps));
        CHECK(d.intervals[i].hi <= lelek::min(Rational(1), y[i] + eps));
        CHECK(d.intervals[i].lo > Rational(0));
    }
    // final diameter at least eps^2/9
    CHECK(d.intervals.back().diam() >= eps * eps / Rational(9));
    // forward nesting, both through the recorded slope and through the full image
    for (std::size_t i = 0; i + 1 < d.intervals.size(); ++i) {
        const auto& cur = d.intervals[i];
        const auto& nxt = d.intervals[i + 1];
        const Rational& s = d.step_slope[i];
        CHECK(omega.contains(s));
        CHECK(nxt.lo >= s * cur.lo);
        CHECK(nxt.hi <= s * cur.hi);
        auto img = lelek::interval_image(omega, lelek::IntervalUnion::of(cur.lo, cur.hi));
        CHECK(img.covers(nxt));
    }
}

}  // namespace

TEST_CASE("flat low trajectory pins the fixed window") {
    Rational eps(1, 2);
    std::vector<Rational> y{Rational(1, 8), Rational(1, 16), Rational(1, 8), Rational(1, 4)};
    auto d = lelek::descending_trajectory(kThreeLine, y, eps);
    for (const auto& iv : d.intervals) {
        CHECK(iv.lo == eps / Rational(9));
        CHECK(iv.hi == eps);
    }
    check_conclusions(kThreeLine, y, eps, d);
}

TEST_CASE("constant-one trajectory descends from 8/9") {
    Rational eps(1, 2);
    std::vector<Rational> y(5, Rational(1));
    auto d = lelek::descending_trajectory(kThreeLine, y, eps);
    for (const auto& iv : d.intervals) {
        CHECK(iv.lo == Rational(8, 9));
        CHECK(iv.hi == Rational(1));
    }
    CHECK(d.intervals.back().diam() >= Rational(1, 36));
    check_conclusions(kThreeLine, y, eps, d);
}

TEST_CASE("single high value gives the base window") {
    Rational eps(1, 2);
    std::vector<Rational> y{Rational(3, 4)};
    auto d = lelek::descending_trajectory(kThreeLine, y, eps);
    REQUIRE(d.intervals.size() == 1);
    CHECK(d.intervals[0].lo == Rational(3, 4) - Rational(2) * eps / Rational(9));
    CHECK(d.intervals[0].hi == Rational(3, 4));
    CHECK(d.intervals[0].diam() == Rational(2) * eps / Rational(9));
}

TEST_CASE("zero trajectory still yields a usable window") {
    Rational eps(1, 4);
    std::vector<Rational> y(4, Rational(0));
    auto d = lelek::descending_trajectory(kThreeLine, y, eps);
    check_conclusions(kThreeLine, y, eps, d);
}

TEST_CASE("randomized trajectories satisfy all conclusions") {
    std::mt19937 rng(41);
    for (const SlopeSet* omega : {&kThreeLine, &kFamilyFive}) {
        for (int t = 0; t < 120; ++t) {
            std::uniform_int_distribution<std::size_t> len(1, 8);
            auto y = random_trajectory(*omega, rng, len(rng));
            // the family bound: steps stay within a factor of 3
            for (std::size_t i = 0; i + 1 < y.size(); ++i) {
                CHECK(y[i + 1] >= y[i] / Rational(3));
                CHECK(y[i + 1] <= y[i] * Rational(3));
            }
            for (long e : {2l, 4l, 8l}) {
                Rational eps(1, e);
                auto d = lelek::descending_trajectory(*omega, y, eps);
                check_conclusions(*omega, y, eps, d);
            }
        }
    }
}

TEST_CASE("invalid trajectories are rejected") {
    CHECK_THROWS_AS(
        lelek::descending_trajectory(kThreeLine, {Rational(1, 3), Rational(1, 5)}, Rational(1, 2)),
        std::invalid_argument);
    CHECK_THROWS_AS(lelek::descending_trajectory(kThreeLine, {}, Rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        lelek::descending_trajectory(kThreeLine, {Rational(1, 2)}, Rational(2)),
        std::invalid_argument);
}
