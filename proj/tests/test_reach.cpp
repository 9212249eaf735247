#include <lelek/reach.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using lelek::Rational;
using lelek::SlopeSet;

namespace {
const SlopeSet kThreeLine{Rational(3), Rational(1), Rational(1, 2)};
const SlopeSet kTwoLine{Rational(1, 2), Rational(3)};

lelek::Interval random_wide_interval(std::mt19937& rng, const Rational& delta) {
    std::uniform_int_distribution<long> num(1, 1 << 12);
    while (true) {
        Rational a(num(rng), 1 << 12), b(num(rng), 1 << 12);
        if (a > b) std::swap(a, b);
        if (a > Rational(0) && b - a > delta) return {a, b};
    }
}
}  // namespace

TEST_CASE("verify_reach basics") {
    CHECK(lelek::verify_reach(kThreeLine, Rational(1, 2), Rational(1), Rational(1, 2), 1));
    CHECK_FALSE(lelek::verify_reach(kThreeLine, Rational(5, 6), Rational(1), Rational(1, 100), 0));
    CHECK(lelek::verify_reach(kThreeLine, Rational(1, 100), Rational(1), Rational(1, 100), 0));
}

TEST_CASE("fast lattice path agrees with stepwise images") {
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        auto ab = random_wide_interval(rng, Rational(1, 8));
        std::uniform_int_distribution<unsigned> nn(0, 7);
        std::uniform_int_distribution<long> gg(1, 15);
        unsigned n = nn(rng);
        Rational gamma(gg(rng), 16);
        bool fast = lelek::verify_reach(kThreeLine, ab.lo, ab.hi, gamma, n);
        auto img = lelek::iterate_image(kThreeLine, lelek::IntervalUnion::of(ab.lo, ab.hi), n);
        bool slow = img.covers(lelek::Interval{gamma, Rational(1)});
        CHECK(fast == slow);
        // Two-line set: products use exactly n factors.
        bool fast2 = lelek::verify_reach(kTwoLine, ab.lo, ab.hi, gamma, n);
        auto img2 = lelek::iterate_image(kTwoLine, lelek::IntervalUnion::of(ab.lo, ab.hi), n);
        CHECK(fast2 == img2.covers(lelek::Interval{gamma, Rational(1)}));
    }
}

TEST_CASE("reach horizon construction verifies at and past its own bound") {
    std::mt19937 rng(23);
    for (auto [ds, gs] : {std::pair{"1/2", "1/2"}, std::pair{"1/4", "1/4"}}) {
        Rational delta = Rational::parse(ds), gamma = Rational::parse(gs);
        auto w = lelek::reach_horizon(kThreeLine, delta, gamma);
        CHECK(w.horizon == w.block_steps + w.chain_steps);
        CHECK(w.chain.back().lower < gamma);
        for (const auto& b : w.blocks) {
            // The block inequalities hold verbatim.
            Rational v = lelek::pow_nonneg(Rational(3), b.p) / lelek::pow2(b.q);
            CHECK(v * Rational(b.block_index) / Rational(w.k) < Rational(1));
            CHECK(Rational(1) < v * Rational(b.block_index + 1) / Rational(w.k));
        }
        for (int t = 0; t < 5; ++t) {
            auto ab = random_wide_interval(rng, delta);
            for (unsigned extra = 0; extra <= 2; ++extra)
                CHECK(lelek::verify_reach(kThreeLine, ab.lo, ab.hi, gamma, w.horizon + extra));
        }
    }
}

TEST_CASE("example horizon (1/2, 1/2) verified on the benchmark interval") {
    auto w = lelek::reach_horizon(kThreeLine, Rational(1, 2), Rational(1, 2));
    CHECK(lelek::verify_reach(kThreeLine, Rational(1, 4), Rational(1), Rational(1, 2), w.horizon));
}

TEST_CASE("horizon is monotone in the target depth") {
    Rational delta(1, 4);
    unsigned prev = 0;
    for (long g : {4l, 8l, 16l, 32l}) {
        auto w = lelek::reach_horizon(kThreeLine, delta, Rational(1, g));
        CHECK(w.horizon >= prev);
        prev = w.horizon;
    }
}

TEST_CASE("reach horizon rejects bad inputs") {
    CHECK_THROWS_AS(lelek::reach_horizon(kThreeLine, Rational(0), Rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(lelek::reach_horizon(kThreeLine, Rational(1, 2), Rational(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(lelek::reach_horizon(kTwoLine, Rational(1, 2), Rational(1, 2)),
                    std::invalid_argument);
}
