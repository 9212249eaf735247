#include <lelek/metric.hpp>
#include <lelek/point.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using lelek::Rational;
using lelek::SlopeSet;
using lelek::TailKind;
using lelek::TruncatedPoint;

namespace {

const SlopeSet kTwoLine{Rational(1, 2), Rational(3)};
const SlopeSet kThreeLine{Rational(3), Rational(1), Rational(1, 2)};

TruncatedPoint random_point(const SlopeSet& omega, std::mt19937& rng, std::size_t len,
                            TailKind tail) {
    std::uniform_int_distribution<long> num(1, 32);
    std::vector<Rational> cs{Rational(num(rng), 32)};
    std::vector<int> word;
    std::uniform_int_distribution<std::size_t> pick(0, omega.size() - 1);
    while (cs.size() < len) {
        std::size_t tries = 0;
        while (true) {
            std::size_t j = pick(rng);
            Rational y = cs.back() * omega[j];
            if (y <= Rational(1)) {
                cs.push_back(y);
                word.push_back(static_cast<int>(j + 1));
                break;
            }
            if (++tries > 64) {  // fall back to the smallest slope
                std::size_t jm = omega.index_of(omega.smallest());
                cs.push_back(cs.back() * omega[jm]);
                word.push_back(static_cast<int>(jm + 1));
                break;
            }
        }
    }
    Rational cval = tail == TailKind::constant ? cs.back() : Rational(0);
    return TruncatedPoint::one_sided(cs, tail, cval, word);
}

}  // namespace

TEST_CASE("point validation") {
    auto good = TruncatedPoint::one_sided({Rational(1, 3), Rational(1), Rational(1, 2)});
    CHECK(lelek::validate_point(kTwoLine, good).ok);

    auto bad = TruncatedPoint::one_sided({Rational(1, 3), Rational(1, 2)});
    auto chk = lelek::validate_point(kTwoLine, bad);
    CHECK_FALSE(chk.ok);
    CHECK(chk.failing_index == 1);

    auto origin = TruncatedPoint::one_sided({Rational(0), Rational(0), Rational(0)},
                                            TailKind::zero);
    CHECK(lelek::validate_point(kTwoLine, origin).ok);

    // Constant tails need the identity line and a matching junction.
    auto c1 = TruncatedPoint::constant(Rational(1, 2));
    CHECK(lelek::validate_point(kThreeLine, c1).ok);
    CHECK_FALSE(lelek::validate_point(kTwoLine, c1).ok);

    // Word-aware validation rejects a wrong letter even if some line fits.
    auto worded = TruncatedPoint::one_sided({Rational(1, 3), Rational(1)}, TailKind::unknown,
                                            Rational(0), {1});
    CHECK_FALSE(lelek::validate_point(kTwoLine, worded).ok);  // letter 1 is the 1/2 line
    worded.word = {2};
    CHECK(lelek::validate_point(kTwoLine, worded).ok);
}

TEST_CASE("shift drops or relabels") {
    auto p = TruncatedPoint::one_sided({Rational(1, 3), Rational(1), Rational(1, 2)});
    auto q = lelek::shift(p, kTwoLine);
    REQUIRE(q.coords.size() == 2);
    CHECK(q.coords[0] == Rational(1));

    auto c = TruncatedPoint::constant(Rational(1, 2));
    auto cs = lelek::shift(c, kThreeLine);
    CHECK(cs.coords[0] == Rational(1, 2));
    CHECK(cs.tail == TailKind::constant);

    auto two = TruncatedPoint::two_sided_window(-2, {Rational(1, 4), Rational(1, 2), Rational(1, 4),
                                                     Rational(1, 8), Rational(1, 16)});
    auto shifted = lelek::shift(two, kTwoLine);
    CHECK(shifted.start == -3);
    CHECK(shifted.end_index() == 1);
    CHECK(shifted.at(0) == two.at(1));

    auto lone = TruncatedPoint::one_sided({Rational(1, 2)});
    CHECK_THROWS_AS(lelek::shift(lone, kTwoLine), std::invalid_argument);
}

TEST_CASE("metric on constant sequences") {
    auto a = TruncatedPoint::constant(Rational(1, 2));
    auto b = TruncatedPoint::constant(Rational(3, 4));
    auto d = lelek::metric_D(kThreeLine, a, b);
    CHECK(d.exact());
    CHECK(d.lower == Rational(1, 8));  // |1/2 - 3/4| / 2

    auto same = lelek::metric_D(kThreeLine, a, a);
    CHECK(same.exact());
    CHECK(same.lower == Rational(0));
}

TEST_CASE("metric with zero tails resolves exactly") {
    auto x = TruncatedPoint::one_sided({Rational(1), Rational(1, 2)}, TailKind::zero);
    auto zero = TruncatedPoint::one_sided({Rational(0)}, TailKind::zero);
    auto d = lelek::metric_D(kTwoLine, x, zero);
    CHECK(d.exact());
    CHECK(d.lower == Rational(1, 2));
}

TEST_CASE("metric with unknown tails gives an enclosure") {
    auto x = TruncatedPoint::one_sided({Rational(1), Rational(1, 2), Rational(1, 4)});
    auto y = TruncatedPoint::one_sided({Rational(1), Rational(1, 2), Rational(1, 4)});
    auto d = lelek::metric_D(kTwoLine, x, y);
    CHECK(d.lower == Rational(0));
    CHECK(d.upper == Rational(1, 16));  // first unknown index is 4
    CHECK_FALSE(d.exact());
}

TEST_CASE("mismatched sidedness is rejected") {
    auto one = TruncatedPoint::one_sided({Rational(1, 2)});
    auto two = TruncatedPoint::two_sided_window(-1, {Rational(1, 2), Rational(1, 4), Rational(1, 8)});
    CHECK_THROWS_AS(lelek::metric_D(kTwoLine, one, two), std::invalid_argument);
}

TEST_CASE("two-sided metric weights by absolute index") {
    auto p = TruncatedPoint::two_sided_window(
        -2, {Rational(1, 4), Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)});
    auto q = TruncatedPoint::two_sided_window(
        -2, {Rational(1, 4), Rational(1, 2), Rational(1, 2), Rational(1, 4), Rational(1, 8)});
    auto d = lelek::metric_D(kTwoLine, p, q);
    // differences: index 0: 1/4, index 1: 1/8, index 2: 1/16 -> terms 1/4, 1/16, 1/64
    CHECK(d.lower == Rational(1, 4));
    CHECK(d.upper == Rational(1, 4));  // slack 2^-3 on both sides is below the max
}

TEST_CASE("shift is 2-Lipschitz on certified bounds") {
    std::mt19937 rng(21);
    for (int t = 0; t < 100; ++t) {
        auto x = random_point(kThreeLine, rng, 6, TailKind::constant);
        auto y = random_point(kThreeLine, rng, 6, TailKind::constant);
        // constant tails for exactness; junction validity is irrelevant to D
        auto d = lelek::metric_D(kThreeLine, x, y);
        auto ds = lelek::metric_D(kThreeLine, lelek::shift(x, kThreeLine),
                                  lelek::shift(y, kThreeLine));
        CHECK(ds.upper <= Rational(2) * d.upper);
    }
}

TEST_CASE("metric agrees with a direct finite computation on resolved points") {
    std::mt19937 rng(22);
    for (int t = 0; t < 100; ++t) {
        auto x = random_point(kThreeLine, rng, 5, TailKind::constant);
        auto y = random_point(kThreeLine, rng, 7, TailKind::zero);
        auto d = lelek::metric_D(kThreeLine, x, y);
        CHECK(d.exact());
        // Direct oracle: extend both far past every window and take the max term.
        Rational best(0);
        Rational xv, yv;
        for (long i = 1; i <= 64; ++i) {
            xv = i <= x.end_index() ? x.at(i) : x.tail_value;
            yv = i <= y.end_index() ? y.at(i)
                                    : y.coords.back() *
                                          lelek::pow_nonneg(kThreeLine.smallest(),
                                                            static_cast<unsigned>(i - y.end_index()));
            best = lelek::max(best, lelek::abs(xv - yv) * lelek::pow2(-i));
        }
        CHECK(d.lower == best);  // the tail beyond 64 is dominated by earlier terms
    }
}
