#include <lelek/arc.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using lelek::Rational;
using lelek::SlopeSet;
using lelek::TailKind;
using lelek::TruncatedPoint;

namespace {
const SlopeSet kTwoLine{Rational(1, 2), Rational(3)};
}

TEST_CASE("arc ranges from prefix products") {
    // letters: 1 = slope 1/2, 2 = slope 3
    auto m = lelek::arc_range(kTwoLine, {2, 2});
    REQUIRE(m.size() == 3);
    CHECK(m[0] == Rational(1, 9));
    CHECK(m[1] == Rational(1, 3));
    CHECK(m[2] == Rational(1));

    m = lelek::arc_range(kTwoLine, {1});
    CHECK(m == std::vector<Rational>{Rational(1), Rational(1, 2)});

    m = lelek::arc_range(kTwoLine, {2, 1});
    CHECK(m == std::vector<Rational>{Rational(1, 3), Rational(1), Rational(1, 2)});
}

TEST_CASE("arc range maxima are sharp") {
    // At the maximum the orbit stays admissible; a nudge above breaks it.
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> letter(1, 2);
    const Rational nudge(1, 1 << 20);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> word;
        for (int i = 0; i < 6; ++i) word.push_back(letter(rng));
        auto maxima = lelek::arc_range(kTwoLine, word);
        Rational x = maxima[0];
        bool ok = true;
        Rational v = x;
        for (std::size_t j = 0; j < word.size(); ++j) {
            v *= kTwoLine[static_cast<std::size_t>(word[j] - 1)];
            ok = ok && v <= Rational(1) && v == maxima[j + 1] ;
        }
        CHECK(ok);
        Rational above = x + nudge;
        bool breaks = false;
        v = above;
        for (std::size_t j = 0; j < word.size(); ++j) {
            v *= kTwoLine[static_cast<std::size_t>(word[j] - 1)];
            breaks = breaks || v > Rational(1);
        }
        CHECK(breaks);
    }
}

TEST_CASE("arc enumeration is lexicographic and capped") {
    auto arcs = lelek::enumerate_arcs(kTwoLine, 1);
    REQUIRE(arcs.size() == 2);
    CHECK(arcs[0].word == std::vector<int>{1});
    CHECK(arcs[1].word == std::vector<int>{2});

    arcs = lelek::enumerate_arcs(kTwoLine, 3);
    CHECK(arcs.size() == 8);
    for (const auto& arc : arcs)
        for (const auto& m : arc.maxima) CHECK(m > Rational(0));

    CHECK_THROWS_AS(lelek::enumerate_arcs(kTwoLine, 20, 1000), lelek::CapExceeded);
}

TEST_CASE("endpoint next to the origin") {
    auto origin = TruncatedPoint::one_sided({Rational(0), Rational(0)}, TailKind::zero);
    for (long e = 2; e <= 64; e *= 4) {
        Rational eps(1, e);
        auto res = lelek::endpoint_approx(kTwoLine, origin, eps);
        CHECK(res.certificate.upper < eps);
        CHECK(lelek::validate_point(kTwoLine, res.endpoint).ok);
        CHECK(lelek::is_arc_maximal(kTwoLine, res.endpoint));
    }
}

TEST_CASE("endpoint close to a short-word point") {
    // Word (3): x1 = 1/4 under the 3-line then zero tail.
    auto p = TruncatedPoint::one_sided({Rational(1, 4), Rational(3, 4)}, TailKind::zero,
                                       Rational(0), {2});
    auto res = lelek::endpoint_approx(kTwoLine, p, Rational(1, 4));
    CHECK(res.certificate.upper < Rational(1, 4));
    CHECK(lelek::validate_point(kTwoLine, res.endpoint).ok);
    CHECK(lelek::is_arc_maximal(kTwoLine, res.endpoint));
    // First two coordinates stay within the 2^i-weighted budget.
    CHECK(lelek::abs(res.endpoint.at(1) - p.at(1)) < Rational(1, 2));
    CHECK(lelek::abs(res.endpoint.at(2) - p.at(2)) < Rational(1));
}

TEST_CASE("endpoint of an already arc-maximal point is itself") {
    // x1 = 1/3 is the arc maximum for the word (3, ...): products peak at 3.
    auto p = TruncatedPoint::one_sided({Rational(1, 3), Rational(1)}, TailKind::zero, Rational(0),
                                       {2});
    auto res = lelek::endpoint_approx(kTwoLine, p, Rational(1, 8));
    CHECK(res.endpoint.at(1) == Rational(1, 3));
    CHECK(res.certificate.exact());
    CHECK(res.certificate.upper == Rational(0));
}

TEST_CASE("shallow unknown windows cannot be certified") {
    auto p = TruncatedPoint::one_sided({Rational(1, 2), Rational(1, 4)});
    CHECK_THROWS_AS(lelek::endpoint_approx(kTwoLine, p, Rational(1, 64)), std::invalid_argument);
}
