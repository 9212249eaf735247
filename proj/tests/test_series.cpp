#include <lelek/hausdorff_series.hpp>

#include <catch2/catch_amalgamated.hpp>

using lelek::IntervalUnion;
using lelek::Rational;
using lelek::SeriesVerdict;
using lelek::SlopeSet;

namespace {
const SlopeSet kTwoLine{Rational(1, 2), Rational(3)};
const SlopeSet kThreeLine{Rational(3), Rational(1), Rational(1, 2)};
}  // namespace

TEST_CASE("two-line series stays obstructed above 1/9") {
    auto s = lelek::growing_images_series(kTwoLine, IntervalUnion::of(Rational(5, 6), Rational(1)),
                                          40);
    REQUIRE(s.entries.size() == 41);
    for (std::size_t i = 1; i < s.entries.size(); ++i)
        CHECK(s.entries[i].value >= Rational(1, 9));
    CHECK(s.verdict == SeriesVerdict::mixing_obstructed);
}

TEST_CASE("the identity line drives the distance down") {
    auto s = lelek::growing_images_series(kThreeLine,
                                          IntervalUnion::of(Rational(5, 6), Rational(1)), 40);
    for (std::size_t i = 1; i < s.entries.size(); ++i)
        CHECK(s.entries[i].value <= s.entries[i - 1].value);
    CHECK(s.entries.back().value < Rational(1, 1024));
    CHECK(s.verdict == SeriesVerdict::consistent_with_mixing);
}

TEST_CASE("the full interval is already everything") {
    auto s = lelek::growing_images_series(kTwoLine, IntervalUnion::of(Rational(0), Rational(1)), 8);
    for (const auto& e : s.entries) CHECK(e.value.is_zero());
    CHECK(s.verdict == SeriesVerdict::consistent_with_mixing);
}

TEST_CASE("gap between the top components matches the product bound") {
    // After M steps the gap between the two highest components of the image of
    // [5/6, 1] spans (alpha/6, 5*alpha/6) where alpha is the largest sub-1
    // product.
    auto a = IntervalUnion::of(Rational(5, 6), Rational(1));
    for (unsigned m = 1; m <= 12; ++m) {
        auto img = lelek::iterate_image(kTwoLine, a, m);
        auto alpha = lelek::alpha_max(kTwoLine, m);
        REQUIRE(alpha.has_value());
        REQUIRE(img.size() >= 2);
        const auto& parts = img.parts();
        const auto& top = parts[parts.size() - 1];
        const auto& second = parts[parts.size() - 2];
        CHECK(top.lo == *alpha * Rational(5, 6));
        CHECK(top.hi == *alpha);
        CHECK(second.hi == *alpha / Rational(6));
        CHECK(top.lo - second.hi == *alpha * Rational(2, 3));
    }
}

TEST_CASE("csv export carries exact columns and a tagged decimal") {
    auto s = lelek::growing_images_series(kTwoLine, IntervalUnion::of(Rational(5, 6), Rational(1)),
                                          2);
    auto csv = lelek::series_csv(s, 6);
    CHECK(csv.find("n,numerator,denominator,decimal_approx_6digits\n") == 0);
    CHECK(csv.find("1,1,2,0.500000") != std::string::npos);  // d_H at n=1 is 1/2
}
