#include <lelek/fan_svg.hpp>
#include <lelek/serialize.hpp>

#include <catch2/catch_amalgamated.hpp>

using lelek::Json;
using lelek::Rational;
using lelek::SlopeSet;

namespace {
const SlopeSet kTwoLine{Rational(1, 2), Rational(3)};
const SlopeSet kThreeLine{Rational(3), Rational(1), Rational(1, 2)};

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}
}  // namespace

TEST_CASE("rational json round trip is exact and string-based") {
    Rational r(123456789, 987654321);
    Json j = lelek::to_json(r);
    CHECK(j["num"].is_string());
    CHECK(j["den"].is_string());
    CHECK(lelek::rational_from_json(j) == r);
}

TEST_CASE("point json round trip") {
    auto p = lelek::TruncatedPoint::one_sided({Rational(1, 3), Rational(1), Rational(1, 2)},
                                              lelek::TailKind::constant, Rational(1, 2), {1, 3});
    auto q = lelek::point_from_json(lelek::to_json(p));
    CHECK(q.start == p.start);
    CHECK(q.coords == p.coords);
    CHECK(q.tail == p.tail);
    CHECK(q.tail_value == p.tail_value);
    CHECK(q.word == p.word);

    auto two = lelek::TruncatedPoint::two_sided_window(-2, {Rational(1, 4), Rational(1, 2),
                                                            Rational(1), Rational(1, 2),
                                                            Rational(1, 4)});
    auto rt = lelek::point_from_json(lelek::to_json(two));
    CHECK(rt.two_sided());
    CHECK(rt.start == -2);
}

TEST_CASE("specification json round trip") {
    lelek::Specification s;
    s.segments.push_back({2, 4, {Rational(1, 3), Rational(1), Rational(1, 2)}});
    s.segments.push_back({9, 9, {Rational(1, 8)}});
    auto rt = lelek::specification_from_json(lelek::to_json(s));
    REQUIRE(rt.segments.size() == 2);
    CHECK(rt.segments[0].k == 2);
    CHECK(rt.segments[0].values == s.segments[0].values);
    CHECK(rt.segments[1].l == 9);
}

TEST_CASE("serialization is byte-deterministic") {
    auto po = lelek::staircase_pseudo_orbit(3);
    auto a = lelek::to_json(po).dump(2);
    auto b = lelek::to_json(lelek::pseudo_orbit_from_json(lelek::to_json(po))).dump(2);
    CHECK(a == b);
}

TEST_CASE("certificates serialize with digit strings only") {
    auto po = lelek::staircase_pseudo_orbit(2);
    auto res = lelek::shadow_feasible(kThreeLine, po, Rational(1, 16), 4, 10);
    REQUIRE(res.status == lelek::ShadowStatus::unsat);
    auto j = lelek::to_json(res);
    CHECK(j["certificate"]["exhausted_branches"].get<unsigned long long>() > 0);
    std::string dump = j.dump();
    CHECK(dump.find('.') == std::string::npos);  // no floating point anywhere
    // Round trip through text is byte-identical.
    auto reparsed = Json::parse(dump);
    CHECK(reparsed.dump() == dump);
}

TEST_CASE("fan svg shape") {
    auto svg = lelek::render_fan(kTwoLine, 1);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("viewBox=") != std::string::npos);
    CHECK(count_occurrences(svg, "<polyline") == 2);
    CHECK(svg.find("</svg>") != std::string::npos);

    auto svg3 = lelek::render_fan(kThreeLine, 3);
    CHECK(count_occurrences(svg3, "<polyline") == 27);
    // deterministic output
    CHECK(svg3 == lelek::render_fan(kThreeLine, 3));

    CHECK_THROWS_AS(lelek::render_fan(kThreeLine, 15), lelek::CapExceeded);
}
