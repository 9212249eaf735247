#pragma once

#include <lelek/interval_union.hpp>
#include <lelek/point.hpp>
#include <lelek/pseudo_orbit.hpp>
#include <lelek/reach.hpp>
#include <lelek/shadow.hpp>
#include <lelek/slope_set.hpp>
#include <lelek/specification.hpp>
#include <lelek/tracer.hpp>

#include <json.hpp>

#include <string>

namespace lelek {

using Json = nlohmann::ordered_json;

// Rationals travel as exact decimal digit strings, never as floats.
inline Json to_json(const Rational& r) {
    return Json{{"num", r.num_string()}, {"den", r.den_string()}};
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::from_strings(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

inline Json to_json(const SlopeSet& s) {
    Json slopes = Json::array();
    for (const auto& w : s.slopes) slopes.push_back(to_json(w));
    Json out{{"slopes", slopes}};
    if (s.designated_nc_pair)
        out["nc_pair"] = Json::array({s.designated_nc_pair->first, s.designated_nc_pair->second});
    return out;
}

inline SlopeSet slope_set_from_json(const Json& j) {
    SlopeSet s;
    for (const auto& e : j.at("slopes")) s.slopes.push_back(rational_from_json(e));
    if (j.contains("nc_pair"))
        s.designated_nc_pair = {j["nc_pair"].at(0).get<std::size_t>(),
                                j["nc_pair"].at(1).get<std::size_t>()};
    return s;
}

inline Json to_json(const IntervalUnion& u) {
    Json parts = Json::array();
    for (const auto& p : u.parts())
        parts.push_back(Json{{"lo", to_json(p.lo)}, {"hi", to_json(p.hi)}});
    return Json{{"intervals", parts}};
}

inline IntervalUnion interval_union_from_json(const Json& j) {
    std::vector<Interval> parts;
    for (const auto& e : j.at("intervals"))
        parts.emplace_back(rational_from_json(e.at("lo")), rational_from_json(e.at("hi")));
    return IntervalUnion::from_intervals(std::move(parts));
}

inline Json to_json(const TruncatedPoint& p) {
    Json coords = Json::array();
    for (const auto& c : p.coords) coords.push_back(to_json(c));
    Json tail;
    switch (p.tail) {
        case TailKind::unknown: tail = "unknown"; break;
        case TailKind::zero: tail = "zero"; break;
        case TailKind::constant: tail = Json{{"const", to_json(p.tail_value)}}; break;
    }
    return Json{{"start", p.start}, {"coords", coords}, {"tail", tail}, {"word", p.word}};
}

inline TruncatedPoint point_from_json(const Json& j) {
    TruncatedPoint p;
    p.start = j.at("start").get<long>();
    if (p.start > 1) throw std::invalid_argument("point: start must be 1 (one-sided) or <= 0");
    for (const auto& e : j.at("coords")) p.coords.push_back(rational_from_json(e));
    const auto& tail = j.at("tail");
    if (tail.is_string()) {
        std::string t = tail.get<std::string>();
        if (t == "unknown")
            p.tail = TailKind::unknown;
        else if (t == "zero")
            p.tail = TailKind::zero;
        else
            throw std::invalid_argument("point: unknown tail kind '" + t + "'");
    } else {
        p.tail = TailKind::constant;
        p.tail_value = rational_from_json(tail.at("const"));
    }
    if (j.contains("word")) p.word = j["word"].get<std::vector<int>>();
    return p;
}

inline Json to_json(const Specification& s) {
    Json segs = Json::array();
    for (const auto& seg : s.segments) {
        Json values = Json::array();
        for (const auto& v : seg.values) values.push_back(to_json(v));
        segs.push_back(Json{{"k", seg.k}, {"l", seg.l}, {"values", values}});
    }
    return Json{{"segments", segs}};
}

inline Specification specification_from_json(const Json& j) {
    Specification s;
    for (const auto& e : j.at("segments")) {
        OrbitSegment seg;
        seg.k = e.at("k").get<long>();
        seg.l = e.at("l").get<long>();
        for (const auto& v : e.at("values")) seg.values.push_back(rational_from_json(v));
        s.segments.push_back(std::move(seg));
    }
    return s;
}

inline Json to_json(const ReachWitness& w) {
    Json blocks = Json::array();
    for (const auto& b : w.blocks)
        blocks.push_back(Json{{"block", b.block_index},
                              {"p", b.p},
                              {"q", b.q},
                              {"a_delta", to_json(b.a_delta)}});
    Json chain = Json::array();
    for (const auto& c : w.chain)
        chain.push_back(Json{{"m", c.m}, {"n", c.n}, {"c", to_json(c.c)}, {"lower", to_json(c.lower)}});
    return Json{{"delta", to_json(w.delta)}, {"gamma", to_json(w.gamma)},
                {"k", w.k},                  {"blocks", blocks},
                {"a_star", to_json(w.a_star)}, {"chain", chain},
                {"block_steps", w.block_steps}, {"chain_steps", w.chain_steps},
                {"horizon", w.horizon}};
}

inline Json to_json(const TraceCertificate& c) {
    Json rows = Json::array();
    for (const auto& d : c.distances)
        rows.push_back(Json{{"segment", d.segment}, {"index", d.index},
                            {"distance", to_json(d.distance)}});
    return Json{{"eps", to_json(c.eps)}, {"distances", rows}};
}

inline Json to_json(const TraceResult& r) {
    return Json{{"point", to_json(r.y)},
                {"certificate", to_json(r.certificate)},
                {"reach_horizon", r.reach.horizon}};
}

inline Json to_json(const PseudoOrbit& po) {
    Json pts = Json::array();
    for (const auto& p : po.points) pts.push_back(to_json(p));
    return Json{{"delta", to_json(po.delta)}, {"points", pts}};
}

inline PseudoOrbit pseudo_orbit_from_json(const Json& j) {
    PseudoOrbit po;
    po.delta = rational_from_json(j.at("delta"));
    for (const auto& e : j.at("points")) po.points.push_back(point_from_json(e));
    return po;
}

inline Json to_json(const NoShadowCertificate& c) {
    Json cons = Json::array();
    for (const auto& cc : c.constraints)
        cons.push_back(Json{{"coord", cc.coord},
                            {"k", cc.k},
                            {"offset", cc.offset},
                            {"center", to_json(cc.center)},
                            {"radius", to_json(cc.radius)}});
    return Json{{"eps", to_json(c.eps)},
                {"horizon", c.horizon},
                {"depth", c.depth},
                {"exhausted_branches", c.exhausted_branches},
                {"constraints", cons}};
}

inline Json to_json(const ShadowResult& r) {
    Json out;
    switch (r.status) {
        case ShadowStatus::sat: out["status"] = "sat"; break;
        case ShadowStatus::unsat: out["status"] = "unsat"; break;
        case ShadowStatus::inconclusive: out["status"] = "inconclusive"; break;
    }
    out["nodes"] = r.nodes;
    if (r.witness) {
        out["witness"] = Json{{"word", r.witness->word},
                              {"first_index", r.witness->first_index},
                              {"chosen", to_json(r.witness->chosen)},
                              {"feasible_lo", to_json(r.witness->feasible_lo)},
                              {"feasible_hi", to_json(r.witness->feasible_hi)},
                              {"point", to_json(r.witness->point)}};
    }
    if (r.certificate) out["certificate"] = to_json(*r.certificate);
    return out;
}

}  // namespace lelek
