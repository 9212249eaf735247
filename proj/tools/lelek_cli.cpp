// Command-line surface over the library: validation, images, series,
// tracing, pseudo-orbits, shadowing certificates, and fan rendering.
//
// Exit codes: 0 success, 1 usage error, 2 validation/check failure,
// 3 inconclusive (a resource cap was hit).

#include <lelek/lelek.hpp>
#include <lelek/serialize.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using lelek::Json;
using lelek::Rational;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;
constexpr int kInconclusive = 3;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << body;
}

void emit(const Json& j, const std::string& out_path) {
    std::string body = j.dump(2);
    body.push_back('\n');
    if (out_path.empty())
        std::cout << body;
    else
        write_text_file(out_path, body);
}

std::vector<int> word_to_indices(const lelek::SlopeSet& omega, const std::string& csv) {
    lelek::SlopeSet values = lelek::SlopeSet::parse(csv);
    std::vector<int> out;
    for (const auto& v : values.slopes) {
        std::size_t idx = omega.index_of(v);
        if (idx == lelek::SlopeSet::npos)
            throw std::invalid_argument("word slope " + v.str() + " is not in the slope set");
        out.push_back(static_cast<int>(idx + 1));
    }
    return out;
}

lelek::Interval parse_interval(const std::string& csv) {
    auto comma = csv.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("interval must be lo,hi");
    return {Rational::parse(csv.substr(0, comma)), Rational::parse(csv.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact line-relation dynamics on the unit interval"};
    app.require_subcommand(1);

    std::string slopes_csv, interval_csv, out_path, profile, spec_path, point_path, po_path;
    std::string eps_s = "1/2", delta_s, gamma_s, a_s, word_csv, kind = "staircase";
    unsigned n = 1, depth = 3, horizon = 0, n0 = 1;
    long shadow_depth = 12;
    bool inverse = false;

    auto* validate = app.add_subcommand("validate", "check a slope set against a profile");
    validate->add_option("--slopes", slopes_csv)->required();
    validate->add_option("--profile", profile)->required()
        ->check(CLI::IsMember({"lf_inducing", "trace_family"}));

    auto* nc = app.add_subcommand("nc-check", "multiplicative-independence test for a pair");
    std::string nc_r, nc_rho;
    nc->add_option("r", nc_r)->required();
    nc->add_option("rho", nc_rho)->required();

    auto* image = app.add_subcommand("image", "one-step image of an interval union");
    image->add_option("--slopes", slopes_csv)->required();
    image->add_option("--interval", interval_csv)->required();
    image->add_flag("--inverse", inverse);
    image->add_option("--out", out_path);

    auto* iterate = app.add_subcommand("iterate", "n-step image of an interval union");
    iterate->add_option("--slopes", slopes_csv)->required();
    iterate->add_option("--interval", interval_csv)->required();
    iterate->add_option("--n", n)->required();
    iterate->add_flag("--inverse", inverse);
    iterate->add_option("--out", out_path);

    auto* series = app.add_subcommand("hausdorff-series", "distance-to-full series of image iterates");
    series->add_option("--slopes", slopes_csv)->required();
    series->add_option("--interval", interval_csv)->required();
    series->add_option("--n", n)->required();
    series->add_option("--out", out_path);

    auto* diag = app.add_subcommand("diag-power", "is the diagonal inside the n-th relation power");
    diag->add_option("--slopes", slopes_csv)->required();
    diag->add_option("--n", n)->required();
    unsigned ev_horizon = 0;
    diag->add_option("--eventual-horizon", ev_horizon,
                     "also certify a threshold K within this horizon");

    auto* trace = app.add_subcommand("trace", "trace a specification by one orbit");
    trace->add_option("--slopes", slopes_csv)->required();
    trace->add_option("--spec", spec_path)->required();
    trace->add_option("--eps", eps_s)->required();
    trace->add_option("--out", out_path);

    auto* vtrace = app.add_subcommand("verify-trace", "definitional trace check");
    vtrace->add_option("--spec", spec_path)->required();
    vtrace->add_option("--point", point_path)->required();
    vtrace->add_option("--eps", eps_s)->required();

    auto* po = app.add_subcommand("pseudo-orbit", "generate a pseudo-orbit");
    po->add_option("--kind", kind)->check(CLI::IsMember({"staircase", "diagonal"}));
    po->add_option("--n0", n0);
    po->add_option("--slopes", slopes_csv);
    po->add_option("--word", word_csv);
    po->add_option("--a", a_s);
    po->add_option("--delta", delta_s);
    po->add_option("--out", out_path);

    auto* noshadow = app.add_subcommand("no-shadow", "shadowing feasibility through a horizon");
    noshadow->add_option("--slopes", slopes_csv)->required();
    noshadow->add_option("--po", po_path)->required();
    noshadow->add_option("--eps", eps_s)->required();
    noshadow->add_option("--horizon", horizon)->required();
    noshadow->add_option("--depth", shadow_depth);
    noshadow->add_option("--out", out_path);

    auto* fan = app.add_subcommand("fan-svg", "render the arc decomposition");
    fan->add_option("--slopes", slopes_csv)->required();
    fan->add_option("--depth", depth);
    fan->add_option("--out", out_path)->required();

    auto* periodic = app.add_subcommand("periodic", "periodic point near a two-sided point");
    periodic->add_option("--slopes", slopes_csv)->required();
    periodic->add_option("--point", point_path)->required();
    periodic->add_option("--eps", eps_s)->required();
    periodic->add_option("--out", out_path);

    auto* endpoint = app.add_subcommand("endpoint", "arc-maximal point near a one-sided point");
    endpoint->add_option("--slopes", slopes_csv)->required();
    endpoint->add_option("--point", point_path)->required();
    endpoint->add_option("--eps", eps_s)->required();
    endpoint->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            auto omega = lelek::SlopeSet::parse(slopes_csv);
            auto prof = profile == "lf_inducing" ? lelek::SlopeProfile::lf_inducing
                                                 : lelek::SlopeProfile::trace_family;
            auto rep = lelek::validate_slope_set(omega, prof);
            if (rep.pass) {
                std::cout << "pass\n";
                return kOk;
            }
            for (const auto& f : rep.failures)
                std::cout << "fail(" << f.clause << "): " << f.detail << "\n";
            return kCheckFailed;
        }
        if (nc->parsed()) {
            bool ok = lelek::never_connect(Rational::parse(nc_r), Rational::parse(nc_rho));
            std::cout << "never-connect: " << (ok ? "true" : "false") << "\n";
            return kOk;
        }
        if (image->parsed() || iterate->parsed()) {
            auto omega = lelek::SlopeSet::parse(slopes_csv);
            auto ab = parse_interval(interval_csv);
            auto dir = inverse ? lelek::ImageDirection::inverse : lelek::ImageDirection::forward;
            auto result = lelek::iterate_image(omega, lelek::IntervalUnion::of(ab.lo, ab.hi),
                                               image->parsed() ? 1 : n, dir);
            emit(lelek::to_json(result), out_path);
            return kOk;
        }
        if (series->parsed()) {
            auto omega = lelek::SlopeSet::parse(slopes_csv);
            auto ab = parse_interval(interval_csv);
            auto s = lelek::growing_images_series(omega, lelek::IntervalUnion::of(ab.lo, ab.hi), n);
            std::string csv = lelek::series_csv(s);
            if (out_path.empty())
                std::cout << csv;
            else
                write_text_file(out_path, csv);
            std::cout << "verdict: " << lelek::to_string(s.verdict) << "\n";
            return kOk;
        }
        if (diag->parsed()) {
            auto omega = lelek::SlopeSet::parse(slopes_csv);
            bool in = lelek::diagonal_in_power(omega, n);
            std::cout << "diagonal-in-power(" << n << "): " << (in ? "true" : "false") << "\n";
            if (ev_horizon > 0) {
                auto k = lelek::eventual_diagonal_threshold(omega, ev_horizon);
                if (k)
                    std::cout << "eventual-threshold: " << *k << "\n";
                else
                    std::cout << "eventual-threshold: none\n";
            }
            return kOk;
        }
        if (trace->parsed()) {
            auto omega = lelek::SlopeSet::parse(slopes_csv);
            auto spec = lelek::specification_from_json(read_json_file(spec_path));
            auto result = lelek::trace_specification(omega, spec, Rational::parse(eps_s));
            emit(lelek::to_json(result), out_path);
            return kOk;
        }
        if (vtrace->parsed()) {
            auto spec = lelek::specification_from_json(read_json_file(spec_path));
            auto pt = lelek::point_from_json(read_json_file(point_path));
            bool ok = lelek::verify_trace(spec, pt, Rational::parse(eps_s));
            std::cout << (ok ? "traced: true" : "traced: false") << "\n";
            return ok ? kOk : kCheckFailed;
        }
        if (po->parsed()) {
            lelek::PseudoOrbit orbit;
            lelek::SlopeSet omega;
            if (kind == "staircase") {
                orbit = lelek::staircase_pseudo_orbit(n0);
                omega = lelek::SlopeSet::parse(slopes_csv.empty() ? "3,1,1/2" : slopes_csv);
            } else {
                if (slopes_csv.empty() || word_csv.empty() || a_s.empty() || delta_s.empty())
                    throw std::invalid_argument("diagonal kind needs --slopes --word --a --delta");
                omega = lelek::SlopeSet::parse(slopes_csv);
                orbit = lelek::diagonal_pseudo_orbit(omega, word_to_indices(omega, word_csv),
                                                     Rational::parse(a_s),
                                                     Rational::parse(delta_s));
            }
            auto chk = lelek::verify_pseudo_orbit(omega, orbit);
            emit(lelek::to_json(orbit), out_path);
            switch (chk.status) {
                case lelek::PseudoOrbitStatus::valid:
                    std::cout << "pseudo-orbit: valid at delta " << orbit.delta.str() << "\n";
                    return kOk;
                case lelek::PseudoOrbitStatus::invalid:
                    std::cout << "pseudo-orbit: invalid at step " << chk.failing_step << "\n";
                    return kCheckFailed;
                case lelek::PseudoOrbitStatus::undecidable:
                    std::cout << "pseudo-orbit: undecidable at step " << chk.failing_step << "\n";
                    return kInconclusive;
            }
        }
        if (noshadow->parsed()) {
            auto omega = lelek::SlopeSet::parse(slopes_csv);
            auto orbit = lelek::pseudo_orbit_from_json(read_json_file(po_path));
            auto res = lelek::shadow_feasible(omega, orbit, Rational::parse(eps_s), horizon,
                                              shadow_depth);
            emit(lelek::to_json(res), out_path);
            switch (res.status) {
                case lelek::ShadowStatus::sat: std::cout << "shadow: SAT\n"; return kOk;
                case lelek::ShadowStatus::unsat: std::cout << "shadow: UNSAT\n"; return kOk;
                case lelek::ShadowStatus::inconclusive:
                    std::cout << "shadow: inconclusive (cap exceeded)\n";
                    return kInconclusive;
            }
        }
        if (fan->parsed()) {
            auto omega = lelek::SlopeSet::parse(slopes_csv);
            write_text_file(out_path, lelek::render_fan(omega, depth));
            std::cout << "wrote " << out_path << "\n";
            return kOk;
        }
        if (periodic->parsed()) {
            auto omega = lelek::SlopeSet::parse(slopes_csv);
            auto pt = lelek::point_from_json(read_json_file(point_path));
            auto res = lelek::periodic_approximant(omega, pt, Rational::parse(eps_s));
            Json out{{"period", res.period},
                     {"block_len", res.block_len},
                     {"distance_upper", lelek::to_json(res.distance.upper)},
                     {"point", lelek::to_json(res.z)}};
            emit(out, out_path);
            return kOk;
        }
        if (endpoint->parsed()) {
            auto omega = lelek::SlopeSet::parse(slopes_csv);
            auto pt = lelek::point_from_json(read_json_file(point_path));
            auto res = lelek::endpoint_approx(omega, pt, Rational::parse(eps_s));
            Json out{{"certificate_upper", lelek::to_json(res.certificate.upper)},
                     {"point", lelek::to_json(res.endpoint)}};
            emit(out, out_path);
            return kOk;
        }
    } catch (const lelek::CapExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
