#pragma once

#include <lelek/arc.hpp>

#include <cmath>
#include <sstream>
#include <string>

namespace lelek {

struct FanStyle {
    unsigned width = 800;
    unsigned height = 800;
    double spread_degrees = 150.0;
    std::string stroke = "#20507a";
    double stroke_width = 0.8;
};

/// Fan picture: one polyline per arc of the given depth, top vertex at the
/// viewport origin. Layout is an arbitrary fixed projection: an arc's angle is
/// the cumulative offset of its word letters (prefix-weighted so shared
/// prefixes cluster), the radius is the running coordinate index, and the
/// polyline is scaled by the arc's first-coordinate maximum.
inline std::string render_fan(const SlopeSet& omega, unsigned depth,
                              const FanStyle& style = FanStyle{},
                              std::size_t cap = caps().arcs) {
    auto arcs = enumerate_arcs(omega, depth, cap);
    const double m = static_cast<double>(omega.size());
    const double spread = style.spread_degrees * 3.14159265358979323846 / 180.0;
    const double base_angle = (3.14159265358979323846 - spread) / 2.0;
    const double cx = style.width / 2.0;
    const double cy = style.height * 0.06;
    const double radius = 0.88 * std::min(style.width, style.height);

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
       << style.width << ' ' << style.height << "\">\n";
    os << "  <g fill=\"none\" stroke=\"" << style.stroke << "\" stroke-width=\""
       << style.stroke_width << "\">\n";
    for (const auto& arc : arcs) {
        // angle in (0,1): prefix-dominant mixing of letter positions
        double angle = 0.0;
        double weight = 1.0;
        for (int letter : arc.word) {
            weight /= m;
            angle += (static_cast<double>(letter) - 0.5) * weight;
        }
        double theta = base_angle + spread * angle;
        double scale = arc.maxima.front().to_double();
        os << "    <polyline points=\"";
        for (std::size_t j = 0; j < arc.maxima.size(); ++j) {
            double t = static_cast<double>(j) / static_cast<double>(arc.maxima.size() - 1);
            double r = radius * scale * t;
            double px = cx + r * std::cos(theta);
            double py = cy + r * std::sin(theta);
            os << px << ',' << py;
            if (j + 1 < arc.maxima.size()) os << ' ';
        }
        os << "\"/>\n";
    }
    os << "  </g>\n</svg>\n";
    return os.str();
}

}  // namespace lelek
