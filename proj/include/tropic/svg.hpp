#pragma once

// Static SVG drawings of curves and subdivisions. Decimal output only here.

#include "tropic/curve.hpp"
#include "tropic/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace tropic {

struct RenderSpec {
    double margin = 0.10;       ///< fraction of the fitted extent added on each side
    double ray_clip = 0.35;     ///< visible ray length as a fraction of the extent
    double stroke = 0.012;      ///< stroke width of weight 1, relative to the extent
    double stroke_per_weight = 0.5;
    bool weight_labels = true;
};

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

struct Box {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool set = false;
    void add(double x, double y) {
        if (!set) { x0 = x1 = x; y0 = y1 = y; set = true; return; }
        x0 = std::min(x0, x); x1 = std::max(x1, x);
        y0 = std::min(y0, y); y1 = std::max(y1, y);
    }
    double extent() const { return std::max({x1 - x0, y1 - y0, 1.0}); }
};

inline std::string svg_open(const Box& b, double margin) {
    double pad = margin * b.extent();
    double w = b.x1 - b.x0 + 2 * pad, h = b.y1 - b.y0 + 2 * pad;
    std::ostringstream os;
    // y axis points up: svg y = -y.
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(b.x0 - pad) << ' ' << num(-b.y1 - pad) << ' '
       << num(w) << ' ' << num(h) << "\" width=\"400\" height=\"" << num(400 * h / w) << "\">\n";
    return os.str();
}

}  // namespace detail

inline std::string render_svg(const PlaneTropicalCurve& c, const RenderSpec& spec = {}) {
    using detail::num;
    if (c.empty()) {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.0000 -1.0000 2.0000 2.0000\" width=\"400\" height=\"400\">\n"
               "<text class=\"notice\" x=\"0.0000\" y=\"0.0000\" font-size=\"0.2000\" text-anchor=\"middle\">empty curve</text>\n"
               "</svg>\n";
    }
    detail::Box core;
    for (const auto& v : c.vertices) core.add(v.x.to_double(), v.y.to_double());
    for (const auto& l : c.lines) core.add(l.base.x.to_double(), l.base.y.to_double());
    const double clip = spec.ray_clip * core.extent();
    detail::Box box = core;
    auto unit = [](IntVec2 u) {
        double n = std::hypot(static_cast<double>(u.x), static_cast<double>(u.y));
        return std::pair<double, double>{u.x / n, u.y / n};
    };
    for (const auto& r : c.rays) {
        auto [ux, uy] = unit(r.dir);
        box.add(c.vertices[r.base].x.to_double() + clip * ux, c.vertices[r.base].y.to_double() + clip * uy);
    }
    for (const auto& l : c.lines) {
        auto [ux, uy] = unit(l.dir);
        box.add(l.base.x.to_double() + clip * ux, l.base.y.to_double() + clip * uy);
        box.add(l.base.x.to_double() - clip * ux, l.base.y.to_double() - clip * uy);
    }
    const double ext = box.extent();
    const double far = 10 * ext;
    std::ostringstream os;
    os << detail::svg_open(box, spec.margin);
    auto width = [&](std::int64_t w) { return spec.stroke * ext * (1 + spec.stroke_per_weight * static_cast<double>(w - 1)); };
    auto segment = [&](const char* cls, double x0, double y0, double x1, double y1, std::int64_t w) {
        os << "<line class=\"" << cls << "\" x1=\"" << num(x0) << "\" y1=\"" << num(-y0) << "\" x2=\"" << num(x1) << "\" y2=\""
           << num(-y1) << "\" stroke=\"black\" stroke-width=\"" << num(width(w)) << "\" stroke-linecap=\"round\"/>\n";
    };
    std::vector<std::tuple<double, double, std::int64_t>> labels;
    for (const auto& e : c.edges) {
        const auto& a = c.vertices[e.from];
        const auto& b = c.vertices[e.to];
        segment("edge", a.x.to_double(), a.y.to_double(), b.x.to_double(), b.y.to_double(), e.weight);
        if (e.weight > 1) labels.emplace_back((a.x + b.x).to_double() / 2, (a.y + b.y).to_double() / 2, e.weight);
    }
    for (const auto& r : c.rays) {
        auto [ux, uy] = unit(r.dir);
        double x = c.vertices[r.base].x.to_double(), y = c.vertices[r.base].y.to_double();
        segment("ray", x, y, x + far * ux, y + far * uy, r.weight);
        if (r.weight > 1) labels.emplace_back(x + 0.6 * clip * ux, y + 0.6 * clip * uy, r.weight);
    }
    for (const auto& l : c.lines) {
        auto [ux, uy] = unit(l.dir);
        double x = l.base.x.to_double(), y = l.base.y.to_double();
        segment("line", x - far * ux, y - far * uy, x + far * ux, y + far * uy, l.weight);
        if (l.weight > 1) labels.emplace_back(x, y, l.weight);
    }
    for (const auto& v : c.vertices)
        os << "<circle class=\"vertex\" cx=\"" << num(v.x.to_double()) << "\" cy=\"" << num(-v.y.to_double()) << "\" r=\""
           << num(1.5 * spec.stroke * ext) << "\" fill=\"black\"/>\n";
    if (spec.weight_labels)
        for (const auto& [x, y, w] : labels)
            os << "<text class=\"weight\" x=\"" << num(x + 0.02 * ext) << "\" y=\"" << num(-y - 0.02 * ext) << "\" font-size=\""
               << num(0.05 * ext) << "\">" << w << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

inline std::string render_svg(const NewtonSubdivision& s, const RenderSpec& spec = {}) {
    using detail::num;
    detail::Box box;
    for (IntVec2 p : s.polygon) box.add(static_cast<double>(p.x), static_cast<double>(p.y));
    if (!box.set) throw DomainError("empty subdivision");
    const double ext = box.extent();
    std::ostringstream os;
    os << detail::svg_open(box, spec.margin);
    for (const auto& c : s.cells) {
        os << "<polygon class=\"cell\" points=\"";
        for (std::size_t k = 0; k < c.size(); ++k)
            os << (k ? " " : "") << num(static_cast<double>(c[k].x)) << ',' << num(-static_cast<double>(c[k].y));
        os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(spec.stroke * ext) << "\"/>\n";
    }
    for (IntVec2 p : lattice_points(s.polygon))
        os << "<circle class=\"lattice\" cx=\"" << num(static_cast<double>(p.x)) << "\" cy=\"" << num(-static_cast<double>(p.y))
           << "\" r=\"" << num(2 * spec.stroke * ext) << "\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace tropic
