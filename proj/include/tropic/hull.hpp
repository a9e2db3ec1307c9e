#pragma once

// Lattice polygons and upper hulls of lifted lattice points.

#include "tropic/lattice.hpp"
#include "tropic/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace tropic {

/// Twice the signed area of the triangle (a, b, c).
constexpr std::int64_t cross(IntVec2 a, IntVec2 b, IntVec2 c) { return det2(b - a, c - a); }

/// Strict convex hull vertices in counter-clockwise order, starting at the
/// lexicographically smallest point. Collinear input yields its two
/// endpoints, a single point yields itself.
inline std::vector<IntVec2> convex_hull(std::vector<IntVec2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<IntVec2> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

/// Twice the area of a counter-clockwise polygon.
inline std::int64_t area2(const std::vector<IntVec2>& poly) {
    std::int64_t a = 0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        a += det2(poly[i], poly[(i + 1) % poly.size()]);
    return a;
}

/// Closed containment test for a counter-clockwise convex polygon
/// (segments and points are handled as degenerate polygons).
inline bool contains(const std::vector<IntVec2>& poly, IntVec2 p) {
    if (poly.empty()) return false;
    if (poly.size() == 1) return poly[0] == p;
    if (poly.size() == 2) {
        IntVec2 a = poly[0], b = poly[1];
        if (cross(a, b, p) != 0) return false;
        return dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
    }
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (cross(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
    return true;
}

/// All lattice points of a convex lattice polygon.
inline std::vector<IntVec2> lattice_points(const std::vector<IntVec2>& poly) {
    std::vector<IntVec2> out;
    if (poly.empty()) return out;
    auto [xmin, xmax] = std::minmax_element(poly.begin(), poly.end(),
                                            [](IntVec2 a, IntVec2 b) { return a.x < b.x; });
    auto [ymin, ymax] = std::minmax_element(poly.begin(), poly.end(),
                                            [](IntVec2 a, IntVec2 b) { return a.y < b.y; });
    for (std::int64_t x = xmin->x; x <= xmax->x; ++x)
        for (std::int64_t y = ymin->y; y <= ymax->y; ++y)
            if (contains(poly, {x, y})) out.push_back({x, y});
    return out;
}

/// Number of lattice points on the boundary of a polygon.
inline std::int64_t boundary_lattice_length(const std::vector<IntVec2>& poly) {
    if (poly.size() < 2) return 0;
    if (poly.size() == 2) return 2 * lattice_length(poly[1] - poly[0]);
    std::int64_t b = 0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        b += lattice_length(poly[(i + 1) % poly.size()] - poly[i]);
    return b;
}

struct LiftedPoint {
    IntVec2 exponent;
    Rational height;
};

/// Affine function a -> slope . a + constant on the exponent plane.
struct AffineMap {
    Rational slope_x;
    Rational slope_y;
    Rational constant;

    Rational operator()(IntVec2 a) const {
        return slope_x * Rational(static_cast<long long>(a.x)) +
               slope_y * Rational(static_cast<long long>(a.y)) + constant;
    }
    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// One face of the upper hull of lifted points.
struct UpperFace {
    std::vector<IntVec2> cell;    ///< hull vertices of the face, counter-clockwise
    std::vector<IntVec2> points;  ///< every input exponent lifted onto the face, sorted
    AffineMap affine;             ///< plane carrying the face
};

namespace detail {

inline std::optional<AffineMap> plane_through(const LiftedPoint& p, const LiftedPoint& q,
                                              const LiftedPoint& r) {
    std::int64_t d = cross(p.exponent, q.exponent, r.exponent);
    if (d == 0) return std::nullopt;
    // Solve sx*(q-p).x + sy*(q-p).y = hq-hp and likewise for r.
    IntVec2 u = q.exponent - p.exponent, v = r.exponent - p.exponent;
    Rational du = q.height - p.height, dv = r.height - p.height;
    Rational D(static_cast<long long>(d));
    Rational sx = (du * Rational(static_cast<long long>(v.y)) -
                   dv * Rational(static_cast<long long>(u.y))) / D;
    Rational sy = (dv * Rational(static_cast<long long>(u.x)) -
                   du * Rational(static_cast<long long>(v.x))) / D;
    AffineMap m{sx, sy, 0};
    m.constant = p.height - m(p.exponent);
    return m;
}

inline std::vector<UpperFace> upper_hull_collinear(const std::vector<LiftedPoint>& pts) {
    // Parametrise the line as base + t * u with u primitive.
    IntVec2 base = pts[0].exponent;
    IntVec2 u{0, 0};
    for (const auto& p : pts)
        if (p.exponent != base) { u = primitive(p.exponent - base); break; }
    std::vector<std::pair<std::int64_t, Rational>> line;
    for (const auto& p : pts) {
        IntVec2 d = p.exponent - base;
        line.emplace_back(u.x != 0 ? d.x / u.x : d.y / u.y, p.height);
    }
    std::sort(line.begin(), line.end());
    // Upper chain by monotone scan.
    std::vector<std::size_t> chain;
    auto turn = [&](std::size_t a, std::size_t b, std::size_t c) {
        Rational t1(static_cast<long long>(line[b].first - line[a].first));
        Rational t2(static_cast<long long>(line[c].first - line[a].first));
        return t1 * (line[c].second - line[a].second) - t2 * (line[b].second - line[a].second);
    };
    for (std::size_t i = 0; i < line.size(); ++i) {
        while (chain.size() >= 2 && turn(chain[chain.size() - 2], chain.back(), i).sign() >= 0)
            chain.pop_back();
        chain.push_back(i);
    }
    Rational uu(static_cast<long long>(dot(u, u)));
    std::vector<UpperFace> faces;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        auto [t1, h1] = line[chain[k]];
        auto [t2, h2] = line[chain[k + 1]];
        Rational lambda = (h2 - h1) / Rational(static_cast<long long>(t2 - t1)) / uu;
        AffineMap m{lambda * Rational(static_cast<long long>(u.x)),
                    lambda * Rational(static_cast<long long>(u.y)), 0};
        IntVec2 a1 = base + t1 * u, a2 = base + t2 * u;
        m.constant = h1 - m(a1);
        UpperFace f;
        f.cell = convex_hull({a1, a2});
        f.affine = m;
        for (const auto& p : pts)
            if (contains(f.cell, p.exponent) && m(p.exponent) == p.height)
                f.points.push_back(p.exponent);
        std::sort(f.points.begin(), f.points.end());
        faces.push_back(std::move(f));
    }
    return faces;
}

}  // namespace detail

/// Upper hull of lifted lattice points. The projections of the returned
/// faces subdivide the convex hull of the exponents; exponents lifted
/// strictly below the hull belong to no face.
///
/// Faces are found by checking every triple of affinely independent points,
/// which is adequate for the few hundred points a plane curve of small degree
/// carries.
inline std::vector<UpperFace> upper_hull_lift(const std::vector<LiftedPoint>& pts) {
    std::vector<UpperFace> faces;
    if (pts.empty()) return faces;
    {
        std::set<IntVec2> seen;
        for (const auto& p : pts)
            if (!seen.insert(p.exponent).second) throw DomainError("duplicate exponent in lift");
    }
    std::vector<IntVec2> exps;
    for (const auto& p : pts) exps.push_back(p.exponent);
    auto hull = convex_hull(exps);
    if (hull.size() == 1) {
        faces.push_back({{pts[0].exponent}, {pts[0].exponent}, {0, 0, pts[0].height}});
        return faces;
    }
    if (hull.size() == 2) return detail::upper_hull_collinear(pts);

    std::vector<std::tuple<Rational, Rational, Rational>> found;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                auto plane = detail::plane_through(pts[i], pts[j], pts[k]);
                if (!plane) continue;
                auto key = std::make_tuple(plane->slope_x, plane->slope_y, plane->constant);
                if (std::find(found.begin(), found.end(), key) != found.end()) continue;
                bool upper = true;
                std::vector<IntVec2> on;
                for (const auto& p : pts) {
                    Rational h = (*plane)(p.exponent);
                    if (p.height > h) { upper = false; break; }
                    if (p.height == h) on.push_back(p.exponent);
                }
                if (!upper) continue;
                found.push_back(key);
                std::sort(on.begin(), on.end());
                UpperFace f;
                f.cell = convex_hull(on);
                f.points = std::move(on);
                f.affine = *plane;
                faces.push_back(std::move(f));
            }
    std::sort(faces.begin(), faces.end(),
              [](const UpperFace& a, const UpperFace& b) { return a.cell < b.cell; });
    return faces;
}

/// Height of the upper hull above a point of the exponents' convex hull.
inline Rational hull_height(const std::vector<UpperFace>& faces, IntVec2 p) {
    std::optional<Rational> best;
    for (const auto& f : faces) {
        Rational h = f.affine(p);
        if (!best || h < *best) best = h;
    }
    if (!best) throw DomainError("empty hull");
    return *best;
}

}  // namespace tropic
