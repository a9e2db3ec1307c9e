#pragma once

// Newton subdivisions and the corner locus of a tropical polynomial.

#include "tropic/curve.hpp"
#include "tropic/hull.hpp"
#include "tropic/polynomial.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace tropic {

using LatticeSegment = std::pair<IntVec2, IntVec2>;  ///< endpoints, smaller first

inline LatticeSegment make_segment(IntVec2 a, IntVec2 b) { return a < b ? LatticeSegment{a, b} : LatticeSegment{b, a}; }

struct NewtonSubdivision {
    std::vector<IntVec2> polygon;               ///< counter-clockwise
    std::vector<std::vector<IntVec2>> cells;    ///< counter-clockwise vertex lists
    std::optional<std::map<IntVec2, Rational>> heights;

    /// Each cell edge with the cells containing it.
    std::map<LatticeSegment, std::vector<std::size_t>> edge_cells() const {
        std::map<LatticeSegment, std::vector<std::size_t>> m;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto& c = cells[i];
            if (c.size() < 3) continue;
            for (std::size_t k = 0; k < c.size(); ++k) m[make_segment(c[k], c[(k + 1) % c.size()])].push_back(i);
        }
        return m;
    }

    std::vector<LatticeSegment> interior_edges() const {
        std::vector<LatticeSegment> out;
        for (const auto& [s, cs] : edge_cells())
            if (cs.size() == 2) out.push_back(s);
        return out;
    }

    std::vector<LatticeSegment> boundary_edges() const {
        std::vector<LatticeSegment> out;
        for (const auto& [s, cs] : edge_cells())
            if (cs.size() == 1) out.push_back(s);
        return out;
    }

    std::vector<IntVec2> vertices() const {
        std::set<IntVec2> vs;
        for (const auto& c : cells) vs.insert(c.begin(), c.end());
        return {vs.begin(), vs.end()};
    }

    std::size_t two_cells() const {
        std::size_t n = 0;
        for (const auto& c : cells) n += c.size() >= 3;
        return n;
    }
};

/// Projection of the upper hull of the lifted support.
inline NewtonSubdivision newton_subdivision(const TropicalPolynomial& g) {
    NewtonSubdivision s;
    s.polygon = g.newton_polygon();
    for (const auto& f : g.lifted_hull()) s.cells.push_back(f.cell);
    std::map<IntVec2, Rational> h;
    for (const auto& [e, c] : g.terms()) h.emplace(e.vec(), c);
    s.heights = std::move(h);
    return s;
}

/// The duality between curve and subdivision recorded during construction.
struct DualityCertificate {
    std::vector<std::vector<IntVec2>> vertex_cell;  ///< dual cell of each curve vertex
    std::vector<LatticeSegment> edge_dual;          ///< dual interior edge of each bounded edge
    std::vector<LatticeSegment> ray_dual;           ///< dual boundary edge of each ray
    std::vector<LatticeSegment> line_dual;          ///< dual segment of each standalone line
};

struct CornerLocus {
    PlaneTropicalCurve curve;
    DualityCertificate certificate;
    NewtonSubdivision subdivision;
};

/// The corner locus, built dually from the Newton subdivision: one vertex per
/// 2-cell, one bounded edge per interior edge, one ray per boundary edge
/// along the outward normal, weights given by lattice lengths.
inline CornerLocus corner_locus(const TropicalPolynomial& g) {
    CornerLocus out;
    auto faces = g.lifted_hull();
    out.subdivision.polygon = g.newton_polygon();
    for (const auto& f : faces) out.subdivision.cells.push_back(f.cell);
    {
        std::map<IntVec2, Rational> h;
        for (const auto& [e, c] : g.terms()) h.emplace(e.vec(), c);
        out.subdivision.heights = std::move(h);
    }
    auto& curve = out.curve;
    auto& cert = out.certificate;

    if (out.subdivision.polygon.size() <= 2) {
        // Collinear support: every segment of the upper chain is a line.
        for (const auto& f : faces) {
            if (f.cell.size() != 2) continue;
            IntVec2 a = f.cell[0], b = f.cell[1];
            IntVec2 v = b - a;
            auto [u, w] = primitive_decompose(v);
            // Points x with <a,x> + h(a) = <b,x> + h(b), i.e. <v,x> = h(a) - h(b).
            Rational rhs = f.affine(a) - f.affine(b);
            PointQ2 p = u.x != 0 ? PointQ2(rhs / Rational(static_cast<long long>(v.x)), 0)
                                 : PointQ2(0, rhs / Rational(static_cast<long long>(v.y)));
            curve.lines.push_back(canonical_line(p, {-u.y, u.x}, w));
            cert.line_dual.push_back(make_segment(a, b));
        }
        return out;
    }

    for (const auto& f : faces) {
        curve.vertices.push_back({-f.affine.slope_x, -f.affine.slope_y});
        cert.vertex_cell.push_back(f.cell);
    }
    for (const auto& [seg, cs] : out.subdivision.edge_cells()) {
        auto [u, w] = primitive_decompose(seg.second - seg.first);
        if (cs.size() == 2) {
            curve.edges.push_back({cs[0], cs[1], w});
            cert.edge_dual.push_back(seg);
            if (dot(primitive_direction(curve.vertices[cs[0]], curve.vertices[cs[1]]), u) != 0)
                throw Error("corner locus: bounded edge not orthogonal to its dual");
        } else if (cs.size() == 1) {
            // Orient the segment counter-clockwise on its cell; the outward normal
            // of a ccw edge d is (d.y, -d.x).
            const auto& cell = out.subdivision.cells[cs[0]];
            IntVec2 d{0, 0};
            for (std::size_t k = 0; k < cell.size(); ++k) {
                IntVec2 p = cell[k], q = cell[(k + 1) % cell.size()];
                if (make_segment(p, q) == seg) d = q - p;
            }
            curve.rays.push_back({cs[0], primitive({d.y, -d.x}), w});
            cert.ray_dual.push_back(seg);
        } else {
            throw Error("corner locus: subdivision edge in more than two cells");
        }
    }
    if (!check_balancing(curve).balanced) throw Error("corner locus: balancing failed");
    return out;
}

/// All dual cells are triangles of area 1/2.
inline bool is_smooth(const PlaneTropicalCurve& c, const DualityCertificate& cert) {
    if (c.vertices.empty() || !c.lines.empty()) return false;
    for (const auto& cell : cert.vertex_cell)
        if (cell.size() != 3 || area2(cell) != 1) return false;
    return true;
}

struct DegreeGenusReport {
    int d = 0;
    int g = 0;
    int bound = 0;        ///< (d-1)(d-2)/2
    int deficiency = 0;   ///< bound - g
    bool minimal_areas = false;  ///< every dual k-gon has area (k-2)/2
    Rational cell_excess;        ///< sum over cells of area - (k-2)/2
    Rational end_excess;         ///< (3d - number of rays)/2
};

/// Genus bound and the decomposition
///   deficiency = cell_excess - end_excess,
/// which reduces to "deficiency = 0 iff all cells have minimal area" when
/// every end has weight 1.
inline DegreeGenusReport degree_genus_report(const PlaneTropicalCurve& c, const DualityCertificate& cert) {
    auto d = degree(c);
    if (!d) throw DomainError("curve has no degree");
    DegreeGenusReport r;
    r.d = *d;
    r.g = genus(c);
    r.bound = (r.d - 1) * (r.d - 2) / 2;
    r.deficiency = r.bound - r.g;
    r.minimal_areas = true;
    r.cell_excess = 0;
    for (const auto& cell : cert.vertex_cell) {
        auto k = static_cast<long long>(cell.size());
        Rational excess = (Rational(area2(cell)) - Rational(k - 2)) / 2;
        if (!excess.is_zero()) r.minimal_areas = false;
        r.cell_excess += excess;
    }
    r.end_excess = Rational(3LL * r.d - static_cast<long long>(c.rays.size())) / 2;
    return r;
}

}  // namespace tropic
