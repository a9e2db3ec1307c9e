#pragma once

// Regularity of lattice subdivisions and enumeration of smooth types.

#include "tropic/feasibility.hpp"
#include "tropic/hull.hpp"
#include "tropic/subdivision.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <map>
#include <set>
#include <vector>

namespace tropic {

/// Lattice triangle {(i,j) : i, j >= 0, i + j <= d}, counter-clockwise.
inline std::vector<IntVec2> standard_triangle(int d) { return {{0, 0}, {d, 0}, {0, d}}; }

struct RegularityResult {
    bool regular = false;
    std::optional<std::map<IntVec2, Rational>> lift;  ///< heights inducing the subdivision
    FeasibilityResult feasibility;
    std::size_t equalities = 0;
    std::size_t strict_inequalities = 0;
};

namespace detail {

/// Barycentric coordinates of r with respect to the non-degenerate triangle (s0, s1, s2).
inline std::array<Rational, 3> barycentric(IntVec2 s0, IntVec2 s1, IntVec2 s2, IntVec2 r) {
    Rational D(static_cast<long long>(det2(s1 - s0, s2 - s0)));
    Rational l1 = Rational(static_cast<long long>(det2(r - s0, s2 - s0))) / D;
    Rational l2 = Rational(static_cast<long long>(det2(s1 - s0, r - s0))) / D;
    return {Rational(1) - l1 - l2, l1, l2};
}

/// Three affinely independent vertices of a cell.
inline std::array<IntVec2, 3> cell_frame(const std::vector<IntVec2>& cell) {
    for (std::size_t k = 2; k < cell.size(); ++k)
        if (cross(cell[0], cell[1], cell[k]) != 0) return {cell[0], cell[1], cell[k]};
    throw DomainError("malformed subdivision: degenerate cell");
}

inline bool on_polygon_boundary(const std::vector<IntVec2>& poly, IntVec2 a, IntVec2 b) {
    for (std::size_t k = 0; k < poly.size(); ++k) {
        IntVec2 p = poly[k], q = poly[(k + 1) % poly.size()];
        if (cross(p, q, a) == 0 && cross(p, q, b) == 0) return true;
    }
    return false;
}

inline void validate_subdivision(const NewtonSubdivision& s) {
    auto bad = [](const std::string& why) { return DomainError("malformed subdivision: " + why); };
    if (s.polygon.size() < 3) throw bad("polygon is not two-dimensional");
    std::int64_t area = 0;
    for (const auto& c : s.cells) {
        if (c.size() < 3) throw bad("cell with fewer than three vertices");
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (cross(c[k], c[(k + 1) % c.size()], c[(k + 2) % c.size()]) <= 0)
                throw bad("cell not strictly convex counter-clockwise");
            if (!contains(s.polygon, c[k])) throw bad("cell leaves the polygon");
        }
        area += area2(c);
    }
    if (area != area2(s.polygon)) throw bad("cell areas do not add up to the polygon");
    for (const auto& [seg, cs] : s.edge_cells()) {
        if (cs.size() > 2) throw bad("edge in more than two cells");
        if (cs.size() == 1 && !on_polygon_boundary(s.polygon, seg.first, seg.second))
            throw bad("unmatched interior edge");
    }
}

}  // namespace detail

/// Decides whether heights on the cell vertices exist that make the upper
/// hull induce exactly these cells: each cell's vertices coplanar, and across
/// each interior edge the far vertex of one cell strictly below the plane of
/// the other.
inline RegularityResult is_regular(const NewtonSubdivision& s) {
    detail::validate_subdivision(s);
    auto verts = s.vertices();
    std::map<IntVec2, std::size_t> idx;
    for (std::size_t k = 0; k < verts.size(); ++k) idx[verts[k]] = k;
    LinearSystem sys(verts.size());
    RegularityResult res;

    auto row_below = [&](const std::array<IntVec2, 3>& frame, IntVec2 r) {
        // h_r - sum lambda_i h_{s_i}
        std::vector<Rational> row(verts.size(), Rational(0));
        auto lam = detail::barycentric(frame[0], frame[1], frame[2], r);
        row[idx.at(r)] += 1;
        for (int i = 0; i < 3; ++i) row[idx.at(frame[i])] -= lam[i];
        return row;
    };

    for (const auto& c : s.cells) {
        auto frame = detail::cell_frame(c);
        for (IntVec2 r : c) {
            if (r == frame[0] || r == frame[1] || r == frame[2]) continue;
            sys.add(row_below(frame, r), Relation::Equal, 0);
            ++res.equalities;
        }
    }
    for (const auto& [seg, cs] : s.edge_cells()) {
        if (cs.size() != 2) continue;
        const auto& c1 = s.cells[cs[0]];
        const auto& c2 = s.cells[cs[1]];
        IntVec2 r = c2[0];
        for (IntVec2 p : c2)
            if (cross(seg.first, seg.second, p) != 0) { r = p; break; }
        sys.add(row_below(detail::cell_frame(c1), r), Relation::Less, 0);
        ++res.strict_inequalities;
    }

    res.feasibility = feasible(sys);
    res.regular = res.feasibility.feasible;
    if (res.regular) {
        std::map<IntVec2, Rational> lift;
        for (std::size_t k = 0; k < verts.size(); ++k) lift[verts[k]] = (*res.feasibility.witness)[k];
        res.lift = std::move(lift);
    }
    return res;
}

namespace detail {

using Triangle = std::array<IntVec2, 3>;  // counter-clockwise

/// Interiors of the two triangles are disjoint (separating edge exists).
inline bool interiors_disjoint(const Triangle& a, const Triangle& b) {
    auto separates = [](const Triangle& t, const Triangle& o) {
        for (int k = 0; k < 3; ++k) {
            IntVec2 p = t[k], q = t[(k + 1) % 3];
            if (cross(p, q, o[0]) <= 0 && cross(p, q, o[1]) <= 0 && cross(p, q, o[2]) <= 0) return true;
        }
        return false;
    };
    return separates(a, b) || separates(b, a);
}

class UnimodularTiler {
public:
    explicit UnimodularTiler(int d) : d_(d), poly_(standard_triangle(d)), points_(lattice_points(poly_)) {}

    std::vector<std::vector<Triangle>> run() {
        for (IntVec2 r : points_)
            if (cross({0, 0}, {1, 0}, r) == 1) {
                place({IntVec2{0, 0}, IntVec2{1, 0}, r});
                recurse();
                unplace();
            }
        return found_;
    }

private:
    void place(const Triangle& t) {
        tris_.push_back(t);
        for (int k = 0; k < 3; ++k) ++edges_[make_segment(t[k], t[(k + 1) % 3])];
    }
    void unplace() {
        const Triangle t = tris_.back();
        tris_.pop_back();
        for (int k = 0; k < 3; ++k) {
            auto it = edges_.find(make_segment(t[k], t[(k + 1) % 3]));
            if (--it->second == 0) edges_.erase(it);
        }
    }

    void recurse() {
        std::optional<LatticeSegment> open;
        for (const auto& [seg, n] : edges_)
            if (n == 1 && !on_polygon_boundary(poly_, seg.first, seg.second)) { open = seg; break; }
        if (!open) {
            std::int64_t area = 0;
            for (const auto& t : tris_) area += area2({t[0], t[1], t[2]});
            if (area == static_cast<std::int64_t>(d_) * d_) {
                auto sorted = tris_;
                std::sort(sorted.begin(), sorted.end());
                found_.push_back(std::move(sorted));
            }
            return;
        }
        auto [a, b] = *open;
        // Side already covered: the triangle holding the edge.
        std::int64_t used = 0;
        for (const auto& t : tris_) {
            bool ha = std::find(t.begin(), t.end(), a) != t.end();
            bool hb = std::find(t.begin(), t.end(), b) != t.end();
            if (ha && hb)
                for (IntVec2 p : t)
                    if (p != a && p != b) used = cross(a, b, p);
        }
        std::int64_t want = used > 0 ? -1 : 1;
        for (IntVec2 r : points_) {
            if (cross(a, b, r) != want) continue;
            Triangle t = want > 0 ? Triangle{a, b, r} : Triangle{b, a, r};
            bool ok = true;
            for (const auto& u : tris_)
                if (!interiors_disjoint(t, u)) { ok = false; break; }
            if (!ok) continue;
            place(t);
            recurse();
            unplace();
        }
    }

    int d_;
    std::vector<IntVec2> poly_;
    std::vector<IntVec2> points_;
    std::vector<Triangle> tris_;
    std::map<LatticeSegment, int> edges_;
    std::vector<std::vector<Triangle>> found_;
};

}  // namespace detail

/// Number of unimodular triangulations of the degree-d triangle, regular or not.
inline std::size_t count_unimodular_triangulations(int d) {
    if (d < 1) throw DomainError("unsupported degree");
    return detail::UnimodularTiler(d).run().size();
}

/// All regular unimodular triangulations of the degree-d triangle, each with
/// a lift realising it. Supported for d = 1, 2; d = 3 only when `experimental`.
inline std::vector<NewtonSubdivision> enumerate_smooth_types(int d, bool experimental = false) {
    if (d < 1 || d > 3 || (d == 3 && !experimental)) throw DomainError("unsupported degree");
    std::vector<NewtonSubdivision> out;
    for (const auto& tris : detail::UnimodularTiler(d).run()) {
        NewtonSubdivision s;
        s.polygon = standard_triangle(d);
        for (const auto& t : tris) s.cells.push_back(convex_hull({t[0], t[1], t[2]}));
        auto reg = is_regular(s);
        if (!reg.regular) continue;
        s.heights = reg.lift;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace tropic
