#pragma once

// Plane tropical curves as embedded weighted graphs with rational vertices.

#include "tropic/lattice.hpp"
#include "tropic/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <tuple>
#include <vector>

namespace tropic {

struct BoundedEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::int64_t weight = 1;
    friend bool operator==(const BoundedEdge&, const BoundedEdge&) = default;
    friend auto operator<=>(const BoundedEdge&, const BoundedEdge&) = default;
};

struct Ray {
    std::size_t base = 0;
    IntVec2 dir;  ///< primitive
    std::int64_t weight = 1;
    friend bool operator==(const Ray&, const Ray&) = default;
    friend auto operator<=>(const Ray&, const Ray&) = default;
};

/// Straight line component without vertices.
struct StandaloneLine {
    PointQ2 base;
    IntVec2 dir;  ///< primitive
    std::int64_t weight = 1;
    friend bool operator==(const StandaloneLine& a, const StandaloneLine& b) {
        return a.base == b.base && a.dir == b.dir && a.weight == b.weight;
    }
};

struct PlaneTropicalCurve {
    std::vector<PointQ2> vertices;
    std::vector<BoundedEdge> edges;
    std::vector<Ray> rays;
    std::vector<StandaloneLine> lines;

    bool empty() const { return vertices.empty() && lines.empty(); }

    /// Primitive direction of bounded edge k, pointing from its `from` vertex.
    IntVec2 edge_direction(std::size_t k) const {
        return primitive_direction(vertices[edges[k].from], vertices[edges[k].to]);
    }

    /// Outgoing (weight, primitive direction) pairs at vertex v.
    std::vector<std::pair<std::int64_t, IntVec2>> star(std::size_t v) const {
        std::vector<std::pair<std::int64_t, IntVec2>> out;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (edges[k].from == v) out.emplace_back(edges[k].weight, edge_direction(k));
            if (edges[k].to == v) out.emplace_back(edges[k].weight, -edge_direction(k));
        }
        for (const auto& r : rays)
            if (r.base == v) out.emplace_back(r.weight, r.dir);
        return out;
    }

    std::size_t valence(std::size_t v) const { return star(v).size(); }
};

struct BalancingReport {
    bool balanced = true;
    std::vector<IntVec2> residuals;  ///< one per vertex
};

inline BalancingReport check_balancing(const PlaneTropicalCurve& c) {
    BalancingReport r;
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        IntVec2 s{0, 0};
        for (auto [w, u] : c.star(v)) s += w * u;
        r.residuals.push_back(s);
        if (!s.is_zero()) r.balanced = false;
    }
    return r;
}

/// d when the weighted ends are exactly d times each of (-1,0), (0,-1), (1,1).
inline std::optional<int> degree(const PlaneTropicalCurve& c) {
    std::map<IntVec2, std::int64_t> ends;
    for (const auto& r : c.rays) ends[r.dir] += r.weight;
    for (const auto& l : c.lines) {
        ends[l.dir] += l.weight;
        ends[-l.dir] += l.weight;
    }
    std::int64_t d = ends[{-1, 0}];
    if (d <= 0 || ends[{0, -1}] != d || ends[{1, 1}] != d) return std::nullopt;
    for (const auto& [u, w] : ends)
        if (w != 0 && u != IntVec2{-1, 0} && u != IntVec2{0, -1} && u != IntVec2{1, 1}) return std::nullopt;
    return static_cast<int>(d);
}

/// Connected components of the vertex graph; returns a component id per vertex.
inline std::vector<std::size_t> vertex_components(const PlaneTropicalCurve& c, std::size_t* count = nullptr) {
    std::vector<std::size_t> parent(c.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : c.edges) parent[find(e.from)] = find(e.to);
    std::map<std::size_t, std::size_t> ids;
    std::vector<std::size_t> comp(c.vertices.size());
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        auto [it, _] = ids.emplace(find(v), ids.size());
        comp[v] = it->second;
    }
    if (count) *count = ids.size();
    return comp;
}

/// First Betti number. Standalone lines are trees and contribute nothing.
inline int genus(const PlaneTropicalCurve& c) {
    std::size_t comps = 0;
    vertex_components(c, &comps);
    return static_cast<int>(c.edges.size()) - static_cast<int>(c.vertices.size()) + static_cast<int>(comps);
}

/// Every vertex 3-valent with weight-1 edges spanning the lattice.
inline bool is_smooth_graph(const PlaneTropicalCurve& c) {
    if (c.vertices.empty() || !c.lines.empty()) return false;
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        auto s = c.star(v);
        if (s.size() != 3) return false;
        for (auto [w, u] : s)
            if (w != 1) return false;
        if (std::abs(det2(s[0].second, s[1].second)) != 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Pieces: the edges, rays and lines of a curve as parametrised point sets
// base + t * dir over an ordered field.

enum class PieceKind { Segment, Ray, Line };

template <class F>
struct Piece {
    PieceKind kind = PieceKind::Segment;
    Point2<F> base;
    IntVec2 dir;              ///< primitive
    F length{};               ///< parameter range [0, length] for segments
    std::int64_t weight = 1;
    std::size_t index = 0;    ///< index into edges, rays or lines of the source curve

    Point2<F> at(const F& t) const { return base + scaled(dir, t); }
};

/// Parameter t with p = base + t * dir, assuming p lies on the supporting line.
template <class F>
F param_on(const Piece<F>& pc, const Point2<F>& p) {
    return pc.dir.x != 0 ? (p.x - pc.base.x) / F(static_cast<long long>(pc.dir.x))
                         : (p.y - pc.base.y) / F(static_cast<long long>(pc.dir.y));
}

template <class F>
bool on_support_line(const Piece<F>& pc, const Point2<F>& p) {
    return sign(det2(p - pc.base, pc.dir)) == 0;
}

/// Whether p lies on the closed piece.
template <class F>
bool piece_contains(const Piece<F>& pc, const Point2<F>& p) {
    if (!on_support_line(pc, p)) return false;
    if (pc.kind == PieceKind::Line) return true;
    F t = param_on(pc, p);
    if (sign(t) < 0) return false;
    return pc.kind == PieceKind::Ray || sign(t - pc.length) <= 0;
}

/// All pieces of c, with vertex coordinates lifted to F and shifted by `shift`.
template <class F>
std::vector<Piece<F>> pieces(const PlaneTropicalCurve& c, const Point2<F>& shift = {}) {
    auto lift = [&](const PointQ2& p) { return Point2<F>(F(p.x) + shift.x, F(p.y) + shift.y); };
    std::vector<Piece<F>> out;
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
        const auto& e = c.edges[k];
        Piece<F> pc;
        pc.kind = PieceKind::Segment;
        pc.base = lift(c.vertices[e.from]);
        pc.dir = c.edge_direction(k);
        PointQ2 delta = c.vertices[e.to] - c.vertices[e.from];
        Rational len = pc.dir.x != 0 ? delta.x / Rational(static_cast<long long>(pc.dir.x))
                                     : delta.y / Rational(static_cast<long long>(pc.dir.y));
        pc.length = F(len);
        pc.weight = e.weight;
        pc.index = k;
        out.push_back(std::move(pc));
    }
    for (std::size_t k = 0; k < c.rays.size(); ++k) {
        Piece<F> pc;
        pc.kind = PieceKind::Ray;
        pc.base = lift(c.vertices[c.rays[k].base]);
        pc.dir = c.rays[k].dir;
        pc.weight = c.rays[k].weight;
        pc.index = k;
        out.push_back(std::move(pc));
    }
    for (std::size_t k = 0; k < c.lines.size(); ++k) {
        Piece<F> pc;
        pc.kind = PieceKind::Line;
        pc.base = lift(c.lines[k].base);
        pc.dir = c.lines[k].dir;
        pc.weight = c.lines[k].weight;
        pc.index = k;
        out.push_back(std::move(pc));
    }
    return out;
}

/// Whether p lies on the curve.
inline bool contains_point(const PlaneTropicalCurve& c, const PointQ2& p) {
    for (const auto& v : c.vertices)
        if (v == p) return true;
    for (const auto& pc : pieces<Rational>(c))
        if (piece_contains(pc, p)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Canonical form.

/// Sign-normalised direction: first nonzero coordinate positive.
inline IntVec2 line_direction(IntVec2 u) { return (u.x < 0 || (u.x == 0 && u.y < 0)) ? -u : u; }

/// The line through p with direction u, as the point with x = 0 (or y = 0
/// for vertical lines) and a sign-normalised direction.
inline StandaloneLine canonical_line(const PointQ2& p, IntVec2 u, std::int64_t w) {
    u = line_direction(primitive(u));
    PointQ2 base = u.x != 0 ? p - scaled(u, p.x / Rational(static_cast<long long>(u.x)))
                            : p - scaled(u, p.y / Rational(static_cast<long long>(u.y)));
    return {base, u, w};
}

namespace detail {

/// Removes 2-valent vertices whose two pieces continue straight with equal
/// weight, fusing the pieces. Returns true if anything changed.
inline bool fuse_straight_vertex(PlaneTropicalCurve& c) {
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        std::vector<std::size_t> es, rs;
        for (std::size_t k = 0; k < c.edges.size(); ++k)
            if (c.edges[k].from == v || c.edges[k].to == v) es.push_back(k);
        for (std::size_t k = 0; k < c.rays.size(); ++k)
            if (c.rays[k].base == v) rs.push_back(k);
        if (es.size() + rs.size() != 2) continue;
        auto s = c.star(v);
        if (s[0].first != s[1].first || s[0].second != -s[1].second) continue;
        std::int64_t w = s[0].first;
        auto other = [&](std::size_t k) { return c.edges[k].from == v ? c.edges[k].to : c.edges[k].from; };
        if (es.size() == 2) {
            if (other(es[0]) == other(es[1])) continue;  // cannot happen for straight edges
            BoundedEdge ne{other(es[0]), other(es[1]), w};
            c.edges.erase(c.edges.begin() + static_cast<long>(es[1]));
            c.edges.erase(c.edges.begin() + static_cast<long>(es[0]));
            c.edges.push_back(ne);
        } else if (es.size() == 1) {
            Ray nr{other(es[0]), c.rays[rs[0]].dir, w};
            c.edges.erase(c.edges.begin() + static_cast<long>(es[0]));
            c.rays.erase(c.rays.begin() + static_cast<long>(rs[0]));
            c.rays.push_back(nr);
        } else {
            c.lines.push_back(canonical_line(c.vertices[v], c.rays[rs[0]].dir, w));
            c.rays.erase(c.rays.begin() + static_cast<long>(rs[1]));
            c.rays.erase(c.rays.begin() + static_cast<long>(rs[0]));
        }
        // Drop vertex v and renumber.
        c.vertices.erase(c.vertices.begin() + static_cast<long>(v));
        auto fix = [&](std::size_t& i) { if (i > v) --i; };
        for (auto& e : c.edges) { fix(e.from); fix(e.to); }
        for (auto& r : c.rays) fix(r.base);
        return true;
    }
    return false;
}

}  // namespace detail

/// Canonical form: straight 2-valent vertices fused, vertices sorted, edges
/// oriented from the smaller vertex index and sorted, rays and lines sorted.
/// Coincident lines are merged by adding weights.
inline PlaneTropicalCurve canonicalize(PlaneTropicalCurve c) {
    while (detail::fuse_straight_vertex(c)) {}
    std::vector<std::size_t> order(c.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return c.vertices[a] < c.vertices[b]; });
    std::vector<std::size_t> rank(order.size());
    PlaneTropicalCurve out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        rank[order[k]] = k;
        out.vertices.push_back(c.vertices[order[k]]);
    }
    for (auto e : c.edges) {
        e.from = rank[e.from];
        e.to = rank[e.to];
        if (e.from > e.to) std::swap(e.from, e.to);
        out.edges.push_back(e);
    }
    std::sort(out.edges.begin(), out.edges.end());
    for (auto r : c.rays) {
        r.base = rank[r.base];
        out.rays.push_back(r);
    }
    std::sort(out.rays.begin(), out.rays.end());
    std::map<std::tuple<IntVec2, Rational, Rational>, std::int64_t> lines;
    for (const auto& l : c.lines) {
        auto cl = canonical_line(l.base, l.dir, l.weight);
        lines[{cl.dir, cl.base.x, cl.base.y}] += cl.weight;
    }
    for (const auto& [k, w] : lines)
        out.lines.push_back({{std::get<1>(k), std::get<2>(k)}, std::get<0>(k), w});
    return out;
}

/// Equality of the underlying weighted point sets, via canonical forms.
inline bool same_curve(const PlaneTropicalCurve& a, const PlaneTropicalCurve& b) {
    auto ca = canonicalize(a), cb = canonicalize(b);
    return ca.vertices == cb.vertices && ca.edges == cb.edges && ca.rays == cb.rays && ca.lines == cb.lines;
}

inline std::ostream& operator<<(std::ostream& os, const PlaneTropicalCurve& c) {
    os << "curve{vertices:";
    for (const auto& v : c.vertices) os << ' ' << v;
    os << "; edges:";
    for (const auto& e : c.edges) os << ' ' << e.from << '-' << e.to << "/w" << e.weight;
    os << "; rays:";
    for (const auto& r : c.rays) os << ' ' << r.base << "->" << r.dir << "/w" << r.weight;
    os << "; lines:";
    for (const auto& l : c.lines) os << ' ' << l.base << '+' << l.dir << "/w" << l.weight;
    return os << '}';
}

}  // namespace tropic
