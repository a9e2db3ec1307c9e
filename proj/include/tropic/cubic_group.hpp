#pragma once

// The chord-and-tangent group law on the loop of a smooth plane tropical cubic.

#include "tropic/curve.hpp"
#include "tropic/intersection.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <vector>

namespace tropic {

/// The unique cycle of a genus-1 curve: vertices[k] -> vertices[k+1] along
/// edges[k], indices taken cyclically, oriented counter-clockwise.
struct Loop {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
    std::vector<Rational> lengths;  ///< lattice lengths of the edges

    std::size_t size() const { return edges.size(); }
    Rational total_length() const {
        Rational s = 0;
        for (const auto& l : lengths) s += l;
        return s;
    }
};

inline Loop extract_loop(const PlaneTropicalCurve& c) {
    if (genus(c) != 1) throw DomainError("loop extraction needs genus 1");
    std::vector<std::vector<std::size_t>> inc(c.vertices.size());
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
        inc[c.edges[k].from].push_back(k);
        inc[c.edges[k].to].push_back(k);
    }
    std::vector<bool> alive_v(c.vertices.size(), true), alive_e(c.edges.size(), true);
    std::vector<std::size_t> deg(c.vertices.size());
    std::deque<std::size_t> leaves;
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        deg[v] = inc[v].size();
        if (deg[v] <= 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
        std::size_t v = leaves.front();
        leaves.pop_front();
        if (!alive_v[v]) continue;
        alive_v[v] = false;
        for (std::size_t k : inc[v]) {
            if (!alive_e[k]) continue;
            alive_e[k] = false;
            std::size_t w = c.edges[k].from == v ? c.edges[k].to : c.edges[k].from;
            if (--deg[w] <= 1) leaves.push_back(w);
        }
    }
    Loop loop;
    std::size_t start = c.vertices.size();
    for (std::size_t v = 0; v < c.vertices.size(); ++v)
        if (alive_v[v]) { start = v; break; }
    if (start == c.vertices.size()) throw DomainError("no cycle found");
    std::size_t v = start, prev_edge = c.edges.size();
    do {
        std::size_t next_edge = c.edges.size();
        for (std::size_t k : inc[v])
            if (alive_e[k] && k != prev_edge) { next_edge = k; break; }
        if (next_edge == c.edges.size()) throw DomainError("cycle is not simple");
        loop.vertices.push_back(v);
        loop.edges.push_back(next_edge);
        v = c.edges[next_edge].from == v ? c.edges[next_edge].to : c.edges[next_edge].from;
        prev_edge = next_edge;
    } while (v != start && loop.vertices.size() <= c.vertices.size());

    // Orient counter-clockwise (positive shoelace sum).
    Rational area = 0;
    for (std::size_t k = 0; k < loop.vertices.size(); ++k) {
        const auto& p = c.vertices[loop.vertices[k]];
        const auto& q = c.vertices[loop.vertices[(k + 1) % loop.vertices.size()]];
        area += p.x * q.y - p.y * q.x;
    }
    if (area.sign() < 0) {
        std::reverse(loop.vertices.begin() + 1, loop.vertices.end());
        std::reverse(loop.edges.begin(), loop.edges.end());
    }
    for (std::size_t k = 0; k < loop.size(); ++k) {
        const auto& p = c.vertices[loop.vertices[k]];
        const auto& q = c.vertices[loop.vertices[(k + 1) % loop.size()]];
        IntVec2 u = primitive_direction(p, q);
        PointQ2 d = q - p;
        loop.lengths.push_back(u.x != 0 ? d.x / Rational(static_cast<long long>(u.x))
                                        : d.y / Rational(static_cast<long long>(u.y)));
    }
    return loop;
}

/// Point of the loop: edge position k and parameter t in [0, 1) from
/// vertices[k] towards vertices[k+1].
struct LoopPoint {
    std::size_t edge = 0;
    Rational t;
    friend bool operator==(const LoopPoint&, const LoopPoint&) = default;
};

/// The tropical line with vertex v.
inline PlaneTropicalCurve tropical_line(const PointQ2& v) {
    PlaneTropicalCurve l;
    l.vertices.push_back(v);
    l.rays = {{0, {-1, 0}, 1}, {0, {0, -1}, 1}, {0, {1, 1}, 1}};
    return l;
}

/// Vertex of the unique tropical line through p and q. Throws when the line
/// is not unique, i.e. q - p is parallel to an end direction.
inline PointQ2 line_vertex_through(const PointQ2& p, const PointQ2& q) {
    if (p == q) throw DomainError("non-generic configuration: coincident points");
    const IntVec2 ends[3] = {{-1, 0}, {0, -1}, {1, 1}};
    PointQ2 d = q - p;
    for (IntVec2 u : ends)
        if (det2(d, u).is_zero()) throw DomainError("non-generic configuration: line not unique");
    // v = p - s a = q - t b with s, t >= 0.
    std::optional<PointQ2> found;
    for (IntVec2 a : ends)
        for (IntVec2 b : ends) {
            // s a - t b = p - q, by Cramer's rule.
            std::int64_t D = det2(a, -b);
            if (D == 0) continue;
            PointQ2 r = p - q;
            Rational Dq(static_cast<long long>(D));
            Rational s = det2(r, -b) / Dq;
            Rational t = -det2(r, a) / Dq;
            if (s.sign() < 0 || t.sign() < 0) continue;
            PointQ2 v = p - scaled(a, s);
            if (found && !(*found == v)) throw Error("tropical line through two points is not unique");
            found = v;
        }
    if (!found) throw Error("no tropical line through the two points");
    return *found;
}

class CubicContext {
public:
    CubicContext(const PlaneTropicalCurve& curve, LoopPoint base = {})
        : curve_(canonicalize(curve)), loop_(extract_loop(curve_)), base_(base) {
        if (degree(curve_) != 3) throw DomainError("not a cubic");
        if (!is_smooth_graph(curve_)) throw DomainError("cubic is not smooth");
        if (base_.edge >= loop_.size() || base_.t.sign() < 0 || base_.t >= Rational(1))
            throw DomainError("base point off the loop");
        attach_.assign(curve_.vertices.size(), curve_.vertices.size());
        std::deque<std::size_t> q;
        std::vector<bool> on_loop(curve_.edges.size(), false);
        for (std::size_t k : loop_.edges) on_loop[k] = true;
        for (std::size_t v : loop_.vertices) {
            attach_[v] = v;
            q.push_back(v);
        }
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop_front();
            for (std::size_t k = 0; k < curve_.edges.size(); ++k) {
                if (on_loop[k]) continue;
                const auto& e = curve_.edges[k];
                std::size_t w = e.from == v ? e.to : e.to == v ? e.from : curve_.vertices.size();
                if (w == curve_.vertices.size() || attach_[w] != curve_.vertices.size()) continue;
                attach_[w] = attach_[v];
                q.push_back(w);
            }
        }
        on_loop_ = std::move(on_loop);
    }

    const PlaneTropicalCurve& curve() const { return curve_; }
    const Loop& loop() const { return loop_; }
    const LoopPoint& base() const { return base_; }

    PointQ2 point(const LoopPoint& p) const {
        const auto& a = curve_.vertices[loop_.vertices[p.edge]];
        const auto& b = curve_.vertices[loop_.vertices[(p.edge + 1) % loop_.size()]];
        return a + PointQ2((b.x - a.x) * p.t, (b.y - a.y) * p.t);
    }

    /// Lattice arclength from the start of the loop.
    Rational position(const LoopPoint& p) const {
        Rational s = 0;
        for (std::size_t k = 0; k < p.edge; ++k) s += loop_.lengths[k];
        return s + loop_.lengths[p.edge] * p.t;
    }

    /// Loop point at arclength s, reduced modulo the loop length.
    LoopPoint at_position(Rational s) const {
        Rational total = loop_.total_length();
        s = s - total * Rational((s / total).floor());
        for (std::size_t k = 0; k < loop_.size(); ++k) {
            if (s < loop_.lengths[k]) return {k, s / loop_.lengths[k]};
            s -= loop_.lengths[k];
        }
        return {0, 0};
    }

    /// The loop point nearest to p along the curve: p itself on the loop,
    /// otherwise the vertex where the tree holding p is attached.
    LoopPoint retract(const PointQ2& p) const {
        for (std::size_t k = 0; k < loop_.size(); ++k) {
            const auto& a = curve_.vertices[loop_.vertices[k]];
            const auto& b = curve_.vertices[loop_.vertices[(k + 1) % loop_.size()]];
            PointQ2 d = b - a, r = p - a;
            if (!(r.x * d.y - r.y * d.x).is_zero()) continue;
            Rational t = !d.x.is_zero() ? r.x / d.x : r.y / d.y;
            if (t.sign() < 0 || t > Rational(1)) continue;
            if (t == Rational(1)) return {(k + 1) % loop_.size(), 0};
            return {k, t};
        }
        auto at_vertex = [&](std::size_t v) { return vertex_point(attach_[v]); };
        for (std::size_t v = 0; v < curve_.vertices.size(); ++v)
            if (curve_.vertices[v] == p) return at_vertex(v);
        auto ps = pieces<Rational>(curve_);
        for (const auto& pc : ps) {
            if (!piece_contains(pc, p)) continue;
            if (pc.kind == PieceKind::Segment) return at_vertex(curve_.edges[pc.index].from);
            if (pc.kind == PieceKind::Ray) return at_vertex(curve_.rays[pc.index].base);
        }
        throw DomainError("point not on curve");
    }

    /// Remaining intersection point of the tropical line with vertex v (which
    /// must pass through p and q) with the cubic.
    PointQ2 third_point_on_line(const PointQ2& v, const PointQ2& p, const PointQ2& q) const {
        auto line = tropical_line(v);
        if (!contains_point(line, p) || !contains_point(line, q)) throw DomainError("line misses the given points");
        if (!contains_point(curve_, p) || !contains_point(curve_, q)) throw DomainError("point not on curve");
        auto pts = stable_intersection(line, curve_);
        if (total_multiplicity(pts) != 3) throw Error("line meets cubic with total multiplicity != 3");
        if (pts.size() != 3) throw DomainError("non-generic configuration: multiplicities are not {1,1,1}");
        std::optional<PointQ2> r;
        bool seen_p = false, seen_q = false;
        for (const auto& ip : pts) {
            if (ip.multiplicity != 1) throw DomainError("non-generic configuration: multiplicities are not {1,1,1}");
            if (ip.location == p) seen_p = true;
            else if (ip.location == q) seen_q = true;
            else r = ip.location;
        }
        if (!seen_p || !seen_q || !r) throw DomainError("non-generic configuration: points not among the intersections");
        return *r;
    }

    PointQ2 third_point(const PointQ2& p, const PointQ2& q) const {
        return third_point_on_line(line_vertex_through(p, q), p, q);
    }

    /// P + Q: with R the third point on the line through P and Q and S the
    /// third point on the line through O and R, the sum is the retraction of S.
    LoopPoint add(const LoopPoint& p, const LoopPoint& q) const {
        PointQ2 r = third_point(point(p), point(q));
        PointQ2 s = third_point(point(base_), r);
        return retract(s);
    }

private:
    LoopPoint vertex_point(std::size_t v) const {
        for (std::size_t k = 0; k < loop_.size(); ++k)
            if (loop_.vertices[k] == v) return {k, 0};
        throw Error("vertex not on the loop");
    }

    PlaneTropicalCurve curve_;
    Loop loop_;
    LoopPoint base_;
    std::vector<std::size_t> attach_;
    std::vector<bool> on_loop_;
};

}  // namespace tropic
