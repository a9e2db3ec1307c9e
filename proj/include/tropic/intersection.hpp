#pragma once

// Transverse and stable intersections of plane tropical curves, and unions.

#include "tropic/curve.hpp"
#include "tropic/eps_scalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace tropic {

/// Raised when two curves share a segment or one passes through a vertex of the other.
struct NonTransverse : DomainError {
    using DomainError::DomainError;
};

struct PieceRef {
    PieceKind kind = PieceKind::Segment;
    std::size_t index = 0;
    friend bool operator==(const PieceRef&, const PieceRef&) = default;
};

struct IntersectionPoint {
    PointQ2 location;
    std::int64_t multiplicity = 0;
    std::optional<std::pair<PieceRef, PieceRef>> source;  ///< absent for stable limits
    bool stable_limit = false;
};

template <class F>
struct FieldIntersection {
    Point2<F> location;
    std::int64_t multiplicity = 0;
    PieceRef first;
    PieceRef second;
};

namespace detail {

template <class F>
bool param_in_range(const Piece<F>& pc, const F& t, bool closed) {
    if (pc.kind == PieceKind::Line) return true;
    int lo = sign(t);
    if (closed ? lo < 0 : lo <= 0) return false;
    if (pc.kind == PieceKind::Ray) return true;
    int hi = sign(t - pc.length);
    return closed ? hi <= 0 : hi < 0;
}

template <class F>
bool is_endpoint(const Piece<F>& pc, const F& t) {
    if (pc.kind == PieceKind::Line) return false;
    if (sign(t) == 0) return true;
    return pc.kind == PieceKind::Segment && sign(t - pc.length) == 0;
}

/// Parameter interval of piece b along piece a (parallel pieces), nullopt = unbounded.
template <class F>
std::pair<std::optional<F>, std::optional<F>> interval_along(const Piece<F>& a, const Piece<F>& b) {
    F t0 = param_on(a, b.base);
    bool same = dot(b.dir, a.dir) > 0;
    switch (b.kind) {
        case PieceKind::Line: return {std::nullopt, std::nullopt};
        case PieceKind::Ray:
            if (same) return {t0, std::nullopt};
            return {std::nullopt, t0};
        case PieceKind::Segment: {
            F t1 = same ? t0 + b.length : t0 - b.length;
            if (t1 < t0) return {t1, t0};
            return {t0, t1};
        }
    }
    return {};
}

template <class F>
bool collinear_overlap(const Piece<F>& a, const Piece<F>& b) {
    if (!on_support_line(a, b.base)) return false;
    auto [lo, hi] = interval_along(a, b);
    std::optional<F> alo, ahi;
    if (a.kind != PieceKind::Line) alo = F(0);
    if (a.kind == PieceKind::Segment) ahi = a.length;
    // Closed intervals [max lo, min hi] nonempty?
    std::optional<F> L = lo, H = hi;
    if (alo && (!L || *L < *alo)) L = alo;
    if (ahi && (!H || *ahi < *H)) H = ahi;
    return !L || !H || !(*H < *L);
}

}  // namespace detail

/// Exact pairwise intersection of the pieces of two curves over the field F.
/// Throws NonTransverse on a shared segment or a vertex hit.
template <class F>
std::vector<FieldIntersection<F>> transverse_pieces(const std::vector<Piece<F>>& p1, const std::vector<Piece<F>>& p2) {
    std::vector<FieldIntersection<F>> out;
    for (const auto& a : p1)
        for (const auto& b : p2) {
            std::int64_t D = det2(a.dir, b.dir);
            if (D == 0) {
                if (detail::collinear_overlap(a, b)) throw NonTransverse("curves share a segment");
                continue;
            }
            // a.base + s a.dir = b.base + t b.dir
            Point2<F> diff = b.base - a.base;
            F Df(static_cast<long long>(D));
            F s = det2(diff, b.dir) / Df;
            F t = det2(diff, a.dir) / Df;
            if (!detail::param_in_range(a, s, true) || !detail::param_in_range(b, t, true)) continue;
            if (detail::is_endpoint(a, s) || detail::is_endpoint(b, t))
                throw NonTransverse("intersection at a vertex");
            out.push_back({a.at(s), a.weight * b.weight * std::abs(D), {a.kind, a.index}, {b.kind, b.index}});
        }
    return out;
}

/// Transverse intersection points with multiplicity w1 * w2 * |det(u1, u2)|.
inline std::vector<IntersectionPoint> transverse_intersections(const PlaneTropicalCurve& c1, const PlaneTropicalCurve& c2) {
    std::vector<IntersectionPoint> out;
    for (auto& fi : transverse_pieces(pieces<Rational>(c1), pieces<Rational>(c2)))
        out.push_back({fi.location, fi.multiplicity, std::make_pair(fi.first, fi.second), false});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.location < b.location; });
    return out;
}

inline std::int64_t total_multiplicity(const std::vector<IntersectionPoint>& pts) {
    std::int64_t s = 0;
    for (const auto& p : pts) s += p.multiplicity;
    return s;
}

/// Sum of transverse multiplicities; both curves must have a degree.
inline std::int64_t bezout_sum(const PlaneTropicalCurve& c1, const PlaneTropicalCurve& c2) {
    if (!degree(c1) || !degree(c2)) throw DomainError("curve has no degree");
    return total_multiplicity(transverse_intersections(c1, c2));
}

/// Perturbation directions (1, N) for N running over the primes.
inline const std::vector<IntVec2>& stable_schedule() {
    static const std::vector<IntVec2> s = [] {
        std::vector<IntVec2> v;
        for (std::int64_t n = 2; v.size() < 16; ++n) {
            bool prime = true;
            for (std::int64_t k = 2; k * k <= n; ++k)
                if (n % k == 0) prime = false;
            if (prime) v.push_back({1, n});
        }
        return v;
    }();
    return s;
}

/// Limit as eps -> 0 of the intersection of c1 with c2 translated by eps * v.
/// Throws NonTransverse if v is not generic for this pair.
inline std::vector<IntersectionPoint> stable_intersection_along(const PlaneTropicalCurve& c1, const PlaneTropicalCurve& c2, IntVec2 v) {
    EpsScalar eps = EpsScalar::epsilon();
    Point2<EpsScalar> shift(eps * EpsScalar(static_cast<long long>(v.x)), eps * EpsScalar(static_cast<long long>(v.y)));
    auto raw = transverse_pieces(pieces<EpsScalar>(c1), pieces<EpsScalar>(c2, shift));
    std::map<PointQ2, std::int64_t> merged;
    for (const auto& fi : raw) {
        auto x = fi.location.x.limit(), y = fi.location.y.limit();
        if (!x || !y) throw Error("stable intersection: unbounded limit point");
        merged[{*x, *y}] += fi.multiplicity;
    }
    std::vector<IntersectionPoint> out;
    for (const auto& [p, m] : merged) out.push_back({p, m, std::nullopt, true});
    return out;
}

/// Stable intersection, trying directions from the schedule starting at
/// position `first` until one is generic.
inline std::vector<IntersectionPoint> stable_intersection(const PlaneTropicalCurve& c1, const PlaneTropicalCurve& c2, std::size_t first = 0) {
    const auto& sched = stable_schedule();
    for (std::size_t k = first; k < sched.size(); ++k) {
        try {
            return stable_intersection_along(c1, c2, sched[k]);
        } catch (const NonTransverse&) {
        }
    }
    throw Error("stable intersection: perturbation schedule exhausted");
}

/// Union of two curves as a weighted point set: pieces are split at every
/// vertex and crossing, coincident sub-pieces add their weights.
inline PlaneTropicalCurve curve_union(const PlaneTropicalCurve& c1, const PlaneTropicalCurve& c2) {
    auto all = pieces<Rational>(c1);
    for (auto& p : pieces<Rational>(c2)) all.push_back(std::move(p));

    std::set<PointQ2> critical(c1.vertices.begin(), c1.vertices.end());
    critical.insert(c2.vertices.begin(), c2.vertices.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const auto& a = all[i];
            const auto& b = all[j];
            std::int64_t D = det2(a.dir, b.dir);
            if (D == 0) continue;
            PointQ2 diff = b.base - a.base;
            Rational s = det2(diff, b.dir) / Rational(static_cast<long long>(D));
            Rational t = det2(diff, a.dir) / Rational(static_cast<long long>(D));
            if (detail::param_in_range(a, s, true) && detail::param_in_range(b, t, true)) critical.insert(a.at(s));
        }

    std::map<std::pair<PointQ2, PointQ2>, std::int64_t> segs;
    std::map<std::pair<PointQ2, IntVec2>, std::int64_t> rays;
    PlaneTropicalCurve lines_only;
    auto add_seg = [&](const PointQ2& p, const PointQ2& q, std::int64_t w) {
        segs[p < q ? std::make_pair(p, q) : std::make_pair(q, p)] += w;
    };
    for (const auto& pc : all) {
        std::vector<Rational> ts;
        for (const auto& p : critical)
            if (on_support_line(pc, p)) {
                Rational t = param_on(pc, p);
                if (detail::param_in_range(pc, t, false)) ts.push_back(t);
            }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        switch (pc.kind) {
            case PieceKind::Segment: {
                ts.insert(ts.begin(), Rational(0));
                ts.push_back(pc.length);
                for (std::size_t k = 0; k + 1 < ts.size(); ++k) add_seg(pc.at(ts[k]), pc.at(ts[k + 1]), pc.weight);
                break;
            }
            case PieceKind::Ray: {
                ts.insert(ts.begin(), Rational(0));
                for (std::size_t k = 0; k + 1 < ts.size(); ++k) add_seg(pc.at(ts[k]), pc.at(ts[k + 1]), pc.weight);
                rays[{pc.at(ts.back()), pc.dir}] += pc.weight;
                break;
            }
            case PieceKind::Line: {
                if (ts.empty()) {
                    lines_only.lines.push_back({pc.base, pc.dir, pc.weight});
                    break;
                }
                rays[{pc.at(ts.front()), -pc.dir}] += pc.weight;
                for (std::size_t k = 0; k + 1 < ts.size(); ++k) add_seg(pc.at(ts[k]), pc.at(ts[k + 1]), pc.weight);
                rays[{pc.at(ts.back()), pc.dir}] += pc.weight;
                break;
            }
        }
    }

    PlaneTropicalCurve out;
    std::map<PointQ2, std::size_t> vid;
    auto vertex = [&](const PointQ2& p) {
        auto [it, inserted] = vid.emplace(p, out.vertices.size());
        if (inserted) out.vertices.push_back(p);
        return it->second;
    };
    for (const auto& [pq, w] : segs) {
        std::size_t a = vertex(pq.first);
        std::size_t b = vertex(pq.second);
        out.edges.push_back({a, b, w});
    }
    for (const auto& [pd, w] : rays) out.rays.push_back({vertex(pd.first), pd.second, w});
    out.lines = std::move(lines_only.lines);
    return canonicalize(std::move(out));
}

/// Splits a union of curves meeting transversally into two parts. 4-valent
/// crossings of two straight strands are separated; the result lists the
/// connected components, the first against the union of the rest. Returns
/// nullopt for a connected curve.
inline std::optional<std::pair<PlaneTropicalCurve, PlaneTropicalCurve>> decompose_transverse_union(const PlaneTropicalCurve& input) {
    PlaneTropicalCurve c = canonicalize(input);
    // New vertex ids: a crossing vertex gets one id per strand.
    std::vector<std::size_t> first_id(c.vertices.size());
    std::vector<PointQ2> locs;
    std::vector<std::optional<IntVec2>> strand_axis;  // line direction of the strand, if split
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        auto s = c.star(v);
        first_id[v] = locs.size();
        if (s.size() == 3) {
            locs.push_back(c.vertices[v]);
            strand_axis.push_back(std::nullopt);
            continue;
        }
        if (s.size() != 4) throw DomainError("not transversely decomposable");
        std::map<IntVec2, std::vector<std::int64_t>> axes;
        for (auto [w, u] : s) axes[line_direction(u)].push_back(w * (u == line_direction(u) ? 1 : -1));
        if (axes.size() != 2) throw DomainError("not transversely decomposable");
        for (const auto& [ax, ws] : axes) {
            if (ws.size() != 2 || ws[0] + ws[1] != 0) throw DomainError("not transversely decomposable");
            locs.push_back(c.vertices[v]);
            strand_axis.push_back(ax);
        }
    }
    auto id_for = [&](std::size_t v, IntVec2 outgoing) {
        std::size_t id = first_id[v];
        if (!strand_axis[id]) return id;
        return *strand_axis[id] == line_direction(outgoing) ? id : id + 1;
    };

    std::vector<BoundedEdge> edges;
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
        IntVec2 u = c.edge_direction(k);
        edges.push_back({id_for(c.edges[k].from, u), id_for(c.edges[k].to, -u), c.edges[k].weight});
    }
    std::vector<Ray> rays;
    for (const auto& r : c.rays) rays.push_back({id_for(r.base, r.dir), r.dir, r.weight});

    PlaneTropicalCurve split;
    split.vertices = locs;
    split.edges = edges;
    split.rays = rays;
    std::size_t ncomp = 0;
    auto comp = vertex_components(split, &ncomp);

    std::vector<PlaneTropicalCurve> parts(ncomp);
    std::vector<std::size_t> local_id(locs.size());
    for (std::size_t v = 0; v < locs.size(); ++v) {
        local_id[v] = parts[comp[v]].vertices.size();
        parts[comp[v]].vertices.push_back(locs[v]);
    }
    for (const auto& e : edges) parts[comp[e.from]].edges.push_back({local_id[e.from], local_id[e.to], e.weight});
    for (const auto& r : rays) parts[comp[r.base]].rays.push_back({local_id[r.base], r.dir, r.weight});
    for (const auto& l : c.lines) {
        PlaneTropicalCurve p;
        p.lines.push_back(l);
        parts.push_back(std::move(p));
    }
    for (auto& p : parts) p = canonicalize(std::move(p));
    if (parts.size() < 2) return std::nullopt;
    PlaneTropicalCurve rest = parts[1];
    for (std::size_t k = 2; k < parts.size(); ++k) rest = curve_union(rest, parts[k]);
    return std::make_pair(parts[0], rest);
}

}  // namespace tropic
