#pragma once

// Counting rational tropical curves of degree d through 3d-1 points with
// complex (vertex-product) and real (sign) multiplicities.

#include "tropic/curve.hpp"
#include "tropic/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace tropic {

struct NonGenericPoints : DomainError {
    using DomainError::DomainError;
};

/// |det(e1, e2)| for full (weight times primitive) vectors.
inline std::int64_t vertex_multiplicity(IntVec2 e1, IntVec2 e2) {
    std::int64_t d = det2(e1, e2);
    return d < 0 ? -d : d;
}

/// 0 for even m, +1 for m = 1 mod 4, -1 for m = 3 mod 4.
inline int welschinger_sign(std::int64_t m) {
    if (m < 1) throw DomainError("multiplicity must be positive");
    if (m % 2 == 0) return 0;
    return m % 4 == 1 ? 1 : -1;
}

/// Unmarked 3-valent tree with 3d leaves, rooted at an internal node; every
/// edge points away from the root and carries the sum of the leaf directions
/// below it.
struct TreeShape {
    struct Edge {
        std::size_t parent;
        std::size_t child;
        IntVec2 v;
        int slot = -1;  ///< index of its length unknown, -1 for an end
    };
    int degree = 0;
    std::size_t leaves = 0;  ///< nodes [0, leaves) are ends
    std::size_t root = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> above;  ///< per edge: bounded edges from the root down to its parent
    std::vector<std::size_t> bounded;              ///< slot -> edge
    std::vector<IntVec2> leaf_dir;
    std::int64_t multiplicity = 1;  ///< product of vertex multiplicities
    std::string canonical;

    std::size_t unknowns() const { return 2 + bounded.size(); }
};

/// A tree shape together with the edge carrying each marked point.
struct MarkedTreeType {
    std::shared_ptr<const TreeShape> tree;
    std::vector<std::size_t> point_edge;
};

using PointConfiguration = std::vector<PointQ2>;

namespace detail {

inline std::vector<IntVec2> end_directions(int d) {
    std::vector<IntVec2> out;
    for (IntVec2 u : {IntVec2{-1, 0}, IntVec2{0, -1}, IntVec2{1, 1}})
        for (int k = 0; k < d; ++k) out.push_back(u);
    return out;
}

using Adjacency = std::vector<std::vector<std::size_t>>;

inline std::string rooted_code(const Adjacency& adj, const std::vector<int>& cls, std::size_t v, std::size_t from) {
    if (v < cls.size()) return std::to_string(cls[v]);
    std::vector<std::string> parts;
    for (std::size_t w : adj[v])
        if (w != from) parts.push_back(rooted_code(adj, cls, w, v));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p + ",";
    return s + ")";
}

/// Isomorphism class of a tree whose ends are coloured by direction.
inline std::string canonical_code(const Adjacency& adj, const std::vector<int>& cls) {
    std::string best;
    for (std::size_t r = cls.size(); r < adj.size(); ++r) {
        std::string c = rooted_code(adj, cls, r, adj.size());
        if (best.empty() || c < best) best = c;
    }
    return best;
}

inline std::shared_ptr<TreeShape> orient(const Adjacency& adj, const std::vector<IntVec2>& dirs, int d) {
    auto t = std::make_shared<TreeShape>();
    t->degree = d;
    t->leaves = dirs.size();
    t->leaf_dir = dirs;
    t->root = dirs.size();
    std::vector<std::size_t> order{t->root}, parent_edge(adj.size(), SIZE_MAX);
    std::vector<bool> seen(adj.size(), false);
    seen[t->root] = true;
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::size_t v = order[k];
        for (std::size_t w : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            parent_edge[w] = t->edges.size();
            t->edges.push_back({v, w, {0, 0}, -1});
            order.push_back(w);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t v = *it;
        if (v == t->root) continue;
        auto& e = t->edges[parent_edge[v]];
        if (v < t->leaves) {
            e.v = dirs[v];
        } else {
            for (const auto& f : t->edges)
                if (f.parent == v) e.v += f.v;
        }
        if (e.v.is_zero()) return nullptr;
    }
    for (std::size_t v = t->leaves; v < adj.size(); ++v) {
        std::vector<IntVec2> out;
        if (v != t->root) out.push_back(-t->edges[parent_edge[v]].v);
        for (const auto& f : t->edges)
            if (f.parent == v) out.push_back(f.v);
        std::int64_t m = vertex_multiplicity(out[0], out[1]);
        if (m == 0) return nullptr;
        t->multiplicity *= m;
    }
    for (std::size_t k = 0; k < t->edges.size(); ++k)
        if (t->edges[k].child >= t->leaves) {
            t->edges[k].slot = static_cast<int>(t->bounded.size());
            t->bounded.push_back(k);
        }
    t->above.resize(t->edges.size());
    for (std::size_t k = 0; k < t->edges.size(); ++k) {
        std::vector<std::size_t> path;
        std::size_t v = t->edges[k].parent;
        while (v != t->root) {
            path.push_back(parent_edge[v]);
            v = t->edges[parent_edge[v]].parent;
        }
        std::reverse(path.begin(), path.end());
        t->above[k] = std::move(path);
    }
    return t;
}

}  // namespace detail

/// All 3-valent trees with ends d x {(-1,0),(0,-1),(1,1)}, up to permuting
/// equal-direction ends, with no zero edge vector and no zero-multiplicity vertex.
inline std::vector<std::shared_ptr<const TreeShape>> tree_shapes(int d) {
    if (d < 1) throw DomainError("degree must be positive");
    auto dirs = detail::end_directions(d);
    const std::size_t L = dirs.size();
    std::vector<int> cls(L);
    for (std::size_t k = 0; k < L; ++k) cls[k] = static_cast<int>(k) / d;
    std::set<std::string> seen;
    std::vector<std::shared_ptr<const TreeShape>> out;

    // Insert ends one at a time into an edge of the tree built so far.
    std::vector<std::pair<std::size_t, std::size_t>> edges{{0, L}, {1, L}, {2, L}};
    std::size_t next_internal = L + 1;
    std::function<void(std::size_t)> grow = [&](std::size_t leaf) {
        if (leaf == L) {
            detail::Adjacency adj(2 * L - 2);
            for (auto [a, b] : edges) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            std::string code = detail::canonical_code(adj, cls);
            if (!seen.insert(code).second) return;
            auto t = detail::orient(adj, dirs, d);
            if (!t) return;
            t->canonical = code;
            out.push_back(std::move(t));
            return;
        }
        const std::size_t count = edges.size();
        for (std::size_t k = 0; k < count; ++k) {
            auto [a, b] = edges[k];
            std::size_t m = next_internal++;
            edges[k] = {a, m};
            edges.push_back({m, b});
            edges.push_back({m, leaf});
            grow(leaf + 1);
            edges.pop_back();
            edges.pop_back();
            edges[k] = {a, b};
            --next_internal;
        }
    };
    grow(3);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x->canonical < y->canonical; });
    return out;
}

/// Every marked type: a tree shape and an injective placement of the n
/// labelled points on its edges. Two points on one edge always give a
/// singular system and are not emitted.
inline void for_each_type(int d, const std::function<void(const MarkedTreeType&)>& visit) {
    const std::size_t n = static_cast<std::size_t>(3 * d - 1);
    for (const auto& t : tree_shapes(d)) {
        MarkedTreeType mt{t, std::vector<std::size_t>(n)};
        std::vector<bool> used(t->edges.size(), false);
        std::function<void(std::size_t)> place = [&](std::size_t i) {
            if (i == n) {
                visit(mt);
                return;
            }
            for (std::size_t e = 0; e < t->edges.size(); ++e) {
                if (used[e]) continue;
                used[e] = true;
                mt.point_edge[i] = e;
                place(i + 1);
                used[e] = false;
            }
        };
        place(0);
    }
}

inline std::vector<MarkedTreeType> enumerate_types(int d) {
    std::vector<MarkedTreeType> out;
    for_each_type(d, [&](const MarkedTreeType& t) { out.push_back(t); });
    return out;
}

namespace detail {

/// Row of the reduced system: point on edge e means det(P - tail(e), v_e) = 0.
inline std::vector<Rational> reduced_row(const TreeShape& t, std::size_t e) {
    std::vector<Rational> row(t.unknowns(), Rational(0));
    IntVec2 v = t.edges[e].v;
    row[0] = v.y;
    row[1] = -v.x;
    for (std::size_t f : t.above[e]) row[2 + t.edges[f].slot] = det2(t.edges[f].v, v);
    return row;
}

inline Matrix reduced_matrix(const TreeShape& t, const std::vector<std::size_t>& point_edge) {
    Matrix m;
    for (std::size_t e : point_edge) m.push_back(reduced_row(t, e));
    return m;
}

/// Full system in root, bounded lengths and one parameter per point.
inline Matrix full_matrix(const TreeShape& t, const std::vector<std::size_t>& point_edge) {
    const std::size_t n = point_edge.size(), u = t.unknowns();
    Matrix m(2 * n, std::vector<Rational>(u + n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t e = point_edge[i];
        IntVec2 v = t.edges[e].v;
        m[2 * i][0] = 1;
        m[2 * i + 1][1] = 1;
        for (std::size_t f : t.above[e]) {
            m[2 * i][2 + t.edges[f].slot] = t.edges[f].v.x;
            m[2 * i + 1][2 + t.edges[f].slot] = t.edges[f].v.y;
        }
        m[2 * i][u + i] = v.x;
        m[2 * i + 1][u + i] = v.y;
    }
    return m;
}

inline std::int64_t abs_integer(const Rational& q) {
    if (!q.is_integer()) throw Error("determinant of an integer matrix is not an integer");
    return std::abs(q.num().get_si());
}

}  // namespace detail

enum class SolveStatus { Solved, Singular, Infeasible, Wall };

struct TypeSolution {
    SolveStatus status = SolveStatus::Singular;
    PlaneTropicalCurve curve;
    std::int64_t complex_mult = 0;
    std::int64_t full_det = 0;     ///< |det| of the full evaluation system
    std::int64_t vertex_product = 0;
    std::vector<PointQ2> node_positions;
};

namespace detail {

inline TypeSolution finish_solve(const TreeShape& t, const std::vector<std::size_t>& point_edge, const PointConfiguration& pts,
                                 const std::vector<Rational>& x, std::int64_t reduced_det) {
    TypeSolution s;
    for (std::size_t j = 0; j < t.bounded.size(); ++j) {
        int sg = x[2 + j].sign();
        if (sg < 0) { s.status = SolveStatus::Infeasible; return s; }
        if (sg == 0) s.status = SolveStatus::Wall;
    }
    std::vector<PointQ2> pos(2 * t.leaves - 2);
    pos[t.root] = {x[0], x[1]};
    for (const auto& e : t.edges)
        if (e.slot >= 0) pos[e.child] = pos[e.parent] + scaled(e.v, x[2 + e.slot]);
    bool wall = s.status == SolveStatus::Wall;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& e = t.edges[point_edge[i]];
        PointQ2 r = pts[i] - pos[e.parent];
        Rational param = dot(r, e.v) / Rational(static_cast<long long>(dot(e.v, e.v)));
        if (param.sign() < 0 || (e.slot >= 0 && param > x[2 + e.slot])) { s.status = SolveStatus::Infeasible; return s; }
        if (param.sign() == 0 || (e.slot >= 0 && param == x[2 + e.slot])) wall = true;
    }
    if (wall) { s.status = SolveStatus::Wall; return s; }

    s.status = SolveStatus::Solved;
    s.node_positions = pos;
    std::vector<std::size_t> vid(pos.size(), SIZE_MAX);
    for (std::size_t v = t.leaves; v < pos.size(); ++v) {
        vid[v] = s.curve.vertices.size();
        s.curve.vertices.push_back(pos[v]);
    }
    for (const auto& e : t.edges) {
        auto pd = primitive_decompose(e.v);
        if (e.slot >= 0) s.curve.edges.push_back({vid[e.parent], vid[e.child], pd.weight});
        else s.curve.rays.push_back({vid[e.parent], pd.direction, pd.weight});
    }
    s.complex_mult = reduced_det;
    s.full_det = abs_integer(determinant(full_matrix(t, point_edge)));
    s.vertex_product = t.multiplicity;
    if (s.full_det != s.complex_mult || s.vertex_product != s.complex_mult)
        throw Error("determinant-product identity violated");
    return s;
}

}  // namespace detail

/// Solves "point i lies on edge point_edge[i]" exactly.
inline TypeSolution solve_type(const MarkedTreeType& mt, const PointConfiguration& pts) {
    const auto& t = *mt.tree;
    if (pts.size() != mt.point_edge.size() || pts.size() != t.unknowns())
        throw DomainError("point count does not match the type");
    Matrix m = detail::reduced_matrix(t, mt.point_edge);
    auto inv = inverse(m);
    if (!inv) return {};
    std::vector<Rational> b, x(t.unknowns(), Rational(0));
    for (std::size_t i = 0; i < pts.size(); ++i) b.push_back(det2(pts[i], t.edges[mt.point_edge[i]].v));
    for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c) x[r] += (*inv)[r][c] * b[c];
    return detail::finish_solve(t, mt.point_edge, pts, x, detail::abs_integer(determinant(m)));
}

struct CurveRecord {
    PlaneTropicalCurve curve;
    std::int64_t complex_mult = 0;
    int welschinger = 0;
    std::string tree;
    std::vector<std::size_t> point_edge;
};

struct CountResult {
    int degree = 0;
    std::optional<std::uint64_t> seed;
    PointConfiguration points;
    std::vector<CurveRecord> curves;
    BigInt n_complex = 0;
    BigInt n_welschinger = 0;
    std::size_t trees = 0;
    std::size_t systems_examined = 0;  ///< edge subsets with a nonsingular system
    std::size_t assignments_pruned = 0;
    std::size_t identity_checks = 0;   ///< accepted solutions whose determinants were cross-checked
};

inline unsigned enumeration_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TROPIC_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

namespace detail {

struct TreeCount {
    std::vector<CurveRecord> curves;
    std::size_t systems = 0;
    std::size_t pruned = 0;
    bool wall = false;
};

/// All solutions for one tree. Edge subsets with a nonsingular system are
/// visited; points are assigned to rows depth-first, pruning an assignment
/// once some length is certainly negative. The bound is computed in floating
/// point with a safety margin; every surviving assignment is solved exactly.
inline TreeCount count_tree(const TreeShape& t, const PointConfiguration& pts) {
    TreeCount out;
    const std::size_t n = pts.size(), E = t.edges.size(), nb = t.bounded.size();
    std::vector<std::size_t> subset(n);
    std::vector<std::vector<Rational>> rhs(E);
    for (std::size_t e = 0; e < E; ++e)
        for (const auto& p : pts) rhs[e].push_back(det2(p, t.edges[e].v));

    auto visit_subset = [&] {
        Matrix m;
        for (std::size_t e : subset) m.push_back(reduced_row(t, e));
        std::vector<std::vector<double>> md(n, std::vector<double>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) md[r][c] = m[r][c].to_double();
        // Integer matrix: |det| < 1/2 in floating point means singular.
        {
            auto a = md;
            double det = 1;
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t p = c;
                for (std::size_t r = c + 1; r < n; ++r)
                    if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
                if (a[p][c] == 0) { det = 0; break; }
                std::swap(a[p], a[c]);
                det *= a[c][c];
                for (std::size_t r = c + 1; r < n; ++r) {
                    double f = a[r][c] / a[c][c];
                    for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
                }
            }
            if (std::fabs(det) < 0.5) return;
        }
        auto inv = inverse(m);
        if (!inv) return;
        ++out.systems;
        std::int64_t reduced_det = abs_integer(determinant(m));

        // w[j][r][i]: contribution of point i on row r to length j.
        std::vector<std::vector<std::vector<double>>> w(nb, std::vector<std::vector<double>>(n, std::vector<double>(n)));
        std::vector<std::vector<double>> suffix(nb, std::vector<double>(n + 1, 0.0));
        double scale = 1;
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t i = 0; i < n; ++i) {
                    w[j][r][i] = (*inv)[2 + j][r].to_double() * rhs[subset[r]][i].to_double();
                    scale = std::max(scale, std::fabs(w[j][r][i]));
                }
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t r = n; r-- > 0;)
                suffix[j][r] = suffix[j][r + 1] + *std::max_element(w[j][r].begin(), w[j][r].end());
        const double tol = 1e-7 * scale * static_cast<double>(n);

        std::vector<std::size_t> point_of_row(n);
        std::vector<bool> used(n, false);
        std::vector<double> partial(nb, 0.0);
        std::function<void(std::size_t)> assign = [&](std::size_t r) {
            if (r == n) {
                std::vector<Rational> x(t.unknowns(), Rational(0));
                for (std::size_t k = 0; k < x.size(); ++k)
                    for (std::size_t c = 0; c < n; ++c) x[k] += (*inv)[k][c] * rhs[subset[c]][point_of_row[c]];
                std::vector<std::size_t> point_edge(n);
                for (std::size_t c = 0; c < n; ++c) point_edge[point_of_row[c]] = subset[c];
                auto s = finish_solve(t, point_edge, pts, x, reduced_det);
                if (s.status == SolveStatus::Wall) out.wall = true;
                if (s.status != SolveStatus::Solved) return;
                out.curves.push_back({std::move(s.curve), s.complex_mult, welschinger_sign(s.complex_mult), t.canonical,
                                      std::move(point_edge)});
                return;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (used[i]) continue;
                bool ok = true;
                for (std::size_t j = 0; j < nb && ok; ++j)
                    if (partial[j] + w[j][r][i] + suffix[j][r + 1] < -tol) ok = false;
                if (!ok) { ++out.pruned; continue; }
                used[i] = true;
                point_of_row[r] = i;
                for (std::size_t j = 0; j < nb; ++j) partial[j] += w[j][r][i];
                assign(r + 1);
                for (std::size_t j = 0; j < nb; ++j) partial[j] -= w[j][r][i];
                used[i] = false;
            }
        };
        assign(0);
    };

    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t k, std::size_t from) {
        if (k == n) { visit_subset(); return; }
        for (std::size_t e = from; e + (n - k) <= E; ++e) {
            subset[k] = e;
            choose(k + 1, e + 1);
        }
    };
    choose(0, 0);
    return out;
}

}  // namespace detail

/// Counts degree-d rational curves through the 3d-1 points. Throws
/// NonGenericPoints when a solution sits on a wall; reseed and retry.
inline CountResult count_curves(int d, const PointConfiguration& pts) {
    if (d < 1) throw DomainError("degree must be positive");
    if (pts.size() != static_cast<std::size_t>(3 * d - 1)) throw DomainError("need 3d-1 points");
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw NonGenericPoints("non-generic configuration: repeated point");
    auto trees = tree_shapes(d);
    std::vector<detail::TreeCount> parts(trees.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t k = next++;
            if (k >= trees.size()) return;
            try {
                parts[k] = detail::count_tree(*trees[k], pts);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned nt = std::min<unsigned>(enumeration_threads(), static_cast<unsigned>(trees.size()));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < nt; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    CountResult res;
    res.degree = d;
    res.points = pts;
    res.trees = trees.size();
    for (auto& p : parts) {
        if (p.wall) throw NonGenericPoints("non-generic configuration: a solution lies on a wall; reseed");
        res.systems_examined += p.systems;
        res.assignments_pruned += p.pruned;
        for (auto& c : p.curves) {
            res.n_complex += c.complex_mult;
            res.n_welschinger += c.welschinger;
            ++res.identity_checks;
            res.curves.push_back(std::move(c));
        }
    }
    return res;
}

/// Deterministic points with coordinates a/p for distinct primes p near 10^6.
inline PointConfiguration random_points(std::size_t n, std::uint64_t seed) {
    std::vector<long long> primes;
    for (long long c = 1000003; primes.size() < 2 * n; c += 2) {
        bool prime = true;
        for (long long f = 3; f * f <= c; f += 2)
            if (c % f == 0) { prime = false; break; }
        if (prime) primes.push_back(c);
    }
    std::mt19937_64 rng(seed);
    std::shuffle(primes.begin(), primes.end(), rng);
    std::uniform_int_distribution<long long> dist(-10, 10);
    PointConfiguration pts;
    for (std::size_t i = 0; i < n; ++i) {
        auto coord = [&](long long p) {
            std::uniform_int_distribution<long long> frac(1, p - 1);
            return Rational(BigInt(std::to_string(dist(rng) * p + frac(rng)))) / Rational(static_cast<long long>(p));
        };
        Rational x = coord(primes[2 * i]);
        Rational y = coord(primes[2 * i + 1]);
        pts.push_back({x, y});
    }
    return pts;
}

/// Counts with a seeded configuration, moving to the next seed while the
/// points turn out non-generic.
inline CountResult count_seeded(int d, std::uint64_t seed, std::size_t* rejected = nullptr) {
    for (std::size_t attempt = 0;; ++attempt) {
        std::uint64_t s = seed + attempt * 1000003ULL;
        try {
            auto r = count_curves(d, random_points(static_cast<std::size_t>(3 * d - 1), s));
            r.seed = s;
            return r;
        } catch (const NonGenericPoints&) {
            if (rejected) ++*rejected;
            if (attempt > 50) throw;
        }
    }
}

struct InvarianceReport {
    std::vector<CountResult> runs;
    std::size_t rejected = 0;
    bool complex_invariant = true;
    bool welschinger_invariant = true;
    bool ok() const { return complex_invariant && welschinger_invariant; }
};

inline InvarianceReport invariance_harness(int d, std::size_t trials, std::uint64_t seed) {
    if (d < 1 || d > 3) throw DomainError("unsupported degree");
    InvarianceReport rep;
    for (std::size_t k = 0; k < trials; ++k) {
        rep.runs.push_back(count_seeded(d, seed + k, &rep.rejected));
        const auto& first = rep.runs.front();
        const auto& last = rep.runs.back();
        if (last.n_complex != first.n_complex) rep.complex_invariant = false;
        if (last.n_welschinger != first.n_welschinger) rep.welschinger_invariant = false;
    }
    return rep;
}

}  // namespace tropic
