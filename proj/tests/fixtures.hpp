#pragma once

// Concrete curves and configurations shared by the unit and acceptance tests.

#include "tropic/tropic.hpp"

#include <array>
#include <random>
#include <vector>

namespace fixtures {

using namespace tropic;

inline Rational q(long long p, long long d = 1) { return Rational(p) / Rational(d); }

/// Heights -(i^2 + ij + j^2) on the lattice points of the degree-3 triangle.
inline TropicalPolynomial honeycomb_polynomial() {
    TropicalPolynomial::TermMap t;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) t[{i, j}] = Rational(static_cast<long long>(-(i * i + i * j + j * j)));
    return TropicalPolynomial(t);
}

inline PlaneTropicalCurve honeycomb_cubic() { return corner_locus(honeycomb_polynomial()).curve; }

inline LoopPoint honeycomb_base() { return {4, q(5, 7)}; }

/// Corner (0,0) raised until its triangle merges with the neighbour into a
/// parallelogram: genus 1, not smooth.
inline TropicalPolynomial parallelogram_cubic_polynomial() {
    auto t = honeycomb_polynomial().terms();
    t[{0, 0}] = 1;
    return TropicalPolynomial(t);
}

/// Interior point (1,1) pushed far below the hull: a hexagon swallows it.
inline TropicalPolynomial rational_cubic_polynomial() {
    auto t = honeycomb_polynomial().terms();
    t[{1, 1}] = -100;
    return TropicalPolynomial(t);
}

/// Two conics meeting transversally in multiplicities {2, 1, 1}; the double
/// point is (-1/2, -3/2).
inline TropicalPolynomial conic_a() { return parse("-2*x^2 + 4*x*y + -1*y^2 + -3*x + 1*y + 2"); }
inline TropicalPolynomial conic_b() { return parse("-4*x^2 + -2*x*y + y^2 + 2*x + 3*y + -3"); }

inline TropicalPolynomial smooth_conic() { return parse("x^2 + 1*x*y + y^2 + 1*x + 1*y + 0"); }

/// Triangle (0,0),(4,0),(0,4) around the inner triangle (1,1),(2,1),(1,2),
/// joined by a twisted ring of triangles.
inline NewtonSubdivision twisted_subdivision() {
    IntVec2 A{0, 0}, B{4, 0}, C{0, 4}, a{1, 1}, b{2, 1}, c{1, 2};
    std::vector<std::array<IntVec2, 3>> tris{{A, B, b}, {A, b, a}, {B, C, c}, {B, c, b}, {C, A, a}, {C, a, c}, {a, b, c}};
    NewtonSubdivision s;
    s.polygon = convex_hull({A, B, C});
    for (const auto& t : tris) s.cells.push_back(convex_hull({t[0], t[1], t[2]}));
    return s;
}

/// Two vertices of multiplicity 2 whose ends are not degree directions.
inline PlaneTropicalCurve double_vertex_curve() {
    PlaneTropicalCurve c;
    c.vertices = {{0, 0}, {1, 0}};
    c.edges = {{0, 1, 1}};
    c.rays = {{0, {-1, 2}, 1}, {0, {0, -1}, 2}, {1, {0, 1}, 2}, {1, {1, -2}, 1}};
    return c;
}

/// One vertex with four ends (2,1), 2(0,-1), (-1,-1), (-1,2).
inline PlaneTropicalCurve four_valent_vertex() {
    PlaneTropicalCurve c;
    c.vertices = {{0, 0}};
    c.rays = {{0, {2, 1}, 1}, {0, {0, -1}, 2}, {0, {-1, -1}, 1}, {0, {-1, 2}, 1}};
    return c;
}

/// Two points of the honeycomb cubic at height 5/2 and two lines through
/// both, with vertices between the second and third crossing of that height.
struct CollapseInstance {
    PointQ2 p1{2, q(5, 2)};
    PointQ2 p2{q(7, 2), q(5, 2)};
    PointQ2 v1{q(31, 8), q(5, 2)};
    PointQ2 v2{q(37, 8), q(5, 2)};
};

inline TropicalPolynomial random_polynomial(std::mt19937_64& rng, int d, int range = 20) {
    std::uniform_int_distribution<int> coef(-range, range), den(1, 4);
    std::bernoulli_distribution keep(0.8);
    TropicalPolynomial::TermMap t;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
            if (keep(rng) || (i == 0 && j == 0) || i + j == d) t[{i, j}] = q(coef(rng), den(rng));
    return TropicalPolynomial(t);
}

/// Perturbed strictly concave quadratic heights: mostly unimodular.
inline TropicalPolynomial near_honeycomb(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> a(2, 6), b(1, 3), noise(-40, 40);
    int qa = a(rng), qb = b(rng), qc = a(rng);
    TropicalPolynomial::TermMap t;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
            t[{i, j}] = q(-(qa * i * i + qb * i * j + qc * j * j) * 100 + noise(rng), 100);
    return TropicalPolynomial(t);
}

}  // namespace fixtures
