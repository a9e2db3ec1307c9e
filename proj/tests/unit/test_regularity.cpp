#include "catch_amalgamated.hpp"

#include "../fixtures.hpp"

#include <random>
#include <set>

using namespace tropic;
using fixtures::q;

namespace {

std::set<std::vector<IntVec2>> cell_set(const NewtonSubdivision& s) {
    std::set<std::vector<IntVec2>> out;
    for (auto c : s.cells) {
        std::sort(c.begin(), c.end());
        out.insert(c);
    }
    return out;
}

// The subdivision induced by the lift, recomputed from scratch.
NewtonSubdivision induced(const std::map<IntVec2, Rational>& lift) {
    TropicalPolynomial::TermMap t;
    for (const auto& [p, h] : lift) t[{static_cast<int>(p.x), static_cast<int>(p.y)}] = h;
    return newton_subdivision(TropicalPolynomial(t));
}

}  // namespace

TEST_CASE("unimodular triangulation counts") {
    CHECK(count_unimodular_triangulations(1) == 1);
    CHECK(count_unimodular_triangulations(2) == 4);
    CHECK(count_unimodular_triangulations(3) == 79);
    CHECK_THROWS_AS(count_unimodular_triangulations(0), DomainError);
}

TEST_CASE("smooth types in low degree") {
    CHECK(enumerate_smooth_types(1).size() == 1);
    auto two = enumerate_smooth_types(2);
    CHECK(two.size() == 4);
    std::set<std::set<std::vector<IntVec2>>> distinct;
    for (const auto& s : two) {
        REQUIRE(s.heights);
        CHECK(s.cells.size() == 4);
        CHECK(cell_set(induced(*s.heights)) == cell_set(s));
        distinct.insert(cell_set(s));
    }
    CHECK(distinct.size() == 4);
    CHECK_THROWS_AS(enumerate_smooth_types(3), DomainError);
    CHECK_THROWS_AS(enumerate_smooth_types(4, true), DomainError);
}

TEST_CASE("smooth cubic types carry realising lifts") {
    auto three = enumerate_smooth_types(3, true);
    CHECK(three.size() <= 79);
    CHECK(three.size() > 1);
    for (const auto& s : three) {
        REQUIRE(s.heights);
        CHECK(s.cells.size() == 9);
        CHECK(cell_set(induced(*s.heights)) == cell_set(s));
    }
}

TEST_CASE("twisted subdivision is not regular") {
    auto s = fixtures::twisted_subdivision();
    auto r = is_regular(s);
    CHECK_FALSE(r.regular);
    CHECK_FALSE(r.lift);
    CHECK(r.strict_inequalities == 9);
    CHECK(r.equalities == 0);

    // The opposite twist is not regular either.
    IntVec2 A{0, 0}, B{4, 0}, C{0, 4}, a{1, 1}, b{2, 1}, c{1, 2};
    NewtonSubdivision u;
    u.polygon = s.polygon;
    for (auto t : std::vector<std::array<IntVec2, 3>>{{A, B, a}, {B, b, a}, {B, C, b}, {C, c, b}, {C, A, c}, {A, a, c}, {a, b, c}})
        u.cells.push_back(convex_hull({t[0], t[1], t[2]}));
    CHECK_FALSE(is_regular(u).regular);

    // A uniform lift of the inner triangle gives it three trapezoid neighbours.
    std::map<IntVec2, Rational> lift{{A, 0}, {B, 0}, {C, 0}, {a, 5}, {b, 5}, {c, 5}};
    auto ring = induced(lift);
    auto rr = is_regular(ring);
    REQUIRE(rr.regular);
    CHECK(ring.cells.size() == 4);
    CHECK(cell_set(induced(*rr.lift)) == cell_set(ring));
}

TEST_CASE("subdivisions of random polynomials are regular") {
    std::mt19937_64 rng(83);
    for (int k = 0; k < 60; ++k) {
        auto g = fixtures::random_polynomial(rng, 2 + k % 3);
        auto s = newton_subdivision(g);
        auto r = is_regular(s);
        REQUIRE(r.regular);
        CHECK(r.feasibility.witness);
        CHECK(cell_set(induced(*r.lift)) == cell_set(s));
    }
}

TEST_CASE("malformed subdivisions are rejected") {
    auto s = fixtures::twisted_subdivision();

    auto missing = s;
    missing.cells.pop_back();
    CHECK_THROWS_AS(is_regular(missing), DomainError);

    auto clockwise = s;
    std::reverse(clockwise.cells[0].begin(), clockwise.cells[0].end());
    CHECK_THROWS_AS(is_regular(clockwise), DomainError);

    auto flat = s;
    flat.polygon = {{0, 0}, {1, 0}};
    CHECK_THROWS_AS(is_regular(flat), DomainError);

    // Same total area, but two cells overlap and a gap opens elsewhere.
    NewtonSubdivision overlap;
    overlap.polygon = standard_triangle(2);
    for (auto t : std::vector<std::array<IntVec2, 3>>{{IntVec2{0, 0}, {1, 0}, {0, 1}}, {IntVec2{0, 0}, {1, 0}, {0, 1}}, {IntVec2{1, 0}, {2, 0}, {1, 1}}, {IntVec2{0, 1}, {1, 1}, {0, 2}}})
        overlap.cells.push_back(convex_hull({t[0], t[1], t[2]}));
    CHECK_THROWS_AS(is_regular(overlap), DomainError);

    auto outside = s;
    outside.cells[0] = convex_hull({{0, 0}, {5, 0}, {2, 1}});
    CHECK_THROWS_AS(is_regular(outside), DomainError);
}
