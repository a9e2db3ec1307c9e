#include "catch_amalgamated.hpp"

#include "../fixtures.hpp"

#include <random>

using namespace tropic;
using fixtures::q;

namespace {

PlaneTropicalCurve curve_of(const std::string& s) { return corner_locus(parse(s)).curve; }

std::vector<std::pair<PointQ2, std::int64_t>> summary(const std::vector<IntersectionPoint>& pts) {
    std::map<PointQ2, std::int64_t> m;
    for (const auto& p : pts) m[p.location] += p.multiplicity;
    return {m.begin(), m.end()};
}

// Direction of the piece an intersection point came from.
IntVec2 piece_dir(const PlaneTropicalCurve& c, PieceRef r) {
    switch (r.kind) {
        case PieceKind::Segment: return c.edge_direction(r.index);
        case PieceKind::Ray: return c.rays[r.index].dir;
        case PieceKind::Line: return c.lines[r.index].dir;
    }
    return {};
}

std::int64_t piece_weight(const PlaneTropicalCurve& c, PieceRef r) {
    switch (r.kind) {
        case PieceKind::Segment: return c.edges[r.index].weight;
        case PieceKind::Ray: return c.rays[r.index].weight;
        case PieceKind::Line: return c.lines[r.index].weight;
    }
    return 0;
}

}  // namespace

TEST_CASE("two lines") {
    auto l1 = curve_of("x + y + 0"), l2 = curve_of("1*x + 2*y + 0");
    auto pts = transverse_intersections(l1, l2);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].location == PointQ2{0, -1});
    CHECK(pts[0].multiplicity == 1);
    CHECK(bezout_sum(l1, l2) == 1);
    CHECK(summary(stable_intersection(l1, l2)) == summary(pts));
}

TEST_CASE("lines sharing a ray") {
    auto l1 = curve_of("x + y + 0"), l2 = curve_of("1*x + y + 0");
    CHECK_THROWS_AS(transverse_intersections(l1, l2), NonTransverse);
    auto st = stable_intersection(l1, l2);
    REQUIRE(st.size() == 1);
    CHECK(st[0].location == PointQ2{-1, 0});
    CHECK(st[0].multiplicity == 1);
    CHECK(st[0].stable_limit);

    // A vertex on the other curve is not transverse either.
    CHECK_THROWS_AS(transverse_intersections(l1, curve_of("x + 1*y + 0")), NonTransverse);
}

TEST_CASE("conics meeting with multiplicities two, one, one") {
    auto a = corner_locus(fixtures::conic_a()).curve;
    auto b = corner_locus(fixtures::conic_b()).curve;
    auto pts = transverse_intersections(a, b);
    std::vector<std::pair<PointQ2, std::int64_t>> expected{{{-2, 3}, 1}, {{q(-1, 2), q(-3, 2)}, 2}, {{6, 0}, 1}};
    CHECK(summary(pts) == expected);
    CHECK(total_multiplicity(pts) == 4);
    CHECK(bezout_sum(a, b) == 4);
    // Multiplicity is w1 w2 |det| of the crossing pieces.
    for (const auto& p : pts) {
        REQUIRE(p.source);
        auto [r1, r2] = *p.source;
        CHECK(p.multiplicity == piece_weight(a, r1) * piece_weight(b, r2) * std::abs(det2(piece_dir(a, r1), piece_dir(b, r2))));
        CHECK(contains_point(a, p.location));
        CHECK(contains_point(b, p.location));
    }
    for (std::size_t k = 0; k < 4; ++k) CHECK(summary(stable_intersection(a, b, k)) == expected);
}

TEST_CASE("Bezout count for random transverse pairs") {
    std::mt19937_64 rng(89);
    int checked = 0;
    for (int k = 0; k < 150; ++k) {
        int d1 = 1 + k % 4, d2 = 1 + (k / 4) % 4;
        auto c1 = corner_locus(fixtures::random_polynomial(rng, d1)).curve;
        auto c2 = corner_locus(fixtures::random_polynomial(rng, d2)).curve;
        std::optional<std::int64_t> sum;
        try {
            sum = bezout_sum(c1, c2);
        } catch (const NonTransverse&) {
        }
        if (sum) {
            CHECK(*sum == d1 * d2);
            ++checked;
        }
        CHECK(total_multiplicity(stable_intersection(c1, c2)) == d1 * d2);
    }
    CHECK(checked > 100);
}

TEST_CASE("stable self-intersection") {
    auto l = curve_of("3*x + 2*y + 0");
    auto st = stable_intersection(l, l);
    REQUIRE(st.size() == 1);
    CHECK(st[0].location == PointQ2{-3, -2});
    CHECK(st[0].multiplicity == 1);

    std::mt19937_64 rng(97);
    for (int k = 0; k < 20; ++k) {
        int d = 1 + k % 4;
        auto c = corner_locus(fixtures::random_polynomial(rng, d)).curve;
        auto self = stable_intersection(c, c);
        CHECK(total_multiplicity(self) == d * d);
        for (const auto& p : self) CHECK(contains_point(c, p.location));
    }
    CHECK(total_multiplicity(stable_intersection(fixtures::honeycomb_cubic(), fixtures::honeycomb_cubic())) == 9);
}

TEST_CASE("stable intersection does not depend on the perturbation") {
    std::mt19937_64 rng(101);
    for (int k = 0; k < 25; ++k) {
        auto c1 = corner_locus(fixtures::random_polynomial(rng, 1 + k % 3, 3)).curve;
        auto c2 = corner_locus(fixtures::random_polynomial(rng, 1 + k % 2, 3)).curve;
        auto ref = summary(stable_intersection(c1, c2, 0));
        for (std::size_t first : {3, 7, 12}) CHECK(summary(stable_intersection(c1, c2, first)) == ref);
    }
    CHECK(stable_schedule().size() == 16);
    CHECK(stable_schedule().front() == IntVec2{1, 2});
}

TEST_CASE("local model of multiplicity n") {
    auto horizontal = curve_of("y + 0");
    for (int n = 1; n <= 5; ++n) {
        auto steep = curve_of("y + x^" + std::to_string(n));
        auto pts = transverse_intersections(horizontal, steep);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].location == PointQ2{0, 0});
        CHECK(pts[0].multiplicity == n);
        CHECK(summary(stable_intersection(horizontal, steep)) == summary(pts));
    }
}

TEST_CASE("union is the curve of the product") {
    std::mt19937_64 rng(103);
    for (int k = 0; k < 40; ++k) {
        auto f = fixtures::random_polynomial(rng, 1 + k % 3);
        auto g = fixtures::random_polynomial(rng, 1 + (k / 3) % 3);
        auto u = curve_union(corner_locus(f).curve, corner_locus(g).curve);
        CHECK(same_curve(u, corner_locus(trop_mul(f, g)).curve));
        CHECK(check_balancing(u).balanced);
    }
    // Overlapping pieces add weights.
    auto l = curve_of("x + y + 0");
    CHECK(same_curve(curve_union(l, l), corner_locus(trop_pow(parse("x + y + 0"), 2)).curve));
    auto h = curve_of("y + 0");
    CHECK(curve_union(h, h).lines.at(0).weight == 2);
}

TEST_CASE("decomposing transverse unions") {
    std::mt19937_64 rng(107);
    int split = 0;
    for (int k = 0; k < 40; ++k) {
        auto c1 = corner_locus(fixtures::near_honeycomb(rng, 1 + k % 3)).curve;
        auto c2 = corner_locus(fixtures::near_honeycomb(rng, 1 + (k / 3) % 3)).curve;
        // A 4-valent vertex of either curve would look like a crossing.
        if (!is_smooth_graph(c1) || !is_smooth_graph(c2)) continue;
        bool transverse = true;
        try {
            transverse_intersections(c1, c2);
        } catch (const NonTransverse&) {
            transverse = false;
        }
        if (!transverse) continue;
        auto parts = decompose_transverse_union(curve_union(c1, c2));
        REQUIRE(parts);
        ++split;
        bool direct = same_curve(parts->first, c1) && same_curve(parts->second, c2);
        bool swapped = same_curve(parts->first, c2) && same_curve(parts->second, c1);
        CHECK((direct || swapped));
    }
    CHECK(split > 20);
    CHECK_FALSE(decompose_transverse_union(fixtures::honeycomb_cubic()));
    CHECK_THROWS_AS(decompose_transverse_union(fixtures::four_valent_vertex()), DomainError);
}
