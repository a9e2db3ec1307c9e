#include "catch_amalgamated.hpp"

#include "../fixtures.hpp"

#include <functional>
#include <random>

using namespace tropic;
using fixtures::q;

namespace {

LoopPoint sample(const CubicContext& ctx, std::mt19937_64& rng) {
    const long p = 1009;
    std::size_t e = rng() % ctx.loop().size();
    return {e, q(static_cast<long long>(rng() % p), p)};
}

bool non_generic(const DomainError& e) { return std::string(e.what()).rfind("non-generic", 0) == 0; }

// Runs f on random samples until it succeeds `want` times; non-generic draws are skipped.
int rejection_sample(int want, int max_tries, const std::function<void()>& f) {
    int ok = 0;
    for (int t = 0; t < max_tries && ok < want; ++t) {
        try {
            f();
            ++ok;
        } catch (const DomainError& e) {
            if (!non_generic(e)) throw;
        }
    }
    return ok;
}

Rational reduce(const Rational& s, const Rational& total) { return s - total * Rational((s / total).floor()); }

}  // namespace

TEST_CASE("loop of the honeycomb cubic") {
    CubicContext ctx(fixtures::honeycomb_cubic(), fixtures::honeycomb_base());
    const auto& loop = ctx.loop();
    CHECK(loop.size() == 6);
    CHECK(loop.total_length() == 6);
    const auto& c = ctx.curve();
    for (std::size_t k = 0; k < loop.size(); ++k) {
        const auto& e = c.edges[loop.edges[k]];
        std::size_t a = loop.vertices[k], b = loop.vertices[(k + 1) % loop.size()];
        CHECK(((e.from == a && e.to == b) || (e.from == b && e.to == a)));
        CHECK(loop.lengths[k] == 1);
    }
    // Counter-clockwise: positive signed area.
    Rational area2 = 0;
    for (std::size_t k = 0; k < loop.size(); ++k) {
        const auto& p = c.vertices[loop.vertices[k]];
        const auto& r = c.vertices[loop.vertices[(k + 1) % loop.size()]];
        area2 += p.x * r.y - p.y * r.x;
    }
    CHECK(area2.sign() > 0);

    for (int s = 0; s < 12; ++s) {
        Rational x = q(s, 2);
        CHECK(ctx.position(ctx.at_position(x)) == reduce(x, 6));
        CHECK(contains_point(c, ctx.point(ctx.at_position(x))));
    }
    CHECK(ctx.retract(ctx.point(ctx.base())) == ctx.base());
}

TEST_CASE("loop extraction on other cubics") {
    auto para = corner_locus(fixtures::parallelogram_cubic_polynomial()).curve;
    auto loop = extract_loop(para);
    CHECK(loop.size() >= 3);
    for (const auto& l : loop.lengths) CHECK(l.sign() > 0);
    CHECK_THROWS_AS(CubicContext(para), DomainError);

    auto rat = corner_locus(fixtures::rational_cubic_polynomial()).curve;
    CHECK_THROWS_AS(extract_loop(rat), DomainError);
    CHECK_THROWS_AS(CubicContext(rat), DomainError);

    CHECK_THROWS_AS(CubicContext(fixtures::honeycomb_cubic(), LoopPoint{6, 0}), DomainError);
    CHECK_THROWS_AS(CubicContext(fixtures::honeycomb_cubic(), LoopPoint{0, 1}), DomainError);
}

TEST_CASE("tropical line through two points") {
    CHECK(line_vertex_through({0, -1}, {1, 1}) == PointQ2{0, 0});
    auto v = line_vertex_through({q(-7, 2), 1}, {2, q(1, 3)});
    auto line = tropical_line(v);
    CHECK(contains_point(line, {q(-7, 2), 1}));
    CHECK(contains_point(line, {2, q(1, 3)}));
    CHECK_THROWS_AS(line_vertex_through({0, 0}, {3, 0}), DomainError);
    CHECK_THROWS_AS(line_vertex_through({0, 0}, {2, 2}), DomainError);
    CHECK_THROWS_AS(line_vertex_through({1, 1}, {1, 1}), DomainError);
}

TEST_CASE("identity and commutativity") {
    CubicContext ctx(fixtures::honeycomb_cubic(), fixtures::honeycomb_base());
    std::mt19937_64 rng(7);
    const Rational L = ctx.loop().total_length();
    int ok = rejection_sample(25, 4000, [&] {
        auto P = sample(ctx, rng), Q = sample(ctx, rng);
        auto pq = ctx.add(P, Q);
        auto qp = ctx.add(Q, P);
        auto po = ctx.add(P, ctx.base());
        CHECK(pq == qp);
        CHECK(po == P);
        CHECK(ctx.position(pq) == reduce(ctx.position(P) + ctx.position(Q) - ctx.position(ctx.base()), L));
    });
    CHECK(ok == 25);
}

TEST_CASE("inverses") {
    CubicContext ctx(fixtures::honeycomb_cubic(), fixtures::honeycomb_base());
    std::mt19937_64 rng(11);
    const auto O = ctx.base();
    // P + (-P) itself puts the third point at O, which is never generic;
    // cancel against a second summand instead.
    int ok = rejection_sample(15, 8000, [&] {
        auto P = sample(ctx, rng), Q = sample(ctx, rng);
        auto inv = ctx.at_position(2 * ctx.position(O) - ctx.position(P));
        auto back = ctx.add(ctx.add(Q, P), inv);
        CHECK(back == Q);
    });
    CHECK(ok == 15);
}

TEST_CASE("associativity on generic triples") {
    CubicContext ctx(fixtures::honeycomb_cubic(), fixtures::honeycomb_base());
    std::mt19937_64 rng(7);
    const Rational L = ctx.loop().total_length();
    int ok = rejection_sample(10, 20000, [&] {
        auto P = sample(ctx, rng), Q = sample(ctx, rng), R = sample(ctx, rng);
        auto a = ctx.add(ctx.add(P, Q), R);
        auto b = ctx.add(P, ctx.add(Q, R));
        CHECK(a == b);
        Rational expected = ctx.position(P) + ctx.position(Q) + ctx.position(R) - 2 * ctx.position(ctx.base());
        CHECK(ctx.position(a) == reduce(expected, L));
    });
    CHECK(ok == 10);
}

TEST_CASE("different lines through two points can give the same retraction") {
    CubicContext ctx(fixtures::honeycomb_cubic(), fixtures::honeycomb_base());
    fixtures::CollapseInstance inst;
    auto r1 = ctx.third_point_on_line(inst.v1, inst.p1, inst.p2);
    auto r2 = ctx.third_point_on_line(inst.v2, inst.p1, inst.p2);
    CHECK(r1 == PointQ2{q(35, 8), 3});
    CHECK(r2 == PointQ2{5, q(23, 8)});
    CHECK_FALSE(r1 == r2);
    CHECK(ctx.retract(r1) == LoopPoint{2, 0});
    CHECK(ctx.retract(r2) == LoopPoint{2, 0});
}

TEST_CASE("non-generic input is rejected") {
    CubicContext ctx(fixtures::honeycomb_cubic(), fixtures::honeycomb_base());
    auto P = ctx.at_position(q(1, 3));
    try {
        ctx.add(P, P);
        FAIL("doubling accepted");
    } catch (const DomainError& e) {
        CHECK(non_generic(e));
    }
    CHECK_THROWS_AS(ctx.retract({100, -3}), DomainError);
    CHECK_THROWS_AS(ctx.third_point_on_line({0, 0}, {100, 100}, {q(1, 3), 7}), DomainError);
}
