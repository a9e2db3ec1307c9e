#pragma once

// Tropical polynomials in two variables: finite maxima of affine functions
// i*x + j*y + c with (i, j) natural exponents and c rational.

#include "tropic/hull.hpp"
#include "tropic/lattice.hpp"
#include "tropic/rational.hpp"
#include "tropic/semiring.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace tropic {

struct Exponent {
    int i = 0;
    int j = 0;
    friend constexpr bool operator==(Exponent, Exponent) = default;
    friend constexpr auto operator<=>(Exponent, Exponent) = default;
    IntVec2 vec() const { return {i, j}; }
};

class TropicalPolynomial {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit TropicalPolynomial(TermMap terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw DomainError("tropical polynomial needs at least one term");
        for (const auto& [e, c] : terms_)
            if (e.i < 0 || e.j < 0) throw DomainError("negative exponent");
    }

    /// The constant polynomial c.
    static TropicalPolynomial constant(Rational c) { return TropicalPolynomial(TermMap{{Exponent{0, 0}, std::move(c)}}); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Adds c*x^i*y^j, merging with an existing term by max.
    void add_term(Exponent e, const Rational& c) {
        if (e.i < 0 || e.j < 0) throw DomainError("negative exponent");
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted && it->second < c) it->second = c;
    }

    /// Lifted exponents, in term order.
    std::vector<LiftedPoint> lifted() const {
        std::vector<LiftedPoint> pts;
        for (const auto& [e, c] : terms_) pts.push_back({e.vec(), c});
        return pts;
    }

    std::vector<IntVec2> support() const {
        std::vector<IntVec2> s;
        for (const auto& [e, c] : terms_) s.push_back(e.vec());
        return s;
    }

    /// Convex hull of the support, counter-clockwise.
    std::vector<IntVec2> newton_polygon() const { return convex_hull(support()); }

    std::vector<UpperFace> lifted_hull() const { return upper_hull_lift(lifted()); }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.i + e.j);
        return d;
    }

    friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

private:
    TermMap terms_;
};

/// max over terms of i*p.x + j*p.y + c.
inline Rational eval(const TropicalPolynomial& g, const PointQ2& p) {
    std::optional<Rational> best;
    for (const auto& [e, c] : g.terms()) {
        Rational v = p.x * Rational(e.i) + p.y * Rational(e.j) + c;
        if (!best || *best < v) best = std::move(v);
    }
    return *best;
}

/// Terms attaining the maximum at p.
inline std::vector<Exponent> maximizing_terms(const TropicalPolynomial& g, const PointQ2& p) {
    Rational m = eval(g, p);
    std::vector<Exponent> out;
    for (const auto& [e, c] : g.terms())
        if (p.x * Rational(e.i) + p.y * Rational(e.j) + c == m) out.push_back(e);
    return out;
}

/// Definition of the corner locus, pointwise: the maximum is attained twice.
inline bool on_corner_locus(const TropicalPolynomial& g, const PointQ2& p) {
    return maximizing_terms(g, p).size() >= 2;
}

/// Max-plus convolution g1 (.) g2; as functions, eval(g1 (.) g2) = eval(g1) + eval(g2).
inline TropicalPolynomial trop_mul(const TropicalPolynomial& g1, const TropicalPolynomial& g2) {
    TropicalPolynomial::TermMap out;
    for (const auto& [e1, c1] : g1.terms())
        for (const auto& [e2, c2] : g2.terms()) {
            Exponent e{e1.i + e2.i, e1.j + e2.j};
            Rational c = c1 + c2;
            auto [it, inserted] = out.emplace(e, c);
            if (!inserted && it->second < c) it->second = c;
        }
    return TropicalPolynomial(std::move(out));
}

/// Tropical power g^(.k), k >= 1.
inline TropicalPolynomial trop_pow(const TropicalPolynomial& g, unsigned k) {
    if (k == 0) return TropicalPolynomial::constant(0);
    TropicalPolynomial r = g;
    for (unsigned n = 1; n < k; ++n) r = trop_mul(r, g);
    return r;
}

/// Tropical sum g1 (+) g2, the pointwise maximum.
inline TropicalPolynomial trop_add(const TropicalPolynomial& g1, const TropicalPolynomial& g2) {
    TropicalPolynomial r = g1;
    for (const auto& [e, c] : g2.terms()) r.add_term(e, c);
    return r;
}

/// Drops every term lifted strictly below the upper hull.
inline TropicalPolynomial relevant_support(const TropicalPolynomial& g) {
    auto faces = g.lifted_hull();
    TropicalPolynomial::TermMap kept;
    for (const auto& [e, c] : g.terms())
        if (hull_height(faces, e.vec()) == c) kept.emplace(e, c);
    return TropicalPolynomial(std::move(kept));
}

/// Whether g1 and g2 define the same function on the whole plane: same Newton
/// polygon and the same upper-hull height at every lattice point of it.
inline bool func_equal(const TropicalPolynomial& g1, const TropicalPolynomial& g2) {
    auto poly = g1.newton_polygon();
    if (poly != g2.newton_polygon()) return false;
    auto f1 = g1.lifted_hull();
    auto f2 = g2.lifted_hull();
    for (IntVec2 p : lattice_points(poly))
        if (hull_height(f1, p) != hull_height(f2, p)) return false;
    return true;
}

/// Text form accepted by parse(), e.g. "3*x + 2*y + 0".
inline std::string format(const TropicalPolynomial& g) {
    std::ostringstream os;
    bool first = true;
    // Highest degree first, mirroring how polynomials are usually written.
    std::vector<std::pair<Exponent, Rational>> terms(g.terms().begin(), g.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = a.first.i + a.first.j, db = b.first.i + b.first.j;
        if (da != db) return da > db;
        return a.first.i > b.first.i;
    });
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        auto var = [&](char v, int k) {
            if (k == 0) return;
            if (!mono.empty()) mono += '*';
            mono += v;
            if (k > 1) mono += "^" + std::to_string(k);
        };
        var('x', e.i);
        var('y', e.j);
        if (mono.empty()) os << c;
        else if (c.is_zero()) os << mono;
        else os << c << '*' << mono;
    }
    return os.str();
}

}  // namespace tropic
