#pragma once

// Truncated Puiseux series over Q, the valuation map and tropicalization.

#include "tropic/lattice.hpp"
#include "tropic/polynomial.hpp"
#include "tropic/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tropic {

/// Series sum c_q t^q with finitely many known terms. Exponents at or above
/// the truncation order are unknown; an absent truncation order means the
/// series is exact (a finite sum).
class PuiseuxSeries {
public:
    using Term = std::pair<Rational, Rational>;  // (exponent, coefficient)

    PuiseuxSeries() = default;  // exact zero
    PuiseuxSeries(std::vector<Term> terms, std::optional<Rational> trunc = std::nullopt)
        : trunc_(std::move(trunc)) {
        std::map<Rational, Rational> acc;
        for (auto& [q, c] : terms) acc[q] += c;
        for (auto& [q, c] : acc)
            if (!c.is_zero() && (!trunc_ || q < *trunc_)) terms_.emplace_back(q, c);
    }

    /// c * t^q, exact.
    static PuiseuxSeries monomial(Rational c, Rational q) { return PuiseuxSeries({{std::move(q), std::move(c)}}); }
    static PuiseuxSeries constant(Rational c) { return monomial(std::move(c), 0); }

    const std::vector<Term>& terms() const { return terms_; }
    const std::optional<Rational>& truncation() const { return trunc_; }
    bool is_exact() const { return !trunc_.has_value(); }

    /// No known nonzero term (exact zero or zero up to truncation).
    bool is_zero_to_truncation() const { return terms_.empty(); }

    /// Least exponent with a nonzero coefficient.
    Rational val() const {
        if (terms_.empty()) throw DomainError("valuation undefined at this truncation");
        return terms_.front().first;
    }

    /// Lowest exponent that could carry a nonzero term.
    std::optional<Rational> lower_bound() const {
        if (!terms_.empty()) return terms_.front().first;
        return trunc_;
    }

    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        std::vector<Term> t = a.terms_;
        t.insert(t.end(), b.terms_.begin(), b.terms_.end());
        return PuiseuxSeries(std::move(t), min_opt(a.trunc_, b.trunc_));
    }
    friend PuiseuxSeries operator-(const PuiseuxSeries& a) {
        PuiseuxSeries r = a;
        for (auto& [q, c] : r.terms_) c = -c;
        return r;
    }
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        if ((a.is_exact() && a.terms_.empty()) || (b.is_exact() && b.terms_.empty())) return {};
        // Known below min(low(a) + trunc(b), low(b) + trunc(a)).
        std::optional<Rational> trunc;
        if (b.trunc_) trunc = *a.lower_bound() + *b.trunc_;
        if (a.trunc_) trunc = min_opt(trunc, *b.lower_bound() + *a.trunc_);
        std::vector<Term> t;
        for (const auto& [qa, ca] : a.terms_)
            for (const auto& [qb, cb] : b.terms_) {
                Rational q = qa + qb;
                if (!trunc || q < *trunc) t.emplace_back(q, ca * cb);
            }
        return PuiseuxSeries(std::move(t), trunc);
    }

    PuiseuxSeries pow(unsigned k) const {
        PuiseuxSeries r = constant(1);
        for (unsigned n = 0; n < k; ++n) r = r * *this;
        return r;
    }

    /// Multiplicative inverse. An exact series with more than one term has an
    /// infinite inverse; it is then truncated `relative_order` above -val.
    PuiseuxSeries inverse(const Rational& relative_order = 10) const {
        if (terms_.empty()) throw DomainError("inversion of a series that is zero up to truncation");
        const auto& [v, c] = terms_.front();
        Rational cinv = Rational(1) / c;
        if (is_exact() && terms_.size() == 1) return monomial(cinv, -v);
        Rational rel = trunc_ ? *trunc_ - v : relative_order;
        // a = c t^v (1 + u); 1/a = c^-1 t^-v sum (-u)^m.
        std::vector<Term> u;
        for (std::size_t k = 1; k < terms_.size(); ++k)
            u.emplace_back(terms_[k].first - v, -terms_[k].second * cinv);
        PuiseuxSeries neg_u(u, rel);
        PuiseuxSeries power(std::vector<Term>{{Rational(0), Rational(1)}}, rel);
        std::vector<Term> sum{{Rational(0), Rational(1)}};
        for (;;) {
            power = (power * neg_u).truncated(rel);
            if (power.terms_.empty()) break;
            sum.insert(sum.end(), power.terms_.begin(), power.terms_.end());
        }
        std::vector<Term> out;
        for (auto& [q, cc] : sum) out.emplace_back(q - v, cc * cinv);
        return PuiseuxSeries(std::move(out), rel - v);
    }

    /// Drops every term at or above `order`.
    PuiseuxSeries truncated(const Rational& order) const {
        return PuiseuxSeries(terms_, trunc_ ? std::min(*trunc_, order) : order);
    }

    friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

private:
    static std::optional<Rational> min_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }

    std::vector<Term> terms_;
    std::optional<Rational> trunc_;
};

inline Rational val(const PuiseuxSeries& a) { return a.val(); }

struct PuiseuxPoint {
    PuiseuxSeries z1;
    PuiseuxSeries z2;
};

/// (x1, x2) = (-val z1, -val z2).
inline PointQ2 val_map(const PuiseuxPoint& p) { return {-p.z1.val(), -p.z2.val()}; }

/// Polynomial sum a_ij z1^i z2^j with Puiseux series coefficients.
class PuiseuxPolynomial {
public:
    using TermMap = std::map<Exponent, PuiseuxSeries>;

    PuiseuxPolynomial() = default;
    explicit PuiseuxPolynomial(TermMap terms) {
        for (auto& [e, a] : terms)
            if (!a.is_zero_to_truncation()) terms_.emplace(e, std::move(a));
    }

    const TermMap& terms() const { return terms_; }

    /// Each summand a_ij z1^i z2^j evaluated at p.
    std::vector<std::pair<Exponent, PuiseuxSeries>> summands(const PuiseuxPoint& p) const {
        std::vector<std::pair<Exponent, PuiseuxSeries>> out;
        for (const auto& [e, a] : terms_)
            out.emplace_back(e, a * p.z1.pow(e.i) * p.z2.pow(e.j));
        return out;
    }

    PuiseuxSeries operator()(const PuiseuxPoint& p) const {
        PuiseuxSeries s;
        for (auto& [e, v] : summands(p)) s = s + v;
        return s;
    }

    friend PuiseuxPolynomial operator*(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g) {
        TermMap out;
        for (const auto& [e1, a] : f.terms_)
            for (const auto& [e2, b] : g.terms_) {
                Exponent e{e1.i + e2.i, e1.j + e2.j};
                auto it = out.find(e);
                if (it == out.end()) out.emplace(e, a * b);
                else it->second = it->second + a * b;
            }
        return PuiseuxPolynomial(std::move(out));
    }

private:
    TermMap terms_;
};

/// Term (i, j) -> -val(a_ij).
inline TropicalPolynomial tropicalize(const PuiseuxPolynomial& f) {
    TropicalPolynomial::TermMap t;
    for (const auto& [e, a] : f.terms()) t.emplace(e, -a.val());
    return TropicalPolynomial(std::move(t));
}

enum class RootStatus { Root, NotRoot, Undecidable };

struct KapranovReport {
    RootStatus root = RootStatus::Undecidable;
    bool min_attained_twice = false;
    bool image_on_corner_locus = false;
    Rational min_valuation;  ///< least valuation among the summands
    PointQ2 image;           ///< val_map(p)

    bool is_root() const { return root == RootStatus::Root; }
};

/// Compares the three faces of "p lies on the curve f = 0": algebraic
/// vanishing, the valuation condition on summands, and membership of the
/// image point in the corner locus of the tropicalization.
inline KapranovReport kapranov_check(const PuiseuxPolynomial& f, const PuiseuxPoint& p) {
    KapranovReport r;
    r.image = val_map(p);
    auto summands = f.summands(p);
    if (summands.empty()) throw DomainError("zero polynomial");
    std::vector<Rational> vals;
    for (const auto& [e, s] : summands) vals.push_back(s.val());
    r.min_valuation = *std::min_element(vals.begin(), vals.end());
    r.min_attained_twice = std::count(vals.begin(), vals.end(), r.min_valuation) >= 2;

    PuiseuxSeries value = f(p);
    if (!value.is_zero_to_truncation()) {
        r.root = RootStatus::NotRoot;
    } else if (value.is_exact() || *value.truncation() > r.min_valuation) {
        // The leading terms were seen to cancel.
        r.root = RootStatus::Root;
    } else {
        r.root = RootStatus::Undecidable;
    }
    r.image_on_corner_locus = on_corner_locus(tropicalize(f), r.image);
    return r;
}

}  // namespace tropic
