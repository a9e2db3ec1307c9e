#pragma once

// Exact linear feasibility by Gaussian substitution of equalities followed by
// Fourier-Motzkin elimination with strict inequalities.

#include "tropic/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tropic {

enum class Relation { Equal, LessEqual, Less };

/// coeffs . x  (rel)  rhs
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::LessEqual;
    Rational rhs;
};

class LinearSystem {
public:
    explicit LinearSystem(std::size_t num_vars) : n_(num_vars) {}

    std::size_t num_vars() const { return n_; }
    const std::vector<LinearConstraint>& constraints() const { return rows_; }

    void add(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
        if (coeffs.size() != n_) throw DomainError("constraint row has wrong length");
        rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
    }
    /// coeffs . x >= rhs
    void add_greater_equal(std::vector<Rational> coeffs, Rational rhs) {
        for (auto& c : coeffs) c = -c;
        add(std::move(coeffs), Relation::LessEqual, -rhs);
    }
    /// coeffs . x > rhs
    void add_greater(std::vector<Rational> coeffs, Rational rhs) {
        for (auto& c : coeffs) c = -c;
        add(std::move(coeffs), Relation::Less, -rhs);
    }

    bool satisfied_by(const std::vector<Rational>& x) const {
        for (const auto& r : rows_) {
            Rational lhs = 0;
            for (std::size_t i = 0; i < n_; ++i) lhs += r.coeffs[i] * x[i];
            switch (r.rel) {
                case Relation::Equal: if (lhs != r.rhs) return false; break;
                case Relation::LessEqual: if (lhs > r.rhs) return false; break;
                case Relation::Less: if (lhs >= r.rhs) return false; break;
            }
        }
        return true;
    }

private:
    std::size_t n_;
    std::vector<LinearConstraint> rows_;
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<std::vector<Rational>> witness;
    std::size_t eliminated_rows = 0;  ///< total rows produced during elimination
};

namespace detail {

struct FmRow {
    std::vector<Rational> a;
    Rational b;
    bool strict = false;
};

// Scales so the first nonzero coefficient has absolute value 1.
inline void normalize(FmRow& r) {
    for (const auto& c : r.a) {
        if (c.is_zero()) continue;
        Rational s = abs(c);
        for (auto& x : r.a) x /= s;
        r.b /= s;
        return;
    }
}

// Keeps the tightest copy of each normalized row; returns false on a
// constant contradiction.
inline bool compact(std::vector<FmRow>& rows) {
    std::map<std::vector<Rational>, std::pair<Rational, bool>> best;
    std::vector<FmRow> out;
    for (auto& r : rows) {
        bool zero = std::all_of(r.a.begin(), r.a.end(), [](const Rational& c) { return c.is_zero(); });
        if (zero) {
            if (r.b.sign() < 0 || (r.strict && r.b.is_zero())) return false;
            continue;
        }
        normalize(r);
        auto it = best.find(r.a);
        if (it == best.end()) {
            best.emplace(r.a, std::make_pair(r.b, r.strict));
        } else {
            auto& [b, s] = it->second;
            if (r.b < b || (r.b == b && r.strict)) { b = r.b; s = r.strict; }
        }
    }
    rows.clear();
    for (auto& [a, bs] : best) rows.push_back({a, bs.first, bs.second});
    return true;
}

}  // namespace detail

/// Decides whether the system has a rational solution. A returned witness
/// satisfies every constraint exactly.
inline FeasibilityResult feasible(const LinearSystem& sys) {
    using detail::FmRow;
    const std::size_t n = sys.num_vars();
    FeasibilityResult res;

    std::vector<FmRow> eqs, ineqs;
    for (const auto& c : sys.constraints()) {
        FmRow r{c.coeffs, c.rhs, c.rel == Relation::Less};
        (c.rel == Relation::Equal ? eqs : ineqs).push_back(std::move(r));
    }

    // Substitute equalities away: x_pivot = (b - sum_{k != pivot} a_k x_k) / a_pivot.
    std::vector<std::pair<std::size_t, FmRow>> substitutions;
    std::vector<bool> pivoted(n, false);
    auto substitute = [](FmRow& row, std::size_t j, const FmRow& eq) {
        if (row.a[j].is_zero()) return;
        Rational f = row.a[j] / eq.a[j];
        for (std::size_t k = 0; k < row.a.size(); ++k) row.a[k] -= f * eq.a[k];
        row.b -= f * eq.b;
    };
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        FmRow eq = eqs[e];
        std::size_t j = n;
        for (std::size_t k = 0; k < n; ++k)
            if (!eq.a[k].is_zero()) { j = k; break; }
        if (j == n) {
            if (!eq.b.is_zero()) return res;
            continue;
        }
        pivoted[j] = true;
        for (std::size_t f = e + 1; f < eqs.size(); ++f) substitute(eqs[f], j, eq);
        for (auto& r : ineqs) substitute(r, j, eq);
        substitutions.emplace_back(j, eq);
    }

    std::vector<FmRow> rows = std::move(ineqs);
    if (!detail::compact(rows)) return res;

    // Eliminate the remaining variables one at a time, remembering each stage.
    std::vector<std::size_t> order;
    std::vector<std::vector<FmRow>> stages;
    std::vector<bool> done = pivoted;
    for (;;) {
        // Pick the variable with the smallest product of bound counts.
        std::size_t best = n;
        std::size_t best_cost = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (done[j]) continue;
            std::size_t pos = 0, neg = 0;
            for (const auto& r : rows) {
                int s = r.a[j].sign();
                pos += s > 0;
                neg += s < 0;
            }
            if (pos + neg == 0) { done[j] = true; continue; }
            std::size_t cost = pos * neg;
            if (best == n || cost < best_cost) { best = j; best_cost = cost; }
        }
        if (best == n) break;
        std::size_t j = best;
        done[j] = true;
        order.push_back(j);
        stages.push_back(rows);
        std::vector<FmRow> next, up, low;
        for (auto& r : rows) {
            int s = r.a[j].sign();
            if (s == 0) next.push_back(r);
            else (s > 0 ? up : low).push_back(r);
        }
        for (const auto& u : up)
            for (const auto& l : low) {
                Rational fu = Rational(1) / u.a[j];
                Rational fl = Rational(1) / (-l.a[j]);
                FmRow c;
                c.a.resize(n);
                for (std::size_t k = 0; k < n; ++k) c.a[k] = u.a[k] * fu + l.a[k] * fl;
                c.a[j] = 0;
                c.b = u.b * fu + l.b * fl;
                c.strict = u.strict || l.strict;
                next.push_back(std::move(c));
            }
        res.eliminated_rows += next.size();
        if (!detail::compact(next)) return res;
        rows = std::move(next);
    }

    // Back substitution.
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t s = order.size(); s-- > 0;) {
        std::size_t j = order[s];
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& r : stages[s]) {
            if (r.a[j].is_zero()) continue;
            Rational rest = r.b;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) rest -= r.a[k] * x[k];
            Rational bound = rest / r.a[j];
            if (r.a[j].sign() > 0) {
                if (!hi || bound < *hi || (bound == *hi && r.strict)) { hi = bound; hi_strict = r.strict; }
            } else {
                if (!lo || bound > *lo || (bound == *lo && r.strict)) { lo = bound; lo_strict = r.strict; }
            }
        }
        auto ok = [&](const Rational& v) {
            if (lo && (v < *lo || (lo_strict && v == *lo))) return false;
            if (hi && (v > *hi || (hi_strict && v == *hi))) return false;
            return true;
        };
        Rational v = 0;
        if (!ok(v)) {
            if (lo && hi) v = (*lo == *hi) ? *lo : (*lo + *hi) / Rational(2);
            else if (lo) v = lo_strict ? *lo + Rational(1) : *lo;
            else v = hi_strict ? *hi - Rational(1) : *hi;
        }
        x[j] = v;
    }
    for (std::size_t s = substitutions.size(); s-- > 0;) {
        const auto& [j, eq] = substitutions[s];
        Rational v = eq.b;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) v -= eq.a[k] * x[k];
        x[j] = v / eq.a[j];
    }
    if (!sys.satisfied_by(x)) throw Error("internal: Fourier-Motzkin witness violates the system");
    res.feasible = true;
    res.witness = std::move(x);
    return res;
}

}  // namespace tropic
