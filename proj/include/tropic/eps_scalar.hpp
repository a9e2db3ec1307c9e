#pragma once

// The ordered field Q(eps) of rational functions in a positive infinitesimal.

#include "tropic/rational.hpp"

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace tropic {

/// Polynomial in eps with rational coefficients; index = degree, no trailing zeros.
class EpsPoly {
public:
    EpsPoly() = default;
    EpsPoly(Rational c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit EpsPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    /// Degree of the lowest nonzero coefficient (-1 for the zero polynomial).
    int order() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!c_[k].is_zero()) return static_cast<int>(k);
        return -1;
    }

    friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return EpsPoly(std::move(r));
    }
    friend EpsPoly operator-(const EpsPoly& a) {
        auto r = a.c_;
        for (auto& x : r) x = -x;
        return EpsPoly(std::move(r));
    }
    friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) { return a + (-b); }
    friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return EpsPoly(std::move(r));
    }
    EpsPoly scaled(const Rational& s) const {
        auto r = c_;
        for (auto& x : r) x *= s;
        return EpsPoly(std::move(r));
    }

    /// Quotient and remainder of polynomial division.
    static std::pair<EpsPoly, EpsPoly> divmod(EpsPoly a, const EpsPoly& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1), Rational(0));
        while (!a.is_zero() && a.degree() >= b.degree()) {
            int shift = a.degree() - b.degree();
            Rational f = a.c_.back() / b.c_.back();
            q[shift] = f;
            std::vector<Rational> sub(shift + b.c_.size(), Rational(0));
            for (std::size_t k = 0; k < b.c_.size(); ++k) sub[shift + k] = b.c_[k] * f;
            a = a - EpsPoly(std::move(sub));
        }
        return {EpsPoly(std::move(q)), std::move(a)};
    }

    /// Monic greatest common divisor.
    static EpsPoly gcd(EpsPoly a, EpsPoly b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.scaled(Rational(1) / a.c_.back());
    }

    friend bool operator==(const EpsPoly&, const EpsPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Element of Q(eps), ordered by its behaviour as eps -> 0+.
/// Canonical form: numerator and denominator coprime, and the lowest-order
/// nonzero denominator coefficient equal to 1.
class EpsScalar {
public:
    EpsScalar() : num_(), den_(Rational(1)) {}
    EpsScalar(int v) : EpsScalar(Rational(v)) {}
    EpsScalar(long long v) : EpsScalar(Rational(v)) {}
    EpsScalar(Rational v) : num_(std::move(v)), den_(Rational(1)) {}
    EpsScalar(EpsPoly num, EpsPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("eps-scalar with zero denominator");
        canonicalize();
    }

    static EpsScalar epsilon() { return EpsScalar(EpsPoly(std::vector<Rational>{Rational(0), Rational(1)}), EpsPoly(Rational(1))); }

    const EpsPoly& numerator() const { return num_; }
    const EpsPoly& denominator() const { return den_; }

    /// Sign of the value for all sufficiently small eps > 0.
    int sign() const {
        if (num_.is_zero()) return 0;
        return num_.coeffs()[num_.order()].sign();
    }
    bool is_zero() const { return num_.is_zero(); }

    /// Value at eps = 0, when it is finite.
    std::optional<Rational> limit() const {
        if (den_.order() == 0) return num_.coeff(0) / den_.coeff(0);
        return std::nullopt;
    }

    /// Exact value at a concrete eps.
    Rational evaluate(const Rational& eps) const {
        auto eval = [&](const EpsPoly& p) {
            Rational v = 0;
            const auto& c = p.coeffs();
            for (std::size_t k = c.size(); k-- > 0;) v = v * eps + c[k];
            return v;
        };
        return eval(num_) / eval(den_);
    }

    friend EpsScalar operator+(const EpsScalar& a, const EpsScalar& b) {
        if (a.den_ == b.den_) return EpsScalar(a.num_ + b.num_, a.den_);
        return EpsScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend EpsScalar operator-(const EpsScalar& a) {
        EpsScalar r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend EpsScalar operator-(const EpsScalar& a, const EpsScalar& b) { return a + (-b); }
    friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
        return EpsScalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend EpsScalar operator/(const EpsScalar& a, const EpsScalar& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        return EpsScalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    EpsScalar& operator+=(const EpsScalar& o) { return *this = *this + o; }
    EpsScalar& operator-=(const EpsScalar& o) { return *this = *this - o; }
    EpsScalar& operator*=(const EpsScalar& o) { return *this = *this * o; }
    EpsScalar& operator/=(const EpsScalar& o) { return *this = *this / o; }

    friend bool operator==(const EpsScalar& a, const EpsScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const EpsScalar& a, const EpsScalar& b) { return (a - b).sign() < 0; }
    friend bool operator>(const EpsScalar& a, const EpsScalar& b) { return b < a; }
    friend bool operator<=(const EpsScalar& a, const EpsScalar& b) { return !(b < a); }
    friend bool operator>=(const EpsScalar& a, const EpsScalar& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const EpsScalar& q) {
        auto put = [&](const EpsPoly& p) {
            os << '(';
            bool first = true;
            for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
                if (p.coeffs()[k].is_zero()) continue;
                if (!first) os << " + ";
                os << p.coeffs()[k];
                if (k) os << "*e^" << k;
                first = false;
            }
            if (first) os << '0';
            os << ')';
        };
        put(q.num_);
        os << '/';
        put(q.den_);
        return os;
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = EpsPoly(Rational(1));
            return;
        }
        EpsPoly g = EpsPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = EpsPoly::divmod(num_, g).first;
            den_ = EpsPoly::divmod(den_, g).first;
        }
        Rational lead = den_.coeffs()[den_.order()];
        if (lead != Rational(1)) {
            Rational s = Rational(1) / lead;
            num_ = num_.scaled(s);
            den_ = den_.scaled(s);
        }
    }

    EpsPoly num_;
    EpsPoly den_;
};

inline int eps_sign(const EpsScalar& q) { return q.sign(); }

inline int sign(const EpsScalar& q) { return q.sign(); }

}  // namespace tropic
