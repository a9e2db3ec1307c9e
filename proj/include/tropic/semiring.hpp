#pragma once

// The max-plus semiring over the rationals, with -infinity adjoined.

#include "tropic/rational.hpp"

#include <optional>
#include <ostream>

namespace tropic {

/// Element of (Q u {-inf}, max, +). `+` is tropical addition (max) and `*`
/// tropical multiplication (ordinary sum).
class TropicalNumber {
public:
    TropicalNumber() = default;  // -infinity
    TropicalNumber(Rational v) : v_(std::move(v)) {}

    static TropicalNumber neg_infinity() { return {}; }
    static TropicalNumber one() { return TropicalNumber(Rational(0)); }

    bool is_neg_infinity() const { return !v_.has_value(); }
    const Rational& value() const {
        if (!v_) throw DomainError("-inf has no rational value");
        return *v_;
    }

    friend TropicalNumber operator+(const TropicalNumber& a, const TropicalNumber& b) {
        if (!a.v_) return b;
        if (!b.v_) return a;
        return *a.v_ < *b.v_ ? b : a;
    }
    friend TropicalNumber operator*(const TropicalNumber& a, const TropicalNumber& b) {
        if (!a.v_ || !b.v_) return {};
        return TropicalNumber(*a.v_ + *b.v_);
    }
    /// Tropical power: k-fold product, i.e. k * value.
    TropicalNumber pow(unsigned k) const {
        if (!v_) return k == 0 ? one() : TropicalNumber{};
        return TropicalNumber(*v_ * Rational(static_cast<long long>(k)));
    }

    friend bool operator==(const TropicalNumber&, const TropicalNumber&) = default;

    friend std::ostream& operator<<(std::ostream& os, const TropicalNumber& t) {
        if (!t.v_) return os << "-inf";
        return os << *t.v_;
    }

private:
    std::optional<Rational> v_;
};

}  // namespace tropic
