#pragma once

// Integer lattice vectors and points of the plane over an ordered field.

#include "tropic/rational.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <utility>

namespace tropic {

struct IntVec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    constexpr IntVec2() = default;
    constexpr IntVec2(std::int64_t x_, std::int64_t y_) : x(x_), y(y_) {}

    constexpr bool is_zero() const { return x == 0 && y == 0; }

    constexpr IntVec2& operator+=(IntVec2 o) { x += o.x; y += o.y; return *this; }
    constexpr IntVec2& operator-=(IntVec2 o) { x -= o.x; y -= o.y; return *this; }
    friend constexpr IntVec2 operator+(IntVec2 a, IntVec2 b) { return a += b; }
    friend constexpr IntVec2 operator-(IntVec2 a, IntVec2 b) { return a -= b; }
    friend constexpr IntVec2 operator-(IntVec2 a) { return {-a.x, -a.y}; }
    friend constexpr IntVec2 operator*(std::int64_t k, IntVec2 a) { return {k * a.x, k * a.y}; }

    friend constexpr bool operator==(IntVec2, IntVec2) = default;
    friend constexpr auto operator<=>(IntVec2, IntVec2) = default;

    friend std::ostream& operator<<(std::ostream& os, IntVec2 v) {
        return os << '(' << v.x << ',' << v.y << ')';
    }
};

/// u.x * v.y - u.y * v.x
constexpr std::int64_t det2(IntVec2 u, IntVec2 v) { return u.x * v.y - u.y * v.x; }
constexpr std::int64_t dot(IntVec2 u, IntVec2 v) { return u.x * v.x + u.y * v.y; }

/// Lattice length of v, i.e. gcd(|x|,|y|).
inline std::int64_t lattice_length(IntVec2 v) { return std::gcd(v.x, v.y); }

struct PrimitiveDecomposition {
    IntVec2 direction;
    std::int64_t weight;
};

/// Writes v as weight * direction with direction primitive.
inline PrimitiveDecomposition primitive_decompose(IntVec2 v) {
    if (v.is_zero()) throw DomainError("zero direction");
    std::int64_t w = lattice_length(v);
    return {{v.x / w, v.y / w}, w};
}

inline IntVec2 primitive(IntVec2 v) { return primitive_decompose(v).direction; }

/// Point of the plane with coordinates in an ordered field F.
template <class F>
struct Point2 {
    F x{};
    F y{};

    Point2() = default;
    Point2(F x_, F y_) : x(std::move(x_)), y(std::move(y_)) {}

    friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator+(const Point2& a, IntVec2 v) {
        return {a.x + F(static_cast<long long>(v.x)), a.y + F(static_cast<long long>(v.y))};
    }
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point2& a, const Point2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    friend std::ostream& operator<<(std::ostream& os, const Point2& p) {
        return os << '(' << p.x << ',' << p.y << ')';
    }
};

using PointQ2 = Point2<Rational>;

template <class F>
Point2<F> scaled(IntVec2 v, const F& t) {
    return {t * F(static_cast<long long>(v.x)), t * F(static_cast<long long>(v.y))};
}

/// det of a point difference against an integer direction: p.x * v.y - p.y * v.x.
template <class F>
F det2(const Point2<F>& p, IntVec2 v) {
    return p.x * F(static_cast<long long>(v.y)) - p.y * F(static_cast<long long>(v.x));
}

template <class F>
F dot(const Point2<F>& p, IntVec2 v) {
    return p.x * F(static_cast<long long>(v.x)) + p.y * F(static_cast<long long>(v.y));
}

/// Primitive integer direction of the rational vector to - from.
inline IntVec2 primitive_direction(const PointQ2& from, const PointQ2& to) {
    Rational dx = to.x - from.x;
    Rational dy = to.y - from.y;
    if (dx.is_zero() && dy.is_zero()) throw DomainError("zero direction");
    BigInt l = lcm(dx.den(), dy.den());
    BigInt ix = dx.num() * (l / dx.den());
    BigInt iy = dy.num() * (l / dy.den());
    BigInt g = gcd(ix, iy);
    ix /= g;
    iy /= g;
    if (!ix.fits_slong_p() || !iy.fits_slong_p()) throw DomainError("direction overflows 64 bits");
    return {ix.get_si(), iy.get_si()};
}

}  // namespace tropic
