#pragma once

#include <string>

#include "sq/errors.hpp"

namespace sq {

// 2x2 matrix over a commutative ring R. R needs +,-,*, ==, is_zero and
// unit_inverse(const R&, R&). No default element is assumed, so every
// constructor takes entries from the ring explicitly.
template <class R>
struct Mat2 {
    R a, b, c, d;  // [[a,b],[c,d]]

    static Mat2 identity(const R& one) {
        R zero = one - one;
        return {one, zero, zero, one};
    }
    static Mat2 scalar(const R& s) {
        R zero = s - s;
        return {s, zero, zero, s};
    }

    R trace() const { return a + d; }
    R det() const { return a * d - b * c; }
    Mat2 adjugate() const { return {d, -b, -c, a}; }

    Mat2 inverse() const {
        R dv;
        if (!unit_inverse(det(), dv)) throw NotInvertible("determinant is not a unit");
        return {d * dv, -(b * dv), -(c * dv), a * dv};
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    Mat2& operator*=(const Mat2& o) { return *this = *this * o; }
    friend Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    Mat2 scaled(const R& s) const { return {a * s, b * s, c * s, d * s}; }

    template <class F>
    auto map(F&& f) const -> Mat2<decltype(f(a))> {
        return {f(a), f(b), f(c), f(d)};
    }

    bool is_scalar(const R& s) const { return a == s && d == s && is_zero(b) && is_zero(c); }
};

template <class R>
std::string to_string(const Mat2<R>& m) {
    return "[[" + to_string(m.a) + ", " + to_string(m.b) + "], [" + to_string(m.c) + ", " + to_string(m.d) + "]]";
}

}  // namespace sq
