#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline bool is_one(const BigInt& x) { return x == 1; }
inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(const Rational& x) { return x.str(); }

// small unit inverse; ints only have +-1
inline bool unit_inverse(const BigInt& x, BigInt& out) {
    if (x == 1 || x == -1) {
        out = x;
        return true;
    }
    return false;
}

// Gaussian integer, the coefficient ring for anything that carries i
struct GaussInt {
    BigInt re, im;

    GaussInt() = default;
    GaussInt(long v) : re(v) {}
    GaussInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}

    static GaussInt i() { return {0, 1}; }

    GaussInt conj() const { return {re, -im}; }

    GaussInt& operator+=(const GaussInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussInt& operator-=(const GaussInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
    friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
    friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussInt& operator*=(const GaussInt& o) { return *this = *this * o; }
    friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
};

inline bool is_zero(const GaussInt& x) { return x.re.is_zero() && x.im.is_zero(); }
inline bool is_one(const GaussInt& x) { return x.re == 1 && x.im.is_zero(); }

inline std::string to_string(const GaussInt& x) {
    if (x.im.is_zero()) return x.re.str();
    if (x.re.is_zero()) {
        if (x.im == 1) return "i";
        if (x.im == -1) return "-i";
        return x.im.str() + "*i";
    }
    std::string s = "(" + x.re.str();
    if (x.im > 0) s += "+";
    if (x.im == 1) s += "i";
    else if (x.im == -1) s += "-i";
    else s += x.im.str() + "*i";
    return s + ")";
}

inline bool unit_inverse(const GaussInt& x, GaussInt& out) {
    // units: 1, -1, i, -i; inverse is the conjugate
    if ((x.re * x.re + x.im * x.im) == 1) {
        out = x.conj();
        return true;
    }
    return false;
}

}  // namespace sq
