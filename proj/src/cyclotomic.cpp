#include "sq/cyclotomic.hpp"

#include "sq/errors.hpp"

namespace sq {

namespace {

// Phi_n coefficients, low degree first, monic
const std::vector<int>& phi_poly(int n) {
    static const std::vector<int> p1{-1, 1};
    static const std::vector<int> p2{1, 1};
    static const std::vector<int> p3{1, 1, 1};
    static const std::vector<int> p4{1, 0, 1};
    static const std::vector<int> p6{1, -1, 1};
    static const std::vector<int> p8{1, 0, 0, 0, 1};
    static const std::vector<int> p12{1, 0, -1, 0, 1};
    switch (n) {
        case 1: return p1;
        case 2: return p2;
        case 3: return p3;
        case 4: return p4;
        case 6: return p6;
        case 8: return p8;
        case 12: return p12;
    }
    throw UnsupportedOrder("cyclotomic order " + std::to_string(n) + " not supported");
}

}  // namespace

bool Cyclotomic::supported(int n) {
    return n == 1 || n == 2 || n == 3 || n == 4 || n == 6 || n == 8 || n == 12;
}

int Cyclotomic::phi_degree(int n) { return static_cast<int>(phi_poly(n).size()) - 1; }

Cyclotomic::Cyclotomic(int order) : n_(order), c_(phi_degree(order)) {}

Cyclotomic::Cyclotomic(int order, const BigInt& c) : Cyclotomic(order) { c_[0] = c; }

Cyclotomic::Cyclotomic(int order, std::vector<BigInt> coeffs) : n_(order) {
    phi_degree(order);
    reduce(coeffs);
    c_ = std::move(coeffs);
}

void Cyclotomic::reduce(std::vector<BigInt>& v) const {
    const auto& p = phi_poly(n_);
    int d = static_cast<int>(p.size()) - 1;
    for (int k = static_cast<int>(v.size()) - 1; k >= d; --k) {
        if (v[k].is_zero()) continue;
        BigInt c = v[k];
        for (int j = 0; j <= d; ++j)
            if (p[j]) v[k - d + j] -= c * p[j];
    }
    v.resize(d);
}

Cyclotomic Cyclotomic::zeta(int order, long k) {
    long e = k % order;
    if (e < 0) e += order;
    std::vector<BigInt> v(e + 1);
    v[e] = 1;
    return Cyclotomic(order, std::move(v));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_integer() const {
    for (size_t k = 1; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_integer() && c_[0] == 1; }

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic r(n_);
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) {
            Cyclotomic z = zeta(n_, -static_cast<long>(k));
            for (auto& x : z.c_) x *= c_[k];
            r += z;
        }
    return r;
}

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic r = one(n_), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

void Cyclotomic::check(const Cyclotomic& o) const {
    if (o.n_ != n_) throw OrderMismatch("cyclotomic orders " + std::to_string(n_) + " and " + std::to_string(o.n_));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check(o);
    std::vector<BigInt> v(c_.size() + o.c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) v[i + j] += c_[i] * o.c_[j];
    }
    reduce(v);
    c_ = std::move(v);
    return *this;
}

Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

std::string Cyclotomic::str() const {
    std::string s;
    for (size_t k = 0; k < c_.size(); ++k) {
        const BigInt& x = c_[k];
        if (x.is_zero()) continue;
        bool neg = x < 0;
        BigInt ax = neg ? BigInt(-x) : x;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (k == 0) {
            s += ax.str();
            continue;
        }
        if (ax != 1) s += ax.str() + "*";
        s += "z";
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

bool unit_inverse(const Cyclotomic& x, Cyclotomic& out) {
    int n = x.order();
    for (long k = 0; k < n; ++k) {
        Cyclotomic z = Cyclotomic::zeta(n, k);
        if (z == x) {
            out = Cyclotomic::zeta(n, -k);
            return true;
        }
        if (-z == x) {
            out = -Cyclotomic::zeta(n, -k);
            return true;
        }
    }
    return false;
}

Cyclotomic embed(const BigInt& x, int order) { return Cyclotomic(order, x); }

Cyclotomic embed(const GaussInt& x, int order) {
    if (order % 4 != 0) throw UnsupportedOrder("i is not in Z[zeta_" + std::to_string(order) + "]");
    Cyclotomic r(order, x.re);
    Cyclotomic i = Cyclotomic::zeta(order, order / 4);
    return r + i * Cyclotomic(order, x.im);
}

}  // namespace sq
