#pragma once

#include <string>
#include <vector>

#include "sq/bigint.hpp"

namespace sq {

// Element of Z[x]/(Phi_n(x)), x = zeta_n.
// Orders 1,2,3,4,6,8,12. 12 shows up as lcm(4,3) and lcm(4,6).
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(int order);
    Cyclotomic(int order, const BigInt& c);
    Cyclotomic(int order, std::vector<BigInt> coeffs);  // any length, reduced on entry

    static bool supported(int order);
    static int phi_degree(int order);
    static Cyclotomic zeta(int order, long k = 1);  // zeta_n^k, k any integer
    static Cyclotomic one(int order) { return Cyclotomic(order, BigInt(1)); }

    int order() const { return n_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_integer() const;  // lies in Z
    Cyclotomic conj() const;  // zeta -> zeta^-1
    Cyclotomic pow(long e) const;  // e >= 0

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator-(const Cyclotomic& a);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    std::string str() const;  // "3 + 2*z - z^2", z = zeta_n

private:
    void check(const Cyclotomic& o) const;
    void reduce(std::vector<BigInt>& v) const;

    int n_;
    std::vector<BigInt> c_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_one(const Cyclotomic& x) { return x.is_one(); }
inline std::string to_string(const Cyclotomic& x) { return x.str(); }

// only the roots of unity +-zeta^k are inverted
bool unit_inverse(const Cyclotomic& x, Cyclotomic& out);

// embed a coefficient into Z[zeta_N]; Gaussian needs 4 | N
Cyclotomic embed(const BigInt& x, int order);
Cyclotomic embed(const GaussInt& x, int order);

}  // namespace sq
