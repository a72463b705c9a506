#pragma once

#include <vector>

#include "sq/laurent.hpp"

namespace sq {

// Cap on the graded degree of kept monomials. Empty weights = total degree.
struct SeriesBudget {
    int max_degree = 0;
    std::vector<int> weights;

    long degree(const Exps& e) const;
};

IntPoly truncate(const IntPoly& p, const SeriesBudget& b);
IntPoly mul_truncated(const IntPoly& a, const IntPoly& b, const SeriesBudget& budget);

// (1 - x)^n for a monomial x with coefficient +-1 and positive degree, n any integer
IntPoly one_minus_pow(const IntPoly& x, long n, const SeriesBudget& budget);

enum class MacMahonKind { M, Mtilde };

// prod_{i>=1} (1 - arg Q^i)^(-i*power); Mtilde multiplies in the same with arg^-1.
// arg and Q: monomials with coefficient +-1; arg may be zero.
IntPoly macmahon_series(MacMahonKind kind, const IntPoly& arg, const IntPoly& Q, const SeriesBudget& budget,
                        long power = 1);

}  // namespace sq
