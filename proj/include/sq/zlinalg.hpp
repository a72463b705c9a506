#pragma once

#include <map>
#include <vector>

#include "sq/bigint.hpp"

namespace sq {

using SparseVec = std::map<int, BigInt>;  // index -> nonzero value

// Column lattice of a sparse integer matrix. Columns are collected first and
// brought to lower echelon form on demand, one row at a time, preferring unit
// pivots in short columns so entries stay small. Every pivot column and every
// column that reduces to zero remembers which combination of the original
// columns produced it.
class ColumnLattice {
public:
    explicit ColumnLattice(int nrows) : nrows_(nrows) {}

    void add_column(const SparseVec& col);

    int rank() const;
    int columns() const { return static_cast<int>(cols_.size()); }
    // x with sum x_j col_j = b, if one exists
    bool solve(const SparseVec& b, SparseVec& x) const;
    // combinations mapping to zero; they span the kernel lattice
    const std::vector<SparseVec>& kernel() const;

private:
    struct Vec {
        SparseVec v, combo;
    };
    void reduce() const;

    int nrows_;
    std::vector<SparseVec> cols_;
    mutable bool reduced_ = false;
    mutable std::map<int, Vec> basis_;  // pivot row -> vector
    mutable std::vector<SparseVec> kernel_;
};

void axpy(SparseVec& y, const BigInt& a, const SparseVec& x);  // y += a x

using ZMatrix = std::vector<std::vector<BigInt>>;  // row major

// U A V = diag(d) with U, V unimodular; only U is returned
struct SmithLeft {
    std::vector<BigInt> diag;  // nonzero invariant factors, length = rank
    ZMatrix U;
};
SmithLeft smith_left(ZMatrix A);

}  // namespace sq
