#include "sq/zlinalg.hpp"

#include "sq/errors.hpp"

namespace sq {

void axpy(SparseVec& y, const BigInt& a, const SparseVec& x) {
    if (a.is_zero()) return;
    for (const auto& [k, v] : x) {
        auto [it, fresh] = y.try_emplace(k, BigInt(a * v));
        if (!fresh) {
            it->second += a * v;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

void ColumnLattice::add_column(const SparseVec& col) {
    for (const auto& [r, x] : col)
        if (r < 0 || r >= nrows_) throw InternalInvariant("row index outside lattice");
    cols_.push_back(col);
    reduced_ = false;
}

void ColumnLattice::reduce() const {
    if (reduced_) return;
    basis_.clear();
    kernel_.clear();
    std::vector<Vec> act;
    for (size_t j = 0; j < cols_.size(); ++j) {
        if (cols_[j].empty()) kernel_.push_back({{static_cast<int>(j), BigInt(1)}});
        else act.push_back({cols_[j], {{static_cast<int>(j), BigInt(1)}}});
    }
    // active columns keyed by their lowest row
    std::map<int, std::vector<size_t>> by_row;
    for (size_t k = 0; k < act.size(); ++k) by_row[act[k].v.begin()->first].push_back(k);
    while (!by_row.empty()) {
        auto node = by_row.begin();
        int r = node->first;
        std::vector<size_t> cand = std::move(node->second);
        by_row.erase(node);
        while (true) {
            size_t best = cand.size();
            for (size_t t = 0; t < cand.size(); ++t) {
                if (best == cand.size()) {
                    best = t;
                    continue;
                }
                const Vec &x = act[cand[t]], &y = act[cand[best]];
                BigInt ax = abs(x.v.begin()->second), ay = abs(y.v.begin()->second);
                if (ax < ay || (ax == ay && x.v.size() + x.combo.size() < y.v.size() + y.combo.size())) best = t;
            }
            std::swap(cand[best], cand.back());
            size_t p = cand.back();
            cand.pop_back();
            const BigInt pv = act[p].v.begin()->second;
            std::vector<size_t> keep;
            for (size_t k : cand) {
                Vec& x = act[k];
                BigInt q = x.v.begin()->second / pv;
                axpy(x.v, -q, act[p].v);
                axpy(x.combo, -q, act[p].combo);
                if (x.v.empty()) kernel_.push_back(std::move(x.combo));
                else if (x.v.begin()->first == r) keep.push_back(k);
                else by_row[x.v.begin()->first].push_back(k);
            }
            if (keep.empty()) {
                if (pv < 0) {
                    for (auto& [i, y] : act[p].v) y = -y;
                    for (auto& [i, y] : act[p].combo) y = -y;
                }
                basis_.emplace(r, std::move(act[p]));
                break;
            }
            // remainders are smaller than the pivot; the pivot competes again
            keep.push_back(p);
            cand = std::move(keep);
        }
    }
    reduced_ = true;
}

int ColumnLattice::rank() const {
    reduce();
    return static_cast<int>(basis_.size());
}

const std::vector<SparseVec>& ColumnLattice::kernel() const {
    reduce();
    return kernel_;
}

bool ColumnLattice::solve(const SparseVec& b, SparseVec& x) const {
    reduce();
    SparseVec res = b;
    x.clear();
    while (!res.empty()) {
        int r = res.begin()->first;
        auto it = basis_.find(r);
        if (it == basis_.end()) return false;
        const BigInt& p = it->second.v.begin()->second;
        const BigInt val = res.begin()->second;
        if (BigInt(val % p) != 0) return false;
        BigInt q = val / p;
        axpy(res, -q, it->second.v);
        axpy(x, q, it->second.combo);
    }
    return true;
}

SmithLeft smith_left(ZMatrix A) {
    size_t m = A.size(), n = m ? A[0].size() : 0;
    ZMatrix U(m, std::vector<BigInt>(m));
    for (size_t i = 0; i < m; ++i) U[i][i] = 1;
    std::vector<BigInt> diag;
    for (size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            size_t pi = m, pj = n;
            BigInt best;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j)
                    if (!A[i][j].is_zero() && (pi == m || abs(A[i][j]) < best)) {
                        best = abs(A[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == m) return {diag, U};
            std::swap(A[t], A[pi]);
            std::swap(U[t], U[pi]);
            if (pj != t)
                for (size_t i = 0; i < m; ++i) std::swap(A[i][t], A[i][pj]);
            bool clean = true;
            const BigInt p = A[t][t];
            for (size_t i = t + 1; i < m; ++i) {
                if (A[i][t].is_zero()) continue;
                BigInt q = A[i][t] / p;
                if (!q.is_zero()) {
                    for (size_t j = t; j < n; ++j)
                        if (!A[t][j].is_zero()) A[i][j] -= q * A[t][j];
                    for (size_t j = 0; j < m; ++j)
                        if (!U[t][j].is_zero()) U[i][j] -= q * U[t][j];
                }
                if (!A[i][t].is_zero()) clean = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (A[t][j].is_zero()) continue;
                BigInt q = A[t][j] / p;
                if (!q.is_zero())
                    for (size_t i = t; i < m; ++i)
                        if (!A[i][t].is_zero()) A[i][j] -= q * A[i][t];
                if (!A[t][j].is_zero()) clean = false;
            }
            if (clean) break;
        }
        diag.push_back(A[t][t]);
    }
    return {diag, U};
}

}  // namespace sq
