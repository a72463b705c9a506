#include "sq/planepart.hpp"

#include <algorithm>

namespace sq {

std::string BoxShape::str() const {
    return std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z);
}

namespace {

void trim(int& rows, int& cols, std::vector<int>& a, int stride) {
    int r = 0, c = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (a[i * stride + j] > 0) {
                r = std::max(r, i + 1);
                c = std::max(c, j + 1);
            }
    std::vector<int> b(static_cast<size_t>(r) * c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) b[i * c + j] = a[i * stride + j];
    rows = r;
    cols = c;
    a = std::move(b);
}

}  // namespace

PlanePartition::PlanePartition(const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size()), c = 0;
    for (const auto& row : rows) c = std::max(c, static_cast<int>(row.size()));
    std::vector<int> g(static_cast<size_t>(r) * c, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < static_cast<int>(rows[i].size()); ++j) g[i * c + j] = rows[i][j];
    *this = from_grid(r, c, g.data());
}

PlanePartition PlanePartition::from_grid(int rows, int cols, const int* data) {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int v = data[i * cols + j];
            if (v < 0) throw InvalidPartition("negative entry");
            if (i > 0 && data[(i - 1) * cols + j] < v) throw InvalidPartition("column not weakly decreasing");
            if (j > 0 && data[i * cols + j - 1] < v) throw InvalidPartition("row not weakly decreasing");
        }
    PlanePartition p;
    p.rows_ = rows;
    p.cols_ = cols;
    p.a_.assign(data, data + static_cast<size_t>(rows) * cols);
    trim(p.rows_, p.cols_, p.a_, cols);
    return p;
}

long PlanePartition::volume() const {
    long v = 0;
    for (int x : a_) v += x;
    return v;
}

std::vector<std::vector<int>> PlanePartition::rows() const { return grid(rows_, cols_); }

std::vector<std::vector<int>> PlanePartition::grid(int x, int y) const {
    std::vector<std::vector<int>> g(x, std::vector<int>(y, 0));
    for (int i = 1; i <= x; ++i)
        for (int j = 1; j <= y; ++j) g[i - 1][j - 1] = at(i, j);
    return g;
}

std::string PlanePartition::str() const {
    std::string s = "[";
    for (int i = 1; i <= rows_; ++i) {
        if (i > 1) s += ",";
        s += "[";
        for (int j = 1; j <= cols_; ++j) {
            if (j > 1) s += ",";
            s += std::to_string(at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

namespace {

struct BoxWalker {
    int x, y, z;
    std::vector<int> g;
    const std::function<void(const PlanePartition&)>& fn;

    void go(int cell) {
        if (cell == x * y) {
            fn(PlanePartition::from_grid(x, y, g.data()));
            return;
        }
        int i = cell / y, j = cell % y;
        int hi = z;
        if (i > 0) hi = std::min(hi, g[(i - 1) * y + j]);
        if (j > 0) hi = std::min(hi, g[i * y + j - 1]);
        for (int v = 0; v <= hi; ++v) {
            g[cell] = v;
            go(cell + 1);
        }
        g[cell] = 0;
    }
};

}  // namespace

void for_each_boxed(const BoxShape& s, const std::function<void(const PlanePartition&)>& fn) {
    if (s.x <= 0 || s.y <= 0 || s.z <= 0) {
        fn(PlanePartition());
        return;
    }
    BoxWalker w{s.x, s.y, s.z, std::vector<int>(static_cast<size_t>(s.x) * s.y, 0), fn};
    w.go(0);
}

std::vector<PlanePartition> enumerate_boxed(const BoxShape& s) {
    std::vector<PlanePartition> out;
    for_each_boxed(s, [&](const PlanePartition& p) { out.push_back(p); });
    return out;
}

namespace {

// each row is a partition dominated entrywise by the previous one
void volume_rows(int left, const std::vector<int>& prev, std::vector<std::vector<int>>& rows,
                 std::vector<PlanePartition>& out) {
    if (left == 0) {
        out.emplace_back(rows);
        return;
    }
    std::vector<int> row;
    std::function<void(size_t, int)> pick = [&](size_t j, int remaining) {
        if (!row.empty()) {
            rows.push_back(row);
            volume_rows(remaining, row, rows, out);
            rows.pop_back();
        }
        if (j == prev.size()) return;
        int hi = std::min(prev[j], remaining);
        if (!row.empty()) hi = std::min(hi, row.back());
        for (int v = hi; v >= 1; --v) {
            row.push_back(v);
            pick(j + 1, remaining - v);
            row.pop_back();
        }
    };
    pick(0, left);
}

}  // namespace

std::vector<PlanePartition> enumerate_by_volume(int n) {
    std::vector<PlanePartition> out;
    std::vector<std::vector<int>> rows;
    volume_rows(n, std::vector<int>(std::max(n, 0), std::max(n, 0)), rows, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<BigInt> macmahon_dense(const BoxShape& s) {
    std::vector<BigInt> p{1};
    auto mul_one_minus = [&](int m) {
        std::vector<BigInt> r(p.size() + m);
        for (size_t k = 0; k < p.size(); ++k) {
            r[k] += p[k];
            r[k + m] -= p[k];
        }
        p = std::move(r);
    };
    // exact division by (1 - q^m): r[k] = p[k] + r[k-m]
    auto div_one_minus = [&](int m) {
        std::vector<BigInt> r(p.size());
        for (size_t k = 0; k < p.size(); ++k) r[k] = p[k] + (k >= static_cast<size_t>(m) ? r[k - m] : BigInt(0));
        size_t keep = p.size() - m;
        for (size_t k = keep; k < r.size(); ++k)
            if (!r[k].is_zero()) throw InternalInvariant("MacMahon division not exact");
        r.resize(keep);
        p = std::move(r);
    };
    if (s.x <= 0 || s.y <= 0 || s.z <= 0) return p;
    for (int i = 1; i <= s.x; ++i)
        for (int j = 1; j <= s.y; ++j) mul_one_minus(i + j + s.z - 1);
    for (int i = 1; i <= s.x; ++i)
        for (int j = 1; j <= s.y; ++j) div_one_minus(i + j - 1);
    return p;
}

}  // namespace

IntPoly macmahon_box_gf(const BoxShape& s) {
    IntPoly r(VarList{"q"});
    auto d = macmahon_dense(s);
    for (size_t k = 0; k < d.size(); ++k) r.add_term(Exps{static_cast<int>(k)}, d[k]);
    return r;
}

BigInt macmahon_box_count(const BoxShape& s) {
    BigInt n = 0;
    for (const auto& c : macmahon_dense(s)) n += c;
    return n;
}

std::array<int, 4> colored_exponents(const PlanePartition& p) {
    std::array<int, 4> e{0, 0, 0, 0};
    for (int i = 1; i <= p.num_rows(); ++i)
        for (int j = 1; j <= p.num_cols(); ++j) {
            int h = p.at(i, j);
            int ev = (i % 2) ? (h + 1) / 2 : h / 2;  // k in 1..h with i-k even
            int od = h - ev;
            if ((i - j) % 2 == 0) {
                e[0] += ev;
                e[3] += od;
            } else {
                e[1] += ev;
                e[2] += od;
            }
        }
    return e;
}

const std::shared_ptr<const VarList>& qrst_vars() {
    static const auto v = std::make_shared<const VarList>(VarList{"q", "r", "s", "t"});
    return v;
}

IntPoly colored_weight(const PlanePartition& p) {
    auto e = colored_exponents(p);
    IntPoly r(qrst_vars());
    r.add_term(Exps{e[0], e[1], e[2], e[3]}, BigInt(1));
    return r;
}

std::pair<PlanePartition, PlanePartition> downsample(const PlanePartition& p) {
    int X = (p.num_rows() + 1) / 2, Y = (p.num_cols() + 1) / 2;
    std::vector<int> lo(static_cast<size_t>(X) * Y), hi(static_cast<size_t>(X) * Y);
    for (int I = 1; I <= X; ++I)
        for (int J = 1; J <= Y; ++J) {
            int a = p.at(2 * I - 1, 2 * J - 1), b = p.at(2 * I - 1, 2 * J), c = p.at(2 * I, 2 * J - 1),
                d = p.at(2 * I, 2 * J);
            int mn = std::min({a, b, c, d}), mx = std::max({a, b, c, d});
            lo[(I - 1) * Y + J - 1] = mn / 2;
            hi[(I - 1) * Y + J - 1] = (mx + 1) / 2;
        }
    return {PlanePartition::from_grid(X, Y, lo.data()), PlanePartition::from_grid(X, Y, hi.data())};
}

}  // namespace sq
