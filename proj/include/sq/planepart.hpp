#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sq/laurent.hpp"

namespace sq {

struct BoxShape {
    int x = 0, y = 0, z = 0;

    bool even() const { return x % 2 == 0 && y % 2 == 0 && z % 2 == 0; }
    BoxShape half() const { return {x / 2, y / 2, z / 2}; }
    long cells() const { return static_cast<long>(x) * y * z; }
    friend bool operator==(const BoxShape&, const BoxShape&) = default;
    friend auto operator<=>(const BoxShape&, const BoxShape&) = default;
    std::string str() const;
};

struct BoxCell {
    int i, j, k;
};

// Weakly decreasing matrix of nonnegative ints, 1-indexed, zero outside.
// Stored trimmed: no all-zero trailing rows or columns.
class PlanePartition {
public:
    PlanePartition() = default;
    explicit PlanePartition(const std::vector<std::vector<int>>& rows);
    static PlanePartition from_grid(int rows, int cols, const int* data);

    int at(int i, int j) const {
        if (i < 1 || j < 1 || i > rows_ || j > cols_) return 0;
        return a_[(i - 1) * cols_ + (j - 1)];
    }
    int num_rows() const { return rows_; }
    int num_cols() const { return cols_; }
    int max_entry() const { return rows_ ? a_[0] : 0; }
    long volume() const;
    bool empty() const { return rows_ == 0; }
    bool fits(const BoxShape& s) const { return rows_ <= s.x && cols_ <= s.y && max_entry() <= s.z; }

    std::vector<std::vector<int>> rows() const;  // trimmed rectangle
    std::vector<std::vector<int>> grid(int x, int y) const;  // padded to x by y
    std::string str() const;

    friend bool operator==(const PlanePartition& a, const PlanePartition& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator<(const PlanePartition& a, const PlanePartition& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.a_ < b.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<int> a_;
};

void for_each_boxed(const BoxShape& s, const std::function<void(const PlanePartition&)>& fn);
std::vector<PlanePartition> enumerate_boxed(const BoxShape& s);
std::vector<PlanePartition> enumerate_by_volume(int n);

// MacMahon product as an exact polynomial in q
IntPoly macmahon_box_gf(const BoxShape& s);
BigInt macmahon_box_count(const BoxShape& s);

// (q,r,s,t) exponents of the colored weight. Cell (i,j,k) gets
// q: i-j even, i-k even;  r: i-j odd, i-k even;
// s: i-j odd, i-k odd;    t: i-j even, i-k odd.
std::array<int, 4> colored_exponents(const PlanePartition& p);
const std::shared_ptr<const VarList>& qrst_vars();
IntPoly colored_weight(const PlanePartition& p);

std::pair<PlanePartition, PlanePartition> downsample(const PlanePartition& p);

}  // namespace sq
