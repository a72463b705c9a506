#include "doctest.h"
#include "sq/planepart.hpp"

using namespace sq;

TEST_CASE("plane partition validation and trimming") {
    CHECK_THROWS_AS(PlanePartition({{1, 2}}), InvalidPartition);
    CHECK_THROWS_AS(PlanePartition({{1}, {2}}), InvalidPartition);
    CHECK_THROWS_AS(PlanePartition(std::vector<std::vector<int>>{{-1}}), InvalidPartition);
    PlanePartition p({{2, 1, 0}, {1, 0, 0}, {0, 0, 0}});
    CHECK(p.num_rows() == 2);
    CHECK(p.num_cols() == 2);
    CHECK(p.volume() == 4);
    CHECK(p.at(5, 5) == 0);
    CHECK(PlanePartition({{0, 0}}).empty());
}

TEST_CASE("box counts against the product formula") {
    for (BoxShape b : {BoxShape{1, 1, 1}, BoxShape{2, 2, 2}, BoxShape{2, 3, 1}, BoxShape{3, 3, 3}, BoxShape{2, 2, 4}})
        CHECK(BigInt(static_cast<long>(enumerate_boxed(b).size())) == macmahon_box_count(b));
    CHECK(macmahon_box_count({4, 4, 4}) == 232848);
    CHECK(enumerate_boxed({2, 2, 2}).size() == 20);
}

TEST_CASE("partitions by volume") {
    const long want[] = {1, 1, 3, 6, 13, 24, 48};
    for (int n = 0; n <= 6; ++n) CHECK(static_cast<long>(enumerate_by_volume(n).size()) == want[n]);
}

TEST_CASE("colored weight") {
    // cell (1,1,1) is a q cell; (1,1,2) is t; (1,2,1) is r; (1,2,2) is s
    CHECK(colored_exponents(PlanePartition(std::vector<std::vector<int>>{{1}})) == std::array<int, 4>{1, 0, 0, 0});
    CHECK(colored_exponents(PlanePartition(std::vector<std::vector<int>>{{2}})) == std::array<int, 4>{1, 0, 0, 1});
    CHECK(colored_exponents(PlanePartition({{1, 1}})) == std::array<int, 4>{1, 1, 0, 0});
    CHECK(colored_exponents(PlanePartition({{2, 2}})) == std::array<int, 4>{1, 1, 1, 1});
}

TEST_CASE("downsampling") {
    PlanePartition p({{8, 8, 6, 5}, {7, 6, 6, 5}, {6, 4, 3, 3}, {5, 4, 3, 3},
                      {4, 3, 3, 2}, {3, 3, 2, 1}, {2, 2, 1, 1}, {1, 1, 1, 0}});
    auto [lo, hi] = downsample(p);
    CHECK(lo == PlanePartition({{3, 2}, {2, 1}, {1, 0}}));
    CHECK(hi == PlanePartition({{4, 3}, {3, 2}, {2, 2}, {1, 1}}));
    auto [elo, ehi] = downsample(PlanePartition());
    CHECK(elo.empty());
    CHECK(ehi.empty());
}
