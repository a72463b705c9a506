#include "doctest.h"
#include "sq/honeycomb.hpp"
#include "sq/squish.hpp"

using namespace sq;

TEST_CASE("edge classes") {
    CHECK(HexEdge::make({0, 0}, {1, 1}).cls() == EdgeClass::I);
    CHECK(HexEdge::make({0, 0}, {1, 0}).cls() == EdgeClass::J);
    CHECK(HexEdge::make({0, 0}, {0, 1}).cls() == EdgeClass::K);
    CHECK(HexEdge::make({2, 1}, {1, 0}) == HexEdge::make({1, 0}, {2, 1}));
    CHECK(direction_index({1, -1}) == -1);
}

TEST_CASE("matchings of boxed partitions are perfect and invertible") {
    for (BoxShape b : {BoxShape{2, 2, 2}, BoxShape{2, 2, 4}, BoxShape{1, 3, 2}}) {
        auto verts = region_vertices(b);
        long base = height_sum(matching_of(PlanePartition(), b));
        for (const auto& p : enumerate_boxed(b)) {
            auto m = matching_of(p, b);
            CHECK(is_perfect(m, verts));
            CHECK(partition_of(m, b) == p);
            CHECK(std::abs(height_sum(m) - base) == p.volume());
        }
    }
}

TEST_CASE("partition must fit the box") {
    CHECK_THROWS_AS(matching_of(PlanePartition(std::vector<std::vector<int>>{{3}}), {2, 2, 2}), DoesNotFit);
}

TEST_CASE("squish and loop decomposition") {
    BoxShape fine{2, 2, 2};
    for (const auto& p : enumerate_boxed(fine)) {
        auto dd = squish_matching(matching_of(p, fine));
        auto d = decompose(dd);
        CHECK(recompose(d) == dd);
        for (const auto& l : d.loops) CHECK(l.size() % 2 == 0);
    }
}

TEST_CASE("boundary of cell sets") {
    Loop hex = loop_around({{0, 0}});
    CHECK(hex.size() == 6);
    CHECK(loop_interior(hex) == std::vector<HexCoord>{{0, 0}});
    CHECK(signed_area6(hex.vertices) > 0);
    Loop bone = loop_around({{0, 0}, {1, 0}, {2, 0}});
    CHECK(bone.size() == 14);
    CHECK(translation_key(translate(bone, {3, -5})) == translation_key(bone));
    CHECK_THROWS_AS(loop_around({{0, 0}, {2, 2}}), NotSimplyConnected);
}

TEST_CASE("fiber of a single hexagon target") {
    // the all-doubled configuration of the empty pair has no loops
    BoxShape fine{2, 2, 2}, coarse{1, 1, 1};
    auto m0 = matching_of(PlanePartition(), coarse);
    auto f = fiber(overlay(m0, m0), fine);
    CHECK(f.members.size() == 1);
    auto m1 = matching_of(PlanePartition(std::vector<std::vector<int>>{{1}}), coarse);
    auto g = fiber(overlay(m0, m1), fine);
    CHECK(g.members.size() == 18);
}
