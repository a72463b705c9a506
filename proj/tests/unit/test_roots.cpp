#include <map>

#include "doctest.h"
#include "sq/roots.hpp"

using namespace sq;

namespace {

int tile_index(const std::string& name) {
    const auto& c = tile_catalog();
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k].name == name) return static_cast<int>(k);
    return -1;
}

}  // namespace

TEST_CASE("specialization orders") {
    CHECK(connection_order(3) == 12);
    CHECK(connection_order(6) == 12);
    CHECK(connection_order(8) == 8);
    CHECK(connection_order(1) == 4);
    CHECK_THROWS_AS(connection_order(5), UnsupportedOrder);
}

TEST_CASE("roots of order 4 and 8 on small loops") {
    for (const auto& t : tile_catalog()) {
        Loop l = loop_around(t.cells);
        CHECK(check_n4(l));
        CHECK(check_n8(l));
    }
    Loop hex = loop_around({{0, 0}});
    CHECK(monodromy_at(hex, 8) == scalar_at(8, -1));
    CHECK(monodromy_at(hex, 4) == scalar_at(4, 1));
}

TEST_CASE("single hexagon has no signed tiling") {
    auto r = signed_tiling({{0, 0}});
    REQUIRE(r.status == TilingStatus::None);
    REQUIRE(r.invariant);
    CHECK(verify_invariant({{0, 0}}, *r.invariant));
    CHECK(monodromy_at(loop_around({{0, 0}}), 3).trace().is_zero());
}

TEST_CASE("exact tilings") {
    std::vector<HexCoord> two_bones{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
    auto c = exact_tiling(two_bones);
    REQUIRE(c);
    CHECK(verify_certificate(two_bones, *c));
    CHECK_FALSE(exact_tiling({{0, 0}, {0, 1}}));
}

TEST_CASE("a signed relation with odd stone count") {
    // sums to zero on every hexagon, uses one stone net
    std::vector<Placement> rel{
        {tile_index("bone-0"), {0, -2}, -1},  {tile_index("stone-up"), {0, -2}, 1},
        {tile_index("bone-0"), {0, 0}, 1},    {tile_index("stone-down"), {0, 1}, -1},
        {tile_index("bone-60"), {0, 2}, -1},  {tile_index("bone-0"), {1, -1}, -1},
        {tile_index("bone-0"), {1, 0}, 1},    {tile_index("stone-up"), {1, 1}, 1},
    };
    std::map<HexCoord, long> sum;
    long stones = 0;
    for (const auto& p : rel) {
        REQUIRE(p.tile >= 0);
        const auto& t = tile_catalog()[p.tile];
        for (const auto& h : t.cells) sum[h + p.offset] += static_cast<long>(p.coeff);
        if (t.stone()) stones += static_cast<long>(p.coeff);
    }
    for (const auto& [h, s] : sum) CHECK(s == 0);
    CHECK(stones % 2 != 0);

    // so both parities tile a bone
    const auto& cells = tile_by_name("bone-0").cells;
    auto r = signed_tiling(cells);
    REQUIRE(r.certificate);
    TilingCertificate other = *r.certificate;
    other.placements.insert(other.placements.end(), rel.begin(), rel.end());
    other.stone_parity ^= 1;
    other.parity_flip.clear();
    CHECK(verify_certificate(cells, other));
}

TEST_CASE("tile verdicts") {
    for (const auto& t : tile_catalog()) {
        auto v = conjecture_verdict(loop_around(t.cells));
        CHECK(v.classification == Classification::ConsistentTiled);
        CHECK(v.monodromy3 == scalar_at(3, t.stone() ? -1 : 1));
    }
}

TEST_CASE("loops from boxes need even boxes") {
    CHECK_THROWS_AS(loops_from_boxes({{3, 2, 2}}), DoesNotFit);
    CHECK(loops_from_boxes({{2, 2, 2}}).size() == 1);
}
