#include "doctest.h"
#include "oracles.hpp"
#include "sq/partitionfn.hpp"

using namespace sq;

TEST_CASE("colored generating function of the 2x2x4 box") {
    CHECK(colored_gf_box({2, 2, 4}) == parse_int_poly(oracle::kGf224, *qrst_vars()));
    IntPoly g = colored_gf_box({2, 2, 2});
    BigInt n = 0;
    for (const auto& [e, c] : g.terms()) n += c;
    CHECK(n == 20);
}

TEST_CASE("single hexagon trace") {
    Loop hex = loop_around({{0, 0}});
    CHECK(loop_trace_rst(hex) * IntPoly::variable(IntPoly(qrst_vars()), "q") ==
          IntPoly::variable(IntPoly(qrst_vars()), "q") *
              IntPoly::monomial(IntPoly(qrst_vars()), Exps{0, -1, -1, -1}) *
              parse_int_poly(oracle::kHexagonRst, *qrst_vars()));
}

TEST_CASE("fit_monomial") {
    const auto& v = *qrst_vars();
    auto m = fit_monomial(parse_int_poly("q^2*r + q^2*s", v), parse_int_poly("r + s", v));
    REQUIRE(m);
    CHECK(*m == parse_int_poly("q^2", v));
    CHECK_FALSE(fit_monomial(parse_int_poly("q + 1", v), parse_int_poly("r + s", v)));
}

TEST_CASE("Z_Q series against brute force") {
    CHECK(zq_series({6, {}}) == colored_volume_sum(6));
}

TEST_CASE("r=s=t=-1 gives the square of M(1,-q)") {
    IntPoly sp = specialize_rst(zq_series({8, {1, 0, 0, 0}}), -1, 0);
    IntPoly one = IntPoly::constant(VarList{"q"}, BigInt(1));
    IntPoly mq = IntPoly::monomial(one, Exps{1}, BigInt(-1));
    CHECK(sp == macmahon_series(MacMahonKind::M, one, mq, {8, {}}, 2));
    CHECK_FALSE(sp == macmahon_series(MacMahonKind::M, one, mq, {8, {}}, 1));
}

TEST_CASE("measure check on the smallest box") {
    auto r = measure_check({2, 2, 2});
    CHECK(r.all_equal);
    CHECK(r.total == 20);
    CHECK(r.fibers.size() == 3);
}

TEST_CASE("edge probabilities are rational and consistent") {
    BoxShape fine{2, 2, 2};
    auto edges = region_edges(fine.half());
    REQUIRE(!edges.empty());
    auto rep = edge_probabilities(fine, edges.front());
    CHECK(rep.single >= 0);
    CHECK(rep.single <= 1);
    CHECK(rep.product == rep.fine1_single * rep.fine2_single);
    auto all = all_edge_probabilities(fine);
    REQUIRE(all.size() == edges.size());
    CHECK(all.front().doubled == rep.doubled);
    CHECK(all.front().single == rep.single);
}
