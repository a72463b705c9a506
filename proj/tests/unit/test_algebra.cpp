#include "doctest.h"
#include "sq/cyclotomic.hpp"
#include "sq/laurent.hpp"
#include "sq/mat2.hpp"
#include "sq/series.hpp"
#include "sq/zlinalg.hpp"

using namespace sq;

TEST_CASE("cyclotomic roots of unity") {
    for (int n : {1, 2, 3, 4, 6, 8, 12}) {
        CHECK(Cyclotomic::zeta(n, n) == Cyclotomic::one(n));
        CHECK(Cyclotomic::zeta(n, 1).pow(n).is_one());
        CHECK(Cyclotomic::zeta(n, -1) * Cyclotomic::zeta(n, 1) == Cyclotomic::one(n));
        CHECK(Cyclotomic::zeta(n, 3).conj() == Cyclotomic::zeta(n, -3));
    }
    // 1 + z^4 + z^8 = 0 in Z[zeta_12]
    CHECK((Cyclotomic::one(12) + Cyclotomic::zeta(12, 4) + Cyclotomic::zeta(12, 8)).is_zero());
    CHECK(Cyclotomic::zeta(4, 2) == -Cyclotomic::one(4));
    CHECK(embed(GaussInt::i(), 8) == Cyclotomic::zeta(8, 2));
    CHECK_THROWS_AS(Cyclotomic(5), UnsupportedOrder);
    CHECK_THROWS_AS(Cyclotomic::one(4) + Cyclotomic::one(8), OrderMismatch);
}

TEST_CASE("cyclotomic units") {
    Cyclotomic u;
    CHECK(unit_inverse(-Cyclotomic::zeta(12, 5), u));
    CHECK(u * -Cyclotomic::zeta(12, 5) == Cyclotomic::one(12));
    CHECK_FALSE(unit_inverse(Cyclotomic(12, BigInt(2)), u));
}

TEST_CASE("laurent polynomial arithmetic and text") {
    VarList v{"q", "r"};
    IntPoly q = IntPoly::variable(IntPoly(v), "q"), r = IntPoly::variable(IntPoly(v), "r");
    IntPoly one = IntPoly::constant(v, BigInt(1));
    IntPoly p = (q + r) * (q - r);
    CHECK(p == q * q - r * r);
    CHECK(p.str() == "-r^2 + q^2");
    CHECK(parse_int_poly(p.str(), v) == p);
    IntPoly qi;
    CHECK(unit_inverse(q, qi));
    CHECK(qi * q == one);
    CHECK(parse_int_poly("3*q^-2*r + 1", v).coeff(Exps{-2, 1}) == 3);
    CHECK_THROWS_AS(parse_int_poly("x^2", v), ParseError);
}

TEST_CASE("substitution with squared variables") {
    VarList abc{"a", "b", "c"};
    IntPoly p = parse_int_poly("a^2*b^4 + c^-2", abc);
    IntPoly s = substitute(p, VarList{"r", "s", "t"}, {{2, 1, {1, 0, 0}}, {2, 1, {0, 1, 0}}, {2, 1, {0, 0, 1}}});
    CHECK(s == parse_int_poly("r*s^2 + t^-1", VarList{"r", "s", "t"}));
    CHECK_THROWS_AS(substitute(parse_int_poly("a", abc), VarList{"r", "s", "t"},
                               {{2, 1, {1, 0, 0}}, {2, 1, {0, 1, 0}}, {2, 1, {0, 0, 1}}}),
                    OddExponent);
}

TEST_CASE("evaluation at roots of unity") {
    VarList abc{"a", "b", "c"};
    IntPoly p = parse_int_poly("a^2 + b*c + 1", abc);
    // a = i, b = c = -1
    CHECK(evaluate_at_roots(p, 4, {1, 2, 2}) == Cyclotomic(4, BigInt(1)));
}

TEST_CASE("mat2 inverse and determinant") {
    Mat2<BigInt> m{2, 3, 1, 2};
    CHECK(m.det() == 1);
    CHECK(m * m.inverse() == Mat2<BigInt>::identity(1));
    CHECK_THROWS_AS((Mat2<BigInt>{2, 0, 0, 1}).inverse(), NotInvertible);
}

TEST_CASE("truncated series") {
    VarList v{"q"};
    IntPoly q = IntPoly::variable(IntPoly(v), "q");
    SeriesBudget b{6, {}};
    // (1-q)^-1 = 1 + q + ... + q^6
    IntPoly g = one_minus_pow(q, -1, b);
    CHECK(g.size() == 7);
    CHECK(mul_truncated(g, one_minus_pow(q, 1, b), b) == IntPoly::constant(v, BigInt(1)));
    // M(1,q): plane partitions by volume
    IntPoly m = macmahon_series(MacMahonKind::M, IntPoly::constant(v, BigInt(1)), q, SeriesBudget{8, {}});
    const long want[] = {1, 1, 3, 6, 13, 24, 48, 86, 160};
    for (int n = 0; n <= 8; ++n) CHECK(m.coeff(Exps{n}) == want[n]);
    CHECK_THROWS_AS(one_minus_pow(IntPoly::constant(v, BigInt(1)), -1, b), NonConvergentGrading);
}

TEST_CASE("integer column lattice") {
    ColumnLattice L(3);
    L.add_column({{0, 2}, {1, 1}});
    L.add_column({{0, 4}, {1, 2}});
    L.add_column({{1, 1}, {2, 3}});
    CHECK(L.rank() == 2);
    REQUIRE(L.kernel().size() == 1);
    SparseVec x;
    REQUIRE(L.solve({{0, 2}, {1, 2}, {2, 3}}, x));
    SparseVec back;
    std::vector<SparseVec> cols{{{0, 2}, {1, 1}}, {{0, 4}, {1, 2}}, {{1, 1}, {2, 3}}};
    for (const auto& [j, c] : x) axpy(back, c, cols[j]);
    CHECK(back == SparseVec{{0, 2}, {1, 2}, {2, 3}});
    CHECK_FALSE(L.solve({{0, 1}}, x));
}

TEST_CASE("smith form, left factor") {
    ZMatrix A{{2, 4}, {6, 8}};
    auto s = smith_left(A);
    REQUIRE(s.diag.size() == 2);
    CHECK(abs(s.diag[0] * s.diag[1]) == 8);
    CHECK(BigInt(s.diag[1] % s.diag[0]) == 0);
}
