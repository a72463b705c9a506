#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "sq/connection.hpp"
#include "sq/roots.hpp"

using namespace sq;

namespace {

bool cyclic_rotation(const std::vector<Step>& a, const std::vector<Step>& b) {
    if (a.size() != b.size()) return false;
    for (size_t r = 0; r < a.size(); ++r) {
        bool same = true;
        for (size_t k = 0; k < a.size() && same; ++k) same = a[(k + r) % a.size()] == b[k];
        if (same) return true;
    }
    return false;
}

std::vector<Step> tile_word(const std::string& name) {
    return parse_word(word_text(loop_steps(loop_around(tile_by_name(name).cells))));
}

}  // namespace

TEST_CASE("connection matrices are in SL2") {
    auto sym = symbolic_connection();
    for (int k = 0; k < 3; ++k) {
        CHECK(sym.fwd[k].det() == sym.one);
        CHECK(sym.fwd[k] * sym.inv[k] == Mat2<GaussPoly>::identity(sym.one));
    }
    const auto& c = constants();
    CHECK(c.L.det() == -1);
    CHECK(c.R.det() == -1);
    CHECK(c.L * c.R_alt == Mat2<BigInt>::identity(1));
}

TEST_CASE("word parsing") {
    auto w = parse_word("g'(b'a')^2");
    REQUIRE(w.size() == 5);
    CHECK(w[0] == Step{EdgeClass::K, true});
    CHECK(w[1] == Step{EdgeClass::I, true});
    CHECK(w[2] == Step{EdgeClass::J, true});
    CHECK(word_text(std::vector<Step>(w.rbegin(), w.rend())) == "g'b'a'b'a'");
    CHECK_THROWS_AS(parse_word("x"), ParseError);
}

TEST_CASE("tile words match the drawn words up to rotation") {
    CHECK(cyclic_rotation(tile_word("bone-60"), parse_word("(g'b')^3a'(gb)^3a")));
    CHECK(cyclic_rotation(tile_word("bone-0"), parse_word("g'(b'a')^3g(ba)^3")));
    CHECK(cyclic_rotation(tile_word("bone-120"), parse_word("b'(a'g)^3b(ag')^3")));
    std::vector<std::string> stones{"(g'b')^2(a'g)^2(ba)^2", "(b'a')^2(gb)^2(ag')^2"};
    std::vector<std::string> snakes{"(ag'b'g')^2b'(a'gbg)^2b", "(g'b'a'b')^2a'(gbab)^2a", "(g'ag'b')^2a'(ga'gb)^2a",
                                    "g'(b'g'b'a')^2g(bgba)^2",  "b'(a'b'a'g)^2b(abag')^2", "g'(b'a'ga')^2g(bag'a)^2"};
    auto covered = [](const std::string& prefix, const std::vector<std::string>& drawn) {
        std::vector<bool> hit(drawn.size());
        for (const auto& t : tile_catalog()) {
            if (t.name.rfind(prefix, 0) != 0) continue;
            auto w = tile_word(t.name);
            for (size_t k = 0; k < drawn.size(); ++k)
                if (cyclic_rotation(w, parse_word(drawn[k]))) hit[k] = true;
        }
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    };
    CHECK(covered("stone", stones));
    CHECK(covered("snake", snakes));
}

TEST_CASE("snake and turn words") {
    CHECK(snake_monodromy_check() == Mat2<BigInt>{1393, 576, 2208, 913});
    CHECK(eval_turn_word(oracle::kSnakeTurns) == Mat2<BigInt>{337, 1152, 576, 1969});
    CHECK(eval_turn_word("LR") == Mat2<BigInt>::identity(1) * constants().L * constants().R);
    Loop hex = loop_around({{0, 0}});
    CHECK(eval_turn_word(turn_word(hex)).trace() == 18);
}

TEST_CASE("turn identities: one of twelve holds only up to sign") {
    auto ids = twelve_turn_identities();
    REQUIRE(ids.size() == 12);
    int literal = 0, signed_only = 0;
    for (const auto& i : ids) {
        literal += i.literal;
        signed_only += !i.literal && i.up_to_sign;
    }
    CHECK(literal == 11);
    CHECK(signed_only == 1);
}

TEST_CASE("gauge normalization keeps ratios of matching weights") {
    BoxShape b{2, 2, 2};
    EdgeWeights w;
    int k = 0;
    for (const auto& e : region_edges(b)) w[e] = Rational(1 + k++ % 5, 1 + k % 3);
    auto g = gauge_normalize(w, b);
    for (const auto& p : enumerate_boxed(b)) {
        auto m = matching_of(p, b);
        CHECK(matching_weight(m, w) == g.scale * matching_weight(m, g.normalized));
    }
    for (const auto& pw : g.pairs) CHECK(pw.w_sq == g.normalized.at(pw.e1) * g.normalized.at(pw.e2));
}
