#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sq/cyclotomic.hpp"
#include "sq/laurent.hpp"
#include "sq/mat2.hpp"
#include "sq/squish.hpp"

namespace sq {

const std::shared_ptr<const VarList>& abc_vars();

struct Constants {
    Mat2<BigInt> L, R, J;
    Mat2<BigInt> L_alt, R_alt;  // R^-1 and L^-1, the negative-entry variant
    Mat2<GaussPoly> A, B, C;
    Mat2<GaussPoly> alpha, beta, gamma;
};
const Constants& constants();

Mat2<GaussPoly> lift(const Mat2<BigInt>& m);

// alpha on J-class, beta on I-class, gamma on K-class (horizontal) edges
template <class R>
struct Connection {
    std::array<Mat2<R>, 3> fwd, inv;  // indexed by EdgeClass
    R one;

    const Mat2<R>& get(EdgeClass c, bool inverse) const {
        int k = static_cast<int>(c);
        return inverse ? inv[k] : fwd[k];
    }
};

Connection<GaussPoly> symbolic_connection();
// a = zeta^ka, b = zeta^kb, c = zeta^kc in Z[zeta_order]; order divisible by 4
Connection<Cyclotomic> connection_at_roots(int order, long ka, long kb, long kc);

// Gamma(e) is used when the drawn step goes up, or exactly west; Gamma(e)^-1 otherwise
bool uses_forward(const HexVertex& from, const HexVertex& to);

struct Step {
    EdgeClass cls;
    bool inverse;
    friend bool operator==(const Step&, const Step&) = default;
};
std::vector<Step> loop_steps(const Loop& l);  // traversal order
std::string word_text(const std::vector<Step>& steps);  // written right to left, "g'b'a'gba"

template <class R>
Mat2<R> monodromy(const Loop& l, const Connection<R>& conn) {
    Mat2<R> m = Mat2<R>::identity(conn.one);
    for (const auto& s : loop_steps(l)) m = conn.get(s.cls, s.inverse) * m;
    return m;
}

// words over a,b,g (alpha, beta, gamma), ' for inverse, (..)^k for powers; written order
std::vector<Step> parse_word(const std::string& w);
template <class R>
Mat2<R> eval_word(const std::vector<Step>& written, const Connection<R>& conn) {
    Mat2<R> m = Mat2<R>::identity(conn.one);
    for (const auto& s : written) m = m * conn.get(s.cls, s.inverse);
    return m;
}

std::string turn_word(const Loop& l);  // written right to left
Mat2<BigInt> eval_turn_word(const std::string& w, bool alt = false);

Mat2<BigInt> to_integer(const Mat2<Cyclotomic>& m);  // throws unless every entry is in Z
Mat2<BigInt> snake_monodromy_check();

struct IdentityCheck {
    std::string name;
    bool literal;      // holds exactly as displayed
    bool up_to_sign;   // holds after flipping the sign of the right side
};
std::vector<IdentityCheck> twelve_turn_identities();

// gauge transformation on the fine lattice; squares stand in for square roots
using EdgeWeights = std::map<HexEdge, Rational>;
struct PairWeight {
    HexEdge coarse, e1, e2;
    Rational w_sq;           // w(e)^2 = w(e1) w(e2)
    Rational r1_sq, r2_sq;   // (w(e1)/w(e))^2 and (w(e2)/w(e))^2
};
struct GaugeResult {
    EdgeWeights normalized;
    std::vector<PairWeight> pairs;
    Rational scale;  // weight before = weight after * scale, for every matching
};
GaugeResult gauge_normalize(const EdgeWeights& w, const BoxShape& fine);
Rational matching_weight(const Matching& m, const EdgeWeights& w);

}  // namespace sq
