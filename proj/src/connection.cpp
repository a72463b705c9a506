#include "sq/connection.hpp"

#include <algorithm>
#include <set>

namespace sq {

const std::shared_ptr<const VarList>& abc_vars() {
    static const auto v = std::make_shared<const VarList>(VarList{"a", "b", "c"});
    return v;
}

Mat2<GaussPoly> lift(const Mat2<BigInt>& m) {
    GaussPoly like(abc_vars());
    return m.map([&](const BigInt& x) { return GaussPoly::constant(like, GaussInt(x)); });
}

namespace {

GaussPoly mono(int ea, int eb, int ec, GaussInt c = 1) {
    GaussPoly like(abc_vars());
    return GaussPoly::monomial(like, Exps{ea, eb, ec}, c);
}

Constants build_constants() {
    Constants k;
    k.L = {0, 1, 1, 1};
    k.R = {1, 1, 1, 0};
    k.J = {1, 0, 0, -1};
    k.L_alt = {0, 1, 1, -1};
    k.R_alt = {-1, 1, 1, 0};
    GaussPoly zero(abc_vars());
    k.A = {mono(1, 0, 0), zero, zero, mono(-1, 0, 0)};
    k.B = {mono(0, -1, 0), zero, zero, mono(0, 1, 0)};
    k.C = {mono(0, 0, 1), zero, zero, mono(0, 0, -1)};
    GaussPoly i = mono(0, 0, 0, GaussInt::i());
    auto L = lift(k.L), R = lift(k.R), J = lift(k.J);
    k.alpha = (k.A * J).scaled(i);
    k.beta = (R * k.B * L * J).scaled(i);
    k.gamma = (L * k.C * R * J).scaled(-i);
    return k;
}

}  // namespace

const Constants& constants() {
    static const Constants k = build_constants();
    return k;
}

Connection<GaussPoly> symbolic_connection() {
    const auto& k = constants();
    Connection<GaussPoly> c;
    // EdgeClass order: I, J, K
    c.fwd = {k.beta, k.alpha, k.gamma};
    for (int j = 0; j < 3; ++j) c.inv[j] = c.fwd[j].inverse();
    c.one = GaussPoly::constant(GaussPoly(abc_vars()), GaussInt(1));
    return c;
}

Connection<Cyclotomic> connection_at_roots(int order, long ka, long kb, long kc) {
    auto sym = symbolic_connection();
    std::vector<long> pw{ka, kb, kc};
    auto ev = [&](const GaussPoly& p) { return evaluate_at_roots(p, order, pw); };
    Connection<Cyclotomic> c;
    for (int j = 0; j < 3; ++j) {
        c.fwd[j] = sym.fwd[j].map(ev);
        c.inv[j] = sym.inv[j].map(ev);
    }
    c.one = Cyclotomic::one(order);
    return c;
}

bool uses_forward(const HexVertex& from, const HexVertex& to) {
    Pt3 p = vertex_point3(from), q = vertex_point3(to);
    long dx = q.x - p.x, dy = q.y - p.y;
    return dy > 0 || (dy == 0 && dx < 0);
}

std::vector<Step> loop_steps(const Loop& l) {
    std::vector<Step> s;
    size_t n = l.vertices.size();
    for (size_t k = 0; k < n; ++k)
        s.push_back({l.edges[k].cls(), !uses_forward(l.vertices[k], l.vertices[(k + 1) % n])});
    return s;
}

namespace {

char letter(EdgeClass c) {
    switch (c) {
        case EdgeClass::J: return 'a';
        case EdgeClass::I: return 'b';
        case EdgeClass::K: return 'g';
    }
    return '?';
}

}  // namespace

std::string word_text(const std::vector<Step>& steps) {
    std::string w;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        w += letter(it->cls);
        if (it->inverse) w += '\'';
    }
    return w;
}

namespace {

struct WordParser {
    const std::string& s;
    size_t pos = 0;

    std::vector<Step> seq() {
        std::vector<Step> out;
        while (pos < s.size() && s[pos] != ')') {
            std::vector<Step> item;
            char ch = s[pos];
            if (ch == ' ') {
                ++pos;
                continue;
            }
            if (ch == '(') {
                ++pos;
                item = seq();
                if (pos >= s.size() || s[pos] != ')') throw ParseError("unbalanced parenthesis in word");
                ++pos;
            } else {
                EdgeClass c;
                if (ch == 'a') c = EdgeClass::J;
                else if (ch == 'b') c = EdgeClass::I;
                else if (ch == 'g') c = EdgeClass::K;
                else throw ParseError(std::string("unexpected character in word: ") + ch);
                ++pos;
                bool inv = false;
                if (pos < s.size() && s[pos] == '\'') {
                    inv = true;
                    ++pos;
                }
                item.push_back({c, inv});
            }
            int times = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                size_t st = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (st == pos) throw ParseError("missing power in word");
                times = std::stoi(s.substr(st, pos - st));
            }
            for (int t = 0; t < times; ++t) out.insert(out.end(), item.begin(), item.end());
        }
        return out;
    }
};

}  // namespace

std::vector<Step> parse_word(const std::string& w) {
    WordParser p{w};
    auto out = p.seq();
    if (p.pos != w.size()) throw ParseError("unbalanced parenthesis in word");
    return out;
}

std::string turn_word(const Loop& l) {
    size_t n = l.vertices.size();
    std::vector<char> turns;
    for (size_t k = 1; k <= n; ++k) {
        Pt3 a = vertex_point3(l.vertices[k - 1]), b = vertex_point3(l.vertices[k % n]),
            c = vertex_point3(l.vertices[(k + 1) % n]);
        long cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
        if (cross == 0) throw InternalInvariant("straight turn in honeycomb loop");
        turns.push_back(cross > 0 ? 'L' : 'R');
    }
    return std::string(turns.rbegin(), turns.rend());
}

Mat2<BigInt> eval_turn_word(const std::string& w, bool alt) {
    const auto& k = constants();
    Mat2<BigInt> m = Mat2<BigInt>::identity(BigInt(1));
    for (char ch : w) {
        if (ch == 'L') m = m * (alt ? k.L_alt : k.L);
        else if (ch == 'R') m = m * (alt ? k.R_alt : k.R);
        else throw ParseError(std::string("turn word letter ") + ch);
    }
    return m;
}

Mat2<BigInt> to_integer(const Mat2<Cyclotomic>& m) {
    return m.map([](const Cyclotomic& x) {
        if (!x.is_integer()) throw CalibrationError("non-integer entry " + x.str());
        return x.coeffs()[0];
    });
}

Mat2<BigInt> snake_monodromy_check() {
    auto conn = connection_at_roots(4, 0, 0, 0);
    return to_integer(eval_word(parse_word("g'(b'a'ga')^2g(bag'a)^2"), conn));
}

std::vector<IdentityCheck> twelve_turn_identities() {
    const auto& k = constants();
    auto L = lift(k.L), R = lift(k.R), J = lift(k.J);
    const auto &A = k.A, &B = k.B, &C = k.C;
    auto Ai = A.inverse(), Bi = B.inverse(), Ci = C.inverse();
    const auto &al = k.alpha, &be = k.beta, &ga = k.gamma;
    auto ali = al.inverse(), bei = be.inverse(), gai = ga.inverse();
    struct Row {
        const char* name;
        Mat2<GaussPoly> lhs, rhs;
    };
    // right sides exactly as displayed, leading sign included
    std::vector<Row> rows = {
        {"beta alpha = -RBLA", be * al, -(R * B * L * A)},
        {"alpha beta = -JARBLJ", al * be, -(J * A * R * B * L * J)},
        {"gamma beta = LCLBLJ", ga * be, L * C * L * B * L * J},
        {"beta gamma = -RBRCRJ", be * ga, -(R * B * R * C * R * J)},
        {"alpha^-1 gamma = -JA^-1LCRJ", ali * ga, -(J * Ai * L * C * R * J)},
        {"gamma alpha^-1 = -LCRA^-1", ga * ali, -(L * C * R * Ai)},
        {"beta^-1 alpha^-1 = -RB^-1LA^-1", bei * ali, -(R * Bi * L * Ai)},
        {"alpha^-1 beta^-1 = -JA^-1RB^-1LJ", ali * bei, -(J * Ai * R * Bi * L * J)},
        {"gamma^-1 beta^-1 = LC^-1LB^-1LJ", gai * bei, L * Ci * L * Bi * L * J},
        {"beta^-1 gamma^-1 = RB^-1RC^-1RJ", bei * gai, R * Bi * R * Ci * R * J},
        {"alpha gamma^-1 = -JALC^-1RJ", al * gai, -(J * A * L * Ci * R * J)},
        {"gamma^-1 alpha = -LC^-1RA", gai * al, -(L * Ci * R * A)},
    };
    std::vector<IdentityCheck> out;
    for (const auto& r : rows) {
        bool lit = r.lhs == r.rhs;
        bool flip = lit || r.lhs == -r.rhs;
        if (!flip) throw CalibrationError(std::string("turn identity fails even up to sign: ") + r.name);
        out.push_back({r.name, lit, flip});
    }
    return out;
}

Rational matching_weight(const Matching& m, const EdgeWeights& w) {
    Rational p = 1;
    for (const auto& e : m) {
        auto it = w.find(e);
        if (it == w.end()) throw EdgeOutsideRegion("no weight for edge " + e.str());
        p *= it->second;
    }
    return p;
}

GaugeResult gauge_normalize(const EdgeWeights& w, const BoxShape& fine) {
    for (const auto& [e, x] : w)
        if (x == 0) throw ZeroWeight("zero weight on edge " + e.str());
    GaugeResult g;
    g.normalized = w;
    g.scale = 1;
    for (const auto& v : region_vertices(fine)) {
        bool center = !is_even(v[0]) && !is_even(v[1]) && !is_even(v[2]);
        if (center) continue;
        const HexEdge* prop = nullptr;
        auto es = vertex_edges(v);
        for (const auto& e : es)
            if (!is_even(e.a) && !is_even(e.b)) prop = &e;
        if (!prop) throw InternalInvariant("non-center vertex without propeller edge");
        auto it = g.normalized.find(*prop);
        if (it == g.normalized.end()) continue;  // propeller edge leaves the region
        Rational f = it->second;
        for (const auto& e : es) {
            auto jt = g.normalized.find(e);
            if (jt != g.normalized.end()) jt->second /= f;
        }
        g.scale *= f;
    }
    std::set<HexEdge> done;
    for (const auto& [e, x] : g.normalized) {
        auto img = even_edge_image(e);
        if (!img || done.count(*img)) continue;
        auto [e1, e2] = preimages(*img);
        auto i1 = g.normalized.find(e1), i2 = g.normalized.find(e2);
        if (i1 == g.normalized.end() || i2 == g.normalized.end()) continue;
        done.insert(*img);
        PairWeight p{*img, e1, e2, i1->second * i2->second, i1->second / i2->second, i2->second / i1->second};
        g.pairs.push_back(p);
    }
    return g;
}

}  // namespace sq
