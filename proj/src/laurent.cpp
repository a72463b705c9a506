#include "sq/laurent.hpp"

#include <cctype>

namespace sq {

IntPoly real_part_checked(const GaussPoly& p) {
    IntPoly r(p.vars_ptr());
    for (const auto& [e, c] : p.terms()) {
        if (!c.im.is_zero()) throw CalibrationError("residual imaginary part in " + p.str());
        r.add_term(e, c.re);
    }
    return r;
}

GaussPoly to_gauss(const IntPoly& p) {
    GaussPoly r(p.vars_ptr());
    for (const auto& [e, c] : p.terms()) r.add_term(e, GaussInt(c));
    return r;
}

namespace {

struct Parser {
    const std::string& s;
    const VarList& vars;
    size_t pos = 0;

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char ch) {
        ws();
        if (pos < s.size() && s[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial parse: " + what + " at offset " + std::to_string(pos));
    }
    BigInt number() {
        ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return BigInt(s.substr(start, pos - start));
    }
    int small_int() {
        bool neg = eat('-');
        BigInt v = number();
        if (v > 1000000) fail("exponent too large");
        int x = static_cast<int>(v);
        return neg ? -x : x;
    }
    bool factor(Exps& e, BigInt& coef) {
        ws();
        if (pos >= s.size()) return false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coef *= number();
            return true;
        }
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (start == pos) fail("expected factor");
        std::string name = s.substr(start, pos - start);
        size_t k = 0;
        while (k < vars.size() && vars[k] != name) ++k;
        if (k == vars.size()) fail("unknown variable " + name);
        int pw = 1;
        if (eat('^')) pw = small_int();
        e[k] += pw;
        return true;
    }
};

}  // namespace

IntPoly parse_int_poly(const std::string& text, const VarList& vars) {
    IntPoly r(vars);
    Parser p{text, vars};
    p.ws();
    if (p.pos < text.size() && text.substr(p.pos) == "0") return r;
    bool first = true;
    while (true) {
        p.ws();
        if (p.pos >= text.size()) break;
        int sign = 1;
        if (p.eat('-')) sign = -1;
        else if (!first && !p.eat('+')) p.fail("expected + or -");
        else if (first) p.eat('+');
        Exps e(vars.size(), 0);
        BigInt coef = sign;
        if (!p.factor(e, coef)) p.fail("empty term");
        while (p.eat('*'))
            if (!p.factor(e, coef)) p.fail("dangling *");
        r.add_term(e, coef);
        first = false;
    }
    if (first) p.fail("empty input");
    return r;
}

}  // namespace sq
