#pragma once

#include <boost/container/small_vector.hpp>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sq/bigint.hpp"
#include "sq/cyclotomic.hpp"
#include "sq/errors.hpp"

namespace sq {

using Exps = boost::container::small_vector<int, 4>;
using VarList = std::vector<std::string>;

// Sparse multivariate Laurent polynomial with coefficients in C
// (BigInt or GaussInt). Terms kept in a lex-ordered map, never zero.
template <class C>
class LaurentPoly {
public:
    using Terms = std::map<Exps, C>;

    LaurentPoly() : vars_(empty_vars()) {}
    explicit LaurentPoly(VarList vars) : vars_(std::make_shared<const VarList>(std::move(vars))) {}
    explicit LaurentPoly(std::shared_ptr<const VarList> vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(const LaurentPoly& like, const C& c) {
        LaurentPoly p(like.vars_);
        if (!is_zero(c)) p.terms_.emplace(Exps(like.nvars(), 0), c);
        return p;
    }
    static LaurentPoly constant(VarList vars, const C& c) {
        LaurentPoly p(std::move(vars));
        if (!is_zero(c)) p.terms_.emplace(Exps(p.nvars(), 0), c);
        return p;
    }
    static LaurentPoly monomial(const LaurentPoly& like, Exps e, const C& c = C(1)) {
        LaurentPoly p(like.vars_);
        if (e.size() != like.nvars()) throw VarMismatch("exponent vector length");
        if (!is_zero(c)) p.terms_.emplace(std::move(e), c);
        return p;
    }
    static LaurentPoly variable(const LaurentPoly& like, const std::string& name, int power = 1) {
        Exps e(like.nvars(), 0);
        e[like.index_of(name)] = power;
        return monomial(like, std::move(e));
    }

    const VarList& vars() const { return *vars_; }
    const std::shared_ptr<const VarList>& vars_ptr() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero_poly() const { return terms_.empty(); }

    size_t index_of(const std::string& name) const {
        for (size_t k = 0; k < vars_->size(); ++k)
            if ((*vars_)[k] == name) return k;
        throw VarMismatch("unknown variable " + name);
    }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && all_zero(terms_.begin()->first));
    }
    C constant_term() const {
        auto it = terms_.find(Exps(nvars(), 0));
        return it == terms_.end() ? C(0) : it->second;
    }
    C coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    // add c * x^e in place
    void add_term(const Exps& e, const C& c) {
        if (is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r(a.vars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.same_vars(b);
        LaurentPoly r(a.vars_);
        size_t n = a.nvars();
        Exps e(n);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t k = 0; k < n; ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const C& c) const {
        LaurentPoly r(vars_);
        if (is_zero(c)) return r;
        for (const auto& [e, x] : terms_) r.add_term(e, x * c);
        return r;
    }

    LaurentPoly pow(unsigned e) const {
        LaurentPoly r = constant(*this, C(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) && a.terms_ == b.terms_;
    }

    // canonical text: lex-ascending terms, "3*q^2*r^-1"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (size_t k = 0; k < e.size(); ++k) {
                if (!e[k]) continue;
                if (!mono.empty()) mono += "*";
                mono += (*vars_)[k];
                if (e[k] != 1) mono += "^" + std::to_string(e[k]);
            }
            std::string cs = to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (s.empty()) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            if (mono.empty()) s += cs;
            else if (cs == "1") s += mono;
            else s += cs + "*" + mono;
        }
        return s;
    }

    void same_vars(const LaurentPoly& o) const {
        if (vars_ != o.vars_ && *vars_ != *o.vars_) throw VarMismatch("variable lists differ");
    }

private:
    static bool all_zero(const Exps& e) {
        for (int x : e)
            if (x) return false;
        return true;
    }
    static std::shared_ptr<const VarList> empty_vars() {
        static const auto v = std::make_shared<const VarList>();
        return v;
    }

    std::shared_ptr<const VarList> vars_;
    Terms terms_;
};

template <class C>
bool is_zero(const LaurentPoly<C>& p) {
    return p.is_zero_poly();
}
template <class C>
std::string to_string(const LaurentPoly<C>& p) {
    return p.str();
}

// single-term polys with unit coefficient are invertible
template <class C>
bool unit_inverse(const LaurentPoly<C>& p, LaurentPoly<C>& out) {
    if (!p.is_monomial()) return false;
    const auto& [e, c] = *p.terms().begin();
    C ci;
    if (!unit_inverse(c, ci)) return false;
    Exps ne(e.size());
    for (size_t k = 0; k < e.size(); ++k) ne[k] = -e[k];
    out = LaurentPoly<C>::monomial(p, ne, ci);
    return true;
}

using IntPoly = LaurentPoly<BigInt>;
using GaussPoly = LaurentPoly<GaussInt>;

// Substitution rule for one source variable x:
//   x^(divisor*k) -> (sign * target monomial)^k
// divisor 2 encodes rules like a^2 -> r; odd exponents then raise OddExponent.
struct SubstRule {
    int divisor = 1;
    int sign = 1;
    Exps target;  // exponents over the target variable list
};

template <class C>
LaurentPoly<C> substitute(const LaurentPoly<C>& p, const VarList& target_vars, const std::vector<SubstRule>& rules) {
    if (rules.size() != p.nvars()) throw VarMismatch("substitution must cover every variable");
    LaurentPoly<C> r(target_vars);
    size_t m = target_vars.size();
    for (const auto& rule : rules)
        if (rule.target.size() != m) throw VarMismatch("substitution target length");
    Exps e(m);
    for (const auto& [src, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        int sign = 1;
        for (size_t k = 0; k < src.size(); ++k) {
            const auto& rule = rules[k];
            if (src[k] % rule.divisor != 0)
                throw OddExponent("exponent " + std::to_string(src[k]) + " of " + p.vars()[k] +
                                  " not divisible by " + std::to_string(rule.divisor));
            int pw = src[k] / rule.divisor;
            for (size_t j = 0; j < m; ++j) e[j] += pw * rule.target[j];
            if (rule.sign < 0 && (pw % 2 != 0)) sign = -sign;
        }
        r.add_term(e, sign > 0 ? c : C(-c));
    }
    return r;
}

// evaluate at x_k = zeta_N^{powers[k]}
template <class C>
Cyclotomic evaluate_at_roots(const LaurentPoly<C>& p, int order, const std::vector<long>& powers) {
    if (powers.size() != p.nvars()) throw VarMismatch("evaluation must cover every variable");
    Cyclotomic r(order);
    for (const auto& [e, c] : p.terms()) {
        long k = 0;
        for (size_t j = 0; j < e.size(); ++j) k += static_cast<long>(e[j]) * powers[j];
        r += embed(c, order) * Cyclotomic::zeta(order, k);
    }
    return r;
}

// map coefficients of a Gaussian poly to integers; imaginary part must vanish
IntPoly real_part_checked(const GaussPoly& p);
GaussPoly to_gauss(const IntPoly& p);

// parse canonical text back (integer coefficients only)
IntPoly parse_int_poly(const std::string& text, const VarList& vars);

}  // namespace sq
