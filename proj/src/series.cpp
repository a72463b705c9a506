#include "sq/series.hpp"

namespace sq {

long SeriesBudget::degree(const Exps& e) const {
    long d = 0;
    for (size_t k = 0; k < e.size(); ++k) d += static_cast<long>(weights.empty() ? 1 : weights.at(k)) * e[k];
    return d;
}

IntPoly truncate(const IntPoly& p, const SeriesBudget& b) {
    IntPoly r(p.vars_ptr());
    for (const auto& [e, c] : p.terms())
        if (b.degree(e) <= b.max_degree) r.add_term(e, c);
    return r;
}

IntPoly mul_truncated(const IntPoly& a, const IntPoly& b, const SeriesBudget& budget) {
    a.same_vars(b);
    IntPoly r(a.vars_ptr());
    std::vector<std::pair<long, const IntPoly::Terms::value_type*>> bs;
    for (const auto& t : b.terms()) bs.emplace_back(budget.degree(t.first), &t);
    size_t n = a.nvars();
    Exps e(n);
    for (const auto& [ea, ca] : a.terms()) {
        long da = budget.degree(ea);
        for (const auto& [db, tb] : bs) {
            if (da + db > budget.max_degree) continue;
            for (size_t k = 0; k < n; ++k) e[k] = ea[k] + tb->first[k];
            r.add_term(e, ca * tb->second);
        }
    }
    return r;
}

namespace {

const std::pair<const Exps, BigInt>& single_term(const IntPoly& x, const char* what) {
    if (!x.is_monomial()) throw NonConvergentGrading(std::string(what) + " must be a monomial");
    return *x.terms().begin();
}

}  // namespace

IntPoly one_minus_pow(const IntPoly& x, long n, const SeriesBudget& budget) {
    const auto& [e, c] = single_term(x, "series argument");
    if (c != 1 && c != -1) throw NonConvergentGrading("series argument needs coefficient +-1");
    long d = budget.degree(e);
    if (n != 0 && d <= 0) throw NonConvergentGrading("non-positive degree term " + x.str());
    IntPoly r = IntPoly::constant(x, BigInt(1));
    if (n == 0) return r;
    // coefficient of x^k in (1-x)^n is binom(n,k)(-1)^k, generalized binomial for n<0
    BigInt coef = 1;
    Exps ek(e.size(), 0);
    for (long k = 1; k * d <= budget.max_degree; ++k) {
        coef = coef * (n - k + 1) / k;
        if (coef.is_zero()) break;
        for (size_t j = 0; j < e.size(); ++j) ek[j] += e[j];
        BigInt term = coef;
        if (k % 2) term = -term;
        if (c < 0 && (k % 2)) term = -term;
        r.add_term(ek, term);
    }
    return r;
}

namespace {

IntPoly macmahon_plain(const IntPoly& arg, const IntPoly& Q, const SeriesBudget& budget, long power) {
    IntPoly r = IntPoly::constant(Q, BigInt(1));
    if (arg.is_zero_poly()) return r;
    const auto& [qe, qc] = single_term(Q, "Q");
    const auto& [ae, ac] = single_term(arg, "argument");
    long dq = budget.degree(qe), da = budget.degree(ae);
    if ((qc != 1 && qc != -1) || dq <= 0 || da + dq <= 0)
        throw NonConvergentGrading("factor of non-positive degree in M(" + arg.str() + ", " + Q.str() + ")");
    IntPoly x = arg * Q;
    for (long i = 1; budget.degree(x.terms().begin()->first) <= budget.max_degree; ++i) {
        r = mul_truncated(r, one_minus_pow(x, -i * power, budget), budget);
        x *= Q;
    }
    return r;
}

}  // namespace

IntPoly macmahon_series(MacMahonKind kind, const IntPoly& arg, const IntPoly& Q, const SeriesBudget& budget,
                        long power) {
    arg.same_vars(Q);
    IntPoly r = macmahon_plain(arg, Q, budget, power);
    if (kind == MacMahonKind::Mtilde && !arg.is_zero_poly()) {
        IntPoly inv;
        if (!unit_inverse(arg, inv)) throw NonConvergentGrading("Mtilde argument not invertible");
        r = mul_truncated(r, macmahon_plain(inv, Q, budget, power), budget);
    }
    return r;
}

}  // namespace sq
