#include "sq/partitionfn.hpp"

#include <algorithm>
#include <mutex>

#include "sq/parallel.hpp"

namespace sq {

namespace {

using Counts = std::map<std::array<int, 4>, long>;

IntPoly counts_to_poly(const Counts& c) {
    IntPoly r(qrst_vars());
    for (const auto& [e, n] : c) r.add_term(Exps{e[0], e[1], e[2], e[3]}, BigInt(n));
    return r;
}

IntPoly Q_power(long k) {
    int x = static_cast<int>(k);
    return IntPoly::monomial(IntPoly(qrst_vars()), Exps{x, x, x, x});
}

}  // namespace

IntPoly colored_gf_box(const BoxShape& s, int threads) {
    auto all = enumerate_boxed(s);
    auto parts = parallel_chunks<Counts>(all.size(), threads, [&](size_t b, size_t e) {
        Counts c;
        for (size_t k = b; k < e; ++k) ++c[colored_exponents(all[k])];
        return c;
    });
    Counts total;
    for (const auto& p : parts)
        for (const auto& [e, n] : p) total[e] += n;
    return counts_to_poly(total);
}

IntPoly loop_trace(const Loop& l) {
    static const auto conn = symbolic_connection();
    return real_part_checked(monodromy(l, conn).trace());
}

IntPoly loop_trace_rst(const Loop& l) {
    std::vector<SubstRule> rules = {{2, 1, Exps{0, 1, 0, 0}}, {2, 1, Exps{0, 0, 1, 0}}, {2, 1, Exps{0, 0, 0, 1}}};
    return substitute(loop_trace(l), *qrst_vars(), rules);
}

namespace {

long dd_height(const DoubleDimer& dd) {
    long h = 0;
    for (const auto& [e, m] : dd.entries())
        if (e.cls() == EdgeClass::K) h += m * horizontal_height(e);
    return h;
}

IntPoly dd_weight_cached(const DoubleDimer& dd, long base, std::map<std::vector<HexEdge>, IntPoly>* cache,
                         std::mutex* mu) {
    IntPoly w = Q_power(dd_height(dd) - base);
    for (const auto& l : decompose(dd).loops) {
        if (!cache) {
            w *= loop_trace_rst(l);
            continue;
        }
        auto key = translation_key(l);
        IntPoly tr;
        bool have = false;
        {
            std::lock_guard<std::mutex> g(*mu);
            auto it = cache->find(key);
            if (it != cache->end()) {
                tr = it->second;
                have = true;
            }
        }
        if (!have) {
            tr = loop_trace_rst(l);
            std::lock_guard<std::mutex> g(*mu);
            cache->emplace(key, tr);
        }
        w *= tr;
    }
    return w;
}

long empty_base(const BoxShape& coarse) { return 2 * height_sum(matching_of(PlanePartition(), coarse)); }

}  // namespace

IntPoly dd_weight(const DoubleDimer& dd, const BoxShape& coarse) {
    return dd_weight_cached(dd, empty_base(coarse), nullptr, nullptr);
}

std::optional<IntPoly> fit_monomial(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return std::nullopt;
    const auto& [ea, ca] = *a.terms().rbegin();
    const auto& [eb, cb] = *b.terms().rbegin();
    if (cb != 1 && cb != -1) return std::nullopt;
    Exps d(ea.size());
    for (size_t k = 0; k < d.size(); ++k) d[k] = ea[k] - eb[k];
    BigInt c = ca * cb;
    if (c != 1 && c != -1) return std::nullopt;
    IntPoly m = IntPoly::monomial(a, d, c);
    if (m * b == a) return m;
    return std::nullopt;
}

MeasureReport measure_check(const BoxShape& fine, int threads) {
    if (!fine.even()) throw DoesNotFit("measure check needs even box sides, got " + fine.str());
    MeasureReport rep;
    rep.fine = fine;
    BoxShape coarse = fine.half();
    long base = empty_base(coarse);

    std::vector<Matching> cm;
    for (const auto& p : enumerate_boxed(coarse)) cm.push_back(matching_of(p, coarse));
    std::map<DoubleDimer, long> targets;
    for (const auto& m1 : cm)
        for (const auto& m2 : cm) ++targets[overlay(m1, m2)];

    auto all = enumerate_boxed(fine);
    using Acc = std::map<DoubleDimer, Counts>;
    auto parts = parallel_chunks<Acc>(all.size(), threads, [&](size_t b, size_t e) {
        Acc acc;
        for (size_t k = b; k < e; ++k) ++acc[squish_matching(matching_of(all[k], fine))][colored_exponents(all[k])];
        return acc;
    });
    Acc fib;
    for (auto& p : parts)
        for (auto& [dd, c] : p) {
            auto& dst = fib[dd];
            for (const auto& [e, n] : c) dst[e] += n;
        }

    rep.fibers_within_targets = true;
    for (const auto& [dd, c] : fib)
        if (!targets.count(dd)) rep.fibers_within_targets = false;

    std::vector<std::pair<DoubleDimer, long>> tv(targets.begin(), targets.end());
    std::map<std::vector<HexEdge>, IntPoly> cache;
    std::mutex mu;
    auto weights = parallel_chunks<std::vector<IntPoly>>(tv.size(), threads, [&](size_t b, size_t e) {
        std::vector<IntPoly> out;
        for (size_t k = b; k < e; ++k) out.push_back(dd_weight_cached(tv[k].first, base, &cache, &mu));
        return out;
    });
    std::vector<IntPoly> rhs;
    for (auto& w : weights) rhs.insert(rhs.end(), w.begin(), w.end());

    rep.pair_counts_ok = true;
    IntPoly total_rhs(qrst_vars());
    rep.gf = IntPoly(qrst_vars());
    for (size_t k = 0; k < tv.size(); ++k) {
        FiberReport f;
        f.target = tv[k].first;
        f.pairs = tv[k].second;
        f.loops = static_cast<int>(decompose(f.target).loops.size());
        if (f.pairs != (1L << f.loops)) rep.pair_counts_ok = false;
        auto it = fib.find(f.target);
        f.lhs = it == fib.end() ? IntPoly(qrst_vars()) : counts_to_poly(it->second);
        if (it != fib.end())
            for (const auto& [e, n] : it->second) f.size += n;
        f.rhs = rhs[k];
        rep.total += f.size;
        rep.gf += f.lhs;
        total_rhs += f.rhs;
        rep.fibers.push_back(std::move(f));
    }

    rep.all_equal = true;
    for (auto& f : rep.fibers) {
        f.equal = f.lhs == f.rhs;
        rep.all_equal = rep.all_equal && f.equal;
    }
    if (!rep.all_equal) {
        // one common monomial across every fiber would be a normalization slip, not a failure of the identity
        std::optional<IntPoly> m;
        for (const auto& f : rep.fibers)
            if (!f.equal) {
                m = fit_monomial(f.lhs, f.rhs);
                break;
            }
        if (m) {
            bool ok = true;
            for (const auto& f : rep.fibers) ok = ok && (f.lhs == *m * f.rhs);
            rep.calibration = ok ? m->str() : "none";
        } else {
            rep.calibration = "none";
        }
    }
    rep.global_equal = total_rhs == rep.gf;
    return rep;
}

IntPoly zq_series(const SeriesBudget& budget) {
    IntPoly like(qrst_vars());
    auto mono = [&](int q, int r, int s, int t, int c = 1) { return IntPoly::monomial(like, Exps{q, r, s, t}, BigInt(c)); };
    IntPoly Q = mono(1, 1, 1, 1);
    IntPoly one = IntPoly::constant(like, BigInt(1));
    using K = MacMahonKind;
    IntPoly z = macmahon_series(K::M, one, Q, budget, 4);
    for (const auto& x : {mono(0, 1, 1, 0), mono(0, 0, 1, 1), mono(0, 1, 0, 1)})
        z = mul_truncated(z, macmahon_series(K::Mtilde, x, Q, budget, 1), budget);
    for (const auto& x : {mono(0, 1, 0, 0, -1), mono(0, 0, 1, 0, -1), mono(0, 0, 0, 1, -1), mono(0, 1, 1, 1, -1)})
        z = mul_truncated(z, macmahon_series(K::Mtilde, x, Q, budget, -1), budget);
    return z;
}

IntPoly colored_volume_sum(int max_volume) {
    IntPoly r(qrst_vars());
    for (int n = 0; n <= max_volume; ++n)
        for (const auto& p : enumerate_by_volume(n)) r += colored_weight(p);
    return r;
}

IntPoly specialize_rst(const IntPoly& p, int sign, int power) {
    std::vector<SubstRule> rules = {{1, 1, Exps{1}}, {1, sign, Exps{power}}, {1, sign, Exps{power}}, {1, sign, Exps{power}}};
    return substitute(p, VarList{"q"}, rules);
}

Rational single_edge_probability(const BoxShape& s, const HexEdge& e) {
    auto es = region_edges(s);
    if (!std::binary_search(es.begin(), es.end(), e)) throw EdgeOutsideRegion("edge " + e.str() + " not in region " + s.str());
    long hit = 0, total = 0;
    for_each_boxed(s, [&](const PlanePartition& p) {
        auto m = matching_of(p, s);
        ++total;
        if (std::binary_search(m.begin(), m.end(), e)) ++hit;
    });
    return Rational(hit, total);
}

EdgeProbabilityReport edge_probabilities(const BoxShape& fine, const HexEdge& coarse) {
    if (!fine.even()) throw DoesNotFit("edge probabilities need even box sides");
    EdgeProbabilityReport r;
    r.coarse = coarse;
    r.single = single_edge_probability(fine.half(), coarse);
    auto [e1, e2] = preimages(coarse);
    r.fine1 = e1;
    r.fine2 = e2;
    long both = 0, h1 = 0, h2 = 0, total = 0;
    for_each_boxed(fine, [&](const PlanePartition& p) {
        auto m = matching_of(p, fine);
        bool a = std::binary_search(m.begin(), m.end(), e1), b = std::binary_search(m.begin(), m.end(), e2);
        ++total;
        h1 += a;
        h2 += b;
        both += a && b;
    });
    r.doubled = Rational(both, total);
    r.fine1_single = Rational(h1, total);
    r.fine2_single = Rational(h2, total);
    r.product = r.fine1_single * r.fine2_single;
    return r;
}

std::vector<EdgeProbabilityReport> all_edge_probabilities(const BoxShape& fine) {
    if (!fine.even()) throw DoesNotFit("edge probabilities need even box sides");
    BoxShape coarse = fine.half();
    std::map<HexEdge, long> single, hits;
    long ctotal = 0, total = 0;
    for_each_boxed(coarse, [&](const PlanePartition& p) {
        ++ctotal;
        for (const auto& e : matching_of(p, coarse)) ++single[e];
    });
    auto edges = region_edges(coarse);
    std::vector<std::pair<HexEdge, HexEdge>> pre;
    for (const auto& e : edges) pre.push_back(preimages(e));
    std::vector<long> both(edges.size());
    for_each_boxed(fine, [&](const PlanePartition& p) {
        auto m = matching_of(p, fine);
        ++total;
        for (const auto& e : m) ++hits[e];
        for (size_t k = 0; k < pre.size(); ++k)
            both[k] += std::binary_search(m.begin(), m.end(), pre[k].first) &&
                       std::binary_search(m.begin(), m.end(), pre[k].second);
    });
    std::vector<EdgeProbabilityReport> out;
    for (size_t k = 0; k < edges.size(); ++k) {
        EdgeProbabilityReport r;
        r.coarse = edges[k];
        r.fine1 = pre[k].first;
        r.fine2 = pre[k].second;
        r.single = Rational(single[edges[k]], ctotal);
        r.doubled = Rational(both[k], total);
        r.fine1_single = Rational(hits[r.fine1], total);
        r.fine2_single = Rational(hits[r.fine2], total);
        r.product = r.fine1_single * r.fine2_single;
        out.push_back(r);
    }
    return out;
}

}  // namespace sq
