#include "sq/roots.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "sq/parallel.hpp"
#include "sq/zlinalg.hpp"

namespace sq {

int connection_order(int n) {
    switch (n) {
        case 1: case 2: case 4: return 4;
        case 3: case 6: return 12;
        case 8: return 8;
    }
    throw UnsupportedOrder("no specialization at n=" + std::to_string(n) + "; supported: 1,2,3,4,6,8");
}

const Connection<Cyclotomic>& specialize_connection(int n) {
    static const std::map<int, Connection<Cyclotomic>> cache = [] {
        std::map<int, Connection<Cyclotomic>> m;
        for (int k : {1, 2, 3, 4, 6, 8}) {
            int N = connection_order(k);
            long e = N / k;
            m.emplace(k, connection_at_roots(N, e, e, e));
        }
        return m;
    }();
    connection_order(n);
    return cache.at(n);
}

Mat2<Cyclotomic> monodromy_at(const Loop& l, int n) { return monodromy(l, specialize_connection(n)); }

Mat2<Cyclotomic> scalar_at(int n, long s) { return Mat2<Cyclotomic>::scalar(Cyclotomic(connection_order(n), BigInt(s))); }

namespace {

BigInt integer_trace(const Mat2<Cyclotomic>& m) {
    Cyclotomic t = m.trace();
    if (!t.is_integer()) throw CalibrationError("trace " + t.str() + " is not an integer");
    return t.coeffs().empty() ? BigInt(0) : t.coeffs()[0];
}

std::vector<Matching> coarse_matchings(const BoxShape& coarse) {
    std::vector<Matching> out;
    for (const auto& p : enumerate_boxed(coarse)) out.push_back(matching_of(p, coarse));
    return out;
}

std::set<DoubleDimer> targets_of(const BoxShape& fine) {
    if (!fine.even()) throw DoesNotFit("fine box must have even sides, got " + fine.str());
    auto cm = coarse_matchings(fine.half());
    std::set<DoubleDimer> t;
    for (const auto& a : cm)
        for (const auto& b : cm) t.insert(overlay(a, b));
    return t;
}

}  // namespace

CountReport check_count(const DoubleDimer& dd, const BoxShape& fine, int n, int threads) {
    if (n != 1 && n != 2) throw UnsupportedOrder("count check needs n=1 or n=2");
    CountReport r;
    r.target = dd;
    r.n = n;
    r.loops = decompose(dd).loops;
    r.trace_product = 1;
    r.turn_product = 1;
    for (const auto& l : r.loops) {
        r.trace_product *= integer_trace(monodromy_at(l, n));
        r.turn_product *= eval_turn_word(turn_word(l)).trace();
    }
    r.fiber_size = static_cast<long>(fiber(dd, fine, threads).members.size());
    r.agree = r.trace_product == r.turn_product && r.trace_product == r.fiber_size;
    return r;
}

std::optional<DoubleDimer> realize_single_loop(const Loop& l, const BoxShape& fine) {
    auto key = translation_key(l);
    for (const auto& dd : targets_of(fine)) {
        auto d = decompose(dd);
        if (d.loops.size() == 1 && translation_key(d.loops[0]) == key) return dd;
    }
    return std::nullopt;
}

CountReport check_loop_count(const Loop& l, const BoxShape& fine, int n, int threads) {
    auto dd = realize_single_loop(l, fine);
    if (!dd) throw LoopNotRealizable("loop is not the only loop of any target in " + fine.str());
    return check_count(*dd, fine, n, threads);
}

bool check_n4(const Loop& l) { return monodromy_at(l, 4) == scalar_at(4, 1); }

bool check_n8(const Loop& l) {
    long s = loop_interior(l).size() % 2 ? -1 : 1;
    return monodromy_at(l, 8) == scalar_at(8, s);
}

namespace {

std::vector<HexCoord> normalized(std::vector<HexCoord> c) {
    HexCoord m = *std::min_element(c.begin(), c.end());
    for (auto& h : c) h = h - m;
    std::sort(c.begin(), c.end());
    return c;
}

std::vector<Tile> build_catalog() {
    const auto& d = hex_directions();
    std::vector<Tile> t;
    t.push_back({"bone-0", normalized({{0, 0}, {0, 1}, {0, 2}})});
    t.push_back({"bone-60", normalized({{0, 0}, {1, 0}, {2, 0}})});
    t.push_back({"bone-120", normalized({{0, 0}, {1, 1}, {2, 2}})});
    t.push_back({"stone-up", normalized({{0, 0}, {0, 1}, {1, 1}})});
    t.push_back({"stone-down", normalized({{0, 0}, {1, 0}, {1, 1}})});
    for (int k = 0; k < 6; ++k) {
        HexCoord a = d[(2 + k % 3) % 6];
        HexCoord b = k < 3 ? d[(3 + k) % 6] : d[(1 + k % 3) % 6];
        t.push_back({"snake-" + std::to_string(k), normalized({{0, 0}, a, a + b, a * 2 + b})});
    }
    return t;
}

}  // namespace

const std::vector<Tile>& tile_catalog() {
    static const std::vector<Tile> c = build_catalog();
    return c;
}

const Tile& tile_by_name(const std::string& name) {
    for (const auto& t : tile_catalog())
        if (t.name == name) return t;
    throw ParseError("unknown tile " + name);
}

std::string status_name(TilingStatus s) {
    switch (s) {
        case TilingStatus::Found: return "found";
        case TilingStatus::None: return "none";
        case TilingStatus::Unknown: return "unknown";
    }
    return "?";
}

int hex_distance(HexCoord a, HexCoord b) {
    int du = b.u - a.u, dv = b.v - a.v;
    if ((du >= 0) == (dv >= 0)) return std::max(std::abs(du), std::abs(dv));
    return std::abs(du) + std::abs(dv);
}

std::vector<HexCoord> dilate(const std::vector<HexCoord>& region, int margin) {
    std::set<HexCoord> seen(region.begin(), region.end());
    std::vector<HexCoord> frontier(seen.begin(), seen.end());
    for (int r = 0; r < margin; ++r) {
        std::vector<HexCoord> next;
        for (const auto& h : frontier)
            for (const auto& d : hex_directions())
                if (seen.insert(h + d).second) next.push_back(h + d);
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

namespace {

long pmod(long a, long p) { return ((a % p) + p) % p; }
int torus_class(HexCoord h, int p) { return static_cast<int>(pmod(h.u, p) * p + pmod(h.v, p)); }

bool nonzero_mod(const BigInt& x, const BigInt& m) { return m.is_zero() ? !x.is_zero() : BigInt(x % m) != 0; }

void check_simply_connected(const std::vector<HexCoord>& region) {
    if (!region.empty()) loop_around(region);
}

}  // namespace

std::optional<TorusInvariant> torus_obstruction(const std::vector<HexCoord>& region, int max_period) {
    const auto& tiles = tile_catalog();
    for (int p = 1; p <= max_period; ++p) {
        int m = p * p;
        std::set<std::vector<long>> cols;
        for (const auto& t : tiles)
            for (int su = 0; su < p; ++su)
                for (int sv = 0; sv < p; ++sv) {
                    std::vector<long> c(m, 0);
                    for (const auto& h : t.cells) ++c[torus_class(h + HexCoord{su, sv}, p)];
                    cols.insert(c);
                }
        ZMatrix A(m, std::vector<BigInt>(cols.size()));
        size_t j = 0;
        for (const auto& c : cols) {
            for (int i = 0; i < m; ++i) A[i][j] = c[i];
            ++j;
        }
        std::vector<BigInt> b(m);
        for (const auto& h : region) b[torus_class(h, p)] += 1;
        auto s = smith_left(A);
        for (int k = 0; k < m; ++k) {
            BigInt val = 0;
            for (int i = 0; i < m; ++i) val += s.U[k][i] * b[i];
            BigInt d = k < static_cast<int>(s.diag.size()) ? BigInt(abs(s.diag[k])) : BigInt(0);
            if (!nonzero_mod(val, d)) continue;
            TorusInvariant inv;
            inv.period = p;
            inv.modulus = d;
            inv.values = s.U[k];
            if (!d.is_zero())
                for (auto& x : inv.values) x = ((x % d) + d) % d;
            inv.region_value = d.is_zero() ? val : BigInt(((val % d) + d) % d);
            return inv;
        }
    }
    return std::nullopt;
}

namespace {

bool exact_search(std::set<HexCoord>& left, std::vector<Placement>& out, long& budget) {
    if (left.empty()) return true;
    if (--budget < 0) return false;
    HexCoord c = *left.begin();
    const auto& tiles = tile_catalog();
    for (int t = 0; t < static_cast<int>(tiles.size()); ++t) {
        bool fits = true;
        for (const auto& h : tiles[t].cells) fits = fits && left.count(h + c);
        if (!fits) continue;
        for (const auto& h : tiles[t].cells) left.erase(h + c);
        out.push_back({t, c, BigInt(1)});
        if (exact_search(left, out, budget)) return true;
        out.pop_back();
        for (const auto& h : tiles[t].cells) left.insert(h + c);
    }
    return false;
}

}  // namespace

std::optional<TilingCertificate> exact_tiling(const std::vector<HexCoord>& region, long node_budget) {
    std::set<HexCoord> left(region.begin(), region.end());
    TilingCertificate cert;
    if (!exact_search(left, cert.placements, node_budget)) return std::nullopt;
    for (const auto& p : cert.placements) cert.stone_parity ^= tile_catalog()[p.tile].stone() ? 1 : 0;
    return cert;
}

std::optional<TilingCertificate> tiling_in_window(const std::vector<HexCoord>& region, int margin) {
    const auto& tiles = tile_catalog();
    auto window = dilate(region, margin);
    std::map<HexCoord, int> row;
    for (const auto& h : window) row.emplace(h, static_cast<int>(row.size()));

    ColumnLattice lat(static_cast<int>(window.size()));
    std::vector<std::pair<int, HexCoord>> placed;
    for (const auto& o : window)
        for (int t = 0; t < static_cast<int>(tiles.size()); ++t) {
            SparseVec col;
            bool inside = true;
            for (const auto& c : tiles[t].cells) {
                auto it = row.find(c + o);
                if (it == row.end()) {
                    inside = false;
                    break;
                }
                col[it->second] = 1;
            }
            if (!inside) continue;
            lat.add_column(col);
            placed.push_back({t, o});
        }
    SparseVec b, x;
    for (const auto& h : region) b[row.at(h)] = 1;
    if (!lat.solve(b, x)) return std::nullopt;

    auto stone_sum = [&](const SparseVec& v) {
        BigInt s = 0;
        for (const auto& [j, c] : v)
            if (tiles[placed[j].first].stone()) s += c;
        return s;
    };
    TilingCertificate cert;
    cert.margin = margin;
    for (const auto& [j, c] : x) cert.placements.push_back({placed[j].first, placed[j].second, c});
    cert.stone_parity = BigInt(stone_sum(x) % 2) == 0 ? 0 : 1;
    for (const auto& k : lat.kernel())
        if (BigInt(stone_sum(k) % 2) != 0) {
            for (const auto& [j, c] : k) cert.parity_flip.push_back({placed[j].first, placed[j].second, c});
            break;
        }
    return cert;
}

TilingResult signed_tiling(const std::vector<HexCoord>& region, int margin) {
    if (margin < 0) throw DoesNotFit("negative tiling margin");
    check_simply_connected(region);
    TilingResult r;
    if (region.empty()) {
        r.status = TilingStatus::Found;
        r.certificate = TilingCertificate{};
        return r;
    }
    if (auto c = exact_tiling(region)) {
        // no cancellation needed; the window is still solved for the parity check
        auto w = tiling_in_window(region, margin);
        c->margin = margin;
        if (w) c->parity_flip = w->parity_flip;
        r.status = TilingStatus::Found;
        r.margin_tried = margin;
        r.certificate = std::move(c);
        return r;
    }
    int m = margin, cap = std::max(kMaxMargin, margin);
    bool checked_torus = false;
    while (true) {
        r.margin_tried = m;
        if (auto c = tiling_in_window(region, m)) {
            r.status = TilingStatus::Found;
            r.certificate = std::move(c);
            return r;
        }
        if (!checked_torus) {
            checked_torus = true;
            if (auto inv = torus_obstruction(region)) {
                r.status = TilingStatus::None;
                r.invariant = std::move(inv);
                return r;
            }
        }
        if (m >= cap) break;
        m = std::min(cap, std::max(1, 2 * m));
    }
    r.status = TilingStatus::Unknown;
    return r;
}

TilingCertificate flip_parity(const TilingCertificate& c) {
    if (c.parity_flip.empty()) throw InternalInvariant("no parity relation in this window");
    std::map<std::pair<int, HexCoord>, BigInt> sum;
    for (const auto& p : c.placements) sum[{p.tile, p.offset}] += p.coeff;
    for (const auto& p : c.parity_flip) sum[{p.tile, p.offset}] += p.coeff;
    TilingCertificate r = c;
    r.placements.clear();
    for (const auto& [k, v] : sum)
        if (!v.is_zero()) r.placements.push_back({k.first, k.second, v});
    r.stone_parity ^= 1;
    return r;
}

bool verify_certificate(const std::vector<HexCoord>& region, const TilingCertificate& c) {
    const auto& tiles = tile_catalog();
    std::map<HexCoord, BigInt> sum;
    BigInt stones = 0;
    for (const auto& p : c.placements) {
        if (p.tile < 0 || p.tile >= static_cast<int>(tiles.size())) return false;
        for (const auto& h : tiles[p.tile].cells) sum[h + p.offset] += p.coeff;
        if (tiles[p.tile].stone()) stones += p.coeff;
    }
    std::map<HexCoord, BigInt> rel;
    BigInt rel_stones = 0;
    for (const auto& p : c.parity_flip) {
        if (p.tile < 0 || p.tile >= static_cast<int>(tiles.size())) return false;
        for (const auto& h : tiles[p.tile].cells) rel[h + p.offset] += p.coeff;
        if (tiles[p.tile].stone()) rel_stones += p.coeff;
    }
    for (const auto& [h, s] : rel)
        if (!s.is_zero()) return false;
    if (!c.parity_flip.empty() && BigInt(rel_stones % 2) == 0) return false;
    std::set<HexCoord> in(region.begin(), region.end());
    for (const auto& h : in)
        if (sum[h] != 1) return false;
    for (const auto& [h, s] : sum)
        if (!in.count(h) && !s.is_zero()) return false;
    return (BigInt(stones % 2) == 0) == (c.stone_parity == 0);
}

bool verify_invariant(const std::vector<HexCoord>& region, const TorusInvariant& inv) {
    int p = inv.period;
    if (p < 1 || static_cast<int>(inv.values.size()) != p * p) return false;
    for (const auto& t : tile_catalog())
        for (int su = 0; su < p; ++su)
            for (int sv = 0; sv < p; ++sv) {
                BigInt s = 0;
                for (const auto& h : t.cells) s += inv.values[torus_class(h + HexCoord{su, sv}, p)];
                if (nonzero_mod(s, inv.modulus)) return false;
            }
    BigInt s = 0;
    for (const auto& h : region) s += inv.values[torus_class(h, p)];
    return nonzero_mod(s, inv.modulus);
}

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::ConsistentZero: return "consistent-zero";
        case Classification::ConsistentTiled: return "consistent-tiled";
        case Classification::Counterexample: return "counterexample";
        case Classification::UnknownWindow: return "unknown-window";
    }
    return "?";
}

namespace {

std::string cells_id(const std::vector<HexCoord>& cells) {
    std::string s;
    for (const auto& h : normalized(cells)) s += h.str();
    return s;
}

bool plus_minus_identity(const Mat2<Cyclotomic>& m, int n) { return m == scalar_at(n, 1) || m == scalar_at(n, -1); }

}  // namespace

ConjectureVerdict conjecture_verdict(const Loop& l, int margin) {
    ConjectureVerdict v;
    v.loop = l;
    v.interior = loop_interior(l);
    v.id = cells_id(v.interior);
    v.monodromy3 = monodromy_at(l, 3);
    v.monodromy6 = monodromy_at(l, 6);
    v.tiling = signed_tiling(v.interior, margin);
    auto& t = v.tiling;
    if (t.certificate && !verify_certificate(v.interior, *t.certificate))
        throw InternalInvariant("tiling certificate failed verification for " + v.id);
    if (t.invariant && !verify_invariant(v.interior, *t.invariant))
        throw InternalInvariant("torus invariant failed verification for " + v.id);

    bool zero = v.monodromy3.trace().is_zero() && v.monodromy6.trace().is_zero();
    switch (t.status) {
        case TilingStatus::Found: {
            auto sign_of = [&](const TilingCertificate& c) { return c.stone_parity ? -1L : 1L; };
            auto matches = [&](long s) { return v.monodromy3 == scalar_at(3, s) && v.monodromy6 == scalar_at(6, s); };
            auto& cert = *v.tiling.certificate;
            if (!matches(sign_of(cert)) && !cert.parity_fixed_in_window() && matches(-sign_of(cert))) {
                cert = flip_parity(cert);
                v.parity_adjusted = true;
                if (!verify_certificate(v.interior, cert))
                    throw InternalInvariant("parity-adjusted certificate failed verification for " + v.id);
            }
            v.classification = matches(sign_of(cert)) ? Classification::ConsistentTiled : Classification::Counterexample;
            break;
        }
        case TilingStatus::None:
            v.classification = zero ? Classification::ConsistentZero : Classification::Counterexample;
            break;
        case TilingStatus::Unknown: {
            bool pm = plus_minus_identity(v.monodromy3, 3) && plus_minus_identity(v.monodromy6, 6);
            v.classification = zero || pm ? Classification::UnknownWindow : Classification::Counterexample;
            break;
        }
    }
    return v;
}

std::vector<Loop> loops_from_boxes(const std::vector<BoxShape>& fine_boxes) {
    std::map<std::vector<HexEdge>, Loop> seen;
    for (const auto& b : fine_boxes)
        for (const auto& dd : targets_of(b))
            for (auto& l : decompose(dd).loops) seen.emplace(translation_key(l), std::move(l));
    std::vector<Loop> out;
    for (auto& [k, l] : seen) out.push_back(std::move(l));
    return out;
}

std::vector<ConjectureVerdict> conjecture_scan(const std::vector<BoxShape>& fine_boxes, int margin, int threads) {
    auto loops = loops_from_boxes(fine_boxes);
    auto parts = parallel_chunks<std::vector<ConjectureVerdict>>(loops.size(), threads, [&](size_t b, size_t e) {
        std::vector<ConjectureVerdict> out;
        for (size_t k = b; k < e; ++k) out.push_back(conjecture_verdict(loops[k], margin));
        return out;
    });
    std::vector<ConjectureVerdict> all;
    for (auto& p : parts)
        for (auto& v : p) all.push_back(std::move(v));
    return all;
}

}  // namespace sq
