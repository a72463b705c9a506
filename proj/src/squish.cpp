#include "sq/squish.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sq/parallel.hpp"

namespace sq {

bool is_even(HexCoord h) { return h.u % 2 == 0 && h.v % 2 == 0; }

std::optional<HexEdge> even_edge_image(const HexEdge& e) {
    bool ea = is_even(e.a), eb = is_even(e.b);
    if (ea && eb) throw InternalInvariant("edge " + e.str() + " has two even hexagons");
    if (!ea && !eb) return std::nullopt;
    HexCoord h = ea ? e.a : e.b, o = ea ? e.b : e.a;
    HexCoord c{h.u / 2, h.v / 2};
    return HexEdge::make(c, c + (o - h));
}

std::pair<HexEdge, HexEdge> preimages(const HexEdge& coarse) {
    HexCoord a = coarse.a * 2, b = coarse.b * 2;
    HexCoord mid{(a.u + b.u) / 2, (a.v + b.v) / 2};
    auto p1 = HexEdge::make(a, mid), p2 = HexEdge::make(b, mid);
    if (p2 < p1) std::swap(p1, p2);
    return {p1, p2};
}

DoubleDimer::DoubleDimer(std::vector<Entry> entries) : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end());
    std::map<HexVertex, int> deg;
    for (size_t k = 0; k < e_.size(); ++k) {
        if (k && e_[k].first == e_[k - 1].first) throw InternalInvariant("duplicate edge in double dimer");
        if (e_[k].second < 1 || e_[k].second > 2) throw InternalInvariant("multiplicity outside {1,2}");
        auto [v1, v2] = edge_vertices(e_[k].first);
        deg[v1] += e_[k].second;
        deg[v2] += e_[k].second;
    }
    for (const auto& [v, d] : deg)
        if (d != 2) throw InternalInvariant("vertex " + vertex_str(v) + " has multiplicity " + std::to_string(d));
}

int DoubleDimer::mult(const HexEdge& e) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), Entry{e, 0});
    return (it != e_.end() && it->first == e) ? it->second : 0;
}

std::vector<HexVertex> DoubleDimer::covered_vertices() const {
    std::set<HexVertex> vs;
    for (const auto& [e, m] : e_) {
        auto [v1, v2] = edge_vertices(e);
        vs.insert(v1);
        vs.insert(v2);
    }
    return {vs.begin(), vs.end()};
}

std::string DoubleDimer::str() const {
    std::string s = "[";
    for (size_t k = 0; k < e_.size(); ++k) {
        if (k) s += ",";
        s += e_[k].first.str() + "x" + std::to_string(e_[k].second);
    }
    return s + "]";
}

DoubleDimer squish_matching(const Matching& m) {
    std::map<HexEdge, int> mult;
    for (const auto& e : m)
        if (auto img = even_edge_image(e)) ++mult[*img];
    return DoubleDimer(std::vector<DoubleDimer::Entry>(mult.begin(), mult.end()));
}

DoubleDimer overlay(const Matching& m1, const Matching& m2) {
    std::set<HexVertex> c1, c2;
    for (const auto& e : m1) {
        auto [a, b] = edge_vertices(e);
        c1.insert(a);
        c1.insert(b);
    }
    for (const auto& e : m2) {
        auto [a, b] = edge_vertices(e);
        c2.insert(a);
        c2.insert(b);
    }
    if (c1 != c2) throw RegionMismatch("matchings cover different vertex sets");
    std::map<HexEdge, int> mult;
    for (const auto& e : m1) ++mult[e];
    for (const auto& e : m2) ++mult[e];
    return DoubleDimer(std::vector<DoubleDimer::Entry>(mult.begin(), mult.end()));
}

long signed_area6(const std::vector<HexVertex>& cycle) {
    long a = 0;
    size_t n = cycle.size();
    for (size_t k = 0; k < n; ++k) {
        Pt3 p = vertex_point3(cycle[k]), q = vertex_point3(cycle[(k + 1) % n]);
        a += p.x * q.y - q.x * p.y;
    }
    return a;
}

namespace {

HexEdge edge_between(const HexVertex& x, const HexVertex& y) {
    std::vector<HexCoord> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    if (common.size() != 2) throw InternalInvariant("vertices " + vertex_str(x) + " and " + vertex_str(y) + " are not joined");
    return HexEdge::make(common[0], common[1]);
}

}  // namespace

Loop make_loop(std::vector<HexVertex> cycle) {
    if (cycle.size() < 3) throw InternalInvariant("loop too short");
    if (signed_area6(cycle) < 0) std::reverse(cycle.begin(), cycle.end());
    auto least = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), least, cycle.end());
    Loop l;
    l.vertices = cycle;
    for (size_t k = 0; k < cycle.size(); ++k) l.edges.push_back(edge_between(cycle[k], cycle[(k + 1) % cycle.size()]));
    return l;
}

namespace {

std::vector<Loop> cycles_of(const std::vector<HexEdge>& edges) {
    std::map<HexVertex, std::vector<HexVertex>> adj;
    for (const auto& e : edges) {
        auto [v1, v2] = edge_vertices(e);
        adj[v1].push_back(v2);
        adj[v2].push_back(v1);
    }
    for (const auto& [v, ns] : adj)
        if (ns.size() != 2) throw InternalInvariant("loop vertex " + vertex_str(v) + " has degree " + std::to_string(ns.size()));
    std::set<HexVertex> seen;
    std::vector<Loop> loops;
    for (const auto& [start, ns0] : adj) {
        if (seen.count(start)) continue;
        std::vector<HexVertex> cyc{start};
        seen.insert(start);
        HexVertex prev = start, cur = ns0[0];
        while (cur != start) {
            cyc.push_back(cur);
            seen.insert(cur);
            const auto& ns = adj[cur];
            HexVertex next = ns[0] == prev ? ns[1] : ns[0];
            prev = cur;
            cur = next;
        }
        loops.push_back(make_loop(std::move(cyc)));
    }
    std::sort(loops.begin(), loops.end(), [](const Loop& a, const Loop& b) { return a.vertices[0] < b.vertices[0]; });
    return loops;
}

}  // namespace

LoopDecomposition decompose(const DoubleDimer& dd) {
    LoopDecomposition d;
    std::vector<HexEdge> singles;
    for (const auto& [e, m] : dd.entries()) (m == 2 ? d.doubled : singles).push_back(e);
    d.loops = cycles_of(singles);
    return d;
}

DoubleDimer recompose(const LoopDecomposition& d) {
    std::vector<DoubleDimer::Entry> es;
    for (const auto& e : d.doubled) es.push_back({e, 2});
    for (const auto& l : d.loops)
        for (const auto& e : l.edges) es.push_back({e, 1});
    return DoubleDimer(std::move(es));
}

std::vector<HexCoord> loop_interior(const Loop& l) {
    int umin = 1 << 30, umax = -(1 << 30), vmin = umin, vmax = umax;
    for (const auto& v : l.vertices)
        for (const auto& h : v) {
            umin = std::min(umin, h.u);
            umax = std::max(umax, h.u);
            vmin = std::min(vmin, h.v);
            vmax = std::max(vmax, h.v);
        }
    std::vector<Pt3> poly;
    for (const auto& v : l.vertices) poly.push_back(vertex_point3(v));
    std::vector<HexCoord> inside;
    for (int u = umin; u <= umax; ++u)
        for (int v = vmin; v <= vmax; ++v) {
            Pt3 p = hex_point3({u, v});
            int wn = 0;
            for (size_t k = 0; k < poly.size(); ++k) {
                const Pt3& a = poly[k];
                const Pt3& b = poly[(k + 1) % poly.size()];
                long left = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
                if (a.y <= p.y) {
                    if (b.y > p.y && left > 0) ++wn;
                } else if (b.y <= p.y && left < 0) {
                    --wn;
                }
            }
            if (wn != 0) inside.push_back({u, v});
        }
    return inside;
}

Loop loop_around(const std::vector<HexCoord>& cells) {
    std::set<HexCoord> in(cells.begin(), cells.end());
    std::vector<HexEdge> edges;
    for (const auto& h : in)
        for (const auto& d : hex_directions())
            if (!in.count(h + d)) edges.push_back(HexEdge::make(h, h + d));
    auto loops = cycles_of(edges);
    if (loops.size() != 1) throw NotSimplyConnected("cell set boundary has " + std::to_string(loops.size()) + " components");
    return loops[0];
}

Loop translate(const Loop& l, HexCoord d) {
    Loop r;
    for (const auto& v : l.vertices) r.vertices.push_back(make_vertex(v[0] + d, v[1] + d, v[2] + d));
    for (const auto& e : l.edges) r.edges.push_back(HexEdge::make(e.a + d, e.b + d));
    return r;
}

std::vector<HexEdge> translation_key(const Loop& l) {
    HexCoord m = l.vertices[0][0];
    for (const auto& v : l.vertices) m = std::min(m, v[0]);
    std::vector<HexEdge> es;
    for (const auto& e : l.edges) es.push_back(HexEdge::make(e.a - m, e.b - m));
    std::sort(es.begin(), es.end());
    return es;
}

Fiber fiber(const DoubleDimer& dd, const BoxShape& fine, int threads) {
    auto all = enumerate_boxed(fine);
    auto parts = parallel_chunks<std::vector<PlanePartition>>(all.size(), threads, [&](size_t b, size_t e) {
        std::vector<PlanePartition> hit;
        for (size_t k = b; k < e; ++k)
            if (squish_matching(matching_of(all[k], fine)) == dd) hit.push_back(all[k]);
        return hit;
    });
    Fiber f{dd, {}};
    for (auto& p : parts) f.members.insert(f.members.end(), p.begin(), p.end());
    return f;
}

}  // namespace sq
