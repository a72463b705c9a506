#include "sq/honeycomb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sq {

const std::array<HexCoord, 6>& hex_directions() {
    static const std::array<HexCoord, 6> d{{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};
    return d;
}

int direction_index(HexCoord d) {
    const auto& ds = hex_directions();
    for (int k = 0; k < 6; ++k)
        if (ds[k] == d) return k;
    return -1;
}

bool adjacent(HexCoord a, HexCoord b) { return direction_index(b - a) >= 0; }

char class_name(EdgeClass c) {
    switch (c) {
        case EdgeClass::I: return 'I';
        case EdgeClass::J: return 'J';
        case EdgeClass::K: return 'K';
    }
    return '?';
}

HexEdge HexEdge::make(HexCoord x, HexCoord y) {
    if (!adjacent(x, y)) throw NotAMatching("hexagons " + x.str() + " and " + y.str() + " are not adjacent");
    return x < y ? HexEdge{x, y} : HexEdge{y, x};
}

EdgeClass HexEdge::cls() const {
    HexCoord d = b - a;
    if (d.u != 0 && d.v != 0) return EdgeClass::I;
    if (d.v == 0) return EdgeClass::J;
    return EdgeClass::K;
}

HexVertex make_vertex(HexCoord a, HexCoord b, HexCoord c) {
    HexVertex v{a, b, c};
    std::sort(v.begin(), v.end());
    return v;
}

std::string vertex_str(const HexVertex& v) { return "[" + v[0].str() + "," + v[1].str() + "," + v[2].str() + "]"; }

std::pair<HexCoord, HexCoord> common_neighbors(const HexEdge& e) {
    int k = direction_index(e.b - e.a);
    const auto& ds = hex_directions();
    return {e.a + ds[(k + 1) % 6], e.a + ds[(k + 5) % 6]};
}

std::pair<HexVertex, HexVertex> edge_vertices(const HexEdge& e) {
    auto [c1, c2] = common_neighbors(e);
    HexVertex v1 = make_vertex(e.a, e.b, c1), v2 = make_vertex(e.a, e.b, c2);
    if (v2 < v1) std::swap(v1, v2);
    return {v1, v2};
}

std::array<HexEdge, 3> vertex_edges(const HexVertex& v) {
    return {HexEdge::make(v[0], v[1]), HexEdge::make(v[0], v[2]), HexEdge::make(v[1], v[2])};
}

Pt3 hex_point3(HexCoord h) { return {3L * h.u, 3L * (2L * h.v - h.u)}; }

Pt3 vertex_point3(const HexVertex& v) {
    Pt3 p{0, 0};
    for (const auto& h : v) {
        p.x += h.u;
        p.y += 2L * h.v - h.u;
    }
    return p;
}

HexEdge face_to_edge(const SurfaceFace& f) {
    int u = f.j - f.i, v = f.level - f.i;
    switch (f.kind) {
        case FaceKind::TOP: return HexEdge::make({u, v}, {u, v + 1});
        case FaceKind::XSIDE: return HexEdge::make({u, v}, {u - 1, v - 1});
        case FaceKind::YSIDE: return HexEdge::make({u, v}, {u + 1, v});
    }
    throw InternalInvariant("bad face kind");
}

std::vector<SurfaceFace> surface_faces(const PlanePartition& p, const BoxShape& s) {
    if (!p.fits(s)) throw DoesNotFit("partition " + p.str() + " does not fit box " + s.str());
    std::vector<SurfaceFace> out;
    out.reserve(static_cast<size_t>(s.x) * s.y + static_cast<size_t>(s.y) * s.z + static_cast<size_t>(s.x) * s.z);
    auto pi = [&](int i, int j) {
        if (i == 0 || j == 0) return s.z;
        return p.at(i, j);  // zero beyond x or y
    };
    for (int i = 1; i <= s.x; ++i)
        for (int j = 1; j <= s.y; ++j) out.push_back({FaceKind::TOP, i, j, pi(i, j)});
    for (int i = 0; i <= s.x; ++i)
        for (int j = 1; j <= s.y; ++j) {
            int hi = pi(i, j), lo = (i + 1 > s.x) ? 0 : pi(i + 1, j);
            for (int l = lo + 1; l <= hi; ++l) out.push_back({FaceKind::XSIDE, i, j, l});
        }
    for (int i = 1; i <= s.x; ++i)
        for (int j = 0; j <= s.y; ++j) {
            int hi = pi(i, j), lo = (j + 1 > s.y) ? 0 : pi(i, j + 1);
            for (int l = lo + 1; l <= hi; ++l) out.push_back({FaceKind::YSIDE, i, j, l});
        }
    return out;
}

Matching matching_of(const PlanePartition& p, const BoxShape& s) {
    Matching m;
    for (const auto& f : surface_faces(p, s)) m.push_back(face_to_edge(f));
    std::sort(m.begin(), m.end());
    if (std::adjacent_find(m.begin(), m.end()) != m.end()) throw InternalInvariant("repeated edge in matching");
    return m;
}

PlanePartition partition_of(const Matching& m, const BoxShape& s) {
    std::map<int, std::vector<int>> cols;  // u -> lower v of horizontal edges
    for (const auto& e : m) {
        if (!adjacent(e.a, e.b)) throw NotAMatching("non-adjacent edge");
        if (e.cls() == EdgeClass::K) cols[e.a.u].push_back(std::min(e.a.v, e.b.v));
    }
    std::vector<int> g(static_cast<size_t>(s.x) * s.y, 0);
    size_t used = 0;
    for (int u = 1 - s.x; u <= s.y - 1; ++u) {
        auto it = cols.find(u);
        std::vector<int> vs = it == cols.end() ? std::vector<int>{} : it->second;
        std::sort(vs.rbegin(), vs.rend());
        std::vector<std::pair<int, int>> cells;
        for (int i = 1; i <= s.x; ++i)
            if (i + u >= 1 && i + u <= s.y) cells.push_back({i, i + u});
        if (vs.size() != cells.size()) throw NotAMatching("column " + std::to_string(u) + " has wrong number of horizontal edges");
        for (size_t k = 0; k < cells.size(); ++k) {
            auto [i, j] = cells[k];
            int h = vs[k] + i;
            if (h < 0 || h > s.z) throw NotAMatching("horizontal edge outside the box");
            g[(i - 1) * s.y + (j - 1)] = h;
        }
        used += vs.size();
    }
    size_t horizontal = 0;
    for (const auto& [u, vs] : cols) horizontal += vs.size();
    if (used != horizontal) throw NotAMatching("horizontal edge outside the box");
    PlanePartition p;
    try {
        p = PlanePartition::from_grid(s.x, s.y, g.data());
    } catch (const InvalidPartition& e) {
        throw NotAMatching(std::string("heights do not form a plane partition: ") + e.what());
    }
    Matching back = matching_of(p, s);
    Matching sorted = m;
    std::sort(sorted.begin(), sorted.end());
    if (back != sorted) throw NotAMatching("edge set is not a tiling of the region");
    return p;
}

std::vector<HexVertex> region_vertices(const BoxShape& s) {
    std::set<HexVertex> vs;
    for (const auto& e : matching_of(PlanePartition(), s)) {
        auto [v1, v2] = edge_vertices(e);
        vs.insert(v1);
        vs.insert(v2);
    }
    return {vs.begin(), vs.end()};
}

std::vector<HexEdge> region_edges(const BoxShape& s) {
    auto vs = region_vertices(s);
    std::set<HexEdge> es;
    for (const auto& v : vs)
        for (const auto& e : vertex_edges(v)) {
            auto [v1, v2] = edge_vertices(e);
            if (std::binary_search(vs.begin(), vs.end(), v1) && std::binary_search(vs.begin(), vs.end(), v2))
                es.insert(e);
        }
    return {es.begin(), es.end()};
}

bool is_perfect(const Matching& m, const std::vector<HexVertex>& vertices) {
    std::map<HexVertex, int> cover;
    for (const auto& e : m) {
        auto [v1, v2] = edge_vertices(e);
        ++cover[v1];
        ++cover[v2];
    }
    if (cover.size() != vertices.size()) return false;
    for (const auto& v : vertices) {
        auto it = cover.find(v);
        if (it == cover.end() || it->second != 1) return false;
    }
    return true;
}

int horizontal_height(const HexEdge& e) {
    if (e.cls() != EdgeClass::K) throw NotHorizontal("edge " + e.str() + " is not horizontal");
    return std::min(e.a.v, e.b.v);
}

long height_sum(const Matching& m) {
    long h = 0;
    for (const auto& e : m)
        if (e.cls() == EdgeClass::K) h += horizontal_height(e);
    return h;
}

}  // namespace sq
