#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "sq/planepart.hpp"

namespace sq {

// hexagon center; labels (i,j,k) map to (j-i, k-i)
struct HexCoord {
    int u = 0, v = 0;

    friend bool operator==(const HexCoord&, const HexCoord&) = default;
    friend auto operator<=>(const HexCoord&, const HexCoord&) = default;
    friend HexCoord operator+(HexCoord a, HexCoord b) { return {a.u + b.u, a.v + b.v}; }
    friend HexCoord operator-(HexCoord a, HexCoord b) { return {a.u - b.u, a.v - b.v}; }
    HexCoord operator*(int k) const { return {u * k, v * k}; }
    std::string str() const { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }
};

inline HexCoord hex_of_cell(int i, int j, int k) { return {j - i, k - i}; }

// six neighbor steps, counterclockwise in the drawing, starting at -30 degrees
const std::array<HexCoord, 6>& hex_directions();
int direction_index(HexCoord d);  // -1 if not a unit step
bool adjacent(HexCoord a, HexCoord b);

// I: +-(1,1), J: +-(1,0), K: +-(0,1) (horizontal)
enum class EdgeClass { I, J, K };
char class_name(EdgeClass c);

struct HexEdge {
    HexCoord a, b;  // a < b

    static HexEdge make(HexCoord x, HexCoord y);
    EdgeClass cls() const;
    friend bool operator==(const HexEdge&, const HexEdge&) = default;
    friend auto operator<=>(const HexEdge&, const HexEdge&) = default;
    std::string str() const { return "{" + a.str() + "," + b.str() + "}"; }
};

// sorted triple of mutually adjacent hexagons
using HexVertex = std::array<HexCoord, 3>;
HexVertex make_vertex(HexCoord a, HexCoord b, HexCoord c);
std::string vertex_str(const HexVertex& v);
std::pair<HexCoord, HexCoord> common_neighbors(const HexEdge& e);
std::pair<HexVertex, HexVertex> edge_vertices(const HexEdge& e);
std::array<HexEdge, 3> vertex_edges(const HexVertex& v);

// exact drawing coordinates scaled by 3: real point = (sqrt3 * X / 3, Y / 3)
struct Pt3 {
    long x, y;
};
Pt3 hex_point3(HexCoord h);
Pt3 vertex_point3(const HexVertex& v);

enum class FaceKind { TOP, XSIDE, YSIDE };
struct SurfaceFace {
    FaceKind kind;
    int i, j, level;
};

HexEdge face_to_edge(const SurfaceFace& f);
std::vector<SurfaceFace> surface_faces(const PlanePartition& p, const BoxShape& s);

using Matching = std::vector<HexEdge>;  // sorted, distinct

Matching matching_of(const PlanePartition& p, const BoxShape& s);
PlanePartition partition_of(const Matching& m, const BoxShape& s);
std::vector<HexVertex> region_vertices(const BoxShape& s);
std::vector<HexEdge> region_edges(const BoxShape& s);  // edges with both vertices in the region
bool is_perfect(const Matching& m, const std::vector<HexVertex>& vertices);
int horizontal_height(const HexEdge& e);
long height_sum(const Matching& m);  // sum of horizontal heights

}  // namespace sq
