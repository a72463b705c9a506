#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sq/honeycomb.hpp"

namespace sq {

bool is_even(HexCoord h);
std::optional<HexEdge> even_edge_image(const HexEdge& e);
std::pair<HexEdge, HexEdge> preimages(const HexEdge& coarse);

// edge -> multiplicity in {1,2}; every covered vertex has total multiplicity 2
class DoubleDimer {
public:
    using Entry = std::pair<HexEdge, int>;

    DoubleDimer() = default;
    explicit DoubleDimer(std::vector<Entry> entries);  // validates

    const std::vector<Entry>& entries() const { return e_; }
    int mult(const HexEdge& e) const;
    std::vector<HexVertex> covered_vertices() const;
    std::string str() const;

    friend bool operator==(const DoubleDimer&, const DoubleDimer&) = default;
    friend auto operator<=>(const DoubleDimer&, const DoubleDimer&) = default;

private:
    std::vector<Entry> e_;
};

DoubleDimer squish_matching(const Matching& m);
DoubleDimer overlay(const Matching& m1, const Matching& m2);

// vertices[k] -> vertices[k+1] along edges[k], cyclic
struct Loop {
    std::vector<HexVertex> vertices;
    std::vector<HexEdge> edges;

    size_t size() const { return edges.size(); }
    friend bool operator==(const Loop&, const Loop&) = default;
};

struct LoopDecomposition {
    std::vector<HexEdge> doubled;
    std::vector<Loop> loops;  // sorted by basepoint
};

long signed_area6(const std::vector<HexVertex>& cycle);  // sign of the drawn area
Loop make_loop(std::vector<HexVertex> cycle);  // orient ccw, rotate to least vertex
LoopDecomposition decompose(const DoubleDimer& dd);
DoubleDimer recompose(const LoopDecomposition& d);
std::vector<HexCoord> loop_interior(const Loop& l);
Loop loop_around(const std::vector<HexCoord>& cells);  // boundary of a simply connected cell set
Loop translate(const Loop& l, HexCoord d);
std::vector<HexEdge> translation_key(const Loop& l);  // edge set moved so its least hexagon is the origin

struct Fiber {
    DoubleDimer target;
    std::vector<PlanePartition> members;
};

Fiber fiber(const DoubleDimer& dd, const BoxShape& fine, int threads = 1);

}  // namespace sq
