#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sq/connection.hpp"

namespace sq {

// a = b = c = primitive n-th root of unity, matrices over Z[zeta_lcm(4,n)]
int connection_order(int n);  // lcm(4,n); throws UnsupportedOrder
const Connection<Cyclotomic>& specialize_connection(int n);
Mat2<Cyclotomic> monodromy_at(const Loop& l, int n);
Mat2<Cyclotomic> scalar_at(int n, long s);  // s * Identity at order lcm(4,n)

struct CountReport {
    DoubleDimer target;
    std::vector<Loop> loops;
    int n = 1;
    BigInt trace_product;        // product of loop traces at n
    BigInt turn_product;         // same, through the turn words
    long fiber_size = 0;
    bool agree = false;
};

// fine box shape; every loop trace at n in {1,2} against the brute-force fiber
CountReport check_count(const DoubleDimer& dd, const BoxShape& fine, int n, int threads = 1);
// find a target of fine.half() whose only loop is a translate of l
std::optional<DoubleDimer> realize_single_loop(const Loop& l, const BoxShape& fine);
CountReport check_loop_count(const Loop& l, const BoxShape& fine, int n, int threads = 1);

bool check_n4(const Loop& l);
bool check_n8(const Loop& l);

struct Tile {
    std::string name;
    std::vector<HexCoord> cells;  // least cell at the origin
    bool stone() const { return name.rfind("stone", 0) == 0; }
};
const std::vector<Tile>& tile_catalog();
const Tile& tile_by_name(const std::string& name);

struct Placement {
    int tile = 0;  // index into tile_catalog()
    HexCoord offset;
    BigInt coeff;
};

struct TilingCertificate {
    std::vector<Placement> placements;
    int stone_parity = 0;
    int margin = 0;
    // placements summing to zero on every hexagon with an odd stone sum, found
    // in the window; adding it gives a tiling of the other parity. Empty when
    // the window has no such relation.
    std::vector<Placement> parity_flip;
    bool parity_fixed_in_window() const { return parity_flip.empty(); }
};
TilingCertificate flip_parity(const TilingCertificate& c);

// f on Z^2 / pZ^2 with f(tile) = 0 mod m for every translate and f(region) != 0 mod m;
// m = 0 means exact integers
struct TorusInvariant {
    int period = 1;
    BigInt modulus;
    std::vector<BigInt> values;  // index (u mod p) * p + (v mod p)
    BigInt region_value;
};

enum class TilingStatus { Found, None, Unknown };
std::string status_name(TilingStatus s);

struct TilingResult {
    TilingStatus status = TilingStatus::Unknown;
    std::optional<TilingCertificate> certificate;
    std::optional<TorusInvariant> invariant;
    int margin_tried = 0;
};

constexpr int kDefaultMargin = 3;
constexpr int kMaxMargin = 12;

std::vector<HexCoord> dilate(const std::vector<HexCoord>& region, int margin);
int hex_distance(HexCoord a, HexCoord b);
std::optional<TorusInvariant> torus_obstruction(const std::vector<HexCoord>& region, int max_period = 8);
// ordinary tiling (all coefficients +1) by depth-first search
std::optional<TilingCertificate> exact_tiling(const std::vector<HexCoord>& region, long node_budget = 100000);
std::optional<TilingCertificate> tiling_in_window(const std::vector<HexCoord>& region, int margin);
TilingResult signed_tiling(const std::vector<HexCoord>& region, int margin = kDefaultMargin);

// recomputed from scratch, no solver state
bool verify_certificate(const std::vector<HexCoord>& region, const TilingCertificate& c);
bool verify_invariant(const std::vector<HexCoord>& region, const TorusInvariant& inv);

enum class Classification { ConsistentZero, ConsistentTiled, Counterexample, UnknownWindow };
std::string classification_name(Classification c);

struct ConjectureVerdict {
    std::string id;  // interior cells after translation
    Loop loop;
    std::vector<HexCoord> interior;
    Mat2<Cyclotomic> monodromy3, monodromy6;
    TilingResult tiling;
    Classification classification = Classification::UnknownWindow;
    bool parity_adjusted = false;  // certificate was moved to the other parity to match the sign
};

ConjectureVerdict conjecture_verdict(const Loop& l, int margin = kDefaultMargin);
// distinct loops (up to translation) of all targets of the given fine boxes
std::vector<Loop> loops_from_boxes(const std::vector<BoxShape>& fine_boxes);
std::vector<ConjectureVerdict> conjecture_scan(const std::vector<BoxShape>& fine_boxes, int margin = kDefaultMargin,
                                               int threads = 1);

}  // namespace sq
