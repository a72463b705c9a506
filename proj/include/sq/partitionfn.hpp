#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sq/connection.hpp"
#include "sq/series.hpp"

namespace sq {

IntPoly colored_gf_box(const BoxShape& s, int threads = 1);

// trace of the loop monodromy in (a,b,c), then a^2 -> r, b^2 -> s, c^2 -> t
IntPoly loop_trace(const Loop& l);
IntPoly loop_trace_rst(const Loop& l);

// Q^(height excess over the all-doubled empty configuration) times loop traces
IntPoly dd_weight(const DoubleDimer& dd, const BoxShape& coarse);

struct FiberReport {
    DoubleDimer target;
    int loops = 0;
    long pairs = 0;  // ordered coarse matching pairs overlaying to the target
    long size = 0;   // fine partitions in the fiber
    IntPoly lhs, rhs;
    bool equal = false;
};

struct MeasureReport {
    BoxShape fine;
    std::vector<FiberReport> fibers;
    long total = 0;           // sum of fiber sizes
    bool all_equal = false;
    bool global_equal = false;
    bool pair_counts_ok = false;  // every target hit by exactly 2^loops ordered pairs
    bool fibers_within_targets = false;
    std::string calibration = "1";
    IntPoly gf;  // colored GF of the fine box
};

MeasureReport measure_check(const BoxShape& fine, int threads = 1);

// single monomial m with a == m * b, if any
std::optional<IntPoly> fit_monomial(const IntPoly& a, const IntPoly& b);

// Z_Q with Q = qrst, over (q,r,s,t)
IntPoly zq_series(const SeriesBudget& budget);
IntPoly colored_volume_sum(int max_volume);  // sum of colored weights with volume <= n
// set r, s, t to sign * q^power (power 0 gives a constant); result is a poly in q
IntPoly specialize_rst(const IntPoly& p, int sign, int power);

struct EdgeProbabilityReport {
    HexEdge coarse, fine1, fine2;
    Rational single;        // coarse box, edge present
    Rational doubled;       // fine box, both preimages present
    Rational fine1_single, fine2_single;
    Rational product;       // fine1_single * fine2_single
};
Rational single_edge_probability(const BoxShape& s, const HexEdge& e);
EdgeProbabilityReport edge_probabilities(const BoxShape& fine, const HexEdge& coarse);
// every coarse edge of fine.half(), one enumeration pass per box
std::vector<EdgeProbabilityReport> all_edge_probabilities(const BoxShape& fine);

}  // namespace sq
