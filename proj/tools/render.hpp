#pragma once

#include <string>
#include <vector>

#include "sq/squish.hpp"

namespace sqtool {

// SVG 1.1, fixed-precision coordinates so identical input gives identical bytes
std::string render_matching(const sq::Matching& m, const std::vector<sq::HexEdge>& region);
std::string render_double_dimer(const sq::DoubleDimer& dd);
std::string render_loop(const sq::Loop& l, const std::vector<sq::HexCoord>& cells);

}  // namespace sqtool
