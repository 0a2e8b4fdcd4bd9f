#pragma once

#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// The classification representatives: the segment P2 plus the twelve
/// polygons yielding the distinct toric surface codes with k = 3, 4, 5.
/// Valid names: P2, P3_1, P3_2, P4_1..P4_4, P5_1..P5_6.
LatticePolytope paper_polygon(const std::string& name);

/// All valid names, in classification order.
const std::vector<std::string>& paper_polygon_names();

/// Names with exactly k lattice points (k in [2,5]), in classification order.
std::vector<std::string> paper_polygon_names_with_k(int k);

}  // namespace toric
