#pragma once

#include <string>

#include <json.hpp>

#include "toric/polytope.hpp"

namespace toric {

/// Polytope file format: {"m": int, "vertices": [[int,...],...]}.
LatticePolytope polytope_from_json(const nlohmann::json& j);
LatticePolytope load_polytope(const std::string& path);

nlohmann::json polytope_to_json(const LatticePolytope& p, bool with_points = false);

void save_polytope(const LatticePolytope& p, const std::string& path);

}  // namespace toric
