#pragma once

#include <cstdint>
#include <vector>

namespace toric {

/// Closed-form minimum distance of the code of [0,k_1] x ... x [0,k_m]:
/// prod_i ((q-1) - k_i). Requires 0 <= k_i <= q-2.
std::uint64_t rectangle_distance(const std::vector<int>& ks, std::uint32_t q);

/// Closed-form minimum distance of the code of conv{0, l e_1, ..., l e_m}:
/// (q-1)^m - l (q-1)^{m-1}. Requires 1 <= l <= q-2.
std::uint64_t simplex_distance(int m, int ell, std::uint32_t q);

/// General simplex conv{0, l_1 e_1, ..., l_m e_m}: the simplex formula
/// with l = max_i l_i.
std::uint64_t general_simplex_distance(const std::vector<int>& ells, std::uint32_t q);

}  // namespace toric
