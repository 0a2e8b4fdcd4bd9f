#include "toric/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

std::uint64_t rectangle_distance(const std::vector<int>& ks, std::uint32_t q) {
    if (ks.empty()) throw std::invalid_argument("rectangle_distance: no sides");
    std::uint64_t d = 1;
    for (int k : ks) {
        if (k < 0 || static_cast<std::uint32_t>(k) > q - 2)
            throw std::invalid_argument("rectangle_distance: side out of range");
        d *= q - 1 - static_cast<std::uint32_t>(k);
    }
    return d;
}

std::uint64_t simplex_distance(int m, int ell, std::uint32_t q) {
    if (m < 1) throw std::invalid_argument("simplex_distance: m must be >= 1");
    if (ell < 1 || static_cast<std::uint32_t>(ell) > q - 2)
        throw std::invalid_argument("simplex_distance: l out of range");
    std::uint64_t lower = 1;
    for (int i = 0; i < m - 1; ++i) lower *= q - 1;
    return lower * (q - 1) - static_cast<std::uint64_t>(ell) * lower;
}

std::uint64_t general_simplex_distance(const std::vector<int>& ells, std::uint32_t q) {
    if (ells.empty())
        throw std::invalid_argument("general_simplex_distance: no sides");
    int ell = 0;
    for (int l : ells) {
        if (l < 1 || static_cast<std::uint32_t>(l) > q - 2)
            throw std::invalid_argument("general_simplex_distance: side out of range");
        ell = std::max(ell, l);
    }
    return simplex_distance(static_cast<int>(ells.size()), ell, q);
}

}  // namespace toric
