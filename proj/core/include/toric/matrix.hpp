#pragma once

#include <cstddef>
#include <vector>

#include "toric/field.hpp"

namespace toric {

/// Dense row-major matrix over a finite field.
struct GFMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<GFElem> a;

    GFMatrix() = default;
    GFMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    GFElem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    GFElem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Rank by Gaussian elimination; works on a copy.
std::size_t gf_rank(const FiniteField& f, GFMatrix m);

/// Determinant of a square matrix by Gaussian elimination; works on a copy.
GFElem gf_det(const FiniteField& f, GFMatrix m);

/// C = A * B.
GFMatrix gf_mul(const FiniteField& f, const GFMatrix& a, const GFMatrix& b);

/// Matrix with the rows of `top` followed by the rows of `bottom`.
GFMatrix gf_vstack(const GFMatrix& top, const GFMatrix& bottom);

}  // namespace toric
