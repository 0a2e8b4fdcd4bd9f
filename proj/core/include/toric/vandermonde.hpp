#pragma once

#include <vector>

#include "toric/field.hpp"
#include "toric/matrix.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// A point of (F_q*)^m given by its coordinate values.
using FieldPoint = std::vector<GFElem>;

/// V(P; S): rows are P's lattice points in graded-lex order, columns the
/// points of S in their given order; entry (i,j) is the monomial x^{e(i)}
/// evaluated at S[j] (exponents reduced mod q-1). Requires |S| = #(P) and
/// all coordinates nonzero.
GFMatrix vandermonde_matrix(const FiniteField& f, const LatticePolytope& p,
                            const std::vector<FieldPoint>& s);

GFElem vandermonde_det(const FiniteField& f, const LatticePolytope& p,
                       const std::vector<FieldPoint>& s);

/// The block matrix M with block (i,j) = c_ij * B_j for A = (c_ij).
GFMatrix block_matrix_assemble(const FiniteField& f, const GFMatrix& a,
                               const std::vector<GFMatrix>& bs);

/// det(A)^b * det(B_1) * ... * det(B_a); equal to det(M) up to sign.
GFElem block_determinant_product(const FiniteField& f, const GFMatrix& a,
                                 const std::vector<GFMatrix>& bs);

}  // namespace toric
