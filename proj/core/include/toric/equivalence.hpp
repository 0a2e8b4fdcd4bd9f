#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/code.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// x -> M x + lambda with M integral, det(M) = +-1: the bijective affine
/// maps of the lattice Z^m.
struct AffineLatticeMap {
    std::vector<std::vector<long long>> M;
    std::vector<long long> lambda;

    static AffineLatticeMap identity(int m);

    ExponentVector apply(const ExponentVector& x) const;
    int dim() const { return static_cast<int>(lambda.size()); }
};

/// Determinant of a small integer matrix (exact, fraction-free).
long long int_det(const std::vector<std::vector<long long>>& m);

bool is_unimodular(const AffineLatticeMap& t);

/// Image polytope; lattice-point count is preserved.
LatticePolytope apply_map(const AffineLatticeMap& t, const LatticePolytope& p);

/// Searches for a unimodular affine map with T(P1) = P2 (equal lattice
/// point sets). Exhaustive over tuples of lattice points, so at the sizes
/// used here (m <= 3, #(P) <= 12) an empty result certifies inequivalence.
std::optional<AffineLatticeMap> find_lattice_equivalence(const LatticePolytope& p1,
                                                         const LatticePolytope& p2);

/// Column scaling + column permutation of length-n codewords:
/// out[j] = scale[j] * in[source[j]].
struct MonomialTransform {
    std::vector<GFElem> scale;
    std::vector<std::uint32_t> source;

    GFMatrix apply(const FiniteField& f, const GFMatrix& g) const;
};

/// The monomial transform induced by a unimodular affine map: column f is
/// scaled by alpha^{<lambda,f>} and drawn from column M^t f mod (q-1).
MonomialTransform monomial_transform_from_map(const AffineLatticeMap& t,
                                              const FiniteField& f, int m);

/// True iff applying X to C1's generator yields a generator of C2
/// (row-space equality via an exact rank test).
bool verify_monomial_equivalence(const ToricCode& c1, const ToricCode& c2,
                                 const MonomialTransform& x);

struct ClassificationResult {
    std::string representative;
    AffineLatticeMap map;  // maps the input onto the representative
};

/// Finds the catalog polygon lattice-equivalent to P (m = 2,
/// 2 <= #(P) <= 5). Throws if none matches.
ClassificationResult classify(const LatticePolytope& p);

}  // namespace toric
