#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "toric/field.hpp"
#include "toric/vandermonde.hpp"

namespace toric {

enum class ConfigKind { Plain, Rectangular, Simplicial };

/// An ordered list of points in (F_q*)^m, optionally carrying the
/// structural certificate produced by a generator or extractor. The
/// certificate re-validates with the matching predicate.
struct PointConfiguration {
    int dim = 0;
    std::vector<FieldPoint> points;

    ConfigKind kind = ConfigKind::Plain;
    int param_k = 0;    // rectangular: k
    int param_ell = 0;  // rectangular/simplicial: order
    int hyperplane_coord = -1;        // simplicial: 1-based coordinate index
    std::vector<GFElem> layer_values; // line values a_1.. / hyperplane values
};

/// (l+1) distinct points on each of (k+1) distinct vertical lines
/// x = x_values[i]; y_sets[i] lists the y-coordinates on line i.
PointConfiguration make_rectangular_config(const FiniteField& f,
                                           const std::vector<GFElem>& x_values,
                                           const std::vector<std::vector<GFElem>>& y_sets);

/// Seeded random (k+1) x (l+1) configuration.
PointConfiguration make_random_rectangular_config(const FiniteField& f, int k, int ell,
                                                  std::mt19937_64& rng);

bool is_rectangular_config(const std::vector<FieldPoint>& s, int k, int ell);

/// Seeded random m-dimensional simplicial configuration of order l,
/// layered along coordinate m.
PointConfiguration make_simplicial_config(const FiniteField& f, int m, int ell,
                                          std::mt19937_64& rng);

/// Def-style check; the layering coordinate is searched over since the
/// definition only requires one to exist.
bool is_simplicial_config(const std::vector<FieldPoint>& s, int m, int ell);

/// Both sides of the determinant recurrence for det V(P_l(m); S):
/// lhs = det V(P_l(m); S),
/// rhs = prod_{p in S'} (p_m - a_{l+1}) * det V(P_{l-1}(m); S')
///       * det V(P_l(m-1); pi(S'')).
/// S must be simplicial of order l >= 1 with hyperplane coordinate m.
std::pair<GFElem, GFElem> simplicial_det_recurrence_sides(
    const FiniteField& f, int m, int ell, const std::vector<FieldPoint>& s);

/// Greedy extraction of a (k+1) x (l+1) configuration from T; guaranteed
/// to succeed when |T| >= (k+l)(q-1) - kl + 1. Lines are scanned by
/// increasing dlog of the x-value; points on a line by increasing dlog
/// of the y-value.
std::optional<PointConfiguration> extract_rectangular_config(
    const FiniteField& f, const std::vector<FieldPoint>& t, int k, int ell);

/// Recursive extraction of an m-dimensional order-l simplicial
/// configuration from T; guaranteed to succeed when
/// |T| >= l(q-1)^{m-1} + 1. Hyperplane values are scanned by increasing
/// dlog, with backtracking.
std::optional<PointConfiguration> extract_simplicial_config(
    const FiniteField& f, const std::vector<FieldPoint>& t, int m, int ell);

/// Re-checks a configuration's recorded certificate against the
/// structural predicates.
bool validate_certificate(const FiniteField& f, const PointConfiguration& c);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace toric
