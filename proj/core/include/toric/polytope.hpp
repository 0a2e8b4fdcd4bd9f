#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

/// Integer exponent vector in Z^m; coordinates may be negative
/// (Laurent polygons).
using ExponentVector = std::vector<int>;

/// Graded-lexicographic comparison: total degree first, then lex.
bool graded_lex_less(const ExponentVector& a, const ExponentVector& b);

/// Integral convex polytope in Z^m with its lattice points enumerated
/// in graded-lex order. Immutable after construction.
class LatticePolytope {
public:
    /// Convex hull of the given points; lattice points are enumerated by
    /// scanning the integer bounding box with an exact membership test.
    static LatticePolytope from_vertices(int m, std::vector<ExponentVector> vertices);

    /// Box polytope [0,k_1] x ... x [0,k_m].
    static LatticePolytope rectangle(const std::vector<int>& ks);

    /// conv{0, l*e_1, ..., l*e_m}: all exponent vectors with nonnegative
    /// coordinates of total degree <= l.
    static LatticePolytope simplex(int m, int ell);

    /// conv{0, l_1*e_1, ..., l_m*e_m}.
    static LatticePolytope general_simplex(const std::vector<int>& ells);

    /// Trusted constructor for images of lattice bijections: the caller
    /// guarantees points = conv(vertices) ∩ Z^m. Points are re-sorted
    /// into graded-lex order.
    static LatticePolytope from_enumerated(int m, std::vector<ExponentVector> vertices,
                                           std::vector<ExponentVector> points);

    int dim() const { return m_; }
    const std::vector<ExponentVector>& vertices() const { return vertices_; }
    const std::vector<ExponentVector>& lattice_points() const { return points_; }
    std::size_t count() const { return points_.size(); }

    /// Exact membership in conv(vertices).
    bool contains(const ExponentVector& x) const;
    bool contains(const std::vector<mpq_class>& x) const;

    LatticePolytope translate(const ExponentVector& v) const;

    /// True iff every lattice point lies in [0, q-2]^m. With
    /// `strict`, additionally requires P != [0,q-2]^m (proper containment).
    bool fits_in_box(std::uint32_t q, bool strict = false) const;

    /// Number of lattice points on the boundary (m = 2 only). For a
    /// degenerate polygon (segment or point) every point is boundary.
    std::size_t boundary_count() const;

    /// Area by the shoelace formula over the hull (m = 2 only);
    /// 0 for degenerate polygons.
    mpq_class area() const;

    /// Empty polytope; meaningful objects come from the named constructors.
    LatticePolytope() = default;

private:
    int m_ = 0;
    std::vector<ExponentVector> vertices_;
    std::vector<ExponentVector> points_;       // graded-lex order
    std::vector<ExponentVector> hull_;         // m == 2: CCW hull vertices
};

}  // namespace toric
