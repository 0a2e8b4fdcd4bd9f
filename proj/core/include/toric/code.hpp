#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "toric/field.hpp"
#include "toric/matrix.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// A point of (F_q*)^m together with its exponent vector f, so that the
/// point is (alpha^{f_1}, ..., alpha^{f_m}).
struct EvaluationPoint {
    std::vector<std::uint32_t> f;
    std::vector<GFElem> coords;
};

/// All (q-1)^m points of (F_q*)^m in lexicographic order of f
/// (last coordinate fastest); the first point is all-ones.
std::vector<EvaluationPoint> enumerate_points(const FiniteField& f, int m);

/// Lex rank of an exponent vector f in the enumeration above.
std::size_t point_index(const FiniteField& f, const std::vector<std::uint32_t>& fv);

/// The toric code of a polytope: monomials with exponents in P evaluated
/// at every point of (F_q*)^m. Rows of the generator matrix follow the
/// graded-lex order of P's lattice points; columns follow the lex order
/// of the evaluation points. Exponents are reduced mod q-1 at evaluation
/// time, so polytopes with negative coordinates are handled directly.
class ToricCode {
public:
    static ToricCode build(FieldPtr field, LatticePolytope p);

    const FiniteField& field() const { return *field_; }
    FieldPtr field_ptr() const { return field_; }
    const LatticePolytope& polytope() const { return poly_; }

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }

    const GFMatrix& generator() const { return gen_; }
    std::span<const GFElem> row(std::size_t i) const {
        return {gen_.a.data() + i * n_, n_};
    }

    /// Exponent vectors reduced into [0, q-2]^m, row order.
    const std::vector<std::vector<std::uint32_t>>& reduced_exponents() const {
        return reduced_;
    }

    std::vector<GFElem> encode(std::span<const GFElem> message) const;

    static std::size_t weight(std::span<const GFElem> word);

private:
    ToricCode() = default;

    FieldPtr field_;
    LatticePolytope poly_;
    std::vector<std::vector<std::uint32_t>> reduced_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    GFMatrix gen_;
};

}  // namespace toric
