#include "toric/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toric {

namespace {

// Forward elimination; returns (rank, det-of-processed-square-part).
// For rank the matrix may be rectangular; det is meaningful only when
// the caller checks squareness.
std::pair<std::size_t, GFElem> eliminate(const FiniteField& f, GFMatrix& m) {
    std::size_t rank = 0;
    GFElem det = 1;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) {
            det = 0;
            continue;
        }
        if (pivot != rank) {
            for (std::size_t c = col; c < m.cols; ++c)
                std::swap(m.at(pivot, c), m.at(rank, c));
            det = f.neg(det);
        }
        GFElem p = m.at(rank, col);
        det = f.mul(det, p);
        GFElem pinv = f.inv(p);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            GFElem factor = f.mul(m.at(r, col), pinv);
            if (factor == 0) continue;
            m.at(r, col) = 0;
            for (std::size_t c = col + 1; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
        }
        ++rank;
    }
    if (rank < m.rows) det = 0;
    return {rank, det};
}

}  // namespace

std::size_t gf_rank(const FiniteField& f, GFMatrix m) {
    return eliminate(f, m).first;
}

GFElem gf_det(const FiniteField& f, GFMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("gf_det: matrix not square");
    if (m.rows == 0) return 1;
    return eliminate(f, m).second;
}

GFMatrix gf_mul(const FiniteField& f, const GFMatrix& a, const GFMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("gf_mul: shape mismatch");
    GFMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            GFElem v = a.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(v, b.at(k, j)));
        }
    return c;
}

GFMatrix gf_vstack(const GFMatrix& top, const GFMatrix& bottom) {
    if (top.cols != bottom.cols)
        throw std::invalid_argument("gf_vstack: column mismatch");
    GFMatrix m(top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), m.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), m.a.begin() + top.a.size());
    return m;
}

}  // namespace toric
