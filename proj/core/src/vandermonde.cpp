#include "toric/vandermonde.hpp"

#include <stdexcept>

namespace toric {

GFMatrix vandermonde_matrix(const FiniteField& f, const LatticePolytope& p,
                            const std::vector<FieldPoint>& s) {
    const std::size_t k = p.count();
    if (s.size() != k)
        throw std::invalid_argument("vandermonde_matrix: |S| must equal #(P)");
    const int m = p.dim();
    const std::uint32_t order = f.q() - 1;

    std::vector<std::vector<std::uint32_t>> logs(k, std::vector<std::uint32_t>(m));
    for (std::size_t j = 0; j < k; ++j) {
        if (static_cast<int>(s[j].size()) != m)
            throw std::invalid_argument("vandermonde_matrix: point dimension mismatch");
        for (int t = 0; t < m; ++t) logs[j][t] = f.dlog(s[j][t]);
    }

    GFMatrix v(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& e = p.lattice_points()[i];
        std::vector<std::uint32_t> red(m);
        for (int t = 0; t < m; ++t) {
            long long r = e[t] % static_cast<long long>(order);
            if (r < 0) r += order;
            red[t] = static_cast<std::uint32_t>(r);
        }
        for (std::size_t j = 0; j < k; ++j) {
            std::uint64_t dot = 0;
            for (int t = 0; t < m; ++t)
                dot += static_cast<std::uint64_t>(red[t]) * logs[j][t];
            v.at(i, j) = f.exp_pow(static_cast<long long>(dot % order));
        }
    }
    return v;
}

GFElem vandermonde_det(const FiniteField& f, const LatticePolytope& p,
                       const std::vector<FieldPoint>& s) {
    return gf_det(f, vandermonde_matrix(f, p, s));
}

GFMatrix block_matrix_assemble(const FiniteField& f, const GFMatrix& a,
                               const std::vector<GFMatrix>& bs) {
    if (a.rows != a.cols) throw std::invalid_argument("block matrix: A not square");
    const std::size_t na = a.rows;
    if (bs.size() != na)
        throw std::invalid_argument("block matrix: need one B per column of A");
    if (na == 0) return GFMatrix(0, 0);
    const std::size_t nb = bs[0].rows;
    for (const auto& b : bs)
        if (b.rows != nb || b.cols != nb)
            throw std::invalid_argument("block matrix: B blocks must be square, same size");

    GFMatrix m(na * nb, na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            GFElem c = a.at(i, j);
            for (std::size_t r = 0; r < nb; ++r)
                for (std::size_t s2 = 0; s2 < nb; ++s2)
                    m.at(i * nb + r, j * nb + s2) = f.mul(c, bs[j].at(r, s2));
        }
    return m;
}

GFElem block_determinant_product(const FiniteField& f, const GFMatrix& a,
                                 const std::vector<GFMatrix>& bs) {
    if (a.rows != a.cols) throw std::invalid_argument("block matrix: A not square");
    if (bs.size() != a.rows)
        throw std::invalid_argument("block matrix: need one B per column of A");
    const std::size_t nb = bs.empty() ? 0 : bs[0].rows;
    GFElem det = gf_det(f, a);
    GFElem r = 1;
    for (std::size_t i = 0; i < nb; ++i) r = f.mul(r, det);  // det(A)^b
    for (const auto& b : bs) r = f.mul(r, gf_det(f, b));
    return r;
}

}  // namespace toric
