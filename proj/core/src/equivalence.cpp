#include "toric/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "toric/catalog.hpp"

namespace toric {

namespace {

using IntMat = std::vector<std::vector<long long>>;
using IntVec = std::vector<long long>;

IntMat identity_mat(int m) {
    IntMat id(m, IntVec(m, 0));
    for (int i = 0; i < m; ++i) id[i][i] = 1;
    return id;
}

IntVec mat_vec(const IntMat& m, const IntVec& x) {
    IntVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r[i] += m[i][j] * x[j];
    return r;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    IntMat c(a.size(), IntVec(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Adjugate-based inverse of a unimodular matrix (integer entries).
IntMat unimodular_inverse(const IntMat& m) {
    const int n = static_cast<int>(m.size());
    long long det = int_det(m);
    IntMat inv(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat minor;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                IntVec row;
                for (int c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            long long cof = ((i + j) % 2 == 0 ? 1 : -1) * int_det(minor);
            inv[i][j] = det * cof;  // det = +-1
        }
    return inv;
}

std::vector<IntVec> to_int_vecs(const std::vector<ExponentVector>& pts) {
    std::vector<IntVec> r;
    r.reserve(pts.size());
    for (const auto& p : pts) r.emplace_back(p.begin(), p.end());
    return r;
}

// Rank of an integer matrix over Q (fraction-free elimination).
int int_rank(IntMat m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            long long g = std::gcd(std::abs(m[r][c]), std::abs(m[rank][c]));
            long long fr = m[rank][c] / g, fp = m[r][c] / g;
            for (int cc = 0; cc < cols; ++cc)
                m[r][cc] = m[r][cc] * fr - m[rank][cc] * fp;
        }
        ++rank;
    }
    return rank;
}

// Unimodular U with (U * B) having nonzero rows only among the first
// `rank` rows; gcd-based row elimination on the columns of B.
// B is m x t (columns are difference vectors).
std::pair<IntMat, int> row_reduce_unimodular(IntMat b, int m) {
    IntMat u = identity_mat(m);
    if (b.empty() || b[0].empty()) return {u, 0};
    const int cols = static_cast<int>(b[0].size());
    int row = 0;
    for (int c = 0; c < cols && row < m; ++c) {
        // clear column c below `row` by gcd steps
        for (;;) {
            int nz = -1;
            for (int r = row + 1; r < m; ++r)
                if (b[r][c] != 0) {
                    nz = r;
                    break;
                }
            if (nz < 0) break;
            if (b[row][c] == 0 ||
                (b[nz][c] != 0 && std::abs(b[nz][c]) < std::abs(b[row][c]))) {
                std::swap(b[row], b[nz]);
                std::swap(u[row], u[nz]);
                continue;
            }
            long long quot = b[nz][c] / b[row][c];
            for (int cc = 0; cc < cols; ++cc) b[nz][cc] -= quot * b[row][cc];
            for (int cc = 0; cc < m; ++cc) u[nz][cc] -= quot * u[row][cc];
        }
        if (b[row][c] != 0) ++row;
    }
    return {u, row};
}

// ---- full-rank search ------------------------------------------------

// First affinely independent (r+1)-tuple of pts, in order.
std::vector<int> first_affine_basis(const std::vector<IntVec>& pts, int r) {
    std::vector<int> idx{0};
    IntMat diffs;
    for (std::size_t i = 1; i < pts.size() && static_cast<int>(idx.size()) <= r; ++i) {
        IntVec d(pts[i].size());
        for (std::size_t t = 0; t < d.size(); ++t) d[t] = pts[i][t] - pts[0][t];
        diffs.push_back(d);
        if (int_rank(diffs) == static_cast<int>(diffs.size()))
            idx.push_back(static_cast<int>(i));
        else
            diffs.pop_back();
    }
    return idx;
}

// Solve M * U = W for integral M given U invertible over Q:
// M = W * adj(U) / det(U); returns nullopt unless exactly integral.
std::optional<IntMat> solve_integral(const IntMat& u_cols, const IntMat& w_cols,
                                     int m) {
    long long det = int_det(u_cols);
    if (det == 0) return std::nullopt;
    // adjugate of u
    IntMat adj(m, IntVec(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            IntMat minor;
            for (int r = 0; r < m; ++r) {
                if (r == j) continue;
                IntVec row;
                for (int c = 0; c < m; ++c)
                    if (c != i) row.push_back(u_cols[r][c]);
                minor.push_back(std::move(row));
            }
            adj[i][j] = ((i + j) % 2 == 0 ? 1 : -1) * int_det(minor);
        }
    IntMat num = mat_mul(w_cols, adj);
    for (auto& row : num)
        for (auto& v : row) {
            if (v % det != 0) return std::nullopt;
            v /= det;
        }
    return num;
}

bool same_point_sets(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
    std::set<IntVec> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    return sa == sb;
}

// Full-dimensional case: P's points affinely span R^m.
std::optional<std::pair<IntMat, IntVec>> search_full_rank(
    const std::vector<IntVec>& pts1, const std::vector<IntVec>& pts2, int m) {
    std::vector<int> base = first_affine_basis(pts1, m);
    if (static_cast<int>(base.size()) != m + 1) return std::nullopt;

    IntMat u_cols(m, IntVec(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            u_cols[i][j] = pts1[base[j + 1]][i] - pts1[base[0]][i];

    const std::size_t np = pts2.size();
    std::vector<int> pick(m + 1, 0);
    for (;;) {
        bool distinct = true;
        for (int i = 0; i <= m && distinct; ++i)
            for (int j = i + 1; j <= m && distinct; ++j)
                if (pick[i] == pick[j]) distinct = false;
        if (distinct) {
            IntMat w_cols(m, IntVec(m));
            for (int j = 0; j < m; ++j)
                for (int i = 0; i < m; ++i)
                    w_cols[i][j] = pts2[pick[j + 1]][i] - pts2[pick[0]][i];
            auto mm = solve_integral(u_cols, w_cols, m);
            if (mm && std::llabs(int_det(*mm)) == 1) {
                IntVec lambda = mat_vec(*mm, pts1[base[0]]);
                for (int i = 0; i < m; ++i) lambda[i] = pts2[pick[0]][i] - lambda[i];
                // verify on the full point sets
                std::vector<IntVec> image;
                image.reserve(pts1.size());
                for (const auto& p : pts1) {
                    IntVec y = mat_vec(*mm, p);
                    for (int i = 0; i < m; ++i) y[i] += lambda[i];
                    image.push_back(std::move(y));
                }
                if (same_point_sets(image, pts2)) return std::make_pair(*mm, lambda);
            }
        }
        int t = m;
        while (t >= 0 && pick[t] + 1 == static_cast<int>(np)) pick[t--] = 0;
        if (t < 0) break;
        ++pick[t];
    }
    return std::nullopt;
}

std::optional<std::pair<IntMat, IntVec>> search_any_rank(
    const std::vector<IntVec>& pts1, const std::vector<IntVec>& pts2, int m);

// Lower-dimensional case: reduce both point sets to coordinates on a
// saturated basis of their affine hulls and recurse in rank-r space.
std::optional<std::pair<IntMat, IntVec>> search_degenerate(
    const std::vector<IntVec>& pts1, const std::vector<IntVec>& pts2, int m, int r) {
    if (r == 0) {
        // single distinct point each (counts were checked upstream)
        IntVec lambda(m);
        for (int i = 0; i < m; ++i) lambda[i] = pts2[0][i] - pts1[0][i];
        return std::make_pair(identity_mat(m), lambda);
    }

    auto reduce = [m, r](const std::vector<IntVec>& pts)
        -> std::optional<std::pair<IntMat, std::vector<IntVec>>> {
        IntMat diffs(m, IntVec(pts.size() - 1, 0));
        for (std::size_t j = 1; j < pts.size(); ++j)
            for (int i = 0; i < m; ++i) diffs[i][j - 1] = pts[j][i] - pts[0][i];
        auto [u, rank] = row_reduce_unimodular(diffs, m);
        if (rank != r) return std::nullopt;
        std::vector<IntVec> coords;
        coords.reserve(pts.size());
        for (const auto& p : pts) {
            IntVec d(m);
            for (int i = 0; i < m; ++i) d[i] = p[i] - pts[0][i];
            IntVec full = mat_vec(u, d);
            for (int i = r; i < m; ++i)
                if (full[i] != 0) return std::nullopt;  // cannot happen
            coords.emplace_back(full.begin(), full.begin() + r);
        }
        return std::make_pair(u, coords);
    };

    auto red1 = reduce(pts1);
    auto red2 = reduce(pts2);
    if (!red1 || !red2) return std::nullopt;
    const IntMat& u1 = red1->first;
    const IntMat& u2 = red2->first;

    auto sub = search_any_rank(red1->second, red2->second, r);
    if (!sub) return std::nullopt;
    const IntMat& g = sub->first;
    const IntVec& gamma = sub->second;

    // lift: M = U2^{-1} diag(G, I) U1
    IntMat diag = identity_mat(m);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) diag[i][j] = g[i][j];
    IntMat u2inv = unimodular_inverse(u2);
    IntMat mm = mat_mul(u2inv, mat_mul(diag, u1));

    // lambda = p2[0] - M p1[0] + U2^{-1} [gamma; 0]
    IntVec pad(m, 0);
    for (int i = 0; i < r; ++i) pad[i] = gamma[i];
    IntVec shift = mat_vec(u2inv, pad);
    IntVec mp0 = mat_vec(mm, pts1[0]);
    IntVec lambda(m);
    for (int i = 0; i < m; ++i) lambda[i] = pts2[0][i] - mp0[i] + shift[i];

    // verify
    std::vector<IntVec> image;
    for (const auto& p : pts1) {
        IntVec y = mat_vec(mm, p);
        for (int i = 0; i < m; ++i) y[i] += lambda[i];
        image.push_back(std::move(y));
    }
    if (!same_point_sets(image, pts2)) return std::nullopt;
    return std::make_pair(mm, lambda);
}

std::optional<std::pair<IntMat, IntVec>> search_any_rank(
    const std::vector<IntVec>& pts1, const std::vector<IntVec>& pts2, int m) {
    IntMat d1, d2;
    for (std::size_t j = 1; j < pts1.size(); ++j) {
        IntVec d(m);
        for (int i = 0; i < m; ++i) d[i] = pts1[j][i] - pts1[0][i];
        d1.push_back(std::move(d));
    }
    for (std::size_t j = 1; j < pts2.size(); ++j) {
        IntVec d(m);
        for (int i = 0; i < m; ++i) d[i] = pts2[j][i] - pts2[0][i];
        d2.push_back(std::move(d));
    }
    int r1 = int_rank(d1), r2 = int_rank(d2);
    if (r1 != r2) return std::nullopt;
    if (r1 == m) return search_full_rank(pts1, pts2, m);
    return search_degenerate(pts1, pts2, m, r1);
}

// gcd over the coordinates of the difference of two points
long long diff_gcd(const IntVec& a, const IntVec& b) {
    long long g = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        g = std::gcd(g, std::abs(a[i] - b[i]));
    return g;
}

}  // namespace

AffineLatticeMap AffineLatticeMap::identity(int m) {
    return {identity_mat(m), IntVec(m, 0)};
}

ExponentVector AffineLatticeMap::apply(const ExponentVector& x) const {
    IntVec xi(x.begin(), x.end());
    IntVec y = mat_vec(M, xi);
    ExponentVector r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        r[i] = static_cast<int>(y[i] + lambda[i]);
    return r;
}

long long int_det(const std::vector<std::vector<long long>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    // Laplace expansion; n stays tiny here
    long long det = 0;
    for (int j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        IntMat minor;
        for (int r = 1; r < n; ++r) {
            IntVec row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        det += (j % 2 == 0 ? 1 : -1) * m[0][j] * int_det(minor);
    }
    return det;
}

bool is_unimodular(const AffineLatticeMap& t) {
    if (t.M.size() != t.lambda.size()) return false;
    for (const auto& row : t.M)
        if (row.size() != t.lambda.size()) return false;
    return std::llabs(int_det(t.M)) == 1;
}

LatticePolytope apply_map(const AffineLatticeMap& t, const LatticePolytope& p) {
    if (t.dim() != p.dim())
        throw std::invalid_argument("apply_map: dimension mismatch");
    if (!is_unimodular(t))
        throw std::invalid_argument("apply_map: map is not unimodular");
    std::vector<ExponentVector> verts, pts;
    for (const auto& v : p.vertices()) verts.push_back(t.apply(v));
    for (const auto& e : p.lattice_points()) pts.push_back(t.apply(e));
    return LatticePolytope::from_enumerated(p.dim(), std::move(verts), std::move(pts));
}

std::optional<AffineLatticeMap> find_lattice_equivalence(const LatticePolytope& p1,
                                                         const LatticePolytope& p2) {
    if (p1.dim() != p2.dim()) return std::nullopt;
    if (p1.count() != p2.count()) return std::nullopt;
    const int m = p1.dim();

    auto pts1 = to_int_vecs(p1.lattice_points());
    auto pts2 = to_int_vecs(p2.lattice_points());

    // cheap unimodular invariants
    {
        std::multiset<long long> g1, g2;
        for (std::size_t i = 0; i < pts1.size(); ++i)
            for (std::size_t j = i + 1; j < pts1.size(); ++j) {
                g1.insert(diff_gcd(pts1[i], pts1[j]));
                g2.insert(diff_gcd(pts2[i], pts2[j]));
            }
        if (g1 != g2) return std::nullopt;
    }
    if (m == 2) {
        if (p1.area() != p2.area()) return std::nullopt;
        if (p1.boundary_count() != p2.boundary_count()) return std::nullopt;
    }

    auto found = search_any_rank(pts1, pts2, m);
    if (!found) return std::nullopt;
    return AffineLatticeMap{found->first, found->second};
}

GFMatrix MonomialTransform::apply(const FiniteField& f, const GFMatrix& g) const {
    if (g.cols != scale.size() || g.cols != source.size())
        throw std::invalid_argument("MonomialTransform: length mismatch");
    GFMatrix out(g.rows, g.cols);
    for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j)
            out.at(i, j) = f.mul(scale[j], g.at(i, source[j]));
    return out;
}

MonomialTransform monomial_transform_from_map(const AffineLatticeMap& t,
                                              const FiniteField& f, int m) {
    if (t.dim() != m)
        throw std::invalid_argument("monomial_transform_from_map: dimension mismatch");
    if (!is_unimodular(t))
        throw std::invalid_argument("monomial_transform_from_map: map not unimodular");
    const std::uint32_t order = f.q() - 1;
    std::uint64_t n = 1;
    for (int i = 0; i < m; ++i) n *= order;

    MonomialTransform x;
    x.scale.resize(n);
    x.source.resize(n);
    std::vector<std::uint32_t> fv(m, 0);
    for (std::uint64_t j = 0; j < n; ++j) {
        long long lam_dot = 0;
        for (int i = 0; i < m; ++i)
            lam_dot += t.lambda[i] * static_cast<long long>(fv[i]);
        x.scale[j] = f.exp_pow(lam_dot);

        std::vector<std::uint32_t> mf(m);
        for (int i = 0; i < m; ++i) {
            long long v = 0;
            for (int r = 0; r < m; ++r)
                v += t.M[r][i] * static_cast<long long>(fv[r]);  // (M^t f)_i
            long long red = v % static_cast<long long>(order);
            if (red < 0) red += order;
            mf[i] = static_cast<std::uint32_t>(red);
        }
        x.source[j] = static_cast<std::uint32_t>(point_index(f, mf));

        int i = m - 1;
        while (i >= 0 && fv[i] == order - 1) fv[i--] = 0;
        if (i >= 0) ++fv[i];
    }
    return x;
}

bool verify_monomial_equivalence(const ToricCode& c1, const ToricCode& c2,
                                 const MonomialTransform& x) {
    if (c1.n() != c2.n() || c1.k() != c2.k() || !(c1.field() == c2.field()))
        throw std::invalid_argument("verify_monomial_equivalence: parameter mismatch");
    const FiniteField& f = c1.field();
    GFMatrix transformed = x.apply(f, c1.generator());
    GFMatrix stacked = gf_vstack(transformed, c2.generator());
    return gf_rank(f, std::move(stacked)) == c2.k();
}

ClassificationResult classify(const LatticePolytope& p) {
    if (p.dim() != 2)
        throw std::invalid_argument("classify: only m = 2 is supported");
    const int k = static_cast<int>(p.count());
    if (k < 2 || k > 5)
        throw std::invalid_argument("classify: #(P) must be between 2 and 5");
    for (const auto& name : paper_polygon_names_with_k(k)) {
        auto rep = paper_polygon(name);
        if (auto t = find_lattice_equivalence(p, rep))
            return {name, std::move(*t)};
    }
    throw std::logic_error("classify: no representative matched (unexpected)");
}

}  // namespace toric
