#include "toric/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace toric {

namespace {

constexpr int kMaxCoord = 1'000'000;          // keeps all int64 products exact
constexpr std::uint64_t kMaxScan = 1u << 24;  // bounding-box candidate cap

long long cross(const ExponentVector& o, const ExponentVector& a,
                const ExponentVector& b) {
    return static_cast<long long>(a[0] - o[0]) * (b[1] - o[1]) -
           static_cast<long long>(a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone chain; returns CCW hull without collinear points on edges.
// Degenerate inputs give 1 (single point) or 2 (segment endpoints) vertices.
std::vector<ExponentVector> hull2d(std::vector<ExponentVector> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<ExponentVector> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 && h[0] == h[1]) h.resize(1);
    return h;
}

template <typename Q>
Q q_cross(const ExponentVector& a, const ExponentVector& b, const Q& px, const Q& py) {
    // cross(b - a, x - a) for rational x
    return Q(b[0] - a[0]) * (py - Q(a[1])) - Q(b[1] - a[1]) * (px - Q(a[0]));
}

bool hull_contains(const std::vector<ExponentVector>& hull, const mpq_class& x,
                   const mpq_class& y) {
    if (hull.empty()) return false;
    if (hull.size() == 1) return x == hull[0][0] && y == hull[0][1];
    if (hull.size() == 2) {
        const auto& a = hull[0];
        const auto& b = hull[1];
        if (q_cross(a, b, x, y) != 0) return false;
        mpq_class dot = mpq_class(b[0] - a[0]) * (x - mpq_class(a[0])) +
                        mpq_class(b[1] - a[1]) * (y - mpq_class(a[1]));
        mpq_class len2 = mpq_class(b[0] - a[0]) * (b[0] - a[0]) +
                         mpq_class(b[1] - a[1]) * (b[1] - a[1]);
        return dot >= 0 && dot <= len2;
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        if (q_cross(a, b, x, y) < 0) return false;
    }
    return true;
}

// Exact phase-1 simplex (Bland's rule): is x in conv(vertices)?
// Feasibility of { lambda >= 0, sum lambda_i v_i = x, sum lambda_i = 1 }.
bool lp_in_hull(const std::vector<ExponentVector>& verts,
                const std::vector<mpq_class>& x) {
    const std::size_t m = x.size() + 1;   // equations incl. sum-to-one
    const std::size_t nv = verts.size();
    const std::size_t total = nv + m;     // original + artificial columns

    std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(total + 1, 0));
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = 0; j < nv; ++j) t[i][j] = verts[j][i];
        t[i][total] = x[i];
    }
    for (std::size_t j = 0; j < nv; ++j) t[m - 1][j] = 1;
    t[m - 1][total] = 1;

    for (std::size_t i = 0; i < m; ++i) {
        if (t[i][total] < 0)
            for (auto& v : t[i]) v = -v;
        t[i][nv + i] = 1;
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = nv + i;

    auto reduced_cost = [&](std::size_t j) {
        // cost 1 on artificials, 0 otherwise
        mpq_class rc = j >= nv ? 1 : 0;
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= nv) rc -= t[i][j];
        return rc;
    };

    for (;;) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j) {
            bool basic = false;
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i] == j) basic = true;
            if (basic) continue;
            if (reduced_cost(j) < 0) {
                enter = j;
                break;  // Bland: smallest index
            }
        }
        if (enter == total) break;

        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            mpq_class ratio = t[i][total] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded; cannot happen in phase 1

        mpq_class piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            mpq_class f = t[i][enter];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    mpq_class objective = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= nv) objective += t[i][total];
    return objective == 0;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) {
    long long sa = std::accumulate(a.begin(), a.end(), 0ll);
    long long sb = std::accumulate(b.begin(), b.end(), 0ll);
    if (sa != sb) return sa < sb;
    return a < b;
}

bool LatticePolytope::contains(const ExponentVector& x) const {
    std::vector<mpq_class> q(x.begin(), x.end());
    return contains(q);
}

bool LatticePolytope::contains(const std::vector<mpq_class>& x) const {
    if (static_cast<int>(x.size()) != m_)
        throw std::invalid_argument("LatticePolytope: dimension mismatch");
    if (m_ == 1) {
        mpq_class lo = vertices_[0][0], hi = vertices_[0][0];
        for (const auto& v : vertices_) {
            lo = std::min(lo, mpq_class(v[0]));
            hi = std::max(hi, mpq_class(v[0]));
        }
        return x[0] >= lo && x[0] <= hi;
    }
    if (m_ == 2) return hull_contains(hull_, x[0], x[1]);
    return lp_in_hull(vertices_, x);
}

LatticePolytope LatticePolytope::from_vertices(int m,
                                               std::vector<ExponentVector> vertices) {
    if (m < 1) throw std::invalid_argument("LatticePolytope: dimension must be >= 1");
    if (vertices.empty())
        throw std::invalid_argument("LatticePolytope: empty vertex list");
    for (const auto& v : vertices) {
        if (static_cast<int>(v.size()) != m)
            throw std::invalid_argument("LatticePolytope: vertex dimension mismatch");
        for (int c : v)
            if (c < -kMaxCoord || c > kMaxCoord)
                throw std::invalid_argument("LatticePolytope: coordinate too large");
    }

    LatticePolytope p;
    p.m_ = m;
    p.vertices_ = std::move(vertices);
    if (m == 2) p.hull_ = hull2d(p.vertices_);

    ExponentVector lo = p.vertices_[0], hi = p.vertices_[0];
    for (const auto& v : p.vertices_)
        for (int i = 0; i < m; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    std::uint64_t cells = 1;
    for (int i = 0; i < m; ++i) {
        cells *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
        if (cells > kMaxScan)
            throw std::invalid_argument("LatticePolytope: bounding box too large to scan");
    }

    ExponentVector cur = lo;
    for (;;) {
        if (p.contains(cur)) p.points_.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[i] == hi[i]) {
            cur[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    std::sort(p.points_.begin(), p.points_.end(), graded_lex_less);
    return p;
}

LatticePolytope LatticePolytope::from_enumerated(int m,
                                                 std::vector<ExponentVector> vertices,
                                                 std::vector<ExponentVector> points) {
    LatticePolytope p;
    p.m_ = m;
    p.vertices_ = std::move(vertices);
    p.points_ = std::move(points);
    std::sort(p.points_.begin(), p.points_.end(), graded_lex_less);
    if (m == 2) p.hull_ = hull2d(p.vertices_);
    return p;
}

LatticePolytope LatticePolytope::rectangle(const std::vector<int>& ks) {
    int m = static_cast<int>(ks.size());
    if (m < 1) throw std::invalid_argument("rectangle: no side lengths");
    for (int k : ks)
        if (k < 0 || k > kMaxCoord)
            throw std::invalid_argument("rectangle: side out of range");

    std::vector<ExponentVector> verts;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        ExponentVector v(m, 0);
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) v[i] = ks[i];
        verts.push_back(std::move(v));
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::vector<ExponentVector> pts;
    std::uint64_t cells = 1;
    for (int k : ks) {
        cells *= static_cast<std::uint64_t>(k) + 1;
        if (cells > kMaxScan) throw std::invalid_argument("rectangle: too many points");
    }
    ExponentVector cur(m, 0);
    for (;;) {
        pts.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[i] == ks[i]) {
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    return from_enumerated(m, std::move(verts), std::move(pts));
}

LatticePolytope LatticePolytope::simplex(int m, int ell) {
    if (m < 1 || ell < 0) throw std::invalid_argument("simplex: need m >= 1, l >= 0");
    std::vector<ExponentVector> verts(1, ExponentVector(m, 0));
    for (int i = 0; i < m; ++i) {
        ExponentVector v(m, 0);
        v[i] = ell;
        verts.push_back(std::move(v));
    }
    // all nonnegative vectors of total degree <= ell
    std::vector<ExponentVector> pts;
    ExponentVector cur(m, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == m) {
            pts.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
        cur[i] = 0;
    };
    rec(0, ell);
    return from_enumerated(m, std::move(verts), std::move(pts));
}

LatticePolytope LatticePolytope::general_simplex(const std::vector<int>& ells) {
    int m = static_cast<int>(ells.size());
    if (m < 1) throw std::invalid_argument("general_simplex: no side lengths");
    for (int l : ells)
        if (l < 1) throw std::invalid_argument("general_simplex: sides must be >= 1");

    std::vector<ExponentVector> verts(1, ExponentVector(m, 0));
    for (int i = 0; i < m; ++i) {
        ExponentVector v(m, 0);
        v[i] = ells[i];
        verts.push_back(std::move(v));
    }
    long long lcm = 1;
    for (int l : ells) lcm = std::lcm(lcm, static_cast<long long>(l));

    std::vector<ExponentVector> pts;
    ExponentVector cur(m, 0);
    // membership: sum x_i / l_i <= 1, tested as sum x_i * (lcm / l_i) <= lcm
    std::function<void(int, long long)> rec = [&](int i, long long used) {
        if (i == m) {
            pts.push_back(cur);
            return;
        }
        long long w = lcm / ells[i];
        for (int v = 0; v <= ells[i] && used + w * v <= lcm; ++v) {
            cur[i] = v;
            rec(i + 1, used + w * v);
        }
        cur[i] = 0;
    };
    rec(0, 0);
    return from_enumerated(m, std::move(verts), std::move(pts));
}

LatticePolytope LatticePolytope::translate(const ExponentVector& v) const {
    if (static_cast<int>(v.size()) != m_)
        throw std::invalid_argument("translate: dimension mismatch");
    auto shift = [&](std::vector<ExponentVector> src) {
        for (auto& e : src)
            for (int i = 0; i < m_; ++i) e[i] += v[i];
        return src;
    };
    return from_enumerated(m_, shift(vertices_), shift(points_));
}

bool LatticePolytope::fits_in_box(std::uint32_t q, bool strict) const {
    for (const auto& e : points_)
        for (int c : e)
            if (c < 0 || static_cast<std::uint32_t>(c) > q - 2) return false;
    if (strict) {
        // proper containment: P must not equal the whole box
        unsigned __int128 box = 1;
        for (int i = 0; i < m_; ++i) {
            box *= q - 1;
            if (box > count()) return true;
        }
        return static_cast<unsigned __int128>(count()) < box;
    }
    return true;
}

std::size_t LatticePolytope::boundary_count() const {
    if (m_ != 2) throw std::invalid_argument("boundary_count: m must be 2");
    if (hull_.size() <= 2) return count();
    long long b = 0;
    for (std::size_t i = 0; i < hull_.size(); ++i) {
        const auto& a = hull_[i];
        const auto& c = hull_[(i + 1) % hull_.size()];
        b += gcd_ll(std::llabs(c[0] - a[0]), std::llabs(c[1] - a[1]));
    }
    return static_cast<std::size_t>(b);
}

mpq_class LatticePolytope::area() const {
    if (m_ != 2) throw std::invalid_argument("area: m must be 2");
    if (hull_.size() <= 2) return 0;
    long long twice = 0;
    for (std::size_t i = 0; i < hull_.size(); ++i) {
        const auto& a = hull_[i];
        const auto& b = hull_[(i + 1) % hull_.size()];
        twice += static_cast<long long>(a[0]) * b[1] -
                 static_cast<long long>(a[1]) * b[0];
    }
    mpq_class r(mpz_class(static_cast<long>(std::llabs(twice))), mpz_class(2));
    r.canonicalize();
    return r;
}

}  // namespace toric
