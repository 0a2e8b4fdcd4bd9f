#include "toric/configurations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

bool all_nonzero(const std::vector<FieldPoint>& pts) {
    for (const auto& p : pts)
        for (GFElem c : p)
            if (c == 0) return false;
    return true;
}

bool all_distinct(const std::vector<FieldPoint>& pts) {
    std::set<FieldPoint> s(pts.begin(), pts.end());
    return s.size() == pts.size();
}

// Distinct nonzero values drawn from the rng (uniform over dlogs).
std::vector<GFElem> draw_distinct(const FiniteField& f, std::size_t count,
                                  std::mt19937_64& rng) {
    if (count > f.q() - 1)
        throw std::invalid_argument("configuration: field too small");
    std::set<GFElem> seen;
    std::vector<GFElem> vals;
    while (vals.size() < count) {
        GFElem v = f.exp_pow(static_cast<long long>(rng() % (f.q() - 1)));
        if (seen.insert(v).second) vals.push_back(v);
    }
    return vals;
}

// Comparison by dlog keeps scan orders deterministic and field-intrinsic.
struct DlogLess {
    const FiniteField* f;
    bool operator()(GFElem a, GFElem b) const { return f->dlog(a) < f->dlog(b); }
    bool operator()(const FieldPoint& a, const FieldPoint& b) const {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == b[i]) continue;
            return f->dlog(a[i]) < f->dlog(b[i]);
        }
        return false;
    }
};

std::vector<FieldPoint> recursive_simplicial(const FiniteField& f, int m, int ell,
                                             std::mt19937_64& rng) {
    if (m == 1) {
        std::vector<FieldPoint> pts;
        for (GFElem v : draw_distinct(f, ell + 1, rng)) pts.push_back({v});
        return pts;
    }
    std::vector<GFElem> layers = draw_distinct(f, ell + 1, rng);
    std::vector<FieldPoint> pts;
    for (int j = 1; j <= ell + 1; ++j) {
        auto sub = recursive_simplicial(f, m - 1, j - 1, rng);
        for (auto& p : sub) {
            p.push_back(layers[j - 1]);
            pts.push_back(std::move(p));
        }
    }
    return pts;
}

bool simplicial_with_coord(const std::vector<FieldPoint>& s, int m, int ell, int coord);

// Checks conditions (1)-(2) of the recursive definition for some choice
// of the layering coordinate.
bool simplicial_any_coord(const std::vector<FieldPoint>& s, int m, int ell) {
    if (s.size() != binomial(m + ell, ell)) return false;
    if (m == 1) {
        std::set<GFElem> vals;
        for (const auto& p : s) vals.insert(p[0]);
        return vals.size() == s.size();
    }
    for (int coord = 1; coord <= m; ++coord)
        if (simplicial_with_coord(s, m, ell, coord)) return true;
    return false;
}

bool simplicial_with_coord(const std::vector<FieldPoint>& s, int m, int ell,
                           int coord) {
    std::map<GFElem, std::vector<FieldPoint>> groups;
    for (const auto& p : s) {
        FieldPoint proj;
        for (int t = 0; t < m; ++t)
            if (t != coord - 1) proj.push_back(p[t]);
        groups[p[coord - 1]].push_back(std::move(proj));
    }
    if (groups.size() != static_cast<std::size_t>(ell) + 1) return false;
    // layer sizes are strictly increasing in the order, so the match is forced
    std::vector<const std::vector<FieldPoint>*> by_size;
    for (const auto& [val, pts] : groups) by_size.push_back(&pts);
    std::sort(by_size.begin(), by_size.end(),
              [](auto* a, auto* b) { return a->size() < b->size(); });
    for (int j = 1; j <= ell + 1; ++j) {
        const auto& layer = *by_size[j - 1];
        if (layer.size() != binomial(m - 1 + j - 1, j - 1)) return false;
        if (!simplicial_any_coord(layer, m - 1, j - 1)) return false;
    }
    return true;
}

std::optional<std::vector<FieldPoint>> extract_simplicial_rec(
    const FiniteField& f, const std::vector<FieldPoint>& t, int m, int ell) {
    const std::uint64_t need = binomial(m + ell, ell);
    if (t.size() < need) return std::nullopt;
    DlogLess less{&f};

    if (m == 1) {
        std::vector<GFElem> vals;
        for (const auto& p : t) vals.push_back(p[0]);
        std::sort(vals.begin(), vals.end(), less);
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        if (vals.size() < static_cast<std::size_t>(ell) + 1) return std::nullopt;
        std::vector<FieldPoint> pts;
        for (int i = 0; i <= ell; ++i) pts.push_back({vals[i]});
        return pts;
    }
    if (ell == 0) return std::vector<FieldPoint>{t.front()};

    std::map<GFElem, std::vector<FieldPoint>> groups;
    for (const auto& p : t) groups[p[m - 1]].push_back(p);
    std::vector<GFElem> values;
    for (const auto& [val, pts] : groups) values.push_back(val);
    std::sort(values.begin(), values.end(), less);

    for (GFElem a : values) {
        const auto& layer = groups[a];
        std::vector<FieldPoint> projected;
        for (const auto& p : layer)
            projected.emplace_back(p.begin(), p.end() - 1);
        auto top = extract_simplicial_rec(f, projected, m - 1, ell);
        if (!top) continue;

        std::vector<FieldPoint> rest;
        for (const auto& p : t)
            if (p[m - 1] != a) rest.push_back(p);
        auto lower = extract_simplicial_rec(f, rest, m, ell - 1);
        if (!lower) continue;

        auto result = std::move(*lower);
        for (auto& p : *top) {
            p.push_back(a);
            result.push_back(std::move(p));
        }
        return result;
    }
    return std::nullopt;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

PointConfiguration make_rectangular_config(
    const FiniteField& f, const std::vector<GFElem>& x_values,
    const std::vector<std::vector<GFElem>>& y_sets) {
    if (x_values.empty() || x_values.size() != y_sets.size())
        throw std::invalid_argument("rectangular config: need one y-set per line");
    std::set<GFElem> xs(x_values.begin(), x_values.end());
    if (xs.size() != x_values.size() || xs.count(0))
        throw std::invalid_argument("rectangular config: line values must be distinct and nonzero");
    const std::size_t per_line = y_sets[0].size();
    if (per_line == 0)
        throw std::invalid_argument("rectangular config: empty line");

    PointConfiguration c;
    c.dim = 2;
    c.kind = ConfigKind::Rectangular;
    c.param_k = static_cast<int>(x_values.size()) - 1;
    c.param_ell = static_cast<int>(per_line) - 1;
    c.layer_values = x_values;
    for (std::size_t i = 0; i < x_values.size(); ++i) {
        std::set<GFElem> ys(y_sets[i].begin(), y_sets[i].end());
        if (y_sets[i].size() != per_line || ys.size() != per_line || ys.count(0))
            throw std::invalid_argument(
                "rectangular config: points on a line must be distinct and nonzero");
        for (GFElem y : y_sets[i]) c.points.push_back({x_values[i], y});
    }
    return c;
}

PointConfiguration make_random_rectangular_config(const FiniteField& f, int k, int ell,
                                                  std::mt19937_64& rng) {
    if (k < 0 || ell < 0)
        throw std::invalid_argument("rectangular config: k, l must be >= 0");
    auto xs = draw_distinct(f, k + 1, rng);
    std::vector<std::vector<GFElem>> ys;
    for (int i = 0; i <= k; ++i) ys.push_back(draw_distinct(f, ell + 1, rng));
    return make_rectangular_config(f, xs, ys);
}

bool is_rectangular_config(const std::vector<FieldPoint>& s, int k, int ell) {
    if (k < 0 || ell < 0) return false;
    if (s.size() != static_cast<std::size_t>(k + 1) * (ell + 1)) return false;
    for (const auto& p : s)
        if (p.size() != 2) return false;
    if (!all_nonzero(s) || !all_distinct(s)) return false;
    std::map<GFElem, std::set<GFElem>> lines;
    for (const auto& p : s) lines[p[0]].insert(p[1]);
    if (lines.size() != static_cast<std::size_t>(k) + 1) return false;
    for (const auto& [x, ys] : lines)
        if (ys.size() != static_cast<std::size_t>(ell) + 1) return false;
    return true;
}

PointConfiguration make_simplicial_config(const FiniteField& f, int m, int ell,
                                          std::mt19937_64& rng) {
    if (m < 1 || ell < 0)
        throw std::invalid_argument("simplicial config: need m >= 1, l >= 0");
    if (static_cast<std::uint32_t>(ell) + 1 > f.q() - 1)
        throw std::invalid_argument("simplicial config: field too small for l+1 layers");

    PointConfiguration c;
    c.dim = m;
    c.kind = ConfigKind::Simplicial;
    c.param_ell = ell;
    c.points = recursive_simplicial(f, m, ell, rng);
    if (m >= 2) {
        c.hyperplane_coord = m;
        // layer values in generation order: ascending layer size
        std::vector<GFElem> vals;
        for (const auto& p : c.points) {
            GFElem v = p[m - 1];
            if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        c.layer_values = std::move(vals);
    }
    return c;
}

bool is_simplicial_config(const std::vector<FieldPoint>& s, int m, int ell) {
    if (m < 1 || ell < 0) return false;
    for (const auto& p : s)
        if (p.size() != static_cast<std::size_t>(m)) return false;
    if (!all_nonzero(s) || !all_distinct(s)) return false;
    return simplicial_any_coord(s, m, ell);
}

std::pair<GFElem, GFElem> simplicial_det_recurrence_sides(
    const FiniteField& f, int m, int ell, const std::vector<FieldPoint>& s) {
    if (m < 2) throw std::invalid_argument("recurrence: m must be >= 2");
    if (ell == 0) {
        // single point; V is the 1x1 matrix (1) on both sides
        if (s.size() != 1) throw std::invalid_argument("recurrence: |S| != 1 for l = 0");
        return {1, 1};
    }
    if (!simplicial_with_coord(s, m, ell, m))
        throw std::invalid_argument(
            "recurrence: S is not simplicial with hyperplane coordinate m");

    std::map<GFElem, std::vector<FieldPoint>> groups;
    for (const auto& p : s) groups[p[m - 1]].push_back(p);
    GFElem top_value = 0;
    std::size_t top_size = 0;
    for (const auto& [val, pts] : groups)
        if (pts.size() > top_size) {
            top_size = pts.size();
            top_value = val;
        }

    std::vector<FieldPoint> s_prime;
    std::vector<FieldPoint> projected;
    for (const auto& p : s) {
        if (p[m - 1] == top_value)
            projected.emplace_back(p.begin(), p.end() - 1);
        else
            s_prime.push_back(p);
    }

    GFElem lhs = vandermonde_det(f, LatticePolytope::simplex(m, ell), s);

    GFElem factor = 1;
    for (const auto& p : s_prime)
        factor = f.mul(factor, f.sub(p[m - 1], top_value));
    GFElem det_lower =
        vandermonde_det(f, LatticePolytope::simplex(m, ell - 1), s_prime);
    GFElem det_proj =
        vandermonde_det(f, LatticePolytope::simplex(m - 1, ell), projected);

    GFElem rhs = f.mul(factor, f.mul(det_lower, det_proj));
    return {lhs, rhs};
}

std::optional<PointConfiguration> extract_rectangular_config(
    const FiniteField& f, const std::vector<FieldPoint>& t, int k, int ell) {
    if (k < 0 || ell < 0)
        throw std::invalid_argument("extract: k, l must be >= 0");
    DlogLess less{&f};

    std::map<GFElem, std::vector<GFElem>, DlogLess> lines{less};
    for (const auto& p : t) {
        if (p.size() != 2 || p[0] == 0 || p[1] == 0)
            throw std::invalid_argument("extract: points must lie in (F_q*)^2");
        lines[p[0]].push_back(p[1]);
    }
    std::vector<GFElem> xs;
    std::vector<std::vector<GFElem>> ys;
    for (auto& [x, yvals] : lines) {
        std::sort(yvals.begin(), yvals.end(), less);
        yvals.erase(std::unique(yvals.begin(), yvals.end()), yvals.end());
        if (yvals.size() < static_cast<std::size_t>(ell) + 1) continue;
        xs.push_back(x);
        ys.emplace_back(yvals.begin(), yvals.begin() + ell + 1);
        if (xs.size() == static_cast<std::size_t>(k) + 1) break;
    }
    if (xs.size() < static_cast<std::size_t>(k) + 1) return std::nullopt;
    return make_rectangular_config(f, xs, ys);
}

std::optional<PointConfiguration> extract_simplicial_config(
    const FiniteField& f, const std::vector<FieldPoint>& t, int m, int ell) {
    if (m < 1 || ell < 0)
        throw std::invalid_argument("extract: need m >= 1, l >= 0");
    for (const auto& p : t)
        if (p.size() != static_cast<std::size_t>(m))
            throw std::invalid_argument("extract: point dimension mismatch");
    if (!all_nonzero(t))
        throw std::invalid_argument("extract: points must lie in (F_q*)^m");

    // fixed scan order for determinism
    std::vector<FieldPoint> sorted = t;
    DlogLess less{&f};
    std::sort(sorted.begin(), sorted.end(), less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    auto pts = extract_simplicial_rec(f, sorted, m, ell);
    if (!pts) return std::nullopt;

    PointConfiguration c;
    c.dim = m;
    c.kind = ConfigKind::Simplicial;
    c.param_ell = ell;
    c.points = std::move(*pts);
    if (m >= 2) {
        c.hyperplane_coord = m;
        std::vector<GFElem> vals;
        for (const auto& p : c.points) {
            GFElem v = p[m - 1];
            if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        c.layer_values = std::move(vals);
    }
    return c;
}

bool validate_certificate(const FiniteField& f, const PointConfiguration& c) {
    switch (c.kind) {
        case ConfigKind::Plain:
            return true;
        case ConfigKind::Rectangular: {
            if (!is_rectangular_config(c.points, c.param_k, c.param_ell)) return false;
            std::set<GFElem> xs;
            for (const auto& p : c.points) xs.insert(p[0]);
            for (GFElem a : c.layer_values)
                if (!xs.count(a)) return false;
            return c.layer_values.size() == xs.size();
        }
        case ConfigKind::Simplicial: {
            if (!is_simplicial_config(c.points, c.dim, c.param_ell)) return false;
            if (c.dim == 1) return true;
            if (c.hyperplane_coord < 1 || c.hyperplane_coord > c.dim) return false;
            if (!simplicial_with_coord(c.points, c.dim, c.param_ell,
                                       c.hyperplane_coord))
                return false;
            std::set<GFElem> vals;
            for (const auto& p : c.points) vals.insert(p[c.hyperplane_coord - 1]);
            for (GFElem a : c.layer_values)
                if (!vals.count(a)) return false;
            return c.layer_values.size() == vals.size();
        }
    }
    return false;
}

}  // namespace toric
