#include "toric/code.hpp"

#include <set>
#include <stdexcept>

namespace toric {

namespace {

constexpr std::uint64_t kMaxBlockLength = 1u << 24;

std::uint64_t block_length(const FiniteField& f, int m) {
    std::uint64_t n = 1;
    for (int i = 0; i < m; ++i) {
        n *= f.q() - 1;
        if (n > kMaxBlockLength)
            throw std::invalid_argument("toric code: block length (q-1)^m too large");
    }
    return n;
}

}  // namespace

std::vector<EvaluationPoint> enumerate_points(const FiniteField& f, int m) {
    if (m < 1) throw std::invalid_argument("enumerate_points: m must be >= 1");
    const std::uint32_t order = f.q() - 1;
    const std::uint64_t n = block_length(f, m);

    std::vector<EvaluationPoint> pts;
    pts.reserve(n);
    EvaluationPoint cur;
    cur.f.assign(m, 0);
    cur.coords.assign(m, 1);
    for (;;) {
        pts.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur.f[i] == order - 1) {
            cur.f[i] = 0;
            cur.coords[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++cur.f[i];
        cur.coords[i] = f.exp_pow(cur.f[i]);
    }
    return pts;
}

std::size_t point_index(const FiniteField& f, const std::vector<std::uint32_t>& fv) {
    std::size_t idx = 0;
    for (std::uint32_t d : fv) idx = idx * (f.q() - 1) + d;
    return idx;
}

ToricCode ToricCode::build(FieldPtr field, LatticePolytope p) {
    if (!field) throw std::invalid_argument("toric code: null field");
    const FiniteField& f = *field;
    if (f.q() < 3) throw std::invalid_argument("toric code: q must be >= 3");

    ToricCode c;
    c.field_ = std::move(field);
    c.n_ = block_length(f, p.dim());
    c.k_ = p.count();

    const std::uint32_t order = f.q() - 1;
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& e : p.lattice_points()) {
        std::vector<std::uint32_t> red(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            long long r = e[i] % static_cast<long long>(order);
            if (r < 0) r += order;
            red[i] = static_cast<std::uint32_t>(r);
        }
        if (!seen.insert(red).second)
            throw std::invalid_argument(
                "toric code: lattice points collide mod q-1 (polytope too large "
                "for this field)");
        c.reduced_.push_back(std::move(red));
    }

    // G[i][j] = alpha^{<e(i), f(j)>}; all entries are nonzero.
    c.gen_ = GFMatrix(c.k_, c.n_);
    const int m = p.dim();
    std::vector<std::uint32_t> fv(m, 0);
    for (std::size_t j = 0; j < c.n_; ++j) {
        for (std::size_t i = 0; i < c.k_; ++i) {
            std::uint64_t dot = 0;
            for (int t = 0; t < m; ++t)
                dot += static_cast<std::uint64_t>(c.reduced_[i][t]) * fv[t];
            c.gen_.at(i, j) = f.exp_pow(static_cast<long long>(dot % order));
        }
        int t = m - 1;
        while (t >= 0 && fv[t] == order - 1) {
            fv[t] = 0;
            --t;
        }
        if (t >= 0) ++fv[t];
    }

    if (gf_rank(f, c.gen_) != c.k_)
        throw std::logic_error("toric code: generator matrix is rank deficient");

    c.poly_ = std::move(p);
    return c;
}

std::vector<GFElem> ToricCode::encode(std::span<const GFElem> message) const {
    if (message.size() != k_)
        throw std::invalid_argument("encode: message length mismatch");
    const FiniteField& f = *field_;
    std::vector<GFElem> word(n_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        GFElem mi = message[i];
        if (mi == 0) continue;
        auto r = row(i);
        for (std::size_t j = 0; j < n_; ++j)
            word[j] = f.add(word[j], f.mul(mi, r[j]));
    }
    return word;
}

std::size_t ToricCode::weight(std::span<const GFElem> word) {
    std::size_t w = 0;
    for (GFElem v : word) w += v != 0;
    return w;
}

}  // namespace toric
