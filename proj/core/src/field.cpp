#include "toric/field.hpp"

#include <algorithm>
#include <map>

namespace toric {
namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over GF(p): coefficient vectors c_0..c_d, trailing zeros trimmed.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a mod b, b nonzero (b monic not required).
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    auto inv_mod_p = [p](std::uint32_t x) {
        // p prime, x != 0: Fermat
        std::uint64_t r = 1, base = x, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    };
    std::uint32_t lead_inv = inv_mod_p(b.back());
    while (a.size() >= b.size()) {
        std::uint64_t coef = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t s = a[shift + i] + static_cast<std::uint64_t>(p) -
                              coef * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>(s % p);
        }
        trim(a);
    }
    return a;
}

// Irreducibility by trial division: f (monic, deg n >= 2) is irreducible
// over GF(p) iff no monic polynomial of degree 1..n/2 divides it.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    std::size_t n = f.size() - 1;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        // enumerate monic polys of degree d: low coefficients as base-p counter
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= p;
        Poly g(d + 1, 0);
        g[d] = 1;
        for (std::uint64_t v = 0; v < total; ++v) {
            std::uint64_t t = v;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Built-in moduli (smallest canonical monic irreducible) for the
// extension-field orders used by the reproduction runs.
const std::map<std::uint32_t, Poly>& builtin_moduli() {
    static const std::map<std::uint32_t, Poly> table = {
        {4, {1, 1, 1}},           // x^2 + x + 1
        {8, {1, 1, 0, 1}},        // x^3 + x + 1
        {9, {1, 0, 1}},           // x^2 + 1
        {16, {1, 1, 0, 0, 1}},    // x^4 + x + 1
        {25, {2, 0, 1}},          // x^2 + 2
        {27, {1, 2, 0, 1}},       // x^3 + 2x + 1
        {32, {1, 0, 1, 0, 0, 1}}, // x^5 + x^2 + 1
    };
    return table;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t n) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n; ++i) total *= p;
    Poly f(n + 1, 0);
    f[n] = 1;
    for (std::uint64_t v = 0; v < total; ++v) {
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < n; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("FiniteField: no irreducible polynomial found");
}

std::uint32_t pack(const Poly& f, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = v * p + f[i];
    return v;
}

Poly unpack(std::uint32_t v, std::uint32_t p, std::uint32_t n) {
    Poly f(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        f[i] = v % p;
        v /= p;
    }
    return f;
}

// Product of two elements (degree < n digit vectors) mod the field modulus.
Poly elem_mul(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    Poly r = poly_rem(std::move(prod), modulus, p);
    r.resize(modulus.size() - 1, 0);
    return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t x) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= x; ++d) {
        if (x % d == 0) {
            fs.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) fs.push_back(x);
    return fs;
}

}  // namespace

GFElem FiniteField::add_digits(GFElem a, GFElem b) const {
    GFElem r = 0;
    std::uint32_t shift = 1;
    while (a != 0 || b != 0) {
        std::uint32_t d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        r += d * shift;
        shift *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

GFElem FiniteField::neg_digits(GFElem a) const {
    GFElem r = 0;
    std::uint32_t shift = 1;
    while (a != 0) {
        std::uint32_t d = a % p_;
        if (d != 0) d = p_ - d;
        r += d * shift;
        shift *= p_;
        a /= p_;
    }
    return r;
}

void FiniteField::build_tables() {
    const std::uint32_t order = q_ - 1;

    // Multiplication in digit form, used only during table construction.
    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (n_ == 1) return static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a) * b % p_);
        return pack(elem_mul(unpack(a, p_, n_), unpack(b, p_, n_), modulus_, p_), p_);
    };
    auto slow_pow = [&](std::uint32_t a, std::uint32_t e) -> std::uint32_t {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    // Smallest primitive element: order must be exactly q-1, checked via
    // the prime factors of q-1.
    const auto factors = prime_factors(order);
    alpha_ = 0;
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        bool primitive = slow_pow(cand, order) == 1;
        for (std::uint32_t r : factors) {
            if (!primitive) break;
            if (slow_pow(cand, order / r) == 1) primitive = false;
        }
        if (primitive) {
            alpha_ = cand;
            break;
        }
    }
    if (alpha_ == 0)
        throw std::logic_error("FiniteField: no primitive element (modulus bug)");

    exp_.assign(2 * order, 0);
    log_.assign(q_, 0);
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = v;
        exp_[i + order] = v;
        log_[v] = i;
        v = slow_mul(v, alpha_);
    }
    if (v != 1)
        throw std::logic_error("FiniteField: exp table did not close (modulus bug)");
}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t n,
                              std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: p must be prime");
    if (n < 1) throw std::invalid_argument("FiniteField: n must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw std::invalid_argument("FiniteField: order exceeds 2^20 cap");
    }

    FiniteField f;
    f.p_ = p;
    f.n_ = n;
    f.q_ = static_cast<std::uint32_t>(q);

    if (n == 1) {
        if (!modulus.empty())
            throw std::invalid_argument("FiniteField: modulus given for prime field");
    } else if (modulus.empty()) {
        auto it = builtin_moduli().find(f.q_);
        f.modulus_ = it != builtin_moduli().end() ? it->second
                                                  : smallest_irreducible(p, n);
    } else {
        if (modulus.size() != n + 1 || modulus.back() != 1)
            throw std::invalid_argument("FiniteField: modulus must be monic of degree n");
        for (std::uint32_t c : modulus)
            if (c >= p)
                throw std::invalid_argument("FiniteField: modulus coefficient out of range");
        if (!is_irreducible(modulus, p))
            throw std::invalid_argument("FiniteField: modulus is reducible");
        f.modulus_ = std::move(modulus);
    }

    f.build_tables();
    return f;
}

FiniteField FiniteField::from_order(std::uint64_t q) {
    if (q < 2 || q > kMaxOrder)
        throw std::invalid_argument("FiniteField: order out of range");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t n = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++n;
    }
    if (r != 1)
        throw std::invalid_argument("FiniteField: order is not a prime power");
    return make(static_cast<std::uint32_t>(p), n);
}

FiniteField FiniteField::parse(const std::string& spec) {
    auto to_number = [&spec](const std::string& s) -> std::uint64_t {
        if (s.empty() || s.size() > 8 ||
            !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("FiniteField: cannot parse field spec '" + spec + "'");
        return std::stoull(s);
    };
    auto caret = spec.find('^');
    if (caret == std::string::npos) return from_order(to_number(spec));
    std::uint64_t p = to_number(spec.substr(0, caret));
    std::uint64_t n = to_number(spec.substr(caret + 1));
    if (p > kMaxOrder || n > 20)
        throw std::invalid_argument("FiniteField: field spec out of range");
    return make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
}

}  // namespace toric
