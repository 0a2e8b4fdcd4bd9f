#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// Canonical representation of a field element: an integer in [0, q).
/// For GF(p) this is the residue; for GF(p^n) the element
/// c_0 + c_1 x + ... + c_{n-1} x^{n-1} is packed as sum c_i p^i.
using GFElem = std::uint32_t;

/// Exact arithmetic in GF(q), q = p^n <= 2^20, with dense exp/log tables
/// for a fixed primitive element alpha (the smallest primitive element in
/// canonical integer order).
///
/// Immutable after construction; safe to share across threads.
class FiniteField {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 20;

    /// Builds GF(p^n). If `modulus` is empty and n > 1, a built-in
    /// irreducible polynomial is used (available for q in
    /// {4,8,9,16,25,27,32}); for other q the lexicographically smallest
    /// monic irreducible of degree n is searched. A user-supplied modulus
    /// must be monic of degree n and irreducible over GF(p), given as
    /// n+1 coefficients c_0..c_n in [0,p).
    static FiniteField make(std::uint32_t p, std::uint32_t n,
                            std::vector<std::uint32_t> modulus = {});

    /// Builds GF(q) by factoring q; throws if q is not a prime power.
    static FiniteField from_order(std::uint64_t q);

    /// Accepts "p^n" (e.g. "2^3") or a plain integer order (e.g. "8").
    static FiniteField parse(const std::string& spec);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t q() const { return q_; }
    GFElem alpha() const { return alpha_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    static constexpr GFElem zero() { return 0; }
    static constexpr GFElem one() { return 1; }

    GFElem add(GFElem a, GFElem b) const {
        if (p_ == 2) return a ^ b;
        if (n_ == 1) {
            std::uint32_t s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        return add_digits(a, b);
    }

    GFElem neg(GFElem a) const {
        if (p_ == 2) return a;
        if (n_ == 1) return a == 0 ? 0 : q_ - a;
        return neg_digits(a);
    }

    GFElem sub(GFElem a, GFElem b) const { return add(a, neg(b)); }

    GFElem mul(GFElem a, GFElem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    GFElem inv(GFElem a) const {
        if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
        std::uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }

    GFElem div(GFElem a, GFElem b) const { return mul(a, inv(b)); }

    GFElem pow(GFElem a, long long e) const {
        if (a == 0) {
            if (e == 0) return 1;
            if (e > 0) return 0;
            throw std::domain_error("FiniteField: zero to a negative power");
        }
        long long m = static_cast<long long>(q_) - 1;
        long long r = (static_cast<long long>(log_[a]) * (e % m)) % m;
        if (r < 0) r += m;
        return exp_[static_cast<std::uint32_t>(r)];
    }

    /// Discrete log base alpha; a must be nonzero.
    std::uint32_t dlog(GFElem a) const {
        if (a == 0) throw std::domain_error("FiniteField: dlog of zero");
        return log_[a];
    }

    /// alpha^i for any integer i (reduced mod q-1).
    GFElem exp_pow(long long i) const {
        long long m = static_cast<long long>(q_) - 1;
        long long r = i % m;
        if (r < 0) r += m;
        return exp_[static_cast<std::uint32_t>(r)];
    }

    /// Validates that `a` is a canonical element of this field.
    GFElem element(std::uint64_t a) const {
        if (a >= q_) throw std::invalid_argument("FiniteField: value out of range");
        return static_cast<GFElem>(a);
    }

    bool operator==(const FiniteField& o) const {
        return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_;
    }

private:
    FiniteField() = default;

    GFElem add_digits(GFElem a, GFElem b) const;
    GFElem neg_digits(GFElem a) const;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t q_ = 0;
    GFElem alpha_ = 0;
    std::vector<std::uint32_t> modulus_;  // c_0..c_n, monic; empty when n == 1
    std::vector<GFElem> exp_;             // size 2(q-1): exp_[i] = alpha^(i mod q-1)
    std::vector<std::uint32_t> log_;      // size q; log_[0] unused
};

using FieldPtr = std::shared_ptr<const FiniteField>;

inline FieldPtr make_field_ptr(FiniteField f) {
    return std::make_shared<const FiniteField>(std::move(f));
}

}  // namespace toric
