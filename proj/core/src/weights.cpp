#include "toric/weights.hpp"

#include <algorithm>
#include <thread>

namespace toric {

namespace {

// Messages are grouped by leading position j (coordinates before j zero,
// coordinate j fixed to 1), one representative per scalar class. For
// j <= k-2 a "block" fixes the middle digits j+1..k-2 and sweeps the last
// coordinate over all q values; for j = k-1 a block is the single message
// e_j. Blocks are laid out j = 0 first, middle digits in odometer order
// with the last digit fastest.
struct BlockLayout {
    std::size_t k;
    std::uint32_t q;
    std::vector<std::uint64_t> per_j;  // blocks for each leading position
    std::uint64_t total = 0;

    BlockLayout(std::size_t k_, std::uint32_t q_) : k(k_), q(q_), per_j(k_) {
        for (std::size_t j = 0; j < k; ++j) {
            std::uint64_t cnt = 1;
            for (std::size_t t = j + 1; t + 1 < k; ++t) cnt *= q;
            per_j[j] = cnt;
            total += cnt;
        }
    }
};

// One worker enumerates the half-open block range [b0, b1).
template <typename AddFn>
void enumerate_range(const ToricCode& code, const BlockLayout& layout,
                     const std::vector<std::vector<GFElem>>& scaled,
                     std::uint64_t b0, std::uint64_t b1, AddFn add,
                     std::vector<std::uint64_t>& acc) {
    const FiniteField& f = code.field();
    const std::uint32_t q = layout.q;
    const std::size_t n = code.n();
    const std::size_t k = layout.k;

    auto scaled_row = [&](std::size_t i, GFElem s) -> const GFElem* {
        return scaled[i].data() + static_cast<std::size_t>(s) * n;
    };

    // decode starting block id into (j, middle digits)
    std::size_t j = 0;
    std::uint64_t rem = b0;
    while (rem >= layout.per_j[j]) {
        rem -= layout.per_j[j];
        ++j;
    }
    std::vector<GFElem> digits(k, 0);  // digits[t] used for j+1 <= t <= k-2
    for (std::size_t t = k; t-- > j + 1;) {
        if (t + 1 >= k) continue;  // position k-1 is the swept coordinate
        digits[t] = static_cast<GFElem>(rem % q);
        rem /= q;
    }

    std::vector<GFElem> partial(n);
    bool partial_valid = false;
    auto rebuild_partial = [&]() {
        auto base = code.row(j);
        std::copy(base.begin(), base.end(), partial.begin());
        for (std::size_t t = j + 1; t + 1 < k; ++t) {
            const GFElem* sr = scaled_row(t, digits[t]);
            for (std::size_t c = 0; c < n; ++c) partial[c] = add(partial[c], sr[c]);
        }
        partial_valid = true;
    };

    for (std::uint64_t b = b0; b < b1; ++b) {
        if (j + 1 == k) {
            acc[ToricCode::weight(code.row(j))] += q - 1;
            ++j;
            partial_valid = false;
            continue;
        }
        if (!partial_valid) rebuild_partial();

        for (std::uint32_t s = 0; s < q; ++s) {
            const GFElem* sr = scaled_row(k - 1, static_cast<GFElem>(s));
            std::size_t w = 0;
            for (std::size_t c = 0; c < n; ++c)
                w += add(partial[c], sr[c]) != 0;
            acc[w] += q - 1;
        }

        // advance to the next block: bump the middle odometer, or move on
        // to the next leading position once it wraps around completely
        bool carried = true;
        for (std::size_t t = k - 1; t-- > j + 1 && carried;) {
            GFElem old = digits[t];
            GFElem next = old + 1 == q ? 0 : old + 1;
            digits[t] = next;
            const GFElem* sr = scaled_row(t, f.sub(next, old));
            for (std::size_t c = 0; c < n; ++c) partial[c] = add(partial[c], sr[c]);
            carried = next == 0;
        }
        if (carried) {
            ++j;
            std::fill(digits.begin(), digits.end(), 0);
            partial_valid = false;
        }
    }
}

}  // namespace

WeightEnumerator weight_distribution(const ToricCode& code, EnumerationOptions opts) {
    const FiniteField& f = code.field();
    const std::uint32_t q = f.q();
    const std::size_t n = code.n();
    const std::size_t k = code.k();

    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        if (total > opts.max_codewords)
            throw BudgetExceeded("weight_distribution: q^k exceeds the codeword budget");
    }

    // scaled[i][s*n + c] = s * G[i][c]
    std::vector<std::vector<GFElem>> scaled(k);
    for (std::size_t i = 0; i < k; ++i) {
        scaled[i].assign(static_cast<std::size_t>(q) * n, 0);
        auto r = code.row(i);
        for (std::uint32_t s = 1; s < q; ++s) {
            GFElem* dst = scaled[i].data() + static_cast<std::size_t>(s) * n;
            for (std::size_t c = 0; c < n; ++c) dst[c] = f.mul(s, r[c]);
        }
    }

    BlockLayout layout(k, q);
    unsigned threads = std::max(1u, opts.threads);
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, layout.total));

    std::vector<std::vector<std::uint64_t>> partials(
        threads, std::vector<std::uint64_t>(n + 1, 0));

    auto run = [&](auto add) {
        auto work = [&](unsigned t) {
            std::uint64_t b0 = layout.total * t / threads;
            std::uint64_t b1 = layout.total * (t + 1) / threads;
            enumerate_range(code, layout, scaled, b0, b1, add, partials[t]);
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
    };

    if (f.p() == 2) {
        run([](GFElem a, GFElem b) { return a ^ b; });
    } else if (f.n() == 1) {
        run([q](GFElem a, GFElem b) {
            std::uint32_t s = a + b;
            return s >= q ? s - q : s;
        });
    } else {
        run([&f](GFElem a, GFElem b) { return f.add(a, b); });
    }

    WeightEnumerator we;
    we.counts.assign(n + 1, 0);
    we.counts[0] = 1;
    for (const auto& part : partials)
        for (std::size_t i = 0; i <= n; ++i) we.counts[i] += part[i];
    return we;
}

std::size_t min_distance(const ToricCode& c, EnumerationOptions opts) {
    return weight_distribution(c, opts).min_distance();
}

}  // namespace toric
