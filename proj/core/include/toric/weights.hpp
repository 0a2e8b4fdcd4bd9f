#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "toric/code.hpp"

namespace toric {

/// Thrown when an enumeration would exceed the configured codeword budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Weight distribution A_i = number of codewords of Hamming weight i.
struct WeightEnumerator {
    std::vector<std::uint64_t> counts;  // size n+1

    /// Minimum distance: smallest i > 0 with A_i > 0.
    std::size_t min_distance() const {
        for (std::size_t i = 1; i < counts.size(); ++i)
            if (counts[i] > 0) return i;
        throw std::logic_error("WeightEnumerator: zero code");
    }
};

struct EnumerationOptions {
    std::uint64_t max_codewords = 100'000'000;  // budget on q^k
    unsigned threads = 1;
};

/// Exact weight distribution by exhaustive enumeration. One representative
/// per scalar class of messages is enumerated (first nonzero coordinate
/// fixed to 1) and counts are multiplied by q-1; codewords are maintained
/// incrementally in odometer order. The result is independent of the
/// thread count.
WeightEnumerator weight_distribution(const ToricCode& c, EnumerationOptions opts = {});

/// True minimum weight over nonzero codewords (full enumeration).
std::size_t min_distance(const ToricCode& c, EnumerationOptions opts = {});

}  // namespace toric
