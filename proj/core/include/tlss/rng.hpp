#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "tlss/field.hpp"

namespace tlss {

/// Seedable deterministic randomness source. All protocol randomness flows
/// through one of these so that a (seed, config) pair replays byte-identically
/// across runs and platforms.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased draw from [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    mpz_class below(const mpz_class& bound);

    FieldElement element(const FieldPtr& field) { return field->element(below(field->modulus())); }
    FieldElement nonzero_element(const FieldPtr& field);

    /// Derives an independent child stream; consumes one draw from this one.
    RandomSource fork(std::uint64_t tag) {
        return RandomSource(next_u64() ^ (tag * 0x9E3779B97F4A7C15ull));
    }

    /// Fisher-Yates with this source; std::shuffle is not reproducible across
    /// standard library implementations.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(static_cast<std::uint64_t>(i))]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace tlss
