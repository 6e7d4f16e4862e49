#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace chatctx {

// Seeded bounded draw and Fisher-Yates shuffle. std::shuffle with the same
// engine is not reproducible across standard libraries; experiments must be.
inline uint64_t bounded_draw(std::mt19937_64& engine, uint64_t bound) {
    // rejection sampling; bound > 0
    const uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    uint64_t value;
    do {
        value = engine();
    } while (value >= limit);
    return value % bound;
}

template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& engine) {
    for (size_t i = items.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(bounded_draw(engine, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace chatctx
