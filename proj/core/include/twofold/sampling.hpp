#pragma once

#include "twofold/preferences.hpp"
#include "twofold/rational.hpp"

#include <cstdint>
#include <random>

namespace twofold {

/// Seeded draws from the audit grids: act coordinates and constants from
/// {k/64 : -256 <= k <= 256}, mixing weights from {k/16 : 0 <= k <= 16}.
/// mt19937_64 plus explicit modular reduction keeps every draw reproducible
/// across platforms.
class GridSampler {
public:
    explicit GridSampler(uint64_t seed) : rng_(seed) {}

    uint64_t next_index(uint64_t bound) { return rng_() % bound; }

    Rat coordinate() {
        long k = static_cast<long>(next_index(513)) - 256;
        return Rat(k, 64);
    }

    Rat constant() { return coordinate(); }

    /// Positive grid value from {k/64 : 1 <= k <= 256}.
    Rat positive_coordinate() {
        long k = static_cast<long>(next_index(256)) + 1;
        return Rat(k, 64);
    }

    Rat mixing_weight() { return Rat(static_cast<long>(next_index(17)), 16); }

    /// Weight from (0, 1]: {k/16 : 1 <= k <= 16}.
    Rat positive_mixing_weight() { return Rat(static_cast<long>(next_index(16)) + 1, 16); }

    UtilityVector act(size_t dimension) {
        RatVec v(dimension);
        for (Rat& c : v) c = coordinate();
        return UtilityVector(std::move(v));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace twofold
