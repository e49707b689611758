#pragma once

// Seeded generators for the property tests.

#include "hindlab/qvec.hpp"
#include "hindlab/rational.hpp"

#include <cstdint>
#include <random>

namespace gen {

using Rng = std::mt19937_64;

inline long integer(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// p/q with |p| <= max_num, 1 <= q <= max_den.
inline hindlab::Rat rat(Rng& rng, long max_num = 200, long max_den = 60) {
    return hindlab::Rat(integer(rng, -max_num, max_num), integer(rng, 1, max_den));
}

inline hindlab::Rat nonzero_rat(Rng& rng, long max_num = 200, long max_den = 60) {
    for (;;) {
        auto r = rat(rng, max_num, max_den);
        if (r != 0) return r;
    }
}

/// Up to `terms` random entries on indices below `dim`.
inline hindlab::QVec qvec(Rng& rng, int terms = 5, hindlab::BasisIndex dim = 12) {
    hindlab::QVec v;
    const int n = static_cast<int>(integer(rng, 0, terms));
    for (int i = 0; i < n; ++i)
        v.add_to(static_cast<hindlab::BasisIndex>(integer(rng, 0, static_cast<long>(dim) - 1)), rat(rng, 12, 6));
    return v;
}

}  // namespace gen
