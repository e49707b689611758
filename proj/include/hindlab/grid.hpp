#pragma once

#include "hindlab/qvec.hpp"
#include "hindlab/rational.hpp"

#include <vector>

namespace hindlab {

/// Every p/q in lowest terms with 1 <= q <= max_den and |p/q| <= max_val.
struct RationalGrid {
    long max_den = 1;
    long max_val = 1;
};

/// Every vector sum_{i<dim} a_i b_i with integer a_i in [-coef_range, coef_range].
struct VectorGrid {
    unsigned dim = 1;
    long coef_range = 1;
};

/// Canonical order: denominator ascending, then value ascending.
inline std::vector<Rat> enumerate(const RationalGrid& g) {
    if (g.max_den < 1 || g.max_val < 0) throw PreconditionError("rational grid must be nonempty");
    std::vector<Rat> out;
    for (long q = 1; q <= g.max_den; ++q)
        for (long p = -g.max_val * q; p <= g.max_val * q; ++p) {
            const Rat r(p, q);
            if (denominator_of(r) == q) out.push_back(r);
        }
    return out;
}

/// Coefficient tuples in lexicographic order (coefficient of b_0 most significant).
inline std::vector<QVec> enumerate(const VectorGrid& g) {
    if (g.dim < 1 || g.dim > 8 || g.coef_range < 0)
        throw PreconditionError("vector grid needs 1 <= dim <= 8 and coef_range >= 0");
    std::vector<long> a(g.dim, -g.coef_range);
    std::vector<QVec> out;
    for (;;) {
        QVec v;
        for (unsigned i = 0; i < g.dim; ++i) v.add_to(i, Rat(a[i]));
        out.push_back(std::move(v));
        int i = static_cast<int>(g.dim) - 1;
        while (i >= 0 && a[i] == g.coef_range) a[i--] = -g.coef_range;
        if (i < 0) break;
        ++a[i];
    }
    return out;
}

}  // namespace hindlab
