#pragma once

#include "hindlab/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hindlab {

using Elem = std::uint32_t;

/// Finite semigroup given by its Cayley table; elements are 0..n-1 and
/// table(a, b) is a + b. Associativity is checked on construction.
class FinSemigroup {
public:
    FinSemigroup(std::size_t n, std::vector<Elem> table) : n_(n), table_(std::move(table)) {
        if (n_ == 0) throw PreconditionError("semigroup order must be positive");
        if (table_.size() != n_ * n_)
            throw PreconditionError("Cayley table must have n*n entries");
        for (auto x : table_)
            if (x >= n_) throw PreconditionError("Cayley table entry out of range: " + std::to_string(x));
        check_associative();
        identity_ = find_identity();
    }

    std::size_t order() const noexcept { return n_; }
    Elem add(Elem a, Elem b) const { return table_[a * n_ + b]; }
    const std::optional<Elem>& identity() const noexcept { return identity_; }

    /// Elements g with e + g = f, ascending.
    std::vector<Elem> left_solutions(Elem e, Elem f) const {
        check_index(e);
        check_index(f);
        std::vector<Elem> out;
        for (Elem g = 0; g < n_; ++g)
            if (add(e, g) == f) out.push_back(g);
        return out;
    }

    /// u with u + x = x for every x.
    bool is_left_identity(Elem u) const {
        for (Elem x = 0; x < n_; ++x)
            if (add(u, x) != x) return false;
        return true;
    }

    /// Finite semigroups are always weakly left-cancellative.
    bool is_weakly_left_cancellative() const noexcept { return true; }

    void check_index(Elem e) const {
        if (e >= n_)
            throw PreconditionError("element " + std::to_string(e) + " out of range for order " +
                                    std::to_string(n_));
    }

private:
    // Light's test: if (x+g)+y = x+(g+y) for all x, y and every g in a set that
    // generates the table as a magma, the operation is associative. Cost
    // O(n^2 * |generators|) instead of O(n^3).
    void check_associative() const {
        std::vector<char> in(n_, 0);
        std::vector<Elem> members;
        std::vector<Elem> gens;
        for (Elem start = 0; start < n_; ++start) {
            if (in[start]) continue;
            gens.push_back(start);
            std::vector<Elem> work{start};
            in[start] = 1;
            while (!work.empty()) {
                const Elem a = work.back();
                work.pop_back();
                members.push_back(a);
                for (std::size_t idx = 0; idx < members.size(); ++idx) {
                    const Elem b = members[idx];
                    for (Elem p : {add(a, b), add(b, a)})
                        if (!in[p]) {
                            in[p] = 1;
                            work.push_back(p);
                        }
                }
            }
        }
        for (Elem g : gens)
            for (Elem x = 0; x < n_; ++x) {
                const Elem xg = add(x, g);
                for (Elem y = 0; y < n_; ++y)
                    if (add(xg, y) != add(x, add(g, y)))
                        throw PreconditionError("not associative: (" + std::to_string(x) + "+" +
                                                std::to_string(g) + ")+" + std::to_string(y) +
                                                " != " + std::to_string(x) + "+(" +
                                                std::to_string(g) + "+" + std::to_string(y) + ")");
            }
    }

    std::optional<Elem> find_identity() const {
        for (Elem e = 0; e < n_; ++e) {
            bool ok = true;
            for (Elem g = 0; g < n_ && ok; ++g) ok = add(e, g) == g && add(g, e) == g;
            if (ok) return e;
        }
        return std::nullopt;
    }

    std::size_t n_;
    std::vector<Elem> table_;
    std::optional<Elem> identity_;
};

inline std::size_t left_solution_count(const FinSemigroup& g, Elem e, Elem f) {
    return g.left_solutions(e, f).size();
}

/// Least L such that g is L-left cancellative.
inline std::size_t cancellativity_bound(const FinSemigroup& g) {
    const auto n = g.order();
    std::size_t best = 0;
    std::vector<std::size_t> count(n);
    for (Elem e = 0; e < n; ++e) {
        std::fill(count.begin(), count.end(), 0);
        for (Elem x = 0; x < n; ++x) ++count[g.add(e, x)];
        best = std::max(best, *std::max_element(count.begin(), count.end()));
    }
    return best;
}

/// {g, 2g, 3g, ...}, in order of first appearance.
inline std::vector<Elem> monogenic(const FinSemigroup& s, Elem g) {
    s.check_index(g);
    std::vector<char> seen(s.order(), 0);
    std::vector<Elem> out;
    Elem x = g;
    while (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
        x = s.add(x, g);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Standard tables.

inline FinSemigroup cyclic_group(std::size_t n) {
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
    return FinSemigroup(n, std::move(t));
}

/// (Z_2)^r with bitwise xor.
inline FinSemigroup boolean_group(unsigned r) {
    const std::size_t n = std::size_t{1} << r;
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>(a ^ b);
    return FinSemigroup(n, std::move(t));
}

/// x + y = x.
inline FinSemigroup left_zero(std::size_t n) {
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>(a);
    return FinSemigroup(n, std::move(t));
}

/// x + y = y.
inline FinSemigroup right_zero(std::size_t n) {
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>(b);
    return FinSemigroup(n, std::move(t));
}

/// Componentwise product; (a, b) is encoded as a * |B| + b.
inline FinSemigroup direct_product(const FinSemigroup& a, const FinSemigroup& b) {
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    std::vector<Elem> t(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Elem ea = a.add(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
            const Elem eb = b.add(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
            t[x * n + y] = static_cast<Elem>(ea * nb + eb);
        }
    return FinSemigroup(n, std::move(t));
}

/// First line n, then n rows of n space-separated indices.
inline FinSemigroup parse_cayley_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0;
    if (!(in >> n) || n <= 0) throw ParseError("Cayley table: first token must be a positive order");
    std::vector<Elem> t;
    t.reserve(static_cast<std::size_t>(n * n));
    for (long long i = 0; i < n * n; ++i) {
        long long x;
        if (!(in >> x)) throw ParseError("Cayley table: expected " + std::to_string(n * n) + " entries");
        if (x < 0 || x >= n) throw ParseError("Cayley table: entry " + std::to_string(x) + " out of range");
        t.push_back(static_cast<Elem>(x));
    }
    std::string extra;
    if (in >> extra) throw ParseError("Cayley table: trailing data '" + extra + "'");
    return FinSemigroup(static_cast<std::size_t>(n), std::move(t));
}

inline std::string to_text(const FinSemigroup& g) {
    std::string s = std::to_string(g.order()) + "\n";
    for (Elem a = 0; a < g.order(); ++a) {
        for (Elem b = 0; b < g.order(); ++b) {
            if (b) s += ' ';
            s += std::to_string(g.add(a, b));
        }
        s += '\n';
    }
    return s;
}

// ---------------------------------------------------------------------------

/// The positive integers under addition, optionally with 0 adjoined as an
/// identity. Solution counts are closed-form.
struct NaturalCarrier {
    bool with_zero = false;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a + b; }

    std::size_t left_solution_count(std::uint64_t e, std::uint64_t f) const {
        if (f > e) return 1;
        return (f == e && with_zero) ? 1 : 0;
    }

    std::vector<std::uint64_t> left_solutions(std::uint64_t e, std::uint64_t f) const {
        if (f > e || (f == e && with_zero)) return {f - e};
        return {};
    }

    bool is_left_identity(std::uint64_t u) const { return with_zero && u == 0; }
    bool is_weakly_left_cancellative() const noexcept { return true; }
    std::size_t cancellativity_bound() const noexcept { return 1; }
};

}  // namespace hindlab
