#pragma once

#include "hindlab/certificate.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/parallel.hpp"
#include "hindlab/sumsets.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hindlab {

// ---------------------------------------------------------------------------
// Witness search inside one colouring.

template <class T, class C>
struct MonoFsWitness {
    Verdict verdict = Verdict::exhausted;
    std::vector<std::size_t> positions;
    std::vector<T> elements;
    std::optional<C> color;
    std::uint64_t nodes = 0;
};

/// Lexicographically least increasing k-tuple of positions into `ground`
/// whose elements are pairwise distinct and whose FS (ascending-order sums)
/// is monochromatic under `color`. Prefixes whose FS is already
/// non-monochromatic are pruned, which does not change the least witness.
template <class T, class Add, class ColorFn>
auto find_mono_fs_witness(const std::vector<T>& ground, Add add, ColorFn color, std::size_t k,
                          const SearchOptions& opts = {}) {
    using C = std::decay_t<decltype(color(ground.front()))>;
    if (k < 1) throw PreconditionError("find_mono_fs_witness: k must be at least 1");
    MonoFsWitness<T, C> out;
    if (ground.size() < k) return out;

    struct Hit {
        std::vector<std::size_t> positions;
        C color;
    };
    const std::size_t tasks = ground.size() - k + 1;
    auto hit = run_first_hit<Hit>(tasks, opts, [&](std::size_t first, TaskContext& ctx) -> std::optional<Hit> {
        std::vector<std::size_t> pos{first};
        std::optional<Hit> found;
        // sums: every subset sum of the current prefix, ascending-order summed.
        auto dfs = [&](auto&& self, const std::vector<T>& sums, const C& common) -> bool {
            if (!ctx.tick()) return false;
            if (pos.size() == k) {
                found = Hit{pos, common};
                return true;
            }
            for (std::size_t next = pos.back() + 1; next + (k - pos.size()) <= ground.size(); ++next) {
                const T& x = ground[next];
                bool repeated = false;
                for (auto p : pos) repeated = repeated || ground[p] == x;
                if (repeated) continue;
                std::vector<T> ext = sums;
                ext.reserve(2 * sums.size() + 1);
                bool mono = color(x) == common;
                ext.push_back(x);
                for (std::size_t i = 0; mono && i < sums.size(); ++i) {
                    T s = add(sums[i], x);
                    mono = color(s) == common;
                    ext.push_back(std::move(s));
                }
                if (!mono) continue;
                pos.push_back(next);
                if (self(self, ext, common)) return true;
                pos.pop_back();
                if (ctx.stopped()) return false;
            }
            return false;
        };
        const C c0 = color(ground[first]);
        dfs(dfs, std::vector<T>{ground[first]}, c0);
        return found;
    });

    out.nodes = hit.nodes;
    if (hit.inconclusive) {
        out.verdict = Verdict::inconclusive;
    } else if (hit.result) {
        out.verdict = Verdict::witness;
        out.positions = hit.result->positions;
        for (auto p : out.positions) out.elements.push_back(ground[p]);
        out.color = hit.result->color;
    }
    return out;
}

/// Certificate form for a named colouring over rationals or vectors.
template <class T>
Certificate mono_fs_witness_certificate(const std::vector<T>& ground, const Json& ground_description,
                                        const ColoringSpec& spec, std::size_t k,
                                        const SearchOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    if (ground.empty()) throw PreconditionError("empty ground set");
    const auto r = find_mono_fs_witness(
        ground, std::plus<>{}, [&](const T& x) { return evaluate(spec, x); }, k, opts);
    Certificate cert;
    cert.claim = "mono-fs-witness";
    cert.parameters = {{"coloring", to_string(spec)}, {"k", k}, {"ground", ground_description},
                       {"ground_size", ground.size()}};
    cert.verdict = r.verdict;
    cert.search_space = r.nodes;
    if (r.verdict == Verdict::witness) {
        Json elems = Json::array();
        for (const auto& e : r.elements) elems.push_back(point_to_json(e));
        Json fs = Json::array();
        for (const auto& term : fs_enumerate(r.elements))
            fs.push_back({{"positions", term.positions},
                          {"sum", point_to_json(term.sum)},
                          {"color", color_to_json(evaluate(spec, term.sum))}});
        cert.payload = {{"positions", r.positions},
                        {"elements", elems},
                        {"color", color_to_json(*r.color)},
                        {"finite_sums", fs}};
    }
    cert.elapsed_ms = elapsed_since(start);
    return cert;
}

// ---------------------------------------------------------------------------
// Searches over all colourings of a finite point set.

/// Points 0..n-1 coloured in order. Giving point j colour c is forbidden when
/// some configuration in forbidden[j] consists of earlier points all coloured c.
struct AvoidanceProblem {
    std::size_t points = 0;
    std::vector<std::vector<std::vector<std::uint32_t>>> forbidden;
};

using Coloring = std::vector<std::uint8_t>;

namespace detail {

inline bool admissible(const AvoidanceProblem& p, const Coloring& col, std::size_t j, std::uint8_t c) {
    for (const auto& cfg : p.forbidden[j]) {
        bool all = true;
        for (auto q : cfg)
            if (col[q] != c) {
                all = false;
                break;
            }
        if (all) return false;
    }
    return true;
}

}  // namespace detail

/// Lexicographically least t-colouring of all points that avoids every
/// forbidden configuration, with colour labels canonicalized by first use
/// (colour i appears only after colours < i). Prefixes of fixed depth are the
/// parallel tasks.
inline FirstHit<Coloring> find_avoiding_coloring(const AvoidanceProblem& p, int t,
                                                 const SearchOptions& opts = {}) {
    constexpr std::size_t kPrefixDepth = 6;
    const std::size_t depth = std::min(p.points, kPrefixDepth);
    std::vector<Coloring> prefixes;
    std::uint64_t prefix_nodes = 0;
    {
        Coloring col;
        auto gen = [&](auto&& self, int used) -> void {
            ++prefix_nodes;
            if (col.size() == depth) {
                prefixes.push_back(col);
                return;
            }
            const std::size_t j = col.size();
            for (int c = 0; c < std::min(t, used + 1); ++c) {
                if (!detail::admissible(p, col, j, static_cast<std::uint8_t>(c))) continue;
                col.push_back(static_cast<std::uint8_t>(c));
                self(self, std::max(used, c + 1));
                col.pop_back();
            }
        };
        gen(gen, 0);
    }

    auto hit = run_first_hit<Coloring>(prefixes.size(), opts, [&](std::size_t task, TaskContext& ctx) {
        Coloring col = prefixes[task];
        int used = 0;
        for (auto c : col) used = std::max(used, c + 1);
        std::optional<Coloring> found;
        auto dfs = [&](auto&& self, int used_now) -> bool {
            if (!ctx.tick()) return false;
            if (col.size() == p.points) {
                found = col;
                return true;
            }
            const std::size_t j = col.size();
            for (int c = 0; c < std::min(t, used_now + 1); ++c) {
                if (!detail::admissible(p, col, j, static_cast<std::uint8_t>(c))) continue;
                col.push_back(static_cast<std::uint8_t>(c));
                if (self(self, std::max(used_now, c + 1))) return true;
                col.pop_back();
                if (ctx.stopped()) return false;
            }
            return false;
        };
        dfs(dfs, used);
        return found;
    });
    hit.nodes += prefix_nodes;
    return hit;
}

enum class FsVariant {
    /// Summands may repeat: x_0 <= x_1 <= ... (classical Schur numbers for k = 2).
    sequence,
    /// Summands pairwise distinct: M is a k-element set.
    injective,
};

inline std::string_view to_string(FsVariant v) {
    return v == FsVariant::sequence ? "sequence" : "injective";
}

struct NumberResult {
    Verdict verdict = Verdict::exhausted;
    /// The computed minimum (R or F); for an inconclusive run, the first value
    /// that could not be decided.
    long value = 0;
    /// Lexicographically least avoiding colouring at value - 1.
    Coloring extremal;
    std::uint64_t nodes = 0;
};

/// Configurations with largest element j (1-based values): for every k-tuple
/// summing to j, the other values of its FS.
inline std::vector<std::vector<std::uint32_t>> fs_configs_ending_at(long j, std::size_t k, FsVariant v) {
    std::set<std::vector<std::uint32_t>> out;
    std::vector<long> xs;
    auto rec = [&](auto&& self, long lo, long remaining) -> void {
        if (xs.size() + 1 == k) {
            const long last = remaining;
            const bool ok = xs.empty() || (v == FsVariant::sequence ? last >= xs.back() : last > xs.back());
            if (!ok || last < lo) return;
            xs.push_back(last);
            std::set<long> sums;
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
                long s = 0;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask >> i & 1) s += xs[i];
                if (s != j) sums.insert(s);
            }
            std::vector<std::uint32_t> cfg;
            for (long s : sums) cfg.push_back(static_cast<std::uint32_t>(s - 1));
            out.insert(std::move(cfg));
            xs.pop_back();
            return;
        }
        for (long x = lo; x <= remaining; ++x) {
            xs.push_back(x);
            self(self, v == FsVariant::sequence ? x : x + 1, remaining - x);
            xs.pop_back();
        }
    };
    rec(rec, 1, j);
    return {out.begin(), out.end()};
}

/// Minimal R such that every t-colouring of {1..R} has k summands (see
/// FsVariant) whose finite sums all lie in {1..R} and share one colour.
inline NumberResult fs_number(std::size_t k, int t, FsVariant variant = FsVariant::sequence,
                              const SearchOptions& opts = {}, long max_r = 200) {
    if (k < 1 || t < 1) throw PreconditionError("fs_number: need k >= 1 and t >= 1");
    NumberResult out;
    AvoidanceProblem p;
    Coloring last;
    for (long R = 1; R <= max_r; ++R) {
        p.points = static_cast<std::size_t>(R);
        p.forbidden.push_back(fs_configs_ending_at(R, k, variant));
        const auto hit = find_avoiding_coloring(p, t, opts);
        out.nodes += hit.nodes;
        if (hit.inconclusive) {
            out.verdict = Verdict::inconclusive;
            out.value = R;
            out.extremal = last;
            return out;
        }
        if (!hit.result) {
            out.value = R;
            out.extremal = last;
            return out;
        }
        last = *hit.result;
    }
    out.verdict = Verdict::inconclusive;
    out.value = max_r + 1;
    out.extremal = last;
    return out;
}

/// Splits of the set bits of `u` into k consecutive runs, each as the list of
/// the other unions (all but u itself) as 0-based point indices (mask - 1).
inline std::vector<std::vector<std::uint32_t>> fu_configs_ending_at(std::uint32_t u, std::size_t k) {
    std::vector<int> bits;
    for (int i = 0; i < 32; ++i)
        if (u >> i & 1) bits.push_back(i);
    std::vector<std::vector<std::uint32_t>> out;
    if (bits.size() < k) return out;
    std::vector<std::size_t> cuts;  // run boundaries, strictly increasing in (0, |bits|)
    auto rec = [&](auto&& self, std::size_t lo) -> void {
        if (cuts.size() + 1 == k) {
            std::vector<std::uint32_t> blocks;
            std::size_t begin = 0;
            for (std::size_t i = 0; i <= cuts.size(); ++i) {
                const std::size_t end = i < cuts.size() ? cuts[i] : bits.size();
                std::uint32_t b = 0;
                for (std::size_t q = begin; q < end; ++q) b |= 1u << bits[q];
                blocks.push_back(b);
                begin = end;
            }
            std::vector<std::uint32_t> cfg;
            for (std::uint32_t m = 1; m + 1 < (1u << k); ++m) {
                std::uint32_t un = 0;
                for (std::size_t i = 0; i < k; ++i)
                    if (m >> i & 1) un |= blocks[i];
                cfg.push_back(un - 1);
            }
            std::sort(cfg.begin(), cfg.end());
            out.push_back(std::move(cfg));
            return;
        }
        for (std::size_t c = lo; c < bits.size(); ++c) {
            cuts.push_back(c);
            self(self, c + 1);
            cuts.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Minimal F such that every t-colouring of the nonempty subsets of {0..F-1}
/// admits a k-block sequence with monochromatic finite unions. Subsets are
/// coloured in increasing bitmask order, so all unions of a block sequence
/// are coloured before its full union.
inline NumberResult fu_number(std::size_t k, int t, const SearchOptions& opts = {}, long max_f = 20) {
    if (k < 1 || t < 1) throw PreconditionError("fu_number: need k >= 1 and t >= 1");
    NumberResult out;
    Coloring last;
    for (long F = 1; F <= max_f; ++F) {
        AvoidanceProblem p;
        p.points = (std::size_t{1} << F) - 1;
        for (std::uint32_t u = 1; u <= p.points; ++u) p.forbidden.push_back(fu_configs_ending_at(u, k));
        const auto hit = find_avoiding_coloring(p, t, opts);
        out.nodes += hit.nodes;
        if (hit.inconclusive || !hit.result) {
            out.verdict = hit.inconclusive ? Verdict::inconclusive : Verdict::exhausted;
            out.value = F;
            out.extremal = last;
            return out;
        }
        last = *hit.result;
    }
    out.verdict = Verdict::inconclusive;
    out.value = max_f + 1;
    out.extremal = last;
    return out;
}

inline Certificate number_certificate(std::string claim, Json params, const NumberResult& r,
                                      std::string_view value_key,
                                      std::chrono::steady_clock::time_point start) {
    Certificate cert;
    cert.claim = std::move(claim);
    cert.parameters = std::move(params);
    cert.verdict = r.verdict;
    cert.search_space = r.nodes;
    Json colors = Json::array();
    for (auto c : r.extremal) colors.push_back(static_cast<int>(c));
    if (r.verdict == Verdict::exhausted) {
        cert.payload = {{std::string(value_key), r.value}, {"extremal_coloring", colors}};
    } else {
        cert.payload = {{"undecided_at", r.value}, {"extremal_coloring", colors}};
    }
    cert.elapsed_ms = elapsed_since(start);
    return cert;
}

inline Certificate fs_number_certificate(std::size_t k, int t, FsVariant v, const SearchOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = fs_number(k, t, v, opts);
    return number_certificate("fs-number", {{"k", k}, {"t", t}, {"variant", std::string(to_string(v))}}, r,
                              "R", start);
}

inline Certificate fu_number_certificate(std::size_t k, int t, const SearchOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = fu_number(k, t, opts);
    return number_certificate("fu-number", {{"k", k}, {"t", t}}, r, "F", start);
}

// ---------------------------------------------------------------------------

/// Lexicographically least k-block sequence of nonempty subsets of
/// {0..F-1} (blocks as bitmasks, compared block by block) whose finite
/// unions share one colour under `color` (indexed by mask), and that
/// satisfies `accept`.
template <class Accept>
std::optional<std::vector<std::uint32_t>> find_mono_fu_blocks(std::size_t F, const std::vector<int>& color,
                                                              std::size_t k, Accept&& accept) {
    const std::uint32_t full = (1u << F) - 1;
    std::vector<std::uint32_t> blocks;
    std::optional<std::vector<std::uint32_t>> found;
    auto dfs = [&](auto&& self, const std::vector<std::uint32_t>& unions, int c) -> bool {
        if (blocks.size() == k) {
            if (accept(blocks)) {
                found = blocks;
                return true;
            }
            return false;
        }
        const int min_elem = blocks.empty() ? 0 : 32 - __builtin_clz(blocks.back());
        for (std::uint32_t b = 1; b <= full; ++b) {
            if (__builtin_ctz(b) < min_elem) continue;
            const int cb = color[b];
            if (c >= 0 && cb != c) continue;
            bool mono = true;
            std::vector<std::uint32_t> ext = unions;
            ext.push_back(b);
            for (auto u : unions) {
                mono = mono && color[u | b] == cb;
                ext.push_back(u | b);
            }
            if (!mono) continue;
            blocks.push_back(b);
            if (self(self, ext, cb)) return true;
            blocks.pop_back();
        }
        return false;
    };
    dfs(dfs, {}, -1);
    return found;
}

// ---------------------------------------------------------------------------
// Pair colourings.

/// Lexicographically least k-subset of {0..n-1} all of whose pairs receive one
/// colour under pair_color(i, j) (i < j), or nullopt.
template <class PairColor>
std::optional<std::vector<std::size_t>> pair_ramsey_homogeneous(std::size_t n, PairColor&& pair_color,
                                                                std::size_t k) {
    if (k > n) throw PreconditionError("pair_ramsey_homogeneous: k exceeds n");
    using C = std::decay_t<decltype(pair_color(std::size_t{0}, std::size_t{1}))>;
    if (k == 0) return std::vector<std::size_t>{};
    if (k == 1) return std::vector<std::size_t>{0};
    std::vector<std::size_t> set;
    std::optional<C> common;
    auto dfs = [&](auto&& self, std::size_t from) -> bool {
        if (set.size() == k) return true;
        for (std::size_t x = from; x + (k - set.size()) <= n; ++x) {
            bool ok = true;
            std::optional<C> c = common;
            for (auto y : set) {
                C cy = pair_color(y, x);
                if (!c) c = cy;
                if (!(cy == *c)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            const auto saved = common;
            common = c;
            set.push_back(x);
            if (self(self, x + 1)) return true;
            set.pop_back();
            common = saved;
        }
        return false;
    };
    if (dfs(dfs, 0)) return set;
    return std::nullopt;
}

}  // namespace hindlab
