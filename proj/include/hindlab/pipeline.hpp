#pragma once

#include "hindlab/certificate.hpp"
#include "hindlab/greedy.hpp"
#include "hindlab/search.hpp"
#include "hindlab/semigroup.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace hindlab {

struct PipelineOptions {
    SearchOptions search;
    /// Used when fu_number runs out of budget; the certificate is then
    /// marked conditional on this value.
    std::optional<long> assumed_f;
    /// Skip computing fu_number and take this value as established.
    std::optional<long> known_f;
};

namespace detail {

inline Json fs_table(const FinSemigroup& g, const std::vector<int>& c, const std::vector<Elem>& xs) {
    Json out = Json::array();
    for (const auto& term : fs_enumerate(xs, [&](Elem a, Elem b) { return g.add(a, b); }))
        out.push_back({{"positions", term.positions}, {"sum", term.sum}, {"color", c[term.sum]}});
    return out;
}

}  // namespace detail

/// Every t-colouring of a large enough finite semigroup has k distinct
/// elements with monochromatic FS. Either some monogenic subsemigroup has
/// more than R elements and the witness is found among its first R
/// multiples, or the greedy basis of length F pulls the colouring back to
/// subsets of F and a monochromatic FU block sequence is mapped forward.
inline Certificate fin_fin_pipeline(const FinSemigroup& g, const std::vector<int>& c, std::size_t k, int t,
                                    const PipelineOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    if (c.size() != g.order()) throw PreconditionError("colouring must assign a colour to every element");
    if (k < 1 || t < 1) throw PreconditionError("pipeline needs k >= 1 and t >= 1");
    for (int x : c)
        if (x < 0 || x >= t) throw PreconditionError("colour " + std::to_string(x) + " outside 0..t-1");

    Certificate cert;
    cert.claim = "fin-fin-pipeline";
    cert.parameters = {{"order", g.order()}, {"k", k}, {"t", t}};

    const std::size_t L = cancellativity_bound(g);
    long F = 0;
    bool conditional = false;
    std::uint64_t nodes = 0;
    if (opts.known_f) {
        F = *opts.known_f;
    } else {
        const auto fu = fu_number(k, t, opts.search);
        nodes += fu.nodes;
        if (fu.verdict == Verdict::exhausted) {
            F = fu.value;
        } else if (opts.assumed_f) {
            F = *opts.assumed_f;
            conditional = true;
        } else {
            cert.verdict = Verdict::inconclusive;
            cert.payload = {{"L", L}, {"reason", "fu_number exceeded its budget"}};
            cert.search_space = nodes;
            cert.elapsed_ms = elapsed_since(start);
            return cert;
        }
    }
    if (F < 1 || F > 20) throw PreconditionError("F must lie in 1..20");
    const std::uint64_t R = (std::uint64_t{1} << F) - 1;
    const std::uint64_t S = std::max<std::uint64_t>(R + 1, (std::uint64_t{1} << (2 * F)) * (L + 1));
    if (g.order() < S)
        throw PreconditionError("semigroup of order " + std::to_string(g.order()) + " is below the bound S = " +
                                std::to_string(S));

    Json payload = {{"L", L}, {"F", F}, {"R", R}, {"S", S}, {"conditional_on_F", conditional}};
    std::vector<Elem> witness;
    bool inconclusive = false;

    std::optional<Elem> big;
    for (Elem x = 0; x < g.order() && !big; ++x)
        if (monogenic(g, x).size() > R) big = x;

    if (big) {
        payload["case"] = 1;
        payload["generator"] = *big;
        std::vector<Elem> multiples;
        Elem x = *big;
        for (std::uint64_t i = 0; i < R; ++i) {
            multiples.push_back(x);
            x = g.add(x, *big);
        }
        const auto r = find_mono_fs_witness(
            multiples, [&](Elem a, Elem b) { return g.add(a, b); }, [&](Elem a) { return c[a]; }, k, opts.search);
        nodes += r.nodes;
        if (r.verdict == Verdict::inconclusive) {
            inconclusive = true;
        } else if (r.verdict == Verdict::witness) {
            witness = r.elements;
            Json mult = Json::array();
            for (auto p : r.positions) mult.push_back(p + 1);
            payload["multipliers"] = mult;
        }
    } else {
        payload["case"] = 2;
        const auto basis = greedy_fs_basis<Elem>(g, static_cast<std::size_t>(F), table_pool(g), GreedyRule::literal);
        nodes += basis.candidates;
        if (basis.exhausted) throw PreconditionError("greedy basis ran out of elements");
        payload["basis"] = basis.h;
        std::vector<int> induced(std::size_t{1} << F, -1);
        for (std::size_t mask = 1; mask < induced.size(); ++mask) induced[mask] = c[basis.sums[mask - 1]];
        auto image = [&](std::uint32_t mask) { return basis.sums[mask - 1]; };
        const auto blocks = find_mono_fu_blocks(static_cast<std::size_t>(F), induced, k,
                                                [&](const std::vector<std::uint32_t>& bs) {
                                                    std::set<Elem> seen;
                                                    for (auto b : bs) seen.insert(image(b));
                                                    return seen.size() == bs.size();
                                                });
        if (blocks) {
            Json bj = Json::array();
            for (auto b : *blocks) {
                std::vector<int> members;
                for (int i = 0; i < F; ++i)
                    if (b >> i & 1) members.push_back(i);
                bj.push_back(members);
                witness.push_back(image(b));
            }
            payload["blocks"] = bj;
        }
    }

    if (inconclusive) {
        cert.verdict = Verdict::inconclusive;
    } else {
        if (witness.empty()) {
            cert.verdict = Verdict::counterexample;
        } else {
            payload["witness"] = witness;
            payload["finite_sums"] = detail::fs_table(g, c, witness);
            const std::set<Elem> distinct(witness.begin(), witness.end());
            std::vector<Elem> sums;
            for (const auto& term : fs_enumerate(witness, [&](Elem a, Elem b) { return g.add(a, b); }))
                sums.push_back(term.sum);
            const bool mono = is_monochromatic_by(sums, [&](Elem a) { return c[a]; }).has_value();
            cert.verdict = distinct.size() == witness.size() && mono ? Verdict::witness : Verdict::counterexample;
        }
    }
    cert.payload = std::move(payload);
    cert.search_space = nodes;
    cert.elapsed_ms = elapsed_since(start);
    return cert;
}

/// c(x) = parity of x.
inline std::vector<int> parity_coloring(std::size_t n) {
    std::vector<int> c(n);
    for (std::size_t x = 0; x < n; ++x) c[x] = static_cast<int>(x & 1);
    return c;
}

/// c(x) = parity of the number of set bits of x.
inline std::vector<int> popcount_parity_coloring(std::size_t n) {
    std::vector<int> c(n);
    for (std::size_t x = 0; x < n; ++x) c[x] = __builtin_popcountll(x) & 1;
    return c;
}

}  // namespace hindlab
