#pragma once

#include "hindlab/certificate.hpp"
#include "hindlab/interval_set.hpp"

#include <chrono>
#include <cstdint>
#include <set>
#include <vector>

namespace hindlab {

struct BaireResult {
    /// Translation: the construction runs in c + N, where 0 is interior.
    Rat c;
    Rat delta;
    /// Picks in the translated set, in order.
    std::vector<Rat> x;
    /// y_i = x_i - c/2; Y + Y lies in N.
    std::vector<Rat> y;
    std::uint64_t candidates = 0;
};

/// Least denominator, then least numerator, strictly between lo and hi.
inline Rat canonical_between(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw PreconditionError("canonical_between: empty interval");
    for (BigInt q = 1;; ++q) {
        // least p with p/q > lo
        BigInt p = numerator_of(lo * Rat(q)) / denominator_of(lo * Rat(q));
        const Rat lq = lo * Rat(q);
        while (Rat(p) <= lq) ++p;
        while (Rat(p - 1) > lq) --p;
        if (Rat(p, q) < hi) return Rat(p, q);
    }
}

/// Greedy countable-set argument on a finite stand-in: picks n rationals X
/// with X + X inside c + N, canonically, then translates back.
inline BaireResult baire_sumset_construct(const IntervalSet& n_set, std::size_t n) {
    const Interval* open = nullptr;
    for (const auto& p : n_set.parts())
        if (p.has_interior()) {
            open = &p;
            break;
        }
    if (!open) throw PreconditionError("set has empty interior");

    BaireResult out;
    const Rat centre = canonical_between(open->lo, open->hi);
    out.c = -centre;
    const IntervalSet shifted = n_set.translated(out.c);
    const Rat reach = open->hi - centre;  // (0, reach) is inside the open part
    out.delta = 1;
    while (out.delta * 2 > reach) out.delta /= 2;

    std::set<Rat> picked;
    for (BigInt q = 1; out.x.size() < n; ++q) {
        const Rat qr(q);
        for (BigInt p = 1; Rat(p) < out.delta * qr && out.x.size() < n; ++p) {
            const Rat cand(p, q);
            if (denominator_of(cand) != q) continue;
            ++out.candidates;
            if (picked.count(cand)) continue;
            if (!shifted.contains(cand * 2)) continue;
            bool ok = true;
            for (const auto& xj : out.x)
                if (!shifted.contains(xj + cand)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            out.x.push_back(cand);
            picked.insert(cand);
        }
        if (q > BigInt(1) << 20) throw std::logic_error("baire construction failed to find candidates");
    }
    for (const auto& x : out.x) out.y.push_back(x - out.c / 2);
    return out;
}

/// Pairs (i <= j) with y_i + y_j outside N.
inline std::vector<std::pair<std::size_t, std::size_t>> sumset_escapes(const IntervalSet& n_set,
                                                                       const std::vector<Rat>& y) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = i; j < y.size(); ++j)
            if (!n_set.contains(y[i] + y[j])) out.emplace_back(i, j);
    return out;
}

inline Certificate baire_certificate(const IntervalSet& n_set, std::size_t n) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = baire_sumset_construct(n_set, n);
    const auto escapes = sumset_escapes(n_set, r.y);
    const std::set<Rat> distinct(r.y.begin(), r.y.end());
    Certificate cert;
    cert.claim = "baire-sumset";
    cert.parameters = {{"set", to_string(n_set)}, {"n", n}};
    cert.verdict = escapes.empty() && distinct.size() == r.y.size() ? Verdict::witness : Verdict::counterexample;
    Json xs = Json::array(), ys = Json::array();
    for (const auto& x : r.x) xs.push_back(to_string(x));
    for (const auto& y : r.y) ys.push_back(to_string(y));
    cert.payload = {{"c", to_string(r.c)},
                    {"delta", to_string(r.delta)},
                    {"translated_picks", xs},
                    {"elements", ys},
                    {"pairs_checked", r.y.size() * (r.y.size() + 1) / 2},
                    {"escapes", escapes.size()}};
    cert.search_space = r.candidates;
    cert.elapsed_ms = elapsed_since(start);
    return cert;
}

}  // namespace hindlab
