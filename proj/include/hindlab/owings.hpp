#pragma once

#include "hindlab/certificate.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/qvec.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hindlab {

/// (2 repeated i times, then 1 repeated 2(theta - i) times).
inline Pattern pi_pattern(int theta, int i) {
    if (theta < 1 || i < 0 || i > theta) throw PreconditionError("pi_pattern needs 0 <= i <= theta, theta >= 1");
    Pattern p(static_cast<std::size_t>(i), Rat(2));
    p.insert(p.end(), static_cast<std::size_t>(2 * (theta - i)), Rat(1));
    return p;
}

/// pi_i padded in front with zeros to length 2 theta.
inline Pattern padded_pi_pattern(int theta, int i) {
    Pattern p(static_cast<std::size_t>(i), Rat(0));
    const auto tail = pi_pattern(theta, i);
    p.insert(p.end(), tail.begin(), tail.end());
    return p;
}

struct PatternFixture {
    int theta = 1;
    int i1 = 0, i2 = 1;
    /// Colour shared by pi_{i1} and pi_{i2}, when known.
    std::optional<ColorValue> color;
    /// Colours of pi_0 .. pi_theta on the homogeneous set, when known.
    std::vector<ColorValue> colors;
    /// Width of each per-element block; at least the number of elements built.
    std::size_t width = 0;
    /// Enumeration of the homogeneous index set; empty means b'_j = b_j.
    std::vector<BasisIndex> basis;
};

/// Positions used by the construction: M = i2 zero slots, i1 common slots,
/// (i2 - i1) blocks of `width`, then 2(theta - i2) tail slots.
inline std::size_t layout_size(const PatternFixture& f) {
    return static_cast<std::size_t>(f.i2 + f.i1) + static_cast<std::size_t>(f.i2 - f.i1) * f.width +
           static_cast<std::size_t>(2 * (f.theta - f.i2));
}

inline void validate(const PatternFixture& f, std::size_t count) {
    if (f.theta < 1) throw PreconditionError("fixture: theta must be at least 1");
    if (!(0 <= f.i1 && f.i1 < f.i2 && f.i2 <= f.theta))
        throw PreconditionError("fixture: need 0 <= i1 < i2 <= theta");
    if (f.width < count)
        throw PreconditionError("fixture: block width " + std::to_string(f.width) + " below element count " +
                                std::to_string(count));
    if (!f.colors.empty()) {
        if (f.colors.size() != static_cast<std::size_t>(f.theta + 1))
            throw PreconditionError("fixture: need theta + 1 pattern colours");
        if (!(f.colors[f.i1] == f.colors[f.i2])) throw PreconditionError("fixture: I_{i1} != I_{i2}");
        if (f.color && !(*f.color == f.colors[f.i1])) throw PreconditionError("fixture: colour disagrees with I");
    }
    if (!f.basis.empty()) {
        for (std::size_t i = 1; i < f.basis.size(); ++i)
            if (f.basis[i - 1] >= f.basis[i]) throw PreconditionError("fixture: basis must be increasing");
        if (f.basis.size() < layout_size(f))
            throw PreconditionError("fixture: basis has " + std::to_string(f.basis.size()) + " indices, layout needs " +
                                    std::to_string(layout_size(f)));
    }
}

/// x_n for the fixture: coefficient 1 on the common and block slots, 1/2 on
/// the tail slots.
inline QVec owings_element(const PatternFixture& f, std::size_t n) {
    auto at = [&](std::size_t pos) -> BasisIndex { return f.basis.empty() ? pos : f.basis.at(pos); };
    const std::size_t M = static_cast<std::size_t>(f.i2);
    const std::size_t common = static_cast<std::size_t>(f.i1);
    const std::size_t blocks = static_cast<std::size_t>(f.i2 - f.i1);
    QVec x;
    for (std::size_t r = 0; r < common; ++r) x.add_to(at(M + r), Rat(1));
    for (std::size_t s = 0; s < blocks; ++s) x.add_to(at(M + common + s * f.width + n), Rat(1));
    const std::size_t tail = M + common + blocks * f.width;
    for (std::size_t r = 0; r < static_cast<std::size_t>(2 * (f.theta - f.i2)); ++r)
        x.add_to(at(tail + r), Rat(1, 2));
    return x;
}

struct OwingsResult {
    std::vector<QVec> xs;
    std::size_t mixed_ok = 0, mixed_total = 0;
    std::size_t double_ok = 0, double_total = 0;
    /// Pairs whose sum's colour differs from the fixture colour (only when a
    /// colouring is supplied).
    std::size_t color_mismatches = 0;

    bool ok() const { return mixed_ok == mixed_total && double_ok == double_total && color_mismatches == 0; }
};

inline OwingsResult owings_pattern_construct(const PatternFixture& f, std::size_t count,
                                             const std::function<ColorValue(const QVec&)>& c = {}) {
    if (count < 2) throw PreconditionError("owings construction needs at least 2 elements");
    validate(f, count);
    OwingsResult out;
    for (std::size_t n = 0; n < count; ++n) out.xs.push_back(owings_element(f, n));
    const auto p1 = pi_pattern(f.theta, f.i1), p2 = pi_pattern(f.theta, f.i2);
    std::optional<ColorValue> target = f.color;
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a; b < count; ++b) {
            const QVec s = out.xs[a] + out.xs[b];
            const auto p = pattern_of(s);
            if (a == b) {
                ++out.double_total;
                out.double_ok += p == p2;
            } else {
                ++out.mixed_total;
                out.mixed_ok += p == p1;
            }
            if (c) {
                const auto col = c(s);
                if (!target) target = col;
                if (!(col == *target)) ++out.color_mismatches;
            }
        }
    return out;
}

inline Json to_json(const PatternFixture& f) {
    Json colors = Json::array();
    for (const auto& c : f.colors) colors.push_back(color_to_json(c));
    Json j = {{"theta", f.theta}, {"i1", f.i1},         {"i2", f.i2},
              {"width", f.width}, {"basis", f.basis},   {"pattern_colors", colors},
              {"pi_i1", to_string(pi_pattern(f.theta, f.i1))}, {"pi_i2", to_string(pi_pattern(f.theta, f.i2))}};
    j["color"] = f.color ? color_to_json(*f.color) : Json(nullptr);
    return j;
}

inline Certificate owings_certificate(const PatternFixture& f, std::size_t count,
                                      const std::function<ColorValue(const QVec&)>& c = {}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = owings_pattern_construct(f, count, c);
    Certificate cert;
    cert.claim = "owings-construct";
    cert.parameters = {{"theta", f.theta}, {"i1", f.i1}, {"i2", f.i2}, {"count", count}};
    cert.verdict = r.ok() ? Verdict::witness : Verdict::counterexample;
    Json xs = Json::array();
    for (const auto& x : r.xs) xs.push_back(to_string(x));
    cert.payload = {{"fixture", to_json(f)},  {"elements", xs},
                    {"mixed_ok", r.mixed_ok}, {"mixed_total", r.mixed_total},
                    {"double_ok", r.double_ok}, {"double_total", r.double_total},
                    {"color_checked", static_cast<bool>(c)}, {"color_mismatches", r.color_mismatches}};
    cert.search_space = r.mixed_total + r.double_total;
    cert.elapsed_ms = elapsed_since(start);
    return cert;
}

// ---------------------------------------------------------------------------

struct FixtureSearch {
    std::optional<PatternFixture> fixture;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
};

/// Colours of the theta + 1 padded patterns placed on the 2 theta indices of S.
inline std::vector<ColorValue> pattern_colors(int theta, const std::vector<BasisIndex>& s,
                                              const std::function<ColorValue(const QVec&)>& c) {
    std::vector<ColorValue> out;
    for (int i = 0; i <= theta; ++i) {
        const auto p = padded_pi_pattern(theta, i);
        QVec v;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] != 0) v.add_to(s[k], p[k]);
        out.push_back(c(v));
    }
    return out;
}

/// Looks for `size` indices below kappa all of whose 2 theta-subsets get the
/// same tuple of pattern colours (lexicographically least such set), then
/// picks the least i1 < i2 with equal colours. Width is set to `count`.
inline FixtureSearch owings_fixture_from_coloring(int theta, const std::function<ColorValue(const QVec&)>& c,
                                                  std::size_t kappa, std::size_t count, std::size_t size = 0,
                                                  std::uint64_t max_nodes = std::uint64_t{1} << 32) {
    if (theta < 1) throw PreconditionError("theta must be at least 1");
    if (count < 2) throw PreconditionError("count must be at least 2");
    const std::size_t L = static_cast<std::size_t>(2 * theta);
    if (size == 0) size = static_cast<std::size_t>(theta) * (count + 1);
    if (size < L) size = L;
    FixtureSearch out;
    std::vector<BasisIndex> chosen;
    std::optional<std::vector<ColorValue>> common;

    // Every L-subset of chosen ∪ {x} that contains x.
    auto consistent = [&](BasisIndex x, std::optional<std::vector<ColorValue>>& tuple) -> bool {
        if (chosen.size() + 1 < L) return true;
        std::vector<std::size_t> pick;
        bool ok = true;
        auto rec = [&](auto&& self, std::size_t from) -> void {
            if (!ok || out.out_of_budget) return;
            if (pick.size() + 1 == L) {
                if (++out.nodes > max_nodes) {
                    out.out_of_budget = true;
                    ok = false;
                    return;
                }
                std::vector<BasisIndex> s;
                for (auto i : pick) s.push_back(chosen[i]);
                s.push_back(x);
                auto d = pattern_colors(theta, s, c);
                if (!tuple) tuple = std::move(d);
                else if (*tuple != d) ok = false;
                return;
            }
            for (std::size_t i = from; i < chosen.size(); ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
        return ok;
    };

    auto dfs = [&](auto&& self, BasisIndex from) -> bool {
        if (chosen.size() == size) return true;
        for (BasisIndex x = from; x + (size - chosen.size()) <= kappa; ++x) {
            auto tuple = common;
            if (!consistent(x, tuple)) {
                if (out.out_of_budget) return false;
                continue;
            }
            const auto saved = common;
            common = tuple;
            chosen.push_back(x);
            if (self(self, x + 1)) return true;
            chosen.pop_back();
            common = saved;
            if (out.out_of_budget) return false;
        }
        return false;
    };
    if (!dfs(dfs, 0) || !common) return out;

    for (int a = 0; a <= theta; ++a)
        for (int b = a + 1; b <= theta; ++b)
            if ((*common)[a] == (*common)[b]) {
                PatternFixture f;
                f.theta = theta;
                f.i1 = a;
                f.i2 = b;
                f.colors = *common;
                f.color = (*common)[a];
                f.width = count;
                f.basis = chosen;
                if (layout_size(f) > chosen.size()) continue;
                out.fixture = std::move(f);
                return out;
            }
    return out;
}

inline Certificate owings_fixture_certificate(int theta, const ColoringSpec& spec, std::size_t kappa,
                                              std::size_t count, std::size_t size = 0,
                                              std::uint64_t max_nodes = std::uint64_t{1} << 32) {
    const auto start = std::chrono::steady_clock::now();
    if (spec.domain() != PointKind::vector) throw DomainError("pattern colouring must be defined on vectors");
    const std::function<ColorValue(const QVec&)> c = [&](const QVec& v) { return evaluate(spec, v); };
    const auto r = owings_fixture_from_coloring(theta, c, kappa, count, size, max_nodes);
    Certificate cert;
    cert.claim = "owings-fixture";
    cert.parameters = {{"theta", theta}, {"coloring", to_string(spec)}, {"kappa", kappa}, {"count", count}};
    cert.search_space = r.nodes;
    if (r.fixture) {
        const auto built = owings_pattern_construct(*r.fixture, count, c);
        cert.verdict = built.ok() ? Verdict::witness : Verdict::counterexample;
        Json xs = Json::array();
        for (const auto& x : built.xs) xs.push_back(to_string(x));
        cert.payload = {{"fixture", to_json(*r.fixture)}, {"elements", xs}, {"color_mismatches", built.color_mismatches}};
    } else {
        cert.verdict = Verdict::inconclusive;
        cert.payload = {{"reason", r.out_of_budget ? "node budget exhausted"
                                                   : "no homogeneous set of the requested size below kappa"}};
    }
    cert.elapsed_ms = elapsed_since(start);
    return cert;
}

}  // namespace hindlab
