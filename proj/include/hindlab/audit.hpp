#pragma once

#include "hindlab/certificate.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/grid.hpp"
#include "hindlab/parallel.hpp"
#include "hindlab/support_arithmetic.hpp"

#include <array>
#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hindlab {

enum class ClaimId {
    dyadic_same_sign,
    dyadic_all_pairs,
    signed_dyadic,
    parity_same_sign,
    support_arithmetic,
    self_inner_triples,
    self_inner_pair_sums,
};

struct ClaimInfo {
    ClaimId id;
    std::string_view name;
    std::string_view alias;
    std::string_view statement;
};

inline constexpr std::array<ClaimInfo, 7> kClaims{{
    {ClaimId::dyadic_same_sign, "dyadic-same-sign", "thm2.8",
     "distinct r, s of equal sign with dyadic(r) = dyadic(s) have dyadic(r+s) != dyadic(r)"},
    {ClaimId::dyadic_all_pairs, "dyadic-all-pairs", "thm2.8-allpairs",
     "distinct r, s with dyadic(r) = dyadic(s) have dyadic(r+s) != dyadic(r)"},
    {ClaimId::signed_dyadic, "signed-dyadic", "thm2.8-signed",
     "distinct nonzero r, s with signed_dyadic(r) = signed_dyadic(s) have signed_dyadic(r+s) != signed_dyadic(r)"},
    {ClaimId::parity_same_sign, "parity-same-sign", "thm2.9",
     "distinct r, s of equal sign with dyadic(r) = dyadic(s) have dyadic_parity(r+s) != dyadic_parity(r)"},
    {ClaimId::support_arithmetic, "support-arithmetic", "thm2.10-arithmetic",
     "for 1 <= |R| < N <= max_n the sunflower sum has support |R| + L(N-|R|) and a different support parity"},
    {ClaimId::self_inner_triples, "self-inner-triples", "thm2.11",
     "no three distinct vectors have FS monochromatic under self_inner"},
    {ClaimId::self_inner_pair_sums, "self-inner-pair-sums", "thm3.6",
     "no two distinct vectors v, w have {2v, v+w, 2w} monochromatic under self_inner"},
}};

inline const ClaimInfo& info(ClaimId id) {
    for (const auto& c : kClaims)
        if (c.id == id) return c;
    throw PreconditionError("unknown claim");
}

/// Accepts the claim name or its alias.
inline ClaimId parse_claim(std::string_view s) {
    for (const auto& c : kClaims)
        if (c.name == s || c.alias == s) return c.id;
    throw ParseError("unknown claim '" + std::string(s) + "'");
}

using AuditGrid = std::variant<RationalGrid, VectorGrid, long>;

inline PointKind claim_domain(ClaimId id) {
    switch (id) {
        case ClaimId::self_inner_triples:
        case ClaimId::self_inner_pair_sums: return PointKind::vector;
        default: return PointKind::rational;
    }
}

inline Json grid_to_json(const AuditGrid& g) {
    struct V {
        Json operator()(const RationalGrid& r) const { return {{"max_den", r.max_den}, {"max_val", r.max_val}}; }
        Json operator()(const VectorGrid& v) const { return {{"dim", v.dim}, {"coef_range", v.coef_range}}; }
        Json operator()(long max_n) const { return {{"max_n", max_n}}; }
    };
    return std::visit(V{}, g);
}

/// One violating configuration: the chosen points, the derived points, and
/// the colour they all share.
struct Violation {
    std::vector<Point> chosen;
    std::vector<Point> derived;
    ColorValue color;
};

inline Json to_json(const Violation& v) {
    Json chosen = Json::array(), derived = Json::array();
    for (const auto& p : v.chosen) chosen.push_back(std::visit([](const auto& x) { return point_to_json(x); }, p));
    for (const auto& p : v.derived) derived.push_back(std::visit([](const auto& x) { return point_to_json(x); }, p));
    return {{"chosen", chosen}, {"derived", derived}, {"color", color_to_json(v.color)}};
}

namespace detail {

struct TaskOutcome {
    std::vector<Violation> violations;
    std::uint64_t checked = 0;
};

/// The claim's configuration for an ordered choice of grid points, or
/// nullopt when the pair is outside the claim's hypothesis. A returned
/// violation means the configuration is monochromatic.
inline std::optional<Violation> check_rational_pair(ClaimId id, const Rat& r, const Rat& s, bool& applicable) {
    applicable = false;
    switch (id) {
        case ClaimId::dyadic_same_sign:
        case ClaimId::dyadic_all_pairs:
        case ClaimId::parity_same_sign: {
            if (id != ClaimId::dyadic_all_pairs && r.sign() * s.sign() <= 0) return std::nullopt;
            const auto c = dyadic_color(r);
            if (dyadic_color(s) != c) return std::nullopt;
            applicable = true;
            const Rat sum = r + s;
            if (id == ClaimId::parity_same_sign) {
                const auto pc = dyadic_parity_color(r);
                if (dyadic_parity_color(sum) != pc) return std::nullopt;
                return Violation{{r, s}, {sum}, pc};
            }
            if (dyadic_color(sum) != c) return std::nullopt;
            return Violation{{r, s}, {sum}, c};
        }
        case ClaimId::signed_dyadic: {
            if (r == 0 || s == 0) return std::nullopt;
            const auto c = signed_dyadic_color(r);
            if (signed_dyadic_color(s) != c) return std::nullopt;
            applicable = true;
            const Rat sum = r + s;
            if (signed_dyadic_color(sum) != c) return std::nullopt;
            return Violation{{r, s}, {sum}, c};
        }
        default: throw PreconditionError("not a rational pair claim");
    }
}

}  // namespace detail

struct AuditOptions {
    unsigned workers = 1;
    /// Violations listed in the payload; the total is always reported.
    std::size_t max_listed = 10000;
};

/// Exhaustive check of a claim over a finite grid. Verdict exhausted when the
/// claim holds on the grid, counterexample otherwise, with violations listed
/// in grid order.
inline Certificate audit_coloring_claim(ClaimId id, const AuditGrid& grid, const AuditOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<detail::TaskOutcome> outcomes;

    if (id == ClaimId::support_arithmetic) {
        const long max_n = std::get<long>(grid);
        if (max_n < 2) throw PreconditionError("support-arithmetic audit needs max_n >= 2");
        outcomes = run_all<detail::TaskOutcome>(static_cast<std::size_t>(max_n - 1), opts.workers, [&](std::size_t t) {
            const long N = static_cast<long>(t) + 2;
            detail::TaskOutcome out;
            for (long root = 1; root < N; ++root) {
                ++out.checked;
                const auto s = support_arithmetic(N, root);
                if (!s.ok()) {
                    QVec v = sunflower_member(N, root, 0);
                    out.violations.push_back(Violation{{v}, {}, IntColor{s.sum_color}});
                }
            }
            return out;
        });
    } else if (claim_domain(id) == PointKind::rational) {
        const auto pts = enumerate(std::get<RationalGrid>(grid));
        outcomes = run_all<detail::TaskOutcome>(pts.size(), opts.workers, [&](std::size_t i) {
            detail::TaskOutcome out;
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                bool applicable = false;
                auto v = detail::check_rational_pair(id, pts[i], pts[j], applicable);
                out.checked += applicable;
                if (v) out.violations.push_back(std::move(*v));
            }
            return out;
        });
    } else {
        const auto pts = enumerate(std::get<VectorGrid>(grid));
        std::vector<Rat> norm;
        for (const auto& v : pts) norm.push_back(inner_product(v, v));
        outcomes = run_all<detail::TaskOutcome>(pts.size(), opts.workers, [&](std::size_t i) {
            detail::TaskOutcome out;
            const auto& u = pts[i];
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const auto& v = pts[j];
                if (id == ClaimId::self_inner_pair_sums) {
                    ++out.checked;
                    const QVec u2 = Rat(2) * u, v2 = Rat(2) * v, uv = u + v;
                    const Rat c = inner_product(u2, u2);
                    if (inner_product(v2, v2) == c && inner_product(uv, uv) == c)
                        out.violations.push_back(Violation{{u, v}, {u2, uv, v2}, RatColor{c}});
                    continue;
                }
                if (norm[i] != norm[j]) {
                    out.checked += pts.size() - j - 1;
                    continue;
                }
                const QVec uv = u + v;
                const bool uv_same = inner_product(uv, uv) == norm[i];
                for (std::size_t k = j + 1; k < pts.size(); ++k) {
                    ++out.checked;
                    if (!uv_same || norm[k] != norm[i]) continue;
                    const auto& w = pts[k];
                    const QVec uw = u + w, vw = v + w, uvw = uv + w;
                    const Rat& c = norm[i];
                    if (inner_product(uw, uw) == c && inner_product(vw, vw) == c && inner_product(uvw, uvw) == c)
                        out.violations.push_back(Violation{{u, v, w}, {uv, uw, vw, uvw}, RatColor{c}});
                }
            }
            return out;
        });
    }

    std::uint64_t checked = 0, total = 0;
    Json listed = Json::array();
    for (auto& o : outcomes) {
        checked += o.checked;
        for (auto& v : o.violations) {
            ++total;
            if (listed.size() < opts.max_listed) listed.push_back(to_json(v));
        }
    }

    Certificate cert;
    cert.claim = std::string(info(id).name);
    cert.parameters = {{"grid", grid_to_json(grid)}, {"statement", std::string(info(id).statement)}};
    cert.verdict = total == 0 ? Verdict::exhausted : Verdict::counterexample;
    cert.search_space = checked;
    cert.payload = {{"violations", total}, {"listed", listed}, {"truncated", total > listed.size()}};
    cert.elapsed_ms = elapsed_since(start);
    return cert;
}

}  // namespace hindlab
