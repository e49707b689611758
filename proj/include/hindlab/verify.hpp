#pragma once

#include "hindlab/audit.hpp"
#include "hindlab/baire.hpp"
#include "hindlab/certificate.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/delta_system.hpp"
#include "hindlab/owings.hpp"
#include "hindlab/qvec.hpp"
#include "hindlab/search.hpp"
#include "hindlab/support_arithmetic.hpp"

#include <set>
#include <string>

namespace hindlab {

struct VerifyReport {
    bool ok = true;
    std::string detail;
};

namespace detail {

inline Point point_from_json(const Json& j) {
    const auto s = j.get<std::string>();
    if (!s.empty() && s.front() == '{') return parse_qvec(s);
    return parse_rat(s);
}

inline VerifyReport fail(std::string why) { return {false, std::move(why)}; }

inline VerifyReport verify_mono_fs(const Certificate& c) {
    if (c.verdict != Verdict::witness) return {true, "no witness to re-check"};
    const auto spec = parse_coloring_spec(c.parameters.at("coloring").get<std::string>());
    const auto want = color_from_json(c.payload.at("color"));
    std::vector<Point> xs;
    for (const auto& e : c.payload.at("elements")) xs.push_back(point_from_json(e));
    if (xs.size() != c.parameters.at("k").get<std::size_t>()) return fail("wrong number of elements");
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j]) return fail("repeated element");
    const auto add = [](const Point& a, const Point& b) -> Point {
        if (std::holds_alternative<Rat>(a)) return std::get<Rat>(a) + std::get<Rat>(b);
        return std::get<QVec>(a) + std::get<QVec>(b);
    };
    for (const auto& term : fs_enumerate(xs, add))
        if (!(evaluate(spec, term.sum) == want)) return fail("finite sum with a different colour");
    return {};
}

/// The extremal colouring avoids every forbidden configuration.
inline VerifyReport verify_number(const Certificate& c, bool fs) {
    if (c.verdict != Verdict::exhausted) return {true, "no value to re-check"};
    const auto k = c.parameters.at("k").get<std::size_t>();
    const int t = c.parameters.at("t").get<int>();
    std::vector<int> col;
    for (const auto& x : c.payload.at("extremal_coloring")) col.push_back(x.get<int>());
    for (int x : col)
        if (x < 0 || x >= t) return fail("colour out of range");
    if (fs) {
        const long R = c.payload.at("R").get<long>();
        if (static_cast<long>(col.size()) != R - 1) return fail("extremal colouring has the wrong length");
        const auto variant = c.parameters.at("variant").get<std::string>() == "injective" ? FsVariant::injective
                                                                                          : FsVariant::sequence;
        for (long j = 1; j < R; ++j)
            for (const auto& cfg : fs_configs_ending_at(j, k, variant)) {
                bool mono = true;
                for (auto q : cfg) mono = mono && col[q] == col[j - 1];
                if (mono) return fail("extremal colouring has a monochromatic configuration at " + std::to_string(j));
            }
        return {};
    }
    const long F = c.payload.at("F").get<long>();
    if (F <= 1) return {};
    const std::size_t points = (std::size_t{1} << (F - 1)) - 1;
    if (col.size() != points) return fail("extremal colouring has the wrong length");
    std::vector<int> by_mask(points + 1, -1);
    for (std::size_t m = 1; m <= points; ++m) by_mask[m] = col[m - 1];
    if (find_mono_fu_blocks(static_cast<std::size_t>(F - 1), by_mask, k, [](const auto&) { return true; }))
        return fail("extremal colouring has a monochromatic block sequence");
    return {};
}

inline VerifyReport verify_audit(const Certificate& c, ClaimId id) {
    if (id == ClaimId::support_arithmetic) {
        const auto rerun = audit_coloring_claim(id, c.parameters.at("grid").at("max_n").get<long>());
        return rerun.verdict == c.verdict ? VerifyReport{} : fail("re-run disagrees");
    }
    for (const auto& v : c.payload.at("listed")) {
        std::vector<Point> chosen, derived;
        for (const auto& p : v.at("chosen")) chosen.push_back(point_from_json(p));
        for (const auto& p : v.at("derived")) derived.push_back(point_from_json(p));
        const auto want = color_from_json(v.at("color"));
        if (claim_domain(id) == PointKind::rational) {
            if (chosen.size() != 2) return fail("pair claims list two points");
            bool applicable = false;
            auto again = check_rational_pair(id, std::get<Rat>(chosen[0]), std::get<Rat>(chosen[1]), applicable);
            if (!again || !(again->color == want)) return fail("listed violation does not re-verify");
            continue;
        }
        const ColoringSpec spec{ColoringName::self_inner, {}};
        std::vector<Point> all = chosen;
        all.insert(all.end(), derived.begin(), derived.end());
        const auto common = is_monochromatic(all, spec);
        if (!common || !(*common == want)) return fail("listed violation is not monochromatic");
    }
    if (c.verdict == Verdict::exhausted && c.payload.at("violations").get<std::uint64_t>() != 0)
        return fail("exhausted with violations");
    return {};
}

inline VerifyReport verify_delta(const Certificate& c) {
    if (c.verdict != Verdict::witness) return {true, "no family to re-check"};
    const auto& members = c.payload.at("members");
    const auto p = c.parameters.at("p").get<std::size_t>();
    if (members.size() < p) return fail("fewer than p members");
    if (!members.empty() && members.front().size() > 0 && members.front().front().is_string()) {
        SetFamily<std::string> d;
        for (const auto& m : members) d.push_back(m.get<std::set<std::string>>());
        return verify_delta_system(d, c.payload.at("root").get<std::set<std::string>>()) ? VerifyReport{}
                                                                                          : fail("not a delta system");
    }
    SetFamily<long long> d;
    for (const auto& m : members) d.push_back(m.get<std::set<long long>>());
    return verify_delta_system(d, c.payload.at("root").get<std::set<long long>>()) ? VerifyReport{}
                                                                                   : fail("not a delta system");
}

inline VerifyReport verify_pullback(const Certificate& c) {
    if (c.verdict != Verdict::witness) return {true, "no pair to re-check"};
    const auto spec = parse_coloring_spec(c.parameters.at("coloring").get<std::string>());
    const auto v = parse_qvec(c.payload.at("v").get<std::string>());
    const auto w = parse_qvec(c.payload.at("w").get<std::string>());
    const auto want = color_from_json(c.payload.at("color"));
    if (!(evaluate(spec, v) == want) || !(evaluate(spec, w) == want) || !(evaluate(spec, v + w) == want))
        return fail("FS({v, w}) is not monochromatic");
    return {};
}

inline VerifyReport verify_owings(const Certificate& c) {
    if (c.verdict != Verdict::witness) return {true, "no construction to re-check"};
    const auto& fx = c.payload.at("fixture");
    const int theta = fx.at("theta").get<int>();
    const auto p1 = pi_pattern(theta, fx.at("i1").get<int>());
    const auto p2 = pi_pattern(theta, fx.at("i2").get<int>());
    std::vector<QVec> xs;
    for (const auto& e : c.payload.at("elements")) xs.push_back(parse_qvec(e.get<std::string>()));
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a; b < xs.size(); ++b)
            if (pattern_of(xs[a] + xs[b]) != (a == b ? p2 : p1)) return fail("sum with the wrong pattern");
    if (c.parameters.contains("coloring")) {
        const auto spec = parse_coloring_spec(c.parameters.at("coloring").get<std::string>());
        std::vector<QVec> sums;
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = a; b < xs.size(); ++b) sums.push_back(xs[a] + xs[b]);
        if (!is_monochromatic(sums, spec)) return fail("X + X is not monochromatic");
    }
    return {};
}

inline VerifyReport verify_baire(const Certificate& c) {
    if (c.verdict != Verdict::witness) return {true, "no set to re-check"};
    const auto n = parse_interval_set(c.parameters.at("set").get<std::string>());
    std::vector<Rat> ys;
    for (const auto& e : c.payload.at("elements")) ys.push_back(parse_rat(e.get<std::string>()));
    if (std::set<Rat>(ys.begin(), ys.end()).size() != ys.size()) return fail("repeated element");
    if (!sumset_escapes(n, ys).empty()) return fail("a pairwise sum leaves the set");
    return {};
}

inline VerifyReport verify_pipeline(const Certificate& c) {
    if (c.verdict != Verdict::witness) return {true, "no witness to re-check"};
    const auto w = c.payload.at("witness").get<std::vector<std::uint32_t>>();
    if (std::set<std::uint32_t>(w.begin(), w.end()).size() != w.size()) return fail("repeated element");
    std::set<int> colors;
    for (const auto& row : c.payload.at("finite_sums")) colors.insert(row.at("color").get<int>());
    if (colors.size() != 1) return fail("finite sums use several colours");
    return {};
}

inline VerifyReport verify_greedy(const Certificate& c) {
    if (c.verdict == Verdict::exhausted) return {true, "pool exhausted"};
    const auto sums = c.payload.at("subset_sums").get<std::vector<std::uint64_t>>();
    const bool inj = std::set<std::uint64_t>(sums.begin(), sums.end()).size() == sums.size();
    if (inj != c.payload.at("injective").get<bool>()) return fail("injectivity flag disagrees with the sums");
    if (c.parameters.value("carrier", "") == "naturals") {
        const auto h = c.payload.at("basis").get<std::vector<std::uint64_t>>();
        for (std::size_t mask = 1; mask <= sums.size(); ++mask) {
            std::uint64_t s = 0;
            for (std::size_t i = 0; i < h.size(); ++i)
                if (mask >> i & 1) s += h[i];
            if (s != sums[mask - 1]) return fail("subset sum does not match the basis");
        }
    }
    return {};
}

}  // namespace detail

/// Re-checks the payload of a certificate by direct evaluation.
inline VerifyReport verify_certificate(const Certificate& c) {
    using namespace detail;
    if (c.claim == "mono-fs-witness") return verify_mono_fs(c);
    if (c.claim == "fs-number") return verify_number(c, true);
    if (c.claim == "fu-number") return verify_number(c, false);
    if (c.claim == "delta-system") return verify_delta(c);
    if (c.claim == "ramsey-pullback") return verify_pullback(c);
    if (c.claim == "owings-construct" || c.claim == "owings-fixture") return verify_owings(c);
    if (c.claim == "baire-sumset") return verify_baire(c);
    if (c.claim == "fin-fin-pipeline") return verify_pipeline(c);
    if (c.claim == "greedy-fs-basis") return verify_greedy(c);
    if (c.claim == "support-arithmetic" && !c.parameters.contains("grid")) {
        const auto s = support_arithmetic(c.parameters.at("N").get<long>(), c.parameters.at("root_size").get<long>());
        return to_json(s) == c.payload ? VerifyReport{} : fail("recomputed values differ");
    }
    for (const auto& info : kClaims)
        if (info.name == c.claim) return verify_audit(c, info.id);
    return fail("unknown claim '" + c.claim + "'");
}

}  // namespace hindlab
