// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "gen.hpp"
#include "hindlab/hindlab.hpp"
#include "oracles/baire_frozen.hpp"
#include "oracles/naive.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hindlab;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

SearchOptions workers(unsigned w) {
    SearchOptions o;
    o.workers = w;
    return o;
}

// ---------------------------------------------------------------------------

Outcome same_sign_suite() {
    const auto c = audit_coloring_claim(ClaimId::dyadic_same_sign, RationalGrid{6, 8});
    if (c.verdict != Verdict::exhausted) return fail(c.payload.at("violations").dump() + " violations");
    return {true, std::to_string(c.search_space) + " applicable pairs, 0 violations"};
}

Outcome mixed_sign_and_signed() {
    const RationalGrid g{6, 8};
    const auto all = audit_coloring_claim(ClaimId::dyadic_all_pairs, g);
    bool seen = false;
    for (const auto& v : all.payload.at("listed")) {
        const auto ch = v.at("chosen");
        if (ch.at(0) == "-3/5" && ch.at(1) == "17/5" && v.at("derived").at(0) == "14/5" &&
            v.at("color") == Json{{"int", 1}})
            seen = true;
    }
    if (!seen) return fail("(17/5, -3/5, 14/5) not reported");
    const auto sig = audit_coloring_claim(ClaimId::signed_dyadic, g);
    if (sig.verdict != Verdict::exhausted) return fail("signed variant has violations");
    return {true, "tuple found among " + all.payload.at("violations").dump() + " all-pairs violations; signed: 0"};
}

Outcome self_inner_triples() {
    for (const auto& g : {VectorGrid{2, 2}, VectorGrid{3, 1}}) {
        const auto c = audit_coloring_claim(ClaimId::self_inner_triples, g);
        if (c.verdict != Verdict::exhausted) return fail("violation on dim " + std::to_string(g.dim));
    }
    return {true, "dim 2 [-2,2] and dim 3 [-1,1]: 0 violations"};
}

Outcome self_inner_pairs() {
    for (const auto& g : {VectorGrid{2, 2}, VectorGrid{3, 1}}) {
        const auto c = audit_coloring_claim(ClaimId::self_inner_pair_sums, g);
        if (c.verdict != Verdict::exhausted) return fail("violation on dim " + std::to_string(g.dim));
    }
    return {true, "dim 2 [-2,2] and dim 3 [-1,1]: 0 violations"};
}

Outcome fs_numbers() {
    std::ostringstream note;
    for (auto [t, want] : {std::pair{2, 5}, std::pair{3, 14}}) {
        const auto c = fs_number_certificate(2, t, FsVariant::sequence);
        if (c.verdict != Verdict::exhausted) return fail("engine inconclusive for t=" + std::to_string(t));
        const long got = c.payload.at("R").get<long>();
        const int naive = oracle::naive_fs_number(2, t, false, 16);
        if (got != want || naive != want)
            return fail("t=" + std::to_string(t) + ": engine " + std::to_string(got) + ", oracle " +
                        std::to_string(naive));
        if (!verify_certificate(c).ok) return fail("extremal colouring does not re-verify");
        note << "fs(2," << t << ")=" << got << " ";
    }
    note << "(oracle agrees, extremal colourings re-verify)";
    return {true, note.str()};
}

Outcome fu_numbers() {
    const auto r1 = fu_number(2, 1);
    const bool o1 = !oracle::naive_fu_every_colouring_mono(1, 2, 1) && oracle::naive_fu_every_colouring_mono(2, 2, 1);
    if (r1.value != 2 || !o1) return fail("fu(2,1) = " + std::to_string(r1.value));
    const int v = oracle::naive_fu_number_2_2(5);
    const auto r2 = fu_number_certificate(2, 2);
    if (r2.verdict != Verdict::exhausted) return fail("engine inconclusive for fu(2,2)");
    const long got = r2.payload.at("F").get<long>();
    if (got != v) return fail("fu(2,2): engine " + std::to_string(got) + ", oracle " + std::to_string(v));
    if (!verify_certificate(r2).ok) return fail("extremal colouring does not re-verify");
    return {true, "fu(2,1)=2, fu(2,2)=" + std::to_string(got) + " (naive oracle V=" + std::to_string(v) + ")"};
}

Outcome pair_ramsey() {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b) edges.emplace_back(a, b);
    std::size_t idx[6][6];
    for (std::size_t e = 0; e < edges.size(); ++e) idx[edges[e].first][edges[e].second] = e;
    for (std::uint32_t bits = 0; bits < (1u << 15); ++bits) {
        auto pc = [&](std::size_t i, std::size_t j) { return int(bits >> idx[i][j] & 1); };
        const auto h = pair_ramsey_homogeneous(6, pc, 3);
        if (!h) return fail("no homogeneous triple for edge colouring " + std::to_string(bits));
        const auto& s = *h;
        if (pc(s[0], s[1]) != pc(s[0], s[2]) || pc(s[0], s[2]) != pc(s[1], s[2]))
            return fail("returned triple is not homogeneous");
    }
    auto pentagon = [](std::size_t i, std::size_t j) {
        const auto d = (j - i) % 5;
        return d == 1 || d == 4 ? 0 : 1;
    };
    if (pair_ramsey_homogeneous(5, pentagon, 3)) return fail("pentagon colouring has a triple");
    return {true, "32768 colourings of K6 homogeneous, pentagon none"};
}

SetFamily<int> uniform_family(gen::Rng& rng, std::size_t n, std::size_t count, int ground) {
    std::set<std::set<int>> seen;
    SetFamily<int> out;
    while (out.size() < count) {
        std::set<int> s;
        while (s.size() < n) s.insert(static_cast<int>(gen::integer(rng, 0, ground - 1)));
        if (seen.insert(s).second) out.push_back(s);
    }
    return out;
}

std::size_t choose(std::size_t m, std::size_t n) {
    std::size_t c = 1;
    for (std::size_t j = 0; j < n; ++j) c = c * (m - j) / (j + 1);
    return c;
}

/// The families used by the delta criterion, in a fixed order.
std::vector<std::pair<SetFamily<int>, std::size_t>> delta_families() {
    gen::Rng rng(2026);
    std::vector<std::pair<SetFamily<int>, std::size_t>> out;
    for (int round = 0; out.size() < 200; ++round)
        for (std::size_t n = 1; n <= 3 && out.size() < 200; ++n)
            for (std::size_t p = 2; p <= 4 && out.size() < 200; ++p) {
                std::size_t threshold = p - 1;
                for (std::size_t j = 2; j <= n; ++j) threshold = threshold * j * (p - 1);
                const std::size_t count = threshold + 1 + static_cast<std::size_t>(gen::integer(rng, 0, 8));
                std::size_t ground = n + 1;
                while (choose(ground, n) < count) ++ground;
                ground += static_cast<std::size_t>(gen::integer(rng, 0, 5));
                out.emplace_back(uniform_family(rng, n, count, static_cast<int>(ground)), p);
            }
    return out;
}

Outcome delta_systems() {
    const auto fams = delta_families();
    for (std::size_t i = 0; i < fams.size(); ++i) {
        const auto& [fam, p] = fams[i];
        const auto d = extract_delta_system(fam, p);
        if (!d || d->members.size() < p || !verify_delta_system(members_of(fam, *d), d->root))
            return fail("family " + std::to_string(i) + " (p=" + std::to_string(p) + ") failed");
    }
    gen::Rng rng(2027);
    std::size_t compared = 0;
    for (int i = 0; i < 300; ++i) {
        const auto n = static_cast<std::size_t>(gen::integer(rng, 1, 3));
        const auto ground = n + static_cast<std::size_t>(gen::integer(rng, 1, 6));
        const auto count = std::min<std::size_t>(static_cast<std::size_t>(gen::integer(rng, 2, 12)), choose(ground, n));
        const auto fam = uniform_family(rng, n, count, static_cast<int>(ground));
        const auto best = oracle::max_delta_subsystem({fam.begin(), fam.end()});
        for (std::size_t p = 2; p <= 5; ++p, ++compared) {
            const auto d = extract_delta_system(fam, p);
            if (d.has_value() != (best >= p))
                return fail("small family " + std::to_string(i) + " p=" + std::to_string(p) + " disagrees with oracle");
            if (d && !verify_delta_system(members_of(fam, *d), d->root)) return fail("invalid system");
        }
    }
    return {true, "200 threshold families valid; " + std::to_string(compared) + " small cases agree with oracle"};
}

Outcome support_arith() {
    std::size_t n = 0;
    for (long N = 2; N <= 64; ++N)
        for (long r = 1; r < N; ++r, ++n) {
            const auto c = support_arithmetic_check(N, r);
            if (c.verdict != Verdict::witness)
                return fail("N=" + std::to_string(N) + " root=" + std::to_string(r));
        }
    return {true, std::to_string(n) + " (N, root size) pairs"};
}

Outcome owings() {
    std::size_t fixtures = 0;
    for (int theta = 1; theta <= 3; ++theta)
        for (int i1 = 0; i1 <= theta; ++i1)
            for (int i2 = i1 + 1; i2 <= theta; ++i2, ++fixtures) {
                PatternFixture f;
                f.theta = theta;
                f.i1 = i1;
                f.i2 = i2;
                f.width = 20;
                // fixture colouring: pi_{i1} and pi_{i2} share colour 0, every other pattern gets 1
                const auto p1 = pi_pattern(theta, i1), p2 = pi_pattern(theta, i2);
                auto c = [&](const QVec& v) -> ColorValue {
                    const auto p = pattern_of(v);
                    return IntColor{p == p1 || p == p2 ? 0 : 1};
                };
                const auto r = owings_pattern_construct(f, 20, c);
                if (!r.ok())
                    return fail("theta=" + std::to_string(theta) + " (" + std::to_string(i1) + "," +
                                std::to_string(i2) + ")");
            }
    return {true, std::to_string(fixtures) + " fixtures, m = 20"};
}

Outcome baire() {
    for (const auto& [text, want] : {std::pair{"(0,1)", &frozen::k_open_unit},
                                     std::pair{"(0,1) ∖ {1/2}", &frozen::k_open_unit_minus_half}}) {
        const auto n = parse_interval_set(text);
        const auto r = baire_sumset_construct(n, 50);
        if (!sumset_escapes(n, r.y).empty()) return fail(std::string(text) + ": X+X leaves N");
        std::vector<std::string> got;
        for (const auto& y : r.y) got.push_back(to_string(y));
        if (got != *want) return fail(std::string(text) + ": differs from frozen oracle output");
    }
    return {true, "n = 50 for both sets, equal to frozen output"};
}

Outcome greedy_and_pipeline() {
    const NaturalCarrier nat{false};
    const auto b = greedy_fs_basis<std::uint64_t>(nat, 6, natural_pool(nat));
    if (!subset_sums_injective(b) || b.sums.size() != 63) return fail("subset sums not injective");
    const auto c1 = fin_fin_pipeline(cyclic_group(2048), parity_coloring(2048), 2, 2);
    if (c1.verdict != Verdict::witness || c1.payload.at("case") != 1 || !verify_certificate(c1).ok)
        return fail("case 1 fixture");
    const auto g2 = boolean_group(11);
    const auto col = popcount_parity_coloring(g2.order());
    const auto c2 = fin_fin_pipeline(g2, col, 2, 2);
    if (c2.verdict != Verdict::witness || c2.payload.at("case") != 2 || !verify_certificate(c2).ok)
        return fail("case 2 fixture");
    const auto w = c2.payload.at("witness").get<std::vector<Elem>>();
    if (w[0] == w[1] || col[w[0]] != col[w[1]] || col[g2.add(w[0], w[1])] != col[w[0]])
        return fail("case 2 witness does not re-verify");
    return {true, "basis " + Json(b.h).dump() + "; case 1 witness " + c1.payload.at("witness").dump() +
                      ", case 2 witness " + c2.payload.at("witness").dump()};
}

/// Every certificate the suite produces, with the given worker count.
std::vector<Certificate> all_certificates(unsigned w) {
    std::vector<Certificate> out;
    const AuditOptions ao{w, 10000};
    out.push_back(audit_coloring_claim(ClaimId::dyadic_same_sign, RationalGrid{6, 8}, ao));
    out.push_back(audit_coloring_claim(ClaimId::dyadic_all_pairs, RationalGrid{6, 8}, ao));
    out.push_back(audit_coloring_claim(ClaimId::signed_dyadic, RationalGrid{6, 8}, ao));
    for (const auto& g : {VectorGrid{2, 2}, VectorGrid{3, 1}}) {
        out.push_back(audit_coloring_claim(ClaimId::self_inner_triples, g, ao));
        out.push_back(audit_coloring_claim(ClaimId::self_inner_pair_sums, g, ao));
    }
    out.push_back(audit_coloring_claim(ClaimId::support_arithmetic, 64L, ao));
    out.push_back(fs_number_certificate(2, 2, FsVariant::sequence, workers(w)));
    out.push_back(fs_number_certificate(2, 3, FsVariant::sequence, workers(w)));
    out.push_back(fu_number_certificate(2, 1, workers(w)));
    out.push_back(fu_number_certificate(2, 2, workers(w)));
    const auto fams = delta_families();
    for (std::size_t i = 0; i < fams.size(); i += 20) out.push_back(delta_certificate(fams[i].first, fams[i].second));
    out.push_back(support_arithmetic_check(64, 17));
    for (int theta = 1; theta <= 3; ++theta) {
        PatternFixture f;
        f.theta = theta;
        f.i1 = 0;
        f.i2 = theta;
        f.width = 20;
        out.push_back(owings_certificate(f, 20));
    }
    out.push_back(baire_certificate(parse_interval_set("(0,1)"), 50));
    out.push_back(baire_certificate(parse_interval_set("(0,1) ∖ {1/2}"), 50));
    const NaturalCarrier nat{false};
    out.push_back(greedy_basis_certificate(greedy_fs_basis<std::uint64_t>(nat, 6, natural_pool(nat)),
                                           {{"carrier", "naturals"}, {"count", 6}}, std::chrono::steady_clock::now()));
    PipelineOptions po;
    po.search = workers(w);
    out.push_back(fin_fin_pipeline(cyclic_group(2048), parity_coloring(2048), 2, 2, po));
    out.push_back(fin_fin_pipeline(boolean_group(11), popcount_parity_coloring(2048), 2, 2, po));
    out.push_back(ramsey_pullback_certificate(6, parse_coloring_spec("self_inner")));
    return out;
}

Outcome determinism() {
    const auto base = all_certificates(1);
    for (unsigned w : {2u, 8u}) {
        const auto other = all_certificates(w);
        if (other.size() != base.size()) return fail("certificate count differs");
        for (std::size_t i = 0; i < base.size(); ++i)
            if (to_text_untimed(base[i]) != to_text_untimed(other[i]))
                return fail(base[i].claim + " differs between 1 and " + std::to_string(w) + " workers");
    }
    return {true, std::to_string(base.size()) + " certificates identical across 1, 2, 8 workers"};
}

struct Criterion {
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"dyadic same-sign suite (den <= 6, |r| <= 8)", 10, same_sign_suite},
        {"mixed-sign tuple found, signed dyadic all-pairs clean", 10, mixed_sign_and_signed},
        {"self-inner triples suite", 60, self_inner_triples},
        {"self-inner pair-sum suite", 30, self_inner_pairs},
        {"fs_number(2,2) = 5, fs_number(2,3) = 14 vs naive oracle", 300, fs_numbers},
        {"fu_number(2,1) = 2, fu_number(2,2) vs naive oracle", 600, fu_numbers},
        {"pair Ramsey: K6 always, pentagon never", 10, pair_ramsey},
        {"delta-system extraction", 30, delta_systems},
        {"support arithmetic, N <= 64", 5, support_arith},
        {"Owings pattern construction, theta <= 3, m = 20", 5, owings},
        {"Baire sumset construction, n = 50", 5, baire},
        {"greedy basis on N (F = 6) and pipeline fixtures", 10, greedy_and_pipeline},
        {"determinism across 1, 2, 8 workers", 600, determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.limit_s) o = fail("took longer than " + std::to_string(static_cast<int>(c.limit_s)) + " s");
        failed += !o.ok;
        char head[160];
        std::snprintf(head, sizeof head, "%s [%2zu] %-58s %8.2f s  ", o.ok ? "PASS" : "FAIL", i + 1, c.name.c_str(), secs);
        std::cout << head << o.note << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
