// Command-line front end. Every subcommand produces a certificate; the
// summary on stdout is derived from it.

#include "hindlab/hindlab.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace hindlab;

constexpr int kExitUsage = 64;

struct Common {
    unsigned workers = 1;
    std::string out;
    bool json = false;
    std::uint64_t max_nodes = std::uint64_t{1} << 40;
    std::int64_t max_ms = 30 * 60 * 1000;

    SearchOptions search() const {
        SearchOptions o;
        o.workers = workers;
        o.budget.max_nodes = max_nodes;
        o.budget.max_time = std::chrono::milliseconds(max_ms);
        return o;
    }
};

void add_common(CLI::App* sub, Common& c, bool budgets) {
    sub->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--out", c.out, "write the certificate to this file");
    sub->add_flag("--json", c.json, "print the certificate instead of a summary");
    if (budgets) {
        sub->add_option("--max-nodes", c.max_nodes, "search node budget")->check(CLI::PositiveNumber);
        sub->add_option("--max-ms", c.max_ms, "wall-time budget in milliseconds")->check(CLI::PositiveNumber);
    }
}

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

std::string brief(const Json& v) {
    if (v.is_array() && v.size() > 12) return "[" + std::to_string(v.size()) + " entries]";
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.size() > 160) s = s.substr(0, 157) + "...";
    return s;
}

void print_summary(const Certificate& c) {
    std::cout << "claim         " << c.claim << "\n";
    std::cout << "verdict       " << to_string(c.verdict) << "\n";
    std::cout << "search space  " << c.search_space << "\n";
    std::cout << "elapsed ms    " << c.elapsed_ms << "\n";
    for (const auto& [k, v] : c.parameters.items()) std::cout << "  " << k << " = " << brief(v) << "\n";
    for (const auto& [k, v] : c.payload.items()) std::cout << "  " << k << ": " << brief(v) << "\n";
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::witness:
        case Verdict::exhausted: return 0;
        case Verdict::counterexample: return 1;
        case Verdict::inconclusive: return 2;
    }
    return 2;
}

int emit(const Certificate& cert, const Common& c) {
    if (!c.out.empty()) write_certificate(c.out, cert);
    if (c.json) std::cout << to_text(cert);
    else print_summary(cert);
    return exit_code(cert.verdict);
}

/// naturals, naturals0, cyclic:N, boolean:R or table:PATH.
std::variant<NaturalCarrier, FinSemigroup> parse_carrier(const std::string& s) {
    if (s == "naturals") return NaturalCarrier{false};
    if (s == "naturals0") return NaturalCarrier{true};
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("unknown carrier '" + s + "'");
    const auto kind = s.substr(0, colon), arg = s.substr(colon + 1);
    if (kind == "table") return parse_cayley_table(read_file(arg));
    long n = 0;
    try {
        n = std::stol(arg);
    } catch (const std::exception&) {
        throw ParseError("carrier size must be an integer in '" + s + "'");
    }
    if (kind == "cyclic" && n >= 1 && n <= 8192) return cyclic_group(static_cast<std::size_t>(n));
    if (kind == "boolean" && n >= 0 && n <= 13) return boolean_group(static_cast<unsigned>(n));
    throw ParseError("unknown or out-of-range carrier '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hindlab: exact search and certificates for finite-sum colourings"};
    app.require_subcommand(1);
    Common common;

    // color-eval
    std::string ce_coloring, ce_point;
    auto* ce = app.add_subcommand("color-eval", "evaluate a named colouring at a rational or vector");
    ce->add_option("--coloring", ce_coloring, "colouring spec, e.g. dyadic or self_inner")->required();
    ce->add_option("--point", ce_point, "rational p/q or vector {i:q, ...}")->required();
    add_common(ce, common, false);

    // audit
    std::string au_claim;
    long au_max_den = 5, au_max_val = 4, au_coef = 2, au_max_n = 64;
    unsigned au_dim = 2;
    std::size_t au_listed = 10000;
    auto* au = app.add_subcommand("audit", "exhaustively check a colouring claim on a finite grid");
    au->add_option("--claim", au_claim, "claim name or alias (e.g. thm2.8, thm3.6)")->required();
    au->add_option("--max-den", au_max_den, "rational grid: largest denominator")->check(CLI::PositiveNumber);
    au->add_option("--max-val", au_max_val, "rational grid: largest absolute value")->check(CLI::NonNegativeNumber);
    au->add_option("--dim", au_dim, "vector grid: dimension")->check(CLI::Range(1u, 8u));
    au->add_option("--coef-range", au_coef, "vector grid: coefficients in [-c, c]")->check(CLI::NonNegativeNumber);
    au->add_option("--max-n", au_max_n, "support arithmetic: largest support size")->check(CLI::Range(2l, 4096l));
    au->add_option("--max-listed", au_listed, "violations listed in the certificate");
    add_common(au, common, false);

    // fs-witness
    std::string fw_coloring;
    long fw_max_den = 5, fw_max_val = 4, fw_coef = 2;
    unsigned fw_dim = 2;
    std::size_t fw_k = 2;
    auto* fw = app.add_subcommand("fs-witness", "least k elements of a grid with monochromatic finite sums");
    fw->add_option("--coloring", fw_coloring, "colouring spec")->required();
    fw->add_option("--k", fw_k, "number of elements")->check(CLI::Range(std::size_t{1}, std::size_t{20}));
    fw->add_option("--max-den", fw_max_den)->check(CLI::PositiveNumber);
    fw->add_option("--max-val", fw_max_val)->check(CLI::NonNegativeNumber);
    fw->add_option("--dim", fw_dim)->check(CLI::Range(1u, 8u));
    fw->add_option("--coef-range", fw_coef)->check(CLI::NonNegativeNumber);
    add_common(fw, common, true);

    // fs-number / fu-number
    std::size_t nk = 2;
    int nt = 2;
    std::string fs_variant = "sequence";
    auto* fsn = app.add_subcommand("fs-number", "least R with every t-colouring of {1..R} admitting monochromatic FS");
    fsn->add_option("--k", nk)->check(CLI::Range(std::size_t{1}, std::size_t{12}));
    fsn->add_option("--t", nt)->check(CLI::Range(1, 16));
    fsn->add_option("--variant", fs_variant, "sequence (summands may repeat) or injective")
        ->check(CLI::IsMember({"sequence", "injective"}));
    add_common(fsn, common, true);
    auto* fun = app.add_subcommand("fu-number", "least F with every t-colouring of subsets of F admitting monochromatic FU");
    fun->add_option("--k", nk)->check(CLI::Range(std::size_t{1}, std::size_t{12}));
    fun->add_option("--t", nt)->check(CLI::Range(1, 16));
    add_common(fun, common, true);

    // delta
    std::string dl_input;
    std::size_t dl_p = 3;
    auto* dl = app.add_subcommand("delta", "extract a delta-system from a set family");
    dl->add_option("--input", dl_input, "file with one set per line ('-' for stdin)")->required();
    dl->add_option("--p", dl_p, "target size")->check(CLI::PositiveNumber);
    add_common(dl, common, false);

    // greedy-basis
    std::string gb_carrier = "naturals", gb_rule = "injective";
    std::size_t gb_count = 6;
    auto* gb = app.add_subcommand("greedy-basis", "greedy sequence with injective subset sums");
    gb->add_option("--carrier", gb_carrier, "naturals, naturals0, cyclic:N, boolean:R or table:PATH");
    gb->add_option("--count", gb_count, "number of elements F")->check(CLI::Range(std::size_t{1}, std::size_t{20}));
    gb->add_option("--rule", gb_rule)->check(CLI::IsMember({"injective", "literal"}));
    add_common(gb, common, false);

    // pipeline
    std::string pl_group = "cyclic:2048", pl_coloring = "parity";
    std::size_t pl_k = 2;
    int pl_t = 2;
    long pl_assume = 0;
    auto* pl = app.add_subcommand("pipeline", "finite semigroup witness via the monogenic / greedy basis split");
    pl->add_option("--group", pl_group, "cyclic:N, boolean:R or table:PATH");
    pl->add_option("--coloring", pl_coloring, "parity, popcount, or file:PATH with one colour per element")
        ->capture_default_str();
    pl->add_option("--k", pl_k)->check(CLI::Range(std::size_t{1}, std::size_t{8}));
    pl->add_option("--t", pl_t)->check(CLI::Range(1, 8));
    pl->add_option("--assume-f", pl_assume, "F to use if fu-number runs out of budget")->check(CLI::Range(1l, 20l));
    add_common(pl, common, true);

    // pullback
    std::size_t pb_kappa = 6;
    std::string pb_coloring = "self_inner";
    auto* pb = app.add_subcommand("pullback", "monochromatic FS({v, w}) from a homogeneous triple of basis indices");
    pb->add_option("--kappa", pb_kappa, "number of basis vectors")->check(CLI::Range(std::size_t{3}, std::size_t{64}));
    pb->add_option("--coloring", pb_coloring, "vector colouring spec");
    add_common(pb, common, false);

    // owings-construct
    int ow_theta = 2, ow_i1 = 0, ow_i2 = 1;
    std::size_t ow_count = 20, ow_kappa = 0, ow_size = 0;
    std::string ow_from;
    auto* ow = app.add_subcommand("owings-construct", "elements X with every x + y of one of two coefficient patterns");
    ow->add_option("--theta", ow_theta, "number of colours")->check(CLI::Range(1, 16));
    ow->add_option("--i1", ow_i1)->check(CLI::NonNegativeNumber);
    ow->add_option("--i2", ow_i2)->check(CLI::NonNegativeNumber);
    ow->add_option("--count", ow_count, "number of elements")->check(CLI::Range(std::size_t{2}, std::size_t{10000}));
    ow->add_option("--from-coloring", ow_from, "derive i1, i2 and the basis from this vector colouring");
    ow->add_option("--kappa", ow_kappa, "index budget for --from-coloring");
    ow->add_option("--size", ow_size, "homogeneous set size (default theta*(count+1))");
    add_common(ow, common, true);

    // baire-construct
    std::string bc_set = "(0,1)";
    std::size_t bc_n = 10;
    auto* bc = app.add_subcommand("baire-construct", "rationals X with X + X inside an interval set");
    bc->add_option("--set", bc_set, "e.g. '(0,1) ∖ {1/2}' or '(0,1) \\ {1/2}'");
    bc->add_option("--n", bc_n, "number of elements")->check(CLI::Range(std::size_t{1}, std::size_t{5000}));
    add_common(bc, common, false);

    // verify
    std::string vf_cert;
    auto* vf = app.add_subcommand("verify", "re-check a certificate file by direct evaluation");
    vf->add_option("--cert", vf_cert, "certificate path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ce) {
            const auto spec = parse_coloring_spec(ce_coloring);
            Point p = ce_point.find('{') != std::string::npos ? Point(parse_qvec(ce_point)) : Point(parse_rat(ce_point));
            Certificate cert;
            cert.claim = "color-eval";
            cert.parameters = {{"coloring", to_string(spec)}, {"point", ce_point}};
            cert.verdict = Verdict::witness;
            cert.payload = {{"color", color_to_json(evaluate(spec, p))}, {"text", to_string(evaluate(spec, p))}};
            return emit(cert, common);
        }
        if (*au) {
            const auto id = parse_claim(au_claim);
            AuditGrid grid;
            if (id == ClaimId::support_arithmetic) grid = au_max_n;
            else if (claim_domain(id) == PointKind::vector) grid = VectorGrid{au_dim, au_coef};
            else grid = RationalGrid{au_max_den, au_max_val};
            return emit(audit_coloring_claim(id, grid, {common.workers, au_listed}), common);
        }
        if (*fw) {
            const auto spec = parse_coloring_spec(fw_coloring);
            if (spec.domain() == PointKind::rational) {
                const RationalGrid g{fw_max_den, fw_max_val};
                return emit(mono_fs_witness_certificate(enumerate(g), {{"max_den", g.max_den}, {"max_val", g.max_val}},
                                                        spec, fw_k, common.search()),
                            common);
            }
            const VectorGrid g{fw_dim, fw_coef};
            return emit(mono_fs_witness_certificate(enumerate(g), {{"dim", g.dim}, {"coef_range", g.coef_range}},
                                                    spec, fw_k, common.search()),
                        common);
        }
        if (*fsn)
            return emit(fs_number_certificate(nk, nt, fs_variant == "injective" ? FsVariant::injective
                                                                                 : FsVariant::sequence,
                                              common.search()),
                        common);
        if (*fun) return emit(fu_number_certificate(nk, nt, common.search()), common);
        if (*dl) {
            const auto fam = parse_set_family(read_file(dl_input));
            return emit(fam.numeric ? delta_certificate(fam.ints, dl_p) : delta_certificate(fam.strings, dl_p), common);
        }
        if (*gb) {
            const auto start = std::chrono::steady_clock::now();
            const auto rule = gb_rule == "literal" ? GreedyRule::literal : GreedyRule::injective;
            const Json params = {{"carrier", gb_carrier.rfind("naturals", 0) == 0 ? "naturals" : gb_carrier},
                                 {"count", gb_count},
                                 {"rule", std::string(to_string(rule))}};
            const auto carrier = parse_carrier(gb_carrier);
            if (const auto* n = std::get_if<NaturalCarrier>(&carrier)) {
                auto params_n = params;
                params_n["with_zero"] = n->with_zero;
                return emit(greedy_basis_certificate(greedy_fs_basis<std::uint64_t>(*n, gb_count, natural_pool(*n), rule),
                                                     params_n, start),
                            common);
            }
            const auto& g = std::get<FinSemigroup>(carrier);
            return emit(greedy_basis_certificate(greedy_fs_basis<Elem>(g, gb_count, table_pool(g), rule), params, start),
                        common);
        }
        if (*pl) {
            const auto carrier = parse_carrier(pl_group);
            const auto* g = std::get_if<FinSemigroup>(&carrier);
            if (!g) throw ParseError("pipeline needs a finite semigroup");
            std::vector<int> col;
            if (pl_coloring == "parity") col = parity_coloring(g->order());
            else if (pl_coloring == "popcount") col = popcount_parity_coloring(g->order());
            else if (pl_coloring.rfind("file:", 0) == 0) {
                std::istringstream in(read_file(pl_coloring.substr(5)));
                for (int x; in >> x;) col.push_back(x);
            } else {
                throw ParseError("unknown pipeline colouring '" + pl_coloring + "'");
            }
            PipelineOptions po;
            po.search = common.search();
            if (pl_assume > 0) po.assumed_f = pl_assume;
            auto cert = fin_fin_pipeline(*g, col, pl_k, pl_t, po);
            cert.parameters["group"] = pl_group;
            cert.parameters["coloring"] = pl_coloring;
            return emit(cert, common);
        }
        if (*pb) return emit(ramsey_pullback_certificate(pb_kappa, parse_coloring_spec(pb_coloring)), common);
        if (*ow) {
            if (!ow_from.empty()) {
                if (ow_kappa == 0) throw ParseError("--from-coloring needs --kappa");
                auto cert = owings_fixture_certificate(ow_theta, parse_coloring_spec(ow_from), ow_kappa, ow_count,
                                                       ow_size, common.max_nodes);
                return emit(cert, common);
            }
            PatternFixture f;
            f.theta = ow_theta;
            f.i1 = ow_i1;
            f.i2 = ow_i2;
            f.width = ow_count;
            return emit(owings_certificate(f, ow_count), common);
        }
        if (*bc) return emit(baire_certificate(parse_interval_set(bc_set), bc_n), common);
        if (*vf) {
            const auto cert = certificate_from_json(Json::parse(read_file(vf_cert)));
            const auto r = verify_certificate(cert);
            std::cout << (r.ok ? "ok" : "FAILED") << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
            return r.ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        std::cerr << "usage error: malformed certificate: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
