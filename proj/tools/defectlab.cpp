// defectlab: scenario files in, deterministic JSON/CSV reports out.
//
// Exit codes: 0 all requested checks pass, 1 input error, 2 check failure,
// 64 usage error.

#include <cstdio>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "defectlab/bounds.hpp"
#include "defectlab/filtration.hpp"
#include "defectlab/gaussmap.hpp"
#include "defectlab/ideal.hpp"
#include "defectlab/nevanlinna.hpp"
#include "defectlab/position.hpp"
#include "defectlab/selftest.hpp"
#include "defectlab/serialization.hpp"
#include "defectlab/unipoly.hpp"
#include "defectlab/wronskian.hpp"

namespace {

using namespace defectlab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheck = 2;
constexpr int kExitUsage = 64;

struct GridOpts {
    std::string spec = "geom:2,64,24";
    double r0 = 1.0;
    std::size_t nodes = 4096;
};

void add_grid_options(CLI::App* cmd, GridOpts& g) {
    cmd->add_option("--grid", g.spec, "radius grid as geom:LO,HI,COUNT")
        ->capture_default_str();
    cmd->add_option("--r0", g.r0, "base radius r_0")->capture_default_str();
    cmd->add_option("--nodes", g.nodes, "quadrature nodes per circle (power of two >= 256)")
        ->capture_default_str();
}

RGrid make_grid(const GridOpts& g) {
    double lo = 0.0, hi = 0.0;
    unsigned long count = 0;
    require(std::sscanf(g.spec.c_str(), "geom:%lf,%lf,%lu", &lo, &hi, &count) == 3,
            ErrorKind::InvalidInput, "grid spec must look like geom:2,64,24");
    return RGrid::geometric(lo, hi, static_cast<std::size_t>(count), g.r0, g.nodes);
}

// Serialized output: single JSON report on stdout, or report.json in --out.
void emit_report(const Json& report, const std::string& out_dir) {
    const std::string text = report.dump(2) + "\n";
    if (out_dir.empty())
        std::fputs(text.c_str(), stdout);
    else
        save_text(out_dir + "/report.json", text);
}

Json tail_header(const std::string& command, std::uint64_t seed) {
    Json j;
    j["command"] = command;
    j["seed"] = seed;
    return j;
}

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

// --- bounds ------------------------------------------------------------------

struct BoundsArgs {
    int n = 0, k = 0, d = 0;
    std::string eps = "1", rho = "0", b;
    std::uint64_t seed = 0;
    std::string out;
};

int run_bounds(const BoundsArgs& a) {
    const Rational eps = Rational::parse(a.eps);
    const Rational rho = Rational::parse(a.rho);
    const ParameterSet ps = theorem_parameters(a.n, a.k, a.d, eps, rho);
    const LemmaNewReport lemma =
        a.b.empty() ? verify_lemma_new(ps) : verify_lemma_new(ps, Rational::parse(a.b));
    const ComparisonDisplay cmp = comparison_parameters(a.n, a.k, a.d, eps);

    Json j = tail_header("bounds", a.seed);
    j["inputs"] = {{"n", a.n}, {"k", a.k}, {"d", a.d}, {"eps", eps.str()}, {"rho", rho.str()}};
    j["p"] = ps.p.get_str();
    j["I"] = ps.I_eps.get_str();
    j["N"] = ps.N.get_str();
    j["u"] = ps.u.get_str();
    j["rhs"] = ps.rhs_full.str();
    j["rhs_base"] = ps.rhs_base.str();
    j["corollary_rhs"] = ps.corollary_rhs.str();
    j["lemma_new"] = {{"weight_b", lemma.b.str()},
                      {"lhs_a", lemma.lhs_a.str()},
                      {"bound_a", lemma.bound_a.str()},
                      {"a", verdict(lemma.a_pass)},
                      {"rhs_b_low", lemma.rhs_b_lo.str()},
                      {"rhs_b_high", lemma.rhs_b_hi.str()},
                      {"b", verdict(lemma.b_pass)},
                      {"roundings_agree", lemma.roundings_agree}};
    j["comparison"] = {{"N", cmp.N.get_str()}, {"u_bound", cmp.u_bound.str()}};
    emit_report(j, a.out);
    return (lemma.a_pass && lemma.b_pass && lemma.roundings_agree) ? kExitOk : kExitCheck;
}

// --- check-position ----------------------------------------------------------

struct PositionArgs {
    std::string family;
    int k = -1;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_check_position(const PositionArgs& a) {
    HypersurfaceFamily fam = family_from_json(load_json(a.family));
    const int k = a.k >= 0 ? a.k : fam.k;
    auto [norm, d] = normalize_degrees(fam);
    const PositionCheck pc = check_subgeneral(norm, k);

    Json j = tail_header("check-position", a.seed);
    j["n"] = norm.n;
    j["k"] = k;
    j["q"] = norm.size();
    j["common_degree"] = d;
    j["verdict"] = pc.holds ? "holds" : "violated";
    j["violating"] = pc.violating;
    if (a.samples > 0) {
        const PositionConstants pcst = position_constants(norm, a.samples, a.seed);
        j["constants"] = {{"alpha_upper", json_double(pcst.alpha)},
                          {"beta_lower", json_double(pcst.beta)},
                          {"samples", pcst.samples},
                          {"floor_warning", pcst.warning}};
    }
    emit_report(j, a.out);
    return pc.holds ? kExitOk : kExitCheck;
}

// --- replace -------------------------------------------------------------------

struct ReplaceArgs {
    std::string family;
    std::vector<std::string> subset;
    std::uint64_t seed = 0;
    std::string out;
};

int run_replace(const ReplaceArgs& a) {
    HypersurfaceFamily fam = family_from_json(load_json(a.family));
    auto [norm, d] = normalize_degrees(fam);
    const std::vector<std::string> subset = a.subset.empty() ? norm.labels : a.subset;
    const ReplacementResult rr = replace_hypersurfaces(norm, subset, a.seed);

    Json j = tail_header("replace", a.seed);
    j["n"] = norm.n;
    j["k"] = norm.k;
    j["common_degree"] = d;
    j["source_labels"] = rr.source_labels;
    Json outputs = Json::array();
    for (const auto& p : rr.outputs) outputs.push_back(p.str());
    j["outputs"] = outputs;
    Json comb = Json::array();
    for (const auto& row : rr.combination) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(c.str());
        comb.push_back(r);
    }
    j["combination"] = comb;
    j["prefix_dimension"] = rr.prefix_dimension;
    j["retries_used"] = rr.retries_used;
    emit_report(j, a.out);
    return kExitOk;
}

// --- filtration -----------------------------------------------------------------

struct FiltrationArgs {
    std::string forms;
    int N = 0;
    bool with_basis = false;
    std::uint64_t seed = 0;
    std::string out;
};

int run_filtration(const FiltrationArgs& a) {
    const HypersurfaceFamily fam = family_from_json(load_json(a.forms));
    const FiltrationTable table = build_filtration(fam.members, a.N, true);
    const CzReport cz = verify_cz(table);

    Json j = tail_header("filtration", a.seed);
    j["n"] = table.n;
    j["d"] = table.d;
    j["N"] = table.N;
    j["cap"] = table.cap;
    j["u"] = table.u;
    j["chain_length"] = table.tuples.K();
    j["locus_dimension"] = table.locus_dimension;
    j["dims"] = table.dims;
    j["jumps"] = table.jumps;
    j["weights"] = table.weights;
    Json rows = Json::array();
    for (const auto& row : cz.rows)
        rows.push_back({{"tuple", row.tuple},
                        {"m", row.m},
                        {"qualifies", row.qualifies},
                        {"ok", row.ok}});
    j["cz"] = {{"expected", cz.expected}, {"rows", rows}, {"verdict", verdict(cz.pass)}};
    if (a.with_basis) {
        Json basis = Json::array();
        for (const auto& e : table.basis)
            basis.push_back({{"s", e.s}, {"psi", e.psi.str()}, {"h", e.h.str()}});
        j["basis"] = basis;
    }
    emit_report(j, a.out);
    return cz.pass ? kExitOk : kExitCheck;
}

// --- wronskian --------------------------------------------------------------------

struct WronskianArgs {
    std::string tuple;
    std::uint64_t seed = 0;
    std::string out;
};

bool downward_closed_indices(const std::vector<MultiIndex>& alphas) {
    const std::set<MultiIndex> have(alphas.begin(), alphas.end());
    for (const auto& a : alphas)
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > 0) {
                MultiIndex b = a;
                --b[i];
                if (have.find(b) == have.end()) return false;
            }
    return true;
}

int run_wronskian(const WronskianArgs& a) {
    const Json in = load_json(a.tuple);
    require(in.contains("m") && in.contains("entries"), ErrorKind::InvalidInput,
            "tuple file needs fields m and entries");
    SymbolicTuple F;
    F.m = in["m"].get<int>();
    for (const auto& e : in["entries"]) F.entries.push_back(mpoly_from_json(e));
    F.validate();

    const AdmissibleSet A = admissible_search(F);
    const MPoly W = wronskian_symbolic(F, A);

    // Scaling identity W(hF) = h^{L+1} W(F) with h = 1 + z_1; exact for
    // downward-closed index sets (which the greedy search produces).
    std::string scaling = "skipped: index set not downward closed";
    bool scaling_ok = true;
    if (downward_closed_indices(A.alphas)) {
        MPoly h = MPoly::constant(F.m, Rational(1)) + MPoly::variable(F.m, 0);
        SymbolicTuple hF;
        hF.m = F.m;
        for (const auto& e : F.entries) hF.entries.push_back(h * e);
        scaling_ok =
            wronskian_symbolic(hF, A) == h.pow(static_cast<unsigned>(F.entries.size())) * W;
        scaling = verdict(scaling_ok);
    }

    Json j = tail_header("wronskian", a.seed);
    j["m"] = F.m;
    j["count"] = F.entries.size();
    j["alphas"] = A.alphas;
    j["wronskian"] = W.str();
    j["total_degree"] = W.total_degree();
    j["scaling_identity"] = scaling;
    emit_report(j, a.out);
    return scaling_ok ? kExitOk : kExitCheck;
}

// --- nevanlinna -----------------------------------------------------------------

struct NevanlinnaArgs {
    std::string curve, hyp;
    GridOpts grid;
    long long trunc = 0; // 0 = untruncated
    std::string csv;
    std::uint64_t seed = 0;
    std::string out;
};

int run_nevanlinna(const NevanlinnaArgs& a) {
    const MeromorphicCurve f = curve_from_json(load_json(a.curve));
    const HomPoly Q = hompoly_from_json(load_json(a.hyp));
    const RGrid grid = make_grid(a.grid);
    const std::optional<Int> level =
        a.trunc > 0 ? std::optional<Int>(Int(static_cast<long>(a.trunc))) : std::nullopt;
    const FmtReport rep = fmt_report(f, Q, grid, level, a.seed);

    bool monotone_T = true, monotone_N = true, trunc_le = true;
    for (std::size_t i = 0; i + 1 < rep.r.size(); ++i) {
        monotone_T = monotone_T && rep.T[i + 1] >= rep.T[i] - 1e-9;
        monotone_N = monotone_N && rep.N_full[i + 1] >= rep.N_full[i] &&
                     rep.N_trunc[i + 1] >= rep.N_trunc[i];
    }
    for (std::size_t i = 0; i < rep.r.size(); ++i)
        trunc_le = trunc_le && rep.N_trunc[i] <= rep.N_full[i];
    const bool sandwich = rep.defect >= -1e-3 && rep.defect <= 1.0 + 1e-3;
    const bool pass = monotone_T && monotone_N && trunc_le && sandwich;

    Json j = tail_header("nevanlinna", a.seed);
    j["d"] = rep.d;
    j["truncation"] = rep.truncation_level.get_str();
    j["r"] = json_doubles(rep.r);
    j["T"] = json_doubles(rep.T);
    j["N"] = json_doubles(rep.N_full);
    j["N_trunc"] = json_doubles(rep.N_trunc);
    j["m"] = json_doubles(rep.m);
    j["residual"] = json_doubles(rep.residual);
    j["residual_variation"] = json_double(rep.residual_variation);
    j["defect"] = json_double(rep.defect);
    j["checks"] = {{"monotone_T", verdict(monotone_T)},
                   {"monotone_N", verdict(monotone_N)},
                   {"truncation_le", verdict(trunc_le)},
                   {"defect_sandwich", verdict(sandwich)}};
    j["verdict"] = verdict(pass);

    const std::string csv = profile_csv(rep);
    if (a.csv == "-") {
        std::fputs(csv.c_str(), stdout);
        if (!a.out.empty()) emit_report(j, a.out);
    } else {
        if (!a.csv.empty()) save_text(a.csv, csv);
        emit_report(j, a.out);
    }
    return pass ? kExitOk : kExitCheck;
}

// --- smt -------------------------------------------------------------------------

struct SmtArgs {
    std::string curve, family;
    std::string eps = "1";
    int N = 0;
    std::size_t samples = 10000;
    double radius = 2.0;
    GridOpts grid;
    std::uint64_t seed = 0;
    std::string out;
};

int run_smt(const SmtArgs& a) {
    const MeromorphicCurve f = curve_from_json(load_json(a.curve));
    HypersurfaceFamily fam = family_from_json(load_json(a.family));
    auto [norm, d] = normalize_degrees(fam);
    const RGrid grid = make_grid(a.grid);
    const SmtReport rep =
        smt_margin(f, norm, Rational::parse(a.eps), a.N, grid, a.seed, a.samples, a.radius);

    Json j = tail_header("smt", a.seed);
    j["q"] = norm.size();
    j["common_degree"] = d;
    j["N_custom"] = a.N;
    j["eps"] = Rational::parse(a.eps).str();
    j["b"] = rep.b;
    j["u"] = rep.u;
    j["p"] = rep.p;
    j["p_le_b"] = rep.p_le_b;
    j["vacuous"] = rep.vacuous;
    j["coefficient"] = rep.coefficient_exact.str();
    j["per_subset_weights"] = rep.per_subset_weights;
    j["pointwise"] = {{"samples", rep.pointwise_samples},
                      {"radius", json_double(a.radius)},
                      {"max_gap", json_double(rep.pointwise_max_gap)}};
    j["profile"] = {{"r", json_doubles(rep.r)},
                    {"T", json_doubles(rep.T)},
                    {"sum_counting", json_doubles(rep.sum_counting)},
                    {"margin", json_doubles(rep.margin)}};
    emit_report(j, a.out);
    return rep.p_le_b ? kExitOk : kExitCheck;
}

// --- gauss -----------------------------------------------------------------------

struct GaussArgs {
    std::string immersion, family;
    std::string eps = "1", rho = "0";
    GridOpts grid;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gauss(const GaussArgs& a) {
    const PolyImmersion f = immersion_from_json(load_json(a.immersion));

    Json j = tail_header("gauss", a.seed);
    j["m"] = f.m;
    j["n"] = f.n;

    if (a.family.empty()) {
        const GaussRepresentation g = gauss_map(f);
        j["N_amb"] = g.N_amb;
        j["column_subsets"] = g.column_subsets;
        Json mins = Json::array();
        for (const auto& p : g.pluecker) mins.push_back(p.str());
        j["pluecker"] = mins;
        j["removed_factor"] = g.removed_factor.str();
        j["degenerate"] = g.degenerate;
        emit_report(j, a.out);
        return kExitOk;
    }

    const HypersurfaceFamily fam = family_from_json(load_json(a.family));
    const GaussPipelineReport rep = gauss_defect_pipeline(
        f, fam, Rational::parse(a.eps), Rational::parse(a.rho), make_grid(a.grid));
    j["N_amb"] = rep.gauss.N_amb;
    Json mins = Json::array();
    for (const auto& p : rep.gauss.pluecker) mins.push_back(p.str());
    j["pluecker"] = mins;
    j["removed_factor"] = rep.gauss.removed_factor.str();
    j["params"] = {{"p", rep.params.p.get_str()},
                   {"I", rep.params.I_eps.get_str()},
                   {"N", rep.params.N.get_str()},
                   {"u", rep.params.u.get_str()}};
    Json defects = Json::array();
    for (const auto& row : rep.defects)
        defects.push_back({{"label", row.label}, {"defect", json_double(row.defect)}});
    j["defects"] = defects;
    j["defect_sum"] = json_double(rep.defect_sum);
    j["rhs"] = rep.rhs.str();
    j["holds"] = rep.holds;
    j["position_checked"] = rep.position_checked;
    j["display_bound"] = rep.display_bound.get_str();
    j["display_bound_holds"] = rep.display_bound_holds;
    j["note"] = rep.note;
    emit_report(j, a.out);
    return (rep.holds && rep.display_bound_holds) ? kExitOk : kExitCheck;
}

// --- selftest --------------------------------------------------------------------

struct SelftestArgs {
    int only = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_selftest(const SelftestArgs& a) {
    std::vector<CriterionResult> results;
    if (a.only > 0)
        results.push_back(run_criterion(a.only, a.seed));
    else
        results = run_acceptance(a.seed);

    bool all = true;
    for (const auto& r : results) {
        std::fprintf(stderr, "%s %2d %s: %s\n", r.pass ? "PASS" : "FAIL", r.index,
                     r.name.c_str(), r.detail.c_str());
        all = all && r.pass;
    }
    Json j = tail_header("selftest", a.seed);
    Json rows = Json::array();
    for (const auto& r : results)
        rows.push_back(
            {{"index", r.index}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    j["criteria"] = rows;
    j["verdict"] = verdict(all);
    emit_report(j, a.out);
    return all ? kExitOk : kExitCheck;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"defectlab: hypersurface-family position, filtration, and Nevanlinna checks"};
    app.require_subcommand(1);

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "theorem parameter set and the parameter lemma");
    bounds->add_option("--n", bounds_args.n, "projective dimension")->required();
    bounds->add_option("--k", bounds_args.k, "position parameter")->required();
    bounds->add_option("--d", bounds_args.d, "common hypersurface degree")->required();
    bounds->add_option("--eps", bounds_args.eps, "epsilon (exact rational)")
        ->capture_default_str();
    bounds->add_option("--rho", bounds_args.rho, "rho (exact rational)")->capture_default_str();
    bounds->add_option("--b", bounds_args.b, "filtration weight override (exact rational)");
    bounds->add_option("--seed", bounds_args.seed, "master seed")->capture_default_str();
    bounds->add_option("--out", bounds_args.out, "output directory (default stdout)");

    PositionArgs pos_args;
    auto* pos = app.add_subcommand("check-position", "k-subgeneral position verdict");
    pos->add_option("family", pos_args.family, "family JSON file")->required();
    pos->add_option("--k", pos_args.k, "position parameter (default: family file)");
    pos->add_option("--samples", pos_args.samples, "also sample the alpha/beta constants");
    pos->add_option("--seed", pos_args.seed, "master seed")->capture_default_str();
    pos->add_option("--out", pos_args.out, "output directory (default stdout)");

    ReplaceArgs rep_args;
    auto* rep = app.add_subcommand("replace", "hypersurface replacement construction");
    rep->add_option("family", rep_args.family, "family JSON file")->required();
    rep->add_option("--subset", rep_args.subset, "labels of the (k+1)-subset")->delimiter(',');
    rep->add_option("--seed", rep_args.seed, "master seed")->capture_default_str();
    rep->add_option("--out", rep_args.out, "output directory (default stdout)");

    FiltrationArgs fil_args;
    auto* fil = app.add_subcommand("filtration", "filtration table and the jump law");
    fil->add_option("forms", fil_args.forms, "family JSON file with exactly n forms")->required();
    fil->add_option("--N", fil_args.N, "graded degree N (multiple of d)")->required();
    fil->add_flag("--basis", fil_args.with_basis, "include the adapted basis in the report");
    fil->add_option("--seed", fil_args.seed, "master seed")->capture_default_str();
    fil->add_option("--out", fil_args.out, "output directory (default stdout)");

    WronskianArgs wr_args;
    auto* wr = app.add_subcommand("wronskian", "admissible set and generalized Wronskian");
    wr->add_option("tuple", wr_args.tuple, "tuple JSON file {m, entries}")->required();
    wr->add_option("--seed", wr_args.seed, "master seed")->capture_default_str();
    wr->add_option("--out", wr_args.out, "output directory (default stdout)");

    NevanlinnaArgs nev_args;
    auto* nev = app.add_subcommand("nevanlinna", "T, N, m profile and defect estimate");
    nev->add_option("curve", nev_args.curve, "curve JSON file")->required();
    nev->add_option("hypersurface", nev_args.hyp, "hypersurface JSON file")->required();
    add_grid_options(nev, nev_args.grid);
    nev->add_option("--trunc", nev_args.trunc, "truncation level M (0 = untruncated)")
        ->capture_default_str();
    nev->add_option("--csv", nev_args.csv, "CSV profile path ('-' for stdout)");
    nev->add_option("--seed", nev_args.seed, "master seed")->capture_default_str();
    nev->add_option("--out", nev_args.out, "output directory (default stdout)");

    SmtArgs smt_args;
    auto* smt = app.add_subcommand("smt", "second-main-theorem margins and the pointwise chain");
    smt->add_option("curve", smt_args.curve, "curve JSON file")->required();
    smt->add_option("family", smt_args.family, "family JSON file")->required();
    smt->add_option("--eps", smt_args.eps, "epsilon (exact rational)")->capture_default_str();
    smt->add_option("--N", smt_args.N, "auxiliary degree N (multiple of d, > n d)")->required();
    smt->add_option("--samples", smt_args.samples, "pointwise sample count")
        ->capture_default_str();
    smt->add_option("--radius", smt_args.radius, "pointwise sampling radius")
        ->capture_default_str();
    add_grid_options(smt, smt_args.grid);
    smt->add_option("--seed", smt_args.seed, "master seed")->capture_default_str();
    smt->add_option("--out", smt_args.out, "output directory (default stdout)");

    GaussArgs gauss_args;
    auto* gauss = app.add_subcommand("gauss", "Pluecker Gauss map and the defect pipeline");
    gauss->add_option("immersion", gauss_args.immersion, "immersion JSON file")->required();
    gauss->add_option("family", gauss_args.family, "optional family JSON file (runs the pipeline)");
    gauss->add_option("--eps", gauss_args.eps, "epsilon (exact rational)")->capture_default_str();
    gauss->add_option("--rho", gauss_args.rho, "rho (exact rational)")->capture_default_str();
    add_grid_options(gauss, gauss_args.grid);
    gauss->add_option("--seed", gauss_args.seed, "master seed")->capture_default_str();
    gauss->add_option("--out", gauss_args.out, "output directory (default stdout)");

    SelftestArgs self_args;
    auto* self = app.add_subcommand("selftest", "run the acceptance battery");
    self->add_option("--only", self_args.only, "run a single criterion (1..11)");
    self->add_option("--seed", self_args.seed, "master seed")->capture_default_str();
    self->add_option("--out", self_args.out, "output directory (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bounds->parsed()) return run_bounds(bounds_args);
        if (pos->parsed()) return run_check_position(pos_args);
        if (rep->parsed()) return run_replace(rep_args);
        if (fil->parsed()) return run_filtration(fil_args);
        if (wr->parsed()) return run_wronskian(wr_args);
        if (nev->parsed()) return run_nevanlinna(nev_args);
        if (smt->parsed()) return run_smt(smt_args);
        if (gauss->parsed()) return run_gauss(gauss_args);
        if (self->parsed()) return run_selftest(self_args);
    } catch (const Error& e) {
        std::fprintf(stderr, "defectlab: %s\n", e.what());
        return (e.kind() == ErrorKind::InvalidInput || e.kind() == ErrorKind::AmbientMismatch)
                   ? kExitInput
                   : kExitCheck;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "defectlab: %s\n", e.what());
        return kExitInput;
    }
    return kExitUsage;
}
