// Command-line front end: every operation of the library behind stable
// JSON reports, explicit seeds, and fixed exit codes (0 ok, 2 bad
// input, 3 enumeration cap, 4 LP/numeric failure).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "exch/array_svd.hpp"
#include "exch/errors.hpp"
#include "exch/exchangeable.hpp"
#include "exch/extendibility.hpp"
#include "exch/orbits.hpp"
#include "exch/serialization.hpp"
#include "exch/stat_tests.hpp"
#include "exch/urns.hpp"

using namespace exch;

namespace {

struct GlobalOpts {
    std::string out;
    std::uint64_t max_states = kDefaultStateCap;
    bool ack_large = false;
    bool quiet = false;
};

void emit(const Json& report, const GlobalOpts& g) {
    std::string text = report.dump(2);
    text += '\n';
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out);
        if (!f) throw validation_error("cannot write to '" + g.out + "'");
        f << text;
    }
}

std::uint64_t effective_cap(const GlobalOpts& g) {
    if (g.max_states > kDefaultStateCap && !g.ack_large)
        throw validation_error("--max-states above the default requires --ack-large-enumeration");
    return g.max_states;
}

GroupAction action_from_flags(const std::string& group, int m, int n, const std::vector<int>& lengths,
                              const std::vector<Symbol>& alphabet) {
    if (group == "sequence") return GroupAction::sequence(m, alphabet);
    if (group == "joint_row_col") return GroupAction::joint_row_col(m, alphabet);
    if (group == "separate_row_col") return GroupAction::separate_row_col(m, n, alphabet);
    if (group == "blocked_sequences") {
        if (lengths.empty()) throw validation_error("--lengths required for blocked_sequences");
        std::vector<Block> blocks;
        for (int len : lengths) blocks.push_back(Block{len, alphabet});
        return GroupAction::blocked_sequences(std::move(blocks));
    }
    throw validation_error("unknown group kind '" + group + "'");
}

Json bound_report_json(const BoundReport& r) {
    Json j;
    j["ks"] = r.ks;
    j["ns"] = r.ns;
    j["norm"] = "l1";
    j["tv"] = rational_str(r.tv);
    j["tv_decimal"] = rational_double(r.tv);
    j["bound_2beta"] = rational_str(r.bound);
    j["bound_decimal"] = rational_double(r.bound);
    j["holds"] = r.holds;
    return j;
}

Json svd_report_json(const SvdCheckReport& r, const std::string& sampler, std::uint64_t seed, bool quiet) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["joint"] = r.joint;
    j["sampler"] = sampler;
    j["n_draws"] = r.n_draws;
    j["seed"] = seed;
    j["degenerate_draws"] = r.degenerate_draws;
    j["max_abs_z"] = r.max_abs_z();
    if (!quiet) {
        Json stats = Json::array();
        for (const RowPairStat& s : r.stats) {
            Json e;
            e["stat"] = s.stat;
            e["block"] = s.block;
            e["i"] = s.i;
            e["j"] = s.j;
            e["mean_i"] = s.mean_i;
            e["mean_j"] = s.mean_j;
            e["mean_diff"] = s.mean_diff;
            e["std_err"] = s.std_err;
            e["z"] = s.z;
            stats.push_back(e);
        }
        j["statistics"] = stats;
    }
    return j;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exch: exact total-variation bounds, orbit machinery and tests for finitely exchangeable distributions"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--out", g.out, "Write the JSON report here instead of stdout");
    app.add_option("--max-states", g.max_states, "Enumeration cap (default 2^24 states)");
    app.add_flag("--ack-large-enumeration", g.ack_large, "Acknowledge raising --max-states past the default");
    app.add_flag("--quiet", g.quiet, "Omit bulky report fields (orbit members, witnesses, per-pair statistics)");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "Exact beta bound for given draw and urn-size vectors");
    std::vector<int> b_ks, b_ns;
    cmd_bounds->add_option("--ks", b_ks, "Draw counts, comma separated")->required()->delimiter(',');
    cmd_bounds->add_option("--ns", b_ns, "Urn sizes, comma separated")->required()->delimiter(',');

    // urntv
    auto* cmd_urntv = app.add_subcommand("urntv", "Exact TV between with/without-replacement urn sampling");
    std::vector<int> u_ks, u_ns;
    cmd_urntv->add_option("--ks", u_ks, "Draw counts")->required()->delimiter(',');
    cmd_urntv->add_option("--ns", u_ns, "Urn sizes")->required()->delimiter(',');

    // orbits
    auto* cmd_orbits = app.add_subcommand("orbits", "Orbit table of a group action on its state space");
    std::string o_group = "sequence";
    int o_m = 0, o_n = 0;
    std::vector<int> o_lengths;
    std::vector<Symbol> o_alphabet = {0, 1};
    cmd_orbits->add_option("--group", o_group, "sequence | joint_row_col | separate_row_col | blocked_sequences")
        ->required();
    cmd_orbits->add_option("--m", o_m, "Degree (rows for array actions)");
    cmd_orbits->add_option("--n", o_n, "Columns for separate_row_col");
    cmd_orbits->add_option("--lengths", o_lengths, "Block lengths for blocked_sequences")->delimiter(',');
    cmd_orbits->add_option("--alphabet", o_alphabet, "Alphabet symbols")->delimiter(',');

    // project
    auto* cmd_project = app.add_subcommand("project", "Marginal projection of a distribution file");
    std::string p_dist;
    int p_k = -1;
    std::vector<int> p_ks;
    cmd_project->add_option("--dist", p_dist, "Distribution JSON file")->required();
    cmd_project->add_option("--k", p_k, "Keep the first k coordinates (sequence spaces)");
    cmd_project->add_option("--ks", p_ks, "Per-block coordinates to keep (blocked spaces)")->delimiter(',');

    // definetti-check
    auto* cmd_check = app.add_subcommand("definetti-check", "Check tv(P_k, P_mu_k) <= 2 beta for a distribution file");
    std::string c_dist;
    int c_k = -1;
    std::vector<int> c_ks;
    cmd_check->add_option("--dist", c_dist, "Distribution JSON file")->required();
    cmd_check->add_option("--k", c_k, "Projection size (sequence spaces)");
    cmd_check->add_option("--ks", c_ks, "Per-block projection sizes (blocked spaces)")->delimiter(',');

    // definetti-gap
    auto* cmd_gap = app.add_subcommand("definetti-gap", "Minimal TV to a mixture of powers on a probability grid");
    std::string gp_dist;
    int gp_grid = 1001;
    cmd_gap->add_option("--dist", gp_dist, "Distribution JSON file")->required();
    cmd_gap->add_option("--grid", gp_grid, "Number of grid points per simplex edge (default 1001)");

    // extend-check
    auto* cmd_extend = app.add_subcommand("extend-check", "Exchangeable extendibility of a distribution file");
    std::string e_dist;
    int e_n = -1;
    std::vector<int> e_ns;
    cmd_extend->add_option("--dist", e_dist, "Distribution JSON file")->required();
    cmd_extend->add_option("--n", e_n, "Target length (sequence spaces)");
    cmd_extend->add_option("--ns", e_ns, "Per-block target lengths (blocked spaces)")->delimiter(',');

    // svd-sim
    auto* cmd_svd = app.add_subcommand("svd-sim", "Monte Carlo row-exchangeability check of randomized singular vectors");
    int s_m = 3, s_n = 0, s_draws = 10000;
    bool s_joint = false;
    std::string s_sampler = "exch";
    std::uint64_t s_seed = 0;
    cmd_svd->add_option("--m", s_m, "Rows");
    cmd_svd->add_option("--n", s_n, "Columns (defaults to --m)");
    cmd_svd->add_flag("--joint", s_joint, "Joint row-column case (square matrices, shared index)");
    cmd_svd->add_option("--sampler", s_sampler, "exch | rowscaled");
    cmd_svd->add_option("--n-draws", s_draws, "Monte Carlo draws");
    cmd_svd->add_option("--seed", s_seed, "Master seed")->required();

    // test-exch
    auto* cmd_texch = app.add_subcommand("test-exch", "Monte Carlo invariance test on a sample file");
    std::string tx_samples, tx_group = "sequence";
    int tx_m = 0, tx_n = 0, tx_B = 999;
    std::vector<int> tx_lengths;
    std::vector<Symbol> tx_alphabet = {0, 1};
    std::uint64_t tx_seed = 0;
    cmd_texch->add_option("--samples", tx_samples, "JSON list of state strings")->required();
    cmd_texch->add_option("--group", tx_group, "sequence | joint_row_col | separate_row_col | blocked_sequences")
        ->required();
    cmd_texch->add_option("--m", tx_m, "Degree");
    cmd_texch->add_option("--n", tx_n, "Columns for separate_row_col");
    cmd_texch->add_option("--lengths", tx_lengths, "Block lengths for blocked_sequences")->delimiter(',');
    cmd_texch->add_option("--alphabet", tx_alphabet, "Alphabet symbols")->delimiter(',');
    cmd_texch->add_option("--B", tx_B, "Bootstrap replicates");
    cmd_texch->add_option("--seed", tx_seed, "Master seed")->required();

    // test-extend
    auto* cmd_textend = app.add_subcommand("test-extend", "Monte Carlo extendibility test on a sample file");
    std::string te_samples;
    int te_k = 0, te_rmax = 0, te_B = 499;
    std::vector<int> te_lengths;
    std::vector<Symbol> te_alphabet = {0, 1};
    std::uint64_t te_seed = 0;
    cmd_textend->add_option("--samples", te_samples, "JSON list of state strings")->required();
    cmd_textend->add_option("--k", te_k, "Observed sequence length");
    cmd_textend->add_option("--lengths", te_lengths, "Observed block lengths (blocked spaces)")->delimiter(',');
    cmd_textend->add_option("--alphabet", te_alphabet, "Alphabet symbols")->delimiter(',');
    cmd_textend->add_option("--rmax", te_rmax, "Largest extension size to scan")->required();
    cmd_textend->add_option("--B", te_B, "Bootstrap replicates");
    cmd_textend->add_option("--seed", te_seed, "Master seed")->required();

    // counterexample
    auto* cmd_counter = app.add_subcommand("counterexample", "The 2x2 jointly exchangeable law with no mixture representation");

    // global flags (--out, --quiet, ...) may follow the subcommand name
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::uint64_t cap = effective_cap(g);

    if (cmd_bounds->parsed()) {
        Rational beta = beta_bound(b_ks, b_ns);
        Json j;
        j["ks"] = b_ks;
        j["ns"] = b_ns;
        j["beta"] = rational_str(beta);
        j["decimal"] = rational_double(beta);
        emit(j, g);
    } else if (cmd_urntv->parsed()) {
        UrnSystem u(u_ns, u_ks);
        Rational tv = urn_tv(u, cap);
        Rational beta = beta_bound(u_ks, u_ns);
        BigInt m_states = 1, q_support = 1;
        for (std::size_t i = 0; i < u.urn_count(); ++i) {
            BigInt per = 1;
            for (int d = 0; d < u.draws[i]; ++d) per *= u.sizes[i];
            m_states *= per;
            q_support *= factorial(u.sizes[i]) / factorial(u.sizes[i] - u.draws[i]);
        }
        Json j;
        j["ks"] = u_ks;
        j["ns"] = u_ns;
        j["with_replacement"] =
            Json{{"states", m_states.str()}, {"mass_per_state", rational_str(Rational(1) / Rational(m_states))}};
        j["without_replacement"] =
            Json{{"support", q_support.str()}, {"mass_per_state", rational_str(Rational(1) / Rational(q_support))}};
        j["tv_sup"] = rational_str(tv);
        j["tv_l1"] = rational_str(2 * tv);
        j["decimal"] = rational_double(tv);
        j["beta"] = rational_str(beta);
        j["matches_beta"] = (tv == beta);
        emit(j, g);
    } else if (cmd_orbits->parsed()) {
        GroupAction action = action_from_flags(o_group, o_m, o_n, o_lengths, o_alphabet);
        OrbitTable table = orbits(action, cap);
        Json j;
        j["action"] = action_to_json(action);
        j["states"] = table.orbit_of.size();
        j["group_order"] = action.group_order().str();
        j["orbit_count"] = table.orbit_count();
        try {
            j["burnside_count"] = burnside_orbit_count(action);
        } catch (const cap_exceeded&) {
            j["burnside_count"] = nullptr; // group too large for the oracle
        }
        j["orbits"] = orbit_table_to_json(table, !g.quiet);
        emit(j, g);
    } else if (cmd_project->parsed()) {
        FiniteDistribution P = distribution_from_json(load_json_file(p_dist));
        if (p_ks.empty() && p_k < 0) throw validation_error("project: pass --k or --ks");
        Projection proj = p_ks.empty() ? marginal(P, p_k) : blocked_marginal(P, p_ks);
        if (!proj.input_exchangeable)
            std::cerr << "warning: input distribution is not exchangeable; projection kept the first coordinates\n";
        emit(distribution_to_json(proj.dist), g);
    } else if (cmd_check->parsed()) {
        FiniteDistribution P = distribution_from_json(load_json_file(c_dist));
        std::vector<int> ks = c_ks;
        if (ks.empty()) {
            if (c_k < 0) throw validation_error("definetti-check: pass --k or --ks");
            ks = {c_k};
        }
        BoundReport r = check_definetti_bound(P, ks);
        emit(bound_report_json(r), g);
    } else if (cmd_gap->parsed()) {
        FiniteDistribution P = distribution_from_json(load_json_file(gp_dist));
        GapResult r = definetti_gap(P, gp_grid);
        Json j;
        j["grid"] = gp_grid;
        j["norm"] = "l1";
        j["gap"] = rational_str(r.gap);
        j["gap_decimal"] = rational_double(r.gap);
        Json atoms = Json::array();
        for (const MixingAtom& a : r.argmin) {
            Json comp = Json::array();
            for (const Rational& p : a.components[0]) comp.push_back(rational_str(p));
            atoms.push_back(Json{{"component", comp}, {"weight", rational_str(a.weight)}});
        }
        j["argmin"] = atoms;
        emit(j, g);
    } else if (cmd_extend->parsed()) {
        FiniteDistribution P = distribution_from_json(load_json_file(e_dist));
        ExtendibilityResult r;
        Json j;
        if (!e_ns.empty()) {
            r = extendibility_lp(P, e_ns, cap, !g.quiet);
            j["ns"] = e_ns;
        } else {
            if (e_n < 0) throw validation_error("extend-check: pass --n or --ns");
            r = extendibility_lp(P, e_n, cap, !g.quiet);
            j["n"] = e_n;
        }
        j["feasible"] = r.feasible;
        if (r.witness.has_value())
            j["witness"] = distribution_to_json(*r.witness);
        else
            j["witness"] = nullptr;
        emit(j, g);
    } else if (cmd_svd->parsed()) {
        if (s_n == 0) s_n = s_m;
        MatrixSampler sampler;
        if (s_sampler == "exch")
            sampler = exchangeable_sampler(s_m, s_n, s_joint);
        else if (s_sampler == "rowscaled")
            sampler = row_scaled_sampler(s_m, s_n, s_joint);
        else
            throw validation_error("unknown sampler '" + s_sampler + "'");
        SvdCheckReport r = svd_equivalence_check(sampler, s_m, s_n, s_joint, s_draws, s_seed);
        emit(svd_report_json(r, s_sampler, s_seed, g.quiet), g);
    } else if (cmd_texch->parsed()) {
        GroupAction action = action_from_flags(tx_group, tx_m, tx_n, tx_lengths, tx_alphabet);
        SampleSet samples = samples_from_json(load_json_file(tx_samples), action.space());
        TestReport r = exch_test(samples, action, tx_B, tx_seed);
        Json j;
        j["test"] = "invariance";
        j["group"] = action_to_json(action);
        j["n_samples"] = samples.total_count();
        j["statistic_tv_l1"] = rational_str(r.statistic);
        j["statistic_decimal"] = rational_double(r.statistic);
        j["p_value"] = rational_str(r.p_value);
        j["p_decimal"] = rational_double(r.p_value);
        j["B"] = r.B;
        j["seed"] = r.seed;
        j["reject_at_0.05"] = r.reject_at_05;
        j["reject_at_0.01"] = r.reject_at_01;
        emit(j, g);
    } else if (cmd_textend->parsed()) {
        if (te_lengths.empty() && te_k <= 0) throw validation_error("test-extend: pass --k or --lengths");
        StateSpace space = te_lengths.empty() ? StateSpace::sequence(te_k, te_alphabet) : StateSpace::blocked([&] {
            std::vector<Block> blocks;
            for (int len : te_lengths) blocks.push_back(Block{len, te_alphabet});
            return blocks;
        }());
        GroupAction action = natural_action(space);
        SampleSet samples = samples_from_json(load_json_file(te_samples), space);
        ExtendTestReport r = extendibility_test(samples, action, te_rmax, te_B, te_seed, cap);
        Json j;
        j["test"] = "extendibility";
        j["n_samples"] = samples.total_count();
        j["T"] = r.T;
        j["r_max"] = r.r_max;
        j["p_value"] = rational_str(r.p_value);
        j["p_decimal"] = rational_double(r.p_value);
        j["B"] = r.B;
        j["seed"] = r.seed;
        j["reject_at_0.05"] = r.reject_at_05;
        j["reject_at_0.01"] = r.reject_at_01;
        emit(j, g);
    } else if (cmd_counter->parsed()) {
        FiniteDistribution P = intro_counterexample();
        GroupAction joint = GroupAction::joint_row_col(2, {0, 1});
        auto weights = decompose_invariant(P, joint);
        Json w = Json::object();
        for (const auto& [rep, wt] : weights)
            w[P.space().format_state(P.space().decode(rep))] = rational_str(wt);
        Json j;
        j["distribution"] = distribution_to_json(P);
        j["action"] = action_to_json(joint);
        j["invariant"] = is_invariant(P, joint);
        j["orbit_weights"] = w;
        j["off_diagonal_pair"] = distribution_to_json(project_cells(P, {1, 2}));
        emit(j, g);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
