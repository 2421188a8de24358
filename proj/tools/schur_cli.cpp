// Command-line front end: exact counts of monochromatic generalized Schur
// triples, minimization over colorings and block colorings, the continuous
// area function and its algebraic minimum, verification campaigns, and CSV
// sweeps. Every subcommand prints JSON (or CSV for sweep files); exit code
// 0 = success, 1 = verification failures, 2 = bad usage or runtime error.

#include "schur/algebraic.hpp"
#include "schur/blocks.hpp"
#include "schur/config.hpp"
#include "schur/counting.hpp"
#include "schur/errors.hpp"
#include "schur/geometry.hpp"
#include "schur/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::ordered_json;

schur::FormulaId parse_theorem(const std::string& text) {
    if (text == "1") return schur::FormulaId::A1;
    if (text == "2") return schur::FormulaId::A2;
    if (text == "3") return schur::FormulaId::A3;
    if (text == "4") return schur::FormulaId::A4;
    if (text == "5") return schur::FormulaId::Half;
    if (text == "conjecture") return schur::FormulaId::Conjecture;
    throw CLI::ValidationError("--theorem must be one of 1, 2, 3, 4, 5, conjecture");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monochromatic generalized Schur triples: counting, minimization, "
                 "and the continuous minimum"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; flags override its values");

    std::string rule_text = "1";
    std::string word, method = "geometric", mode = "exhaustive", theorem_text, bfile, out_path;
    long long n = 0;
    int s = 0, t = 0, u = 0;
    int steps = 0, max_n = 0;
    std::optional<int> window_flag, cap_flag, witnesses_flag, grid_flag, threads_flag, brute_cap_flag;
    double s_frac = 0, t_frac = 0, a_value = 0, tol = 1e-12;
    double a_min = 0, a_max = 0;
    std::optional<double> sweep_tol_flag;
    bool windowed = false, no_timestamp = false;

    auto* count_cmd = app.add_subcommand("count", "Count monochromatic triples of a coloring");
    count_cmd->add_option("--a", rule_text, "coefficient a as p or p/q")->capture_default_str();
    count_cmd->add_option("--word", word, "coloring word over {R,B}, run lengths allowed");
    count_cmd->add_option("--n", n, "ground set size for a block coloring");
    count_cmd->add_option("--s", s, "end of the first red block");
    count_cmd->add_option("--t", t, "end of the blue block");
    count_cmd->add_option("--u", u, "end of the second red block (four blocks)");

    auto* min_cmd = app.add_subcommand("min", "Minimize the count over colorings");
    min_cmd->add_option("--n", n, "ground set size")->required();
    min_cmd->add_option("--a", rule_text, "coefficient a as p or p/q")->capture_default_str();
    min_cmd->add_option("--mode", mode, "exhaustive | blocks3 | blocks4")->capture_default_str();
    min_cmd->add_flag("--windowed", windowed, "scan a window around the predicted minimizer");
    min_cmd->add_option("--window", window_flag, "window half-width");
    min_cmd->add_option("--cap", cap_flag, "exhaustive search size cap");
    min_cmd->add_option("--max-witnesses", witnesses_flag, "witness colorings to keep");
    min_cmd->add_option("--threads", threads_flag, "worker threads, 0 = hardware");

    auto* area_cmd = app.add_subcommand("area", "Evaluate the limit area A(s, t, a)");
    area_cmd->add_option("--s", s_frac, "first boundary fraction")->required();
    area_cmd->add_option("--t", t_frac, "second boundary fraction")->required();
    area_cmd->add_option("--a", a_value, "coefficient a")->required();
    area_cmd->add_option("--method", method, "geometric | closed")->capture_default_str();

    auto* minarea_cmd = app.add_subcommand("minarea", "Minimize A(s, t, a) numerically");
    minarea_cmd->add_option("--a", a_value, "coefficient a")->required();
    minarea_cmd->add_option("--grid", grid_flag, "grid intervals per axis");
    minarea_cmd->add_option("--threads", threads_flag, "worker threads");

    auto* m_cmd = app.add_subcommand("m", "Closed-form minimum m(a) and its location");
    m_cmd->add_option("--a", a_value, "coefficient a")->required();

    auto* alphas_cmd = app.add_subcommand("alphas", "Branch endpoints as refined intervals");
    alphas_cmd->add_option("--tol", tol, "interval width target")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Formula vs. search campaign, JSON lines");
    verify_cmd->add_option("--theorem", theorem_text, "1 | 2 | 3 | 4 | 5 | conjecture")
        ->required();
    verify_cmd->add_option("--max-n", max_n, "verify n = 1..max_n")->required();
    verify_cmd->add_option("--brute-cap", brute_cap_flag, "exhaustive cross-check cap");
    verify_cmd->add_option("--threads", threads_flag, "worker threads");
    verify_cmd->add_flag("--no-timestamp", no_timestamp, "suppress timing for stable bytes");

    auto* oeis_cmd = app.add_subcommand("oeis", "Check the a = 1 formula against A321195");
    oeis_cmd->add_option("--max-n", max_n, "check n = 1..max_n")->required();
    oeis_cmd->add_option("--bfile", bfile, "local b-file for terms beyond the stored prefix");
    oeis_cmd->add_option("--brute-cap", brute_cap_flag, "exhaustive cross-check cap");
    oeis_cmd->add_option("--threads", threads_flag, "worker threads");
    oeis_cmd->add_flag("--no-timestamp", no_timestamp, "suppress timing for stable bytes");

    auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep of the numeric vs. closed minimum");
    sweep_cmd->add_option("--a-min", a_min, "left end of the a range")->required();
    sweep_cmd->add_option("--a-max", a_max, "right end of the a range")->required();
    sweep_cmd->add_option("--steps", steps, "number of rows, >= 2")->required();
    sweep_cmd->add_option("--out", out_path, "output CSV path")->required();
    sweep_cmd->add_option("--grid", grid_flag, "grid intervals per axis");
    sweep_cmd->add_option("--threads", threads_flag, "worker threads");
    sweep_cmd->add_option("--tol", sweep_tol_flag, "flag rows with |A* - m| above this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Normalize every usage problem to exit code 2; --help stays 0.
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        schur::Config cfg;
        if (!config_path.empty()) cfg = schur::Config::load(config_path);
        const int threads = threads_flag.value_or(cfg.threads);
        const int grid = grid_flag.value_or(cfg.grid);
        const int window = window_flag.value_or(cfg.window);

        if (count_cmd->parsed()) {
            schur::TripleRule rule = schur::TripleRule::parse(rule_text);
            ordered_json out;
            if (!word.empty()) {
                schur::Coloring coloring = schur::Coloring::parse(word);
                out["n"] = coloring.n();
                out["a"] = rule.str();
                out["word"] = coloring.word();
                out["count"] = schur::count_mono(coloring, rule);
            } else if (n > 0 && s > 0) {
                out["n"] = n;
                out["a"] = rule.str();
                long long count = u > 0
                    ? schur::mgst_block_count(
                          schur::FourBlockColoring(static_cast<int>(n), s, t, u), rule)
                    : schur::mgst_block_count(
                          schur::ThreeBlockColoring(static_cast<int>(n), s, t), rule);
                out["blocks"] = u > 0 ? std::vector<int>{s, t, u} : std::vector<int>{s, t};
                out["count"] = count;
            } else {
                throw CLI::ValidationError("count needs --word or --n with --s/--t");
            }
            std::cout << out.dump() << '\n';
        } else if (min_cmd->parsed()) {
            schur::TripleRule rule = schur::TripleRule::parse(rule_text);
            ordered_json out;
            out["n"] = n;
            out["a"] = rule.str();
            if (mode == "exhaustive") {
                schur::MinimizationResult res = schur::brute_force_min(
                    static_cast<int>(n), rule, witnesses_flag.value_or(cfg.max_witnesses),
                    cap_flag.value_or(cfg.brute_cap), threads);
                out["minimum"] = res.minimum;
                std::vector<std::string> words;
                for (const schur::Coloring& w : res.witnesses) words.push_back(w.word());
                out["witnesses"] = words;
                out["examined"] = res.colorings_examined;
            } else if (mode == "blocks3" || mode == "blocks4") {
                schur::BlockSearchResult res = schur::block_search_min(
                    static_cast<int>(n), rule, mode == "blocks3" ? 3 : 4,
                    windowed ? schur::SearchMode::Windowed : schur::SearchMode::Full, window,
                    threads);
                out["mode"] = mode;
                out["minimum"] = res.minimum;
                out["boundaries"] = res.boundaries;
            } else {
                throw CLI::ValidationError("--mode must be exhaustive, blocks3, or blocks4");
            }
            std::cout << out.dump() << '\n';
        } else if (area_cmd->parsed()) {
            ordered_json out;
            out["s"] = s_frac;
            out["t"] = t_frac;
            out["a"] = a_value;
            out["method"] = method;
            if (method == "geometric") {
                out["area"] = schur::area_geometric(s_frac, t_frac, a_value);
            } else if (method == "closed") {
                out["region"] = schur::classify_region(s_frac, t_frac, a_value);
                out["area"] = schur::area_closed_form(s_frac, t_frac, a_value);
            } else {
                throw CLI::ValidationError("--method must be geometric or closed");
            }
            std::cout << out.dump() << '\n';
        } else if (minarea_cmd->parsed()) {
            schur::AreaMinimum mn = schur::minimize_area(a_value, grid, threads);
            ordered_json out;
            out["a"] = a_value;
            out["s_star"] = mn.s;
            out["t_star"] = mn.t;
            out["area"] = mn.area;
            std::cout << out.dump() << '\n';
        } else if (m_cmd->parsed()) {
            schur::MinLocation loc = schur::min_area_location(a_value);
            ordered_json out;
            out["a"] = a_value;
            out["branch"] = loc.branch;
            out["s0"] = loc.s0;
            out["t0"] = loc.t0;
            out["m"] = schur::min_area_value(a_value);
            if (loc.two_sided) {
                out["s0_right"] = loc.s0_right;
                out["t0_right"] = loc.t0_right;
            }
            std::cout << out.dump() << '\n';
        } else if (alphas_cmd->parsed()) {
            for (int k = 1; k <= 8; ++k) {
                schur::AlgebraicNumber root = schur::breakpoint(k);
                auto [lo, hi] = schur::refine_root(root, tol);
                ordered_json out;
                out["k"] = k;
                out["poly"] = root.poly;
                out["lo"] = lo;
                out["hi"] = hi;
                out["value"] = lo + (hi - lo) / 2;
                std::cout << out.dump() << '\n';
            }
        } else if (verify_cmd->parsed()) {
            schur::CampaignOptions opts;
            opts.brute_cap = brute_cap_flag.value_or(std::min(cfg.brute_cap, 22));
            opts.threads = threads;
            schur::VerificationReport report =
                schur::verify_theorem(parse_theorem(theorem_text), max_n, opts);
            report.write_jsonl(std::cout, !no_timestamp);
            return report.failures == 0 ? 0 : 1;
        } else if (oeis_cmd->parsed()) {
            schur::CampaignOptions opts;
            opts.brute_cap = brute_cap_flag.value_or(std::min(cfg.brute_cap, 22));
            opts.threads = threads;
            schur::VerificationReport report = schur::oeis_check(max_n, bfile, opts);
            report.write_jsonl(std::cout, !no_timestamp);
            return report.failures == 0 ? 0 : 1;
        } else if (sweep_cmd->parsed()) {
            std::vector<schur::SweepRow> rows =
                schur::emit_sweep(a_min, a_max, steps, out_path,
                                  sweep_tol_flag.value_or(cfg.sweep_flag_tol), grid, threads);
            long long flagged = 0;
            for (const schur::SweepRow& row : rows)
                if (row.flagged) {
                    ++flagged;
                    std::cerr << "sweep: |A* - m| = " << row.abs_diff << " at a = " << row.a
                              << '\n';
                }
            ordered_json out;
            out["rows"] = rows.size();
            out["flagged"] = flagged;
            out["out"] = out_path;
            std::cout << out.dump() << '\n';
            return flagged == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
