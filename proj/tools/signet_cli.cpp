#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "signet/acceptance.hpp"
#include "signet/analysis.hpp"
#include "signet/config.hpp"
#include "signet/graph_io.hpp"
#include "signet/report_json.hpp"

namespace {

namespace fs = std::filesystem;
using namespace signet;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

std::int64_t unix_now() {
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

void write_text(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << text;
}

void print_node_set(std::ostream& out, const std::vector<NodeId>& nodes) {
    out << "{";
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k) out << ", ";
        out << nodes[k];
    }
    out << "}";
}

GraphSchedule load_environment(const std::string& path) {
    if (fs::path(path).extension() == ".schedule") {
        return read_schedule_manifest(path);
    }
    return GraphSchedule({read_graph_file(path)});
}

int cmd_analyze(const std::string& path, BalanceMode mode) {
    const GraphSchedule sched = load_environment(path);
    std::cout << "input: " << path << " (" << sched.period() << " frame"
              << (sched.period() == 1 ? "" : "s") << ", n = " << sched.node_count() << ")\n";

    const bool consistent = is_sign_consistent(sched);
    std::cout << "sign consistent: " << (consistent ? "yes" : "no") << "\n";

    if (consistent) {
        const TotalGraph total = total_graph(sched);
        std::cout << "total graph: " << total.graph.arc_count() << " arcs\n";

        const PositiveClusterPartition partition = positive_cluster_partition(total.graph);
        std::cout << "positive clusters (T_p = " << partition.count() << "):";
        for (const auto& cluster : partition.clusters) {
            std::cout << " ";
            print_node_set(std::cout, cluster);
        }
        std::cout << "\n";

        const auto bipartition = strong_balance_bipartition(total.graph, mode);
        std::cout << "strong balance ("
                  << (mode == BalanceMode::Literal ? "literal" : "classical") << " mode): ";
        if (bipartition) {
            std::cout << "balanced, sides ";
            print_node_set(std::cout, bipartition->side_one);
            std::cout << " vs ";
            print_node_set(std::cout, bipartition->side_two);
            std::cout << "\n";
        } else {
            std::cout << "not strongly balanced\n";
        }
    } else {
        std::cout << "total graph: skipped (sign conflict); clustering and balance need A3\n";
    }

    auto report_window = [&](const char* label, ConnectivityMode cmode) {
        const auto window = minimal_connectivity_window(sched, cmode);
        if (window) {
            std::cout << label << " holds with K = " << *window << "\n";
        } else {
            std::cout << label << " fails for every window length\n";
        }
    };
    report_window("A2 (union strongly connected)", ConnectivityMode::All);
    report_window("A4 (positive union strongly connected)", ConnectivityMode::PositiveOnly);
    report_window("A5 (negative union strongly connected)", ConnectivityMode::NegativeOnly);
    return kExitOk;
}

std::string probes_csv(const TrajectoryRecord& traj) {
    std::ostringstream out;
    out.precision(17);
    out << "t,M";
    for (std::size_t i = 0; i < traj.final_state.size(); ++i) out << ",s_" << i;
    out << "\n";
    for (std::size_t k = 0; k < traj.probe_times.size(); ++k) {
        const StateVector& s = traj.probe_states[k];
        out << traj.probe_times[k] << "," << max_abs(s);
        for (double v : s) out << "," << v;
        out << "\n";
    }
    return out.str();
}

std::string max_series_csv(const TrajectoryRecord& traj) {
    std::ostringstream out;
    out.precision(17);
    out << "t,M\n";
    for (std::size_t t = 0; t < traj.max_series.size(); ++t) {
        out << t << "," << traj.max_series[t] << "\n";
    }
    return out.str();
}

int cmd_simulate(const ExperimentConfig& cfg, const ValidationReport& validation,
                 std::uint64_t run, const fs::path& out_dir) {
    const ExperimentSpec& spec = cfg.spec;
    TrajectoryOptions options;
    options.ceiling = spec.ceiling;
    options.probe_stride = spec.probe_stride;
    options.record_max_series = true;
    options.forced_attention = spec.forced_attention;
    const StateVector s0 = initial_state_for_run(spec, cfg.base_seed, run);
    const TrajectoryRecord traj = run_trajectory(spec.schedule, spec.model, spec.params, s0,
                                                 spec.horizon, cfg.base_seed, run, options);
    const Verdict verdict = detect_convergence(traj, spec.eps_conv, spec.window);

    fs::create_directories(out_dir);
    write_text(out_dir / "probes.csv", probes_csv(traj));
    write_text(out_dir / "maxabs.csv", max_series_csv(traj));

    nlohmann::json summary = nlohmann::json::parse(trajectory_summary_to_json(traj, verdict));
    summary["config"] = nlohmann::json::parse(cfg.raw_json);
    summary["validation"] = nlohmann::json::parse(validation_to_json(validation));
    summary["generated_at_unix"] = unix_now();
    write_text(out_dir / "summary.json", summary.dump(2) + "\n");

    std::cout << "verdict: " << to_string(verdict.kind);
    if (!verdict.reason.empty()) std::cout << " (" << verdict.reason << ")";
    std::cout << ", steps " << traj.steps_executed << ", final M = " << traj.final_max << "\n";
    std::cout << "wrote " << (out_dir / "probes.csv").string() << ", "
              << (out_dir / "maxabs.csv").string() << ", " << (out_dir / "summary.json").string()
              << "\n";
    return kExitOk;
}

int cmd_montecarlo(const ExperimentConfig& cfg, const ValidationReport& validation,
                   const fs::path& out_dir) {
    const MonteCarloReport report = monte_carlo(cfg.spec, cfg.runs, cfg.base_seed);

    nlohmann::json doc = nlohmann::json::parse(report_to_json(report));
    doc["config"] = nlohmann::json::parse(cfg.raw_json);
    doc["validation"] = nlohmann::json::parse(validation_to_json(validation));
    doc["generated_at_unix"] = unix_now();
    fs::create_directories(out_dir);
    write_text(out_dir / "report.json", doc.dump(2) + "\n");

    std::cout << "runs: " << report.runs << ", converged " << report.converged << ", diverged "
              << report.diverged << ", undecided " << report.undecided << ", errors "
              << report.errors << "\n";
    for (const ClaimStats& c : report.claims) {
        std::cout << "claim " << to_string(c.claim) << ": " << c.passed << "/" << c.total
                  << " (wilson95 [" << c.ci.lo << ", " << c.ci.hi << "])\n";
    }
    std::cout << "wrote " << (out_dir / "report.json").string() << "\n";
    return report.all_claims_passed ? kExitOk : kExitClaimFailure;
}

int cmd_sweep(const ExperimentConfig& cfg, const ValidationReport& validation,
              const std::string& grid_text, const fs::path& out_dir) {
    std::vector<double> grid;
    std::stringstream ss(grid_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) grid.push_back(std::stod(tok));
    }
    const auto rows = beta_sweep(cfg.spec, grid, cfg.runs, cfg.base_seed);
    fs::create_directories(out_dir);
    write_text(out_dir / "sweep.csv", sweep_to_csv(rows));

    nlohmann::json doc;
    doc["config"] = nlohmann::json::parse(cfg.raw_json);
    doc["validation"] = nlohmann::json::parse(validation_to_json(validation));
    nlohmann::json points = nlohmann::json::array();
    for (const BetaSweepRow& r : rows) {
        points.push_back({{"beta", r.beta},
                          {"runs", r.runs},
                          {"diverged", r.diverged},
                          {"fraction", r.fraction},
                          {"ci95", {{"lo", r.ci.lo}, {"hi", r.ci.hi}}}});
    }
    doc["sweep"] = points;
    doc["generated_at_unix"] = unix_now();
    write_text(out_dir / "sweep.json", doc.dump(2) + "\n");

    for (const BetaSweepRow& r : rows) {
        std::cout << "beta " << r.beta << ": diverged " << r.diverged << "/" << r.runs
                  << " (wilson95 [" << r.ci.lo << ", " << r.ci.hi << "])\n";
    }
    std::cout << "wrote " << (out_dir / "sweep.csv").string() << " and "
              << (out_dir / "sweep.json").string() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, int threads) {
    const auto ids = accept::suite_criteria(suite);
    if (ids.empty()) {
        std::cerr << "unknown suite '" << suite << "'; available:";
        for (const std::string& name : accept::suite_names()) std::cerr << " " << name;
        std::cerr << "\n";
        return kExitUsage;
    }
    accept::Options opts;
    opts.threads = threads;
    bool all_passed = true;
    for (int id : ids) {
        const auto result = accept::run_criterion(id, opts);
        std::cout << accept::format_result(result) << std::endl;
        all_passed = all_passed && result.passed;
    }
    return all_passed ? kExitOk : kExitClaimFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulator and analysis toolkit for opinion dynamics over dynamic signed "
                 "random networks"};
    app.require_subcommand(1);

    std::string analyze_path;
    std::string balance_mode = "literal";
    CLI::App* analyze = app.add_subcommand("analyze", "structural report for a graph or schedule");
    analyze->add_option("path", analyze_path, "graph file or .schedule manifest")->required();
    analyze->add_option("--mode", balance_mode, "balance mode: literal|classical")
        ->check(CLI::IsMember({"literal", "classical"}));

    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed_override = 0;
    bool seed_given = false;
    int runs_override = 0;
    std::uint64_t run_index = 0;
    int threads = 0;

    std::string mode_override;
    auto add_config_options = [&](CLI::App* cmd, bool with_runs) {
        cmd->add_option("--config", config_path, "experiment config JSON")->required();
        cmd->add_option("--out", out_dir, "output directory (default: out)");
        cmd->add_option_function<std::uint64_t>(
               "--seed", [&](std::uint64_t v) { seed_override = v; seed_given = true; },
               "override the config base seed");
        if (with_runs) cmd->add_option("--runs", runs_override, "override the config run count");
        cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
        cmd->add_option("--mode", mode_override, "override the balance mode: literal|classical")
            ->check(CLI::IsMember({"literal", "classical"}));
    };

    CLI::App* simulate = app.add_subcommand("simulate", "single seeded trajectory with CSV output");
    add_config_options(simulate, false);
    simulate->add_option("--run", run_index, "run index within the seed stream (default 0)");

    CLI::App* montecarlo =
        app.add_subcommand("montecarlo", "seeded batch with claim checks and a JSON report");
    add_config_options(montecarlo, true);

    std::string grid_text;
    CLI::App* sweep = app.add_subcommand("sweep", "diverged fraction over an ascending beta grid");
    add_config_options(sweep, true);
    sweep->add_option("--grid", grid_text, "comma-separated ascending beta values")->required();

    std::string suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run the bundled acceptance suites");
    verify->add_option("suite", suite, "suite name (default: all)");
    verify->add_option("--threads", threads, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) {
            return cmd_analyze(analyze_path, balance_mode == "classical" ? BalanceMode::Classical
                                                                         : BalanceMode::Literal);
        }
        if (*verify) {
            return cmd_verify(suite, threads);
        }

        ExperimentConfig cfg = load_config(config_path);
        if (seed_given) cfg.base_seed = seed_override;
        if (runs_override > 0) cfg.runs = runs_override;
        if (threads > 0) cfg.spec.threads = threads;
        if (!mode_override.empty()) {
            cfg.spec.balance_mode =
                mode_override == "classical" ? BalanceMode::Classical : BalanceMode::Literal;
        }
        const ValidationReport validation = validate_config(cfg);
        std::cout << format_validation(validation);

        if (*simulate) return cmd_simulate(cfg, validation, run_index, out_dir);
        if (*montecarlo) return cmd_montecarlo(cfg, validation, out_dir);
        if (*sweep) return cmd_sweep(cfg, validation, grid_text, out_dir);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClaimFailure;
    }
    return kExitUsage;
}
