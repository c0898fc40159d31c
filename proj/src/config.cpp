#include "signet/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "signet/graph_io.hpp"

namespace signet {

namespace {

using nlohmann::json;

[[noreturn]] void fail_parse(const std::string& msg) { throw ParseError("config: " + msg); }

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        fail_parse(std::string("missing or non-numeric field '") + key + "'");
    }
    return j[key].get<double>();
}

SignedDigraph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("arcs")) {
        fail_parse("inline frame needs 'n' and 'arcs'");
    }
    std::vector<SignedArc> arcs;
    for (const json& arc : j["arcs"]) {
        if (!arc.is_array() || arc.size() != 3) {
            fail_parse("arc entries must be [tail, head, \"+\"|\"-\"]");
        }
        const std::string sign = arc[2].get<std::string>();
        if (sign != "+" && sign != "-") {
            fail_parse("arc sign must be \"+\" or \"-\"");
        }
        arcs.push_back(SignedArc{arc[0].get<NodeId>(), arc[1].get<NodeId>(),
                                 sign == "+" ? Sign::Positive : Sign::Negative});
    }
    return SignedDigraph(j["n"].get<int>(), std::move(arcs));
}

GraphSchedule schedule_from_json(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) fail_parse("'schedule' must be an object");
    if (j.contains("manifest")) {
        return read_schedule_manifest(base_dir / j["manifest"].get<std::string>());
    }
    std::vector<SignedDigraph> frames;
    if (j.contains("frame_files")) {
        for (const json& f : j["frame_files"]) {
            frames.push_back(read_graph_file(base_dir / f.get<std::string>()));
        }
    } else if (j.contains("frames")) {
        for (const json& f : j["frames"]) frames.push_back(graph_from_json(f));
    } else {
        fail_parse("'schedule' needs 'manifest', 'frame_files' or inline 'frames'");
    }
    if (j.contains("period") &&
        j["period"].get<int>() != static_cast<int>(frames.size())) {
        fail_parse("declared period does not match the number of frames");
    }
    return GraphSchedule(std::move(frames));
}

InteractionModel interaction_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) {
        fail_parse("'interaction' needs a 'kind'");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "full_activation") return InteractionModel::full_activation();
    if (kind == "gossip_single_arc") return InteractionModel::gossip();
    if (kind != "per_arc_bernoulli") {
        fail_parse("unknown interaction kind '" + kind + "'");
    }
    InteractionModel model = InteractionModel::per_arc_bernoulli(require_number(j, "p"));
    if (j.contains("per_arc")) {
        for (const json& entry : j["per_arc"]) {
            if (!entry.is_array() || entry.size() != 3) {
                fail_parse("'per_arc' entries must be [tail, head, probability]");
            }
            model.per_arc[{entry[0].get<NodeId>(), entry[1].get<NodeId>()}] =
                entry[2].get<double>();
        }
    }
    return model;
}

void check_probability(double value, const char* name, bool open_interval) {
    const bool ok = open_interval ? (value > 0.0 && value < 1.0) : (value > 0.0 && value <= 1.0);
    if (!ok) {
        throw SemanticError(std::string("config: '") + name + "' = " + std::to_string(value) +
                            (open_interval ? " outside (0,1)" : " outside (0,1]"));
    }
}

} // namespace

ExperimentConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail_parse(e.what());
    }
    if (!j.is_object()) fail_parse("top level must be an object");
    if (!j.contains("schedule")) fail_parse("missing 'schedule'");
    if (!j.contains("interaction")) fail_parse("missing 'interaction'");

    GraphSchedule schedule = schedule_from_json(j["schedule"], base_dir);
    InteractionModel model = interaction_from_json(j["interaction"]);

    UpdateParams params;
    params.alpha = require_number(j, "alpha");
    params.beta = require_number(j, "beta");
    params.attention.b = require_number(j, "b");
    params.attention.d = require_number(j, "d");
    if (params.alpha <= 0.0 || params.beta <= 0.0) {
        throw SemanticError("config: alpha and beta must be positive");
    }
    check_probability(params.attention.b, "b", true);
    check_probability(params.attention.d, "d", true);
    if (model.kind == InteractionModel::Kind::PerArcBernoulli) {
        check_probability(model.p, "interaction.p", false);
        for (const auto& [arc, prob] : model.per_arc) {
            check_probability(prob, "interaction.per_arc", false);
        }
    }

    if (j.contains("n") && j["n"].get<int>() != schedule.node_count()) {
        throw SemanticError("config: 'n' does not match the schedule's node count");
    }

    ExperimentConfig cfg{ExperimentSpec(std::move(schedule))};
    cfg.spec.model = std::move(model);
    cfg.spec.params = params;

    const double horizon = require_number(j, "horizon");
    if (horizon < 1.0) throw SemanticError("config: 'horizon' must be >= 1");
    cfg.spec.horizon = static_cast<std::int64_t>(horizon);

    if (j.contains("s0")) {
        const json& s0 = j["s0"];
        const std::string kind = s0.value("kind", "uniform");
        if (kind == "explicit") {
            StateVector values;
            for (const json& v : s0.at("values")) values.push_back(v.get<double>());
            if (static_cast<int>(values.size()) != cfg.spec.schedule.node_count()) {
                throw SemanticError("config: s0 length does not match node count");
            }
            cfg.spec.s0_explicit = std::move(values);
        } else if (kind != "uniform") {
            fail_parse("s0 kind must be 'explicit' or 'uniform'");
        }
    }

    cfg.spec.probe_stride = static_cast<std::int64_t>(j.value("probe_stride", 1.0));
    if (cfg.spec.probe_stride < 1) throw SemanticError("config: 'probe_stride' must be >= 1");

    if (j.contains("tolerances")) {
        const json& tol = j["tolerances"];
        cfg.spec.eps_conv = tol.value("eps_conv", cfg.spec.eps_conv);
        cfg.spec.window = static_cast<std::int64_t>(tol.value("window", 1000.0));
        cfg.spec.eps_cluster = tol.value("eps_cluster", cfg.spec.eps_cluster);
        cfg.spec.ceiling = tol.value("ceiling", cfg.spec.ceiling);
        cfg.spec.no_survivor_factor = tol.value("no_survivor_factor", cfg.spec.no_survivor_factor);
    }
    if (cfg.spec.eps_conv <= 0.0 || cfg.spec.eps_cluster <= 0.0 || cfg.spec.ceiling <= 0.0 ||
        cfg.spec.window < 1) {
        throw SemanticError("config: tolerances must be positive");
    }

    if (j.contains("claims")) {
        for (const json& name : j["claims"]) {
            auto claim = claim_from_string(name.get<std::string>());
            if (!claim) {
                throw SemanticError("config: unknown claim '" + name.get<std::string>() + "'");
            }
            cfg.spec.claims.push_back(*claim);
        }
    }

    if (j.contains("forced_attention")) {
        const json& fa = j["forced_attention"];
        AttentionDraw draw;
        draw.B = fa.at("B").get<int>();
        draw.D = fa.at("D").get<int>();
        if ((draw.B != 0 && draw.B != 1) || (draw.D != 0 && draw.D != 1)) {
            throw SemanticError("config: forced attention bits must be 0 or 1");
        }
        cfg.spec.forced_attention = draw;
    }

    const std::string mode = j.value("balance_mode", "literal");
    if (mode == "classical") {
        cfg.spec.balance_mode = BalanceMode::Classical;
    } else if (mode != "literal") {
        throw SemanticError("config: balance_mode must be 'literal' or 'classical'");
    }

    cfg.spec.threads = static_cast<int>(j.value("threads", 0.0));
    cfg.runs = static_cast<int>(j.value("runs", 1.0));
    if (cfg.runs < 1) throw SemanticError("config: 'runs' must be >= 1");
    cfg.base_seed = j.value("seed", 0ULL);

    cfg.raw_json = j.dump(2);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path.parent_path());
}

ValidationReport validate_config(const ExperimentConfig& cfg) {
    const ExperimentSpec& spec = cfg.spec;
    ValidationReport report;
    report.n = spec.schedule.node_count();
    report.period = spec.schedule.period();

    const ArcAssumptionReport arcs = verify_a1_a6(spec.model, spec.schedule);
    report.a1 = arcs.a1_holds;
    report.p_star = arcs.p_star;
    report.a1_reason = arcs.a1_reason;
    report.a6 = arcs.a6_holds;
    report.a6_boundary = arcs.a6_boundary;
    report.p_upper = arcs.p_upper;
    report.a6_reason = arcs.a6_reason;

    report.a2_window = minimal_connectivity_window(spec.schedule, ConnectivityMode::All);
    report.a3 = is_sign_consistent(spec.schedule);
    report.a4_window = minimal_connectivity_window(spec.schedule, ConnectivityMode::PositiveOnly);
    report.a5_window = minimal_connectivity_window(spec.schedule, ConnectivityMode::NegativeOnly);

    const int n = report.n;
    report.nonexpansive = spec.params.nonexpansive(n);
    report.theorem1_regime = spec.params.contractive(n);
    report.prop3_alpha = spec.params.divergence_alpha(n);
    report.beta_threshold = UpdateParams::divergence_beta_threshold(n);
    report.prop3_beta = spec.params.beta > report.beta_threshold;
    report.gamma_star = spec.params.gamma_star(n);

    auto enabled = [&](Claim c) {
        return std::find(spec.claims.begin(), spec.claims.end(), c) != spec.claims.end();
    };
    auto warn = [&](const std::string& msg) { report.warnings.push_back(msg); };

    if (spec.forced_attention) {
        warn("forced attention overrides the Bernoulli processes; statistical claims do not "
             "apply to such runs");
    }
    if (enabled(Claim::Convergence) || enabled(Claim::AbsoluteConsensus)) {
        if (!report.theorem1_regime) {
            warn("convergence claims enabled but alpha + beta >= 1/(n-1)");
        }
        if (!report.a1) warn("convergence claims enabled but A1 fails: " + arcs.a1_reason);
        if (!report.a2_window) {
            warn("convergence claims enabled but no window makes the union graph strongly "
                 "connected (A2)");
        }
    }
    if (enabled(Claim::Theorem2)) {
        if (!report.a3) warn("theorem2 claim enabled but the schedule is not sign consistent (A3)");
        if (!report.theorem1_regime) warn("theorem2 claim enabled outside the contractive regime");
        if (report.a3) {
            bool has_negative = false;
            for (const SignedDigraph& f : spec.schedule.frames()) {
                for (const SignedArc& a : f.arcs()) {
                    if (a.sign == Sign::Negative) has_negative = true;
                }
            }
            if (!has_negative) warn("theorem2 claim enabled but the total graph has no negative arc");
        }
    }
    if (enabled(Claim::Divergence) || enabled(Claim::NoSurvivor)) {
        if (!report.prop3_alpha) warn("divergence claims enabled but alpha > (4n)^-1");
        if (enabled(Claim::Divergence) && !report.prop3_beta) {
            warn("divergence claim enabled but beta <= 16 n^(n+1) = " +
                 std::to_string(report.beta_threshold));
        }
        if (!report.a4_window) warn("divergence claims enabled but A4 fails (positive union graph)");
        if (!report.a5_window) warn("divergence claims enabled but A5 fails (negative union graph)");
        if (!report.a6 || report.a6_boundary) {
            warn("divergence claims enabled but A6 fails or sits at the p* = 1 boundary: " +
                 arcs.a6_reason);
        }
    }
    if (enabled(Claim::Lemma1Monotone) && !report.nonexpansive) {
        warn("lemma1_monotone claim enabled but alpha + beta > 1/(n-1)");
    }
    return report;
}

std::string format_validation(const ValidationReport& r) {
    std::ostringstream out;
    out << "n = " << r.n << ", period = " << r.period << "\n";
    out << "A1 (arc selection lower bound): "
        << (r.a1 ? "holds, p_star = " + std::to_string(r.p_star) : "violated") << " (" << r.a1_reason
        << ")\n";
    out << "A2 (union strongly connected): "
        << (r.a2_window ? "holds, minimal K = " + std::to_string(*r.a2_window) : "violated")
        << "\n";
    out << "A3 (sign consistency): " << (r.a3 ? "holds" : "violated") << "\n";
    out << "A4 (positive union strongly connected): "
        << (r.a4_window ? "holds, minimal K = " + std::to_string(*r.a4_window) : "violated")
        << "\n";
    out << "A5 (negative union strongly connected): "
        << (r.a5_window ? "holds, minimal K = " + std::to_string(*r.a5_window) : "violated")
        << "\n";
    out << "A6 (independent arcs, upper bound): "
        << (r.a6 ? (r.a6_boundary ? "boundary (p_upper = 1)" : "holds, p_upper = " +
                                                                   std::to_string(r.p_upper))
                 : "violated")
        << " (" << r.a6_reason << ")\n";
    out << "regimes: nonexpansive = " << (r.nonexpansive ? "yes" : "no")
        << ", theorem1/2 (alpha+beta < 1/(n-1)) = " << (r.theorem1_regime ? "yes" : "no")
        << ", gamma_star = " << r.gamma_star << "\n";
    out << "         prop3 alpha <= (4n)^-1 = " << (r.prop3_alpha ? "yes" : "no")
        << ", beta > 16 n^(n+1) = " << std::to_string(r.beta_threshold) << " = "
        << (r.prop3_beta ? "yes" : "no") << "\n";
    for (const std::string& w : r.warnings) {
        out << "warning: " << w << "\n";
    }
    return out.str();
}

} // namespace signet
