#include "signet/report_json.hpp"

#include <sstream>

#include "json.hpp"

namespace signet {

namespace {

using nlohmann::json;

json interval_json(const WilsonInterval& ci) {
    return json{{"lo", ci.lo}, {"hi", ci.hi}};
}

} // namespace

std::string report_to_json(const MonteCarloReport& report, int indent) {
    json j;
    j["base_seed"] = report.base_seed;
    j["runs"] = report.runs;
    j["verdicts"] = {
        {"converged", report.converged},
        {"diverged", report.diverged},
        {"undecided", report.undecided},
        {"converged_fraction", static_cast<double>(report.converged) / report.runs},
        {"diverged_fraction", static_cast<double>(report.diverged) / report.runs},
        {"undecided_fraction", static_cast<double>(report.undecided) / report.runs},
        {"converged_ci95", interval_json(report.converged_ci)},
        {"diverged_ci95", interval_json(report.diverged_ci)},
        {"undecided_ci95", interval_json(report.undecided_ci)},
    };
    j["errors"] = report.errors;
    json claims = json::array();
    for (const ClaimStats& c : report.claims) {
        claims.push_back(json{{"claim", to_string(c.claim)},
                              {"passed", c.passed},
                              {"total", c.total},
                              {"fraction", static_cast<double>(c.passed) / c.total},
                              {"ci95", interval_json(c.ci)}});
    }
    j["claims"] = claims;
    j["all_claims_passed"] = report.all_claims_passed;
    json aggregates;
    if (report.mean_convergence_time) {
        aggregates["mean_convergence_time"] = *report.mean_convergence_time;
    }
    if (report.y_star_min) {
        aggregates["y_star"] = {{"min", *report.y_star_min},
                                {"mean", *report.y_star_mean},
                                {"max", *report.y_star_max}};
    }
    j["aggregates"] = aggregates;
    json per_run = json::array();
    for (const RunSummary& s : report.per_run) {
        json r;
        r["run"] = s.run;
        r["verdict"] = to_string(s.verdict);
        if (!s.reason.empty()) r["reason"] = s.reason;
        r["steps"] = s.steps;
        r["final_max"] = s.final_max;
        r["peak_max"] = s.peak_max;
        if (s.y_star) r["y_star"] = *s.y_star;
        if (s.convergence_time) r["convergence_time"] = *s.convergence_time;
        json claims_passed;
        for (const auto& [claim, pass] : s.claims) claims_passed[to_string(claim)] = pass;
        if (!claims_passed.empty()) r["claims"] = claims_passed;
        if (s.errored) r["error"] = s.error;
        per_run.push_back(r);
    }
    j["per_run"] = per_run;
    return j.dump(indent);
}

std::string validation_to_json(const ValidationReport& r, int indent) {
    json j;
    j["n"] = r.n;
    j["period"] = r.period;
    j["a1"] = {{"holds", r.a1}, {"p_star", r.p_star}, {"reason", r.a1_reason}};
    j["a2"] = r.a2_window ? json{{"holds", true}, {"minimal_window", *r.a2_window}}
                          : json{{"holds", false}};
    j["a3"] = {{"holds", r.a3}};
    j["a4"] = r.a4_window ? json{{"holds", true}, {"minimal_window", *r.a4_window}}
                          : json{{"holds", false}};
    j["a5"] = r.a5_window ? json{{"holds", true}, {"minimal_window", *r.a5_window}}
                          : json{{"holds", false}};
    j["a6"] = {{"holds", r.a6},
               {"boundary", r.a6_boundary},
               {"p_upper", r.p_upper},
               {"reason", r.a6_reason}};
    j["regimes"] = {{"nonexpansive", r.nonexpansive},
                    {"theorem1", r.theorem1_regime},
                    {"prop3_alpha", r.prop3_alpha},
                    {"prop3_beta", r.prop3_beta},
                    {"gamma_star", r.gamma_star},
                    {"beta_threshold", r.beta_threshold}};
    j["warnings"] = r.warnings;
    return j.dump(indent);
}

std::string trajectory_summary_to_json(const TrajectoryRecord& traj, const Verdict& verdict,
                                       int indent) {
    json j;
    j["seed"] = traj.seed;
    j["run"] = traj.run;
    j["params"] = {{"alpha", traj.params.alpha},
                   {"beta", traj.params.beta},
                   {"b", traj.params.attention.b},
                   {"d", traj.params.attention.d}};
    j["steps_executed"] = traj.steps_executed;
    j["initial_max"] = traj.initial_max;
    j["final_max"] = traj.final_max;
    j["peak_max"] = traj.peak_max;
    j["max_step_growth"] = traj.max_step_growth;
    j["node_peaks"] = traj.node_peaks;
    j["final_state"] = traj.final_state;
    j["verdict"] = to_string(verdict.kind);
    if (verdict.kind == VerdictKind::Diverged) j["divergence_step"] = verdict.step;
    if (!verdict.reason.empty()) j["reason"] = verdict.reason;
    return j.dump(indent);
}

std::string sweep_to_csv(const std::vector<BetaSweepRow>& rows) {
    std::ostringstream out;
    out.precision(17);
    out << "beta,runs,diverged,fraction,wilson_lo,wilson_hi\n";
    for (const BetaSweepRow& r : rows) {
        out << r.beta << "," << r.runs << "," << r.diverged << "," << r.fraction << "," << r.ci.lo
            << "," << r.ci.hi << "\n";
    }
    return out.str();
}

} // namespace signet
