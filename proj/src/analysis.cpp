#include "signet/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace signet {

std::string to_string(VerdictKind kind) {
    switch (kind) {
    case VerdictKind::Converged: return "converged";
    case VerdictKind::Diverged: return "diverged";
    case VerdictKind::Undecided: return "undecided";
    }
    return "?";
}

Verdict detect_convergence(const TrajectoryRecord& traj, double eps, std::int64_t window) {
    if (eps <= 0.0 || window < 1) {
        throw SemanticError("detect_convergence requires eps > 0 and window >= 1");
    }
    Verdict v;
    if (traj.diverged) {
        v.kind = VerdictKind::Diverged;
        v.peak_max = traj.peak_max;
        v.step = traj.divergence_step;
        return v;
    }
    const std::int64_t cutoff = traj.steps_executed - window;
    std::size_t first = traj.probe_times.size();
    for (std::size_t k = 0; k < traj.probe_times.size(); ++k) {
        if (traj.probe_times[k] >= cutoff) {
            first = k;
            break;
        }
    }
    if (traj.probe_times.size() - first < 2) {
        v.reason = "fewer than two probes in the trailing window";
        return v;
    }
    const std::size_t n = traj.final_state.size();
    for (std::size_t i = 0; i < n; ++i) {
        double lo = traj.probe_states[first][i];
        double hi = lo;
        for (std::size_t k = first + 1; k < traj.probe_states.size(); ++k) {
            lo = std::min(lo, traj.probe_states[k][i]);
            hi = std::max(hi, traj.probe_states[k][i]);
        }
        if (hi - lo >= eps) {
            v.reason = "horizon exhausted before the trailing window stabilized";
            return v;
        }
    }
    v.kind = VerdictKind::Converged;
    v.limits = traj.final_state;
    return v;
}

AbsoluteConsensus check_absolute_consensus(const StateVector& limits, double eps) {
    AbsoluteConsensus result;
    result.m_star = max_abs(limits);
    result.holds = true;
    for (double v : limits) {
        if (std::abs(std::abs(v) - result.m_star) >= eps) {
            result.holds = false;
            break;
        }
    }
    return result;
}

ClusterClassification classify_limits(const StateVector& limits, double eps) {
    ClusterClassification c;
    c.y_star = max_abs(limits);
    if (c.y_star < eps) {
        for (NodeId i = 0; i < static_cast<NodeId>(limits.size()); ++i) c.zero_set.push_back(i);
        c.y_star = 0.0;
        return c;
    }
    for (NodeId i = 0; i < static_cast<NodeId>(limits.size()); ++i) {
        const double v = limits[static_cast<std::size_t>(i)];
        if (std::abs(v - c.y_star) < eps) {
            c.plus_set.push_back(i);
        } else if (std::abs(v + c.y_star) < eps) {
            c.minus_set.push_back(i);
        } else {
            throw InconsistentLimits("limit of node " + std::to_string(i) + " (" +
                                     std::to_string(v) + ") is neither +-y* nor 0 at y* = " +
                                     std::to_string(c.y_star));
        }
    }
    return c;
}

namespace {

double l1_norm(const StateVector& s) {
    double sum = 0.0;
    for (double v : s) sum += std::abs(v);
    return sum;
}

bool same_set(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    return a == b; // both are maintained sorted
}

} // namespace

Theorem2Check check_theorem2(const ClusterClassification& classification, const TotalGraph& total,
                             const StateVector& s0, double tol, BalanceMode mode) {
    bool has_negative = false;
    for (const SignedArc& a : total.graph.arcs()) {
        if (a.sign != Sign::Negative) continue;
        has_negative = true;
        auto it = total.frame_hits.find({a.tail, a.head});
        if (it == total.frame_hits.end() || it->second.empty()) {
            throw HypothesisViolation("negative arc (" + std::to_string(a.tail) + ", " +
                                      std::to_string(a.head) +
                                      ") never appears in a schedule frame");
        }
    }
    if (!has_negative) {
        throw HypothesisViolation("total graph contains no negative arc");
    }

    Theorem2Check result;
    auto bipartition = strong_balance_bipartition(total.graph, mode);
    result.strongly_balanced = bipartition.has_value();
    if (result.strongly_balanced) {
        result.sides_match = (same_set(classification.plus_set, bipartition->side_one) &&
                              same_set(classification.minus_set, bipartition->side_two)) ||
                             (same_set(classification.plus_set, bipartition->side_two) &&
                              same_set(classification.minus_set, bipartition->side_one));
        result.y_star_bounded = classification.y_star <= l1_norm(s0) + tol;
        result.passed = result.sides_match && result.y_star_bounded;
    } else {
        result.zero_limits =
            classification.zero_set.size() == static_cast<std::size_t>(total.graph.node_count());
        result.passed = result.zero_limits;
    }
    return result;
}

NoSurvivorCheck no_survivor_check(const TrajectoryRecord& traj, double threshold) {
    if (threshold <= 0.0) {
        throw SemanticError("no_survivor_check requires threshold > 0");
    }
    NoSurvivorCheck result;
    result.max_diverged = traj.diverged;
    result.per_node_exceeded.reserve(traj.node_peaks.size());
    for (double peak : traj.node_peaks) {
        result.per_node_exceeded.push_back(peak >= threshold);
    }
    if (result.max_diverged) {
        for (bool exceeded : result.per_node_exceeded) {
            if (!exceeded) {
                result.claim_holds = false;
                break;
            }
        }
    }
    return result;
}

WilsonInterval wilson95(int successes, int trials) {
    WilsonInterval ci;
    if (trials <= 0) return ci;
    const double z = 1.959963984540054;
    const double nd = trials;
    const double phat = static_cast<double>(successes) / nd;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nd;
    const double center = (phat + z2 / (2.0 * nd)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / nd + z2 / (4.0 * nd * nd)) / denom;
    ci.lo = std::max(0.0, center - half);
    ci.hi = std::min(1.0, center + half);
    return ci;
}

std::string to_string(Claim claim) {
    switch (claim) {
    case Claim::Convergence: return "convergence";
    case Claim::AbsoluteConsensus: return "absolute_consensus";
    case Claim::Theorem2: return "theorem2";
    case Claim::Divergence: return "divergence";
    case Claim::NoSurvivor: return "no_survivor";
    case Claim::Lemma1Monotone: return "lemma1_monotone";
    }
    return "?";
}

std::optional<Claim> claim_from_string(const std::string& name) {
    for (Claim c : {Claim::Convergence, Claim::AbsoluteConsensus, Claim::Theorem2,
                    Claim::Divergence, Claim::NoSurvivor, Claim::Lemma1Monotone}) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

StateVector initial_state_for_run(const ExperimentSpec& spec, std::uint64_t base_seed,
                                  std::uint64_t run) {
    if (spec.s0_explicit) return *spec.s0_explicit;
    RngStream rng(base_seed, run, 0, StreamPurpose::InitialState);
    StateVector s0(static_cast<std::size_t>(spec.schedule.node_count()));
    for (double& v : s0) v = rng.uniform(-1.0, 1.0);
    return s0;
}

namespace {

std::optional<std::int64_t> convergence_time(const TrajectoryRecord& traj, double eps) {
    // smallest probed t from which every later probe stays within eps of the
    // final state, per node
    const StateVector& final_state = traj.final_state;
    std::optional<std::int64_t> result;
    for (std::size_t k = traj.probe_states.size(); k-- > 0;) {
        double dev = 0.0;
        for (std::size_t i = 0; i < final_state.size(); ++i) {
            dev = std::max(dev, std::abs(traj.probe_states[k][i] - final_state[i]));
        }
        if (dev < eps) {
            result = traj.probe_times[k];
        } else {
            break;
        }
    }
    return result;
}

struct Theorem2Context {
    std::optional<TotalGraph> total;
    std::string error; // hypothesis failure shared by every run
};

Theorem2Context make_theorem2_context(const ExperimentSpec& spec, bool enabled) {
    Theorem2Context ctx;
    if (!enabled) return ctx;
    try {
        ctx.total = total_graph(spec.schedule);
    } catch (const Error& e) {
        ctx.error = e.what();
    }
    return ctx;
}

RunSummary evaluate_run(const ExperimentSpec& spec, const Theorem2Context& thm2,
                        std::uint64_t base_seed, std::uint64_t run) {
    RunSummary summary;
    summary.run = run;
    try {
        const StateVector s0 = initial_state_for_run(spec, base_seed, run);
        TrajectoryOptions options;
        options.ceiling = spec.ceiling;
        options.probe_stride = spec.probe_stride;
        options.record_max_series = false;
        options.forced_attention = spec.forced_attention;
        const TrajectoryRecord traj = run_trajectory(spec.schedule, spec.model, spec.params, s0,
                                                     spec.horizon, base_seed, run, options);
        const Verdict verdict = detect_convergence(traj, spec.eps_conv, spec.window);
        summary.verdict = verdict.kind;
        summary.reason = verdict.reason;
        summary.steps = traj.steps_executed;
        summary.final_max = traj.final_max;
        summary.peak_max = traj.peak_max;
        if (verdict.kind == VerdictKind::Converged) {
            summary.convergence_time = convergence_time(traj, spec.eps_conv);
        }

        for (Claim claim : spec.claims) {
            bool pass = false;
            switch (claim) {
            case Claim::Convergence:
                pass = verdict.kind == VerdictKind::Converged;
                break;
            case Claim::AbsoluteConsensus:
                pass = verdict.kind == VerdictKind::Converged &&
                       check_absolute_consensus(verdict.limits, spec.eps_cluster).holds;
                break;
            case Claim::Theorem2: {
                if (verdict.kind != VerdictKind::Converged || !thm2.total) {
                    summary.claims[claim] = false;
                    if (!thm2.error.empty()) summary.error = thm2.error;
                    continue;
                }
                try {
                    const auto classification = classify_limits(verdict.limits, spec.eps_cluster);
                    summary.y_star = classification.y_star;
                    pass = check_theorem2(classification, *thm2.total, s0, 1e-9, spec.balance_mode)
                               .passed;
                } catch (const InconsistentLimits&) {
                    pass = false;
                }
                break;
            }
            case Claim::Divergence:
                pass = verdict.kind == VerdictKind::Diverged;
                break;
            case Claim::NoSurvivor: {
                const double threshold = spec.no_survivor_factor * max_abs(s0);
                pass = threshold > 0.0 ? no_survivor_check(traj, threshold).claim_holds
                                       : !traj.diverged; // s0 = 0 never diverges
                break;
            }
            case Claim::Lemma1Monotone:
                pass = traj.max_step_growth <= 1.0 + kLemmaSlack;
                break;
            }
            summary.claims[claim] = pass;
        }

        // record y* for converged runs even when theorem2 is not enabled
        if (!summary.y_star && verdict.kind == VerdictKind::Converged) {
            try {
                summary.y_star = classify_limits(verdict.limits, spec.eps_cluster).y_star;
            } catch (const InconsistentLimits&) {
                // limits outside the clustering pattern; leave y* unset
            }
        }
    } catch (const std::exception& e) {
        summary.errored = true;
        summary.error = e.what();
        summary.verdict = VerdictKind::Undecided;
        summary.reason = "run error";
        for (Claim claim : spec.claims) summary.claims[claim] = false;
    }
    return summary;
}

} // namespace

MonteCarloReport monte_carlo(const ExperimentSpec& spec, int n_runs, std::uint64_t base_seed) {
    if (n_runs < 1) {
        throw SemanticError("monte_carlo requires n_runs >= 1");
    }
    const bool theorem2_enabled =
        std::find(spec.claims.begin(), spec.claims.end(), Claim::Theorem2) != spec.claims.end();
    const Theorem2Context thm2 = make_theorem2_context(spec, theorem2_enabled);

    std::vector<RunSummary> summaries(static_cast<std::size_t>(n_runs));
    unsigned hw = std::thread::hardware_concurrency();
    int workers = spec.threads > 0 ? spec.threads : static_cast<int>(hw ? hw : 1);
    workers = std::min(workers, n_runs);

    if (workers <= 1) {
        for (int r = 0; r < n_runs; ++r) {
            summaries[static_cast<std::size_t>(r)] =
                evaluate_run(spec, thm2, base_seed, static_cast<std::uint64_t>(r));
        }
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                const int r = next.fetch_add(1);
                if (r >= n_runs) return;
                summaries[static_cast<std::size_t>(r)] =
                    evaluate_run(spec, thm2, base_seed, static_cast<std::uint64_t>(r));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    MonteCarloReport report;
    report.base_seed = base_seed;
    report.runs = n_runs;
    double conv_time_sum = 0.0;
    int conv_time_count = 0;
    double y_sum = 0.0;
    for (const RunSummary& s : summaries) {
        switch (s.verdict) {
        case VerdictKind::Converged: ++report.converged; break;
        case VerdictKind::Diverged: ++report.diverged; break;
        case VerdictKind::Undecided: ++report.undecided; break;
        }
        if (s.errored) ++report.errors;
        if (s.convergence_time) {
            conv_time_sum += static_cast<double>(*s.convergence_time);
            ++conv_time_count;
        }
        if (s.y_star) {
            y_sum += *s.y_star;
            if (!report.y_star_min || *s.y_star < *report.y_star_min) report.y_star_min = *s.y_star;
            if (!report.y_star_max || *s.y_star > *report.y_star_max) report.y_star_max = *s.y_star;
        }
    }
    report.converged_ci = wilson95(report.converged, n_runs);
    report.diverged_ci = wilson95(report.diverged, n_runs);
    report.undecided_ci = wilson95(report.undecided, n_runs);
    if (conv_time_count > 0) report.mean_convergence_time = conv_time_sum / conv_time_count;
    if (report.y_star_min) {
        int y_count = 0;
        for (const RunSummary& s : summaries) {
            if (s.y_star) ++y_count;
        }
        report.y_star_mean = y_sum / y_count;
    }
    for (Claim claim : spec.claims) {
        ClaimStats stats;
        stats.claim = claim;
        stats.total = n_runs;
        for (const RunSummary& s : summaries) {
            auto it = s.claims.find(claim);
            if (it != s.claims.end() && it->second) ++stats.passed;
        }
        stats.ci = wilson95(stats.passed, stats.total);
        if (stats.passed < stats.total) report.all_claims_passed = false;
        report.claims.push_back(stats);
    }
    report.per_run = std::move(summaries);
    return report;
}

std::vector<BetaSweepRow> beta_sweep(const ExperimentSpec& spec, std::span<const double> grid,
                                     int n_runs, std::uint64_t base_seed) {
    if (grid.empty()) {
        throw SemanticError("beta_sweep requires a nonempty grid");
    }
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (grid[k] <= grid[k - 1]) {
            throw SemanticError("beta_sweep grid must be strictly ascending");
        }
    }
    std::vector<BetaSweepRow> rows;
    for (double beta : grid) {
        ExperimentSpec point = spec;
        point.params.beta = beta;
        point.claims = {Claim::Divergence};
        const MonteCarloReport report = monte_carlo(point, n_runs, base_seed);
        BetaSweepRow row;
        row.beta = beta;
        row.runs = n_runs;
        row.diverged = report.diverged;
        row.fraction = static_cast<double>(report.diverged) / n_runs;
        row.ci = wilson95(report.diverged, n_runs);
        rows.push_back(row);
    }
    return rows;
}

} // namespace signet
