#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signet/dynamics.hpp"

namespace signet {

enum class VerdictKind { Converged, Diverged, Undecided };

std::string to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind = VerdictKind::Undecided;
    StateVector limits;          // Converged: final probed state
    double peak_max = 0.0;       // Diverged: peak M
    std::int64_t step = -1;      // Diverged: step at which the ceiling was hit
    std::string reason;          // Undecided
};

/// Trailing stability window: Converged iff every node varies by less than
/// eps across all probes in the final `window` steps of the run.
Verdict detect_convergence(const TrajectoryRecord& traj, double eps, std::int64_t window);

struct AbsoluteConsensus {
    bool holds = false;
    double m_star = 0.0;
};

/// All |limits| within eps of M* = max_abs(limits).
AbsoluteConsensus check_absolute_consensus(const StateVector& limits, double eps);

/// Limits split by sign against y* = max_abs(limits): +y* side, -y* side,
/// or all zero when y* < eps.
struct ClusterClassification {
    std::vector<NodeId> plus_set;
    std::vector<NodeId> minus_set;
    std::vector<NodeId> zero_set;
    double y_star = 0.0;
};

/// Throws InconsistentLimits if some limit fits none of the three classes.
ClusterClassification classify_limits(const StateVector& limits, double eps);

struct Theorem2Check {
    bool strongly_balanced = false;
    // balanced case: classification sides equal the graph bipartition up to a
    // global sign swap, and y* <= ||s(0)||_1
    bool sides_match = false;
    bool y_star_bounded = false;
    // unbalanced case: every limit is zero
    bool zero_limits = false;
    bool passed = false;
};

/// Verifies the clustering claims against the total graph. Throws
/// HypothesisViolation when the total graph has no negative arc or some
/// negative arc never appears in a frame. `tol` slackens the y* bound.
Theorem2Check check_theorem2(const ClusterClassification& classification, const TotalGraph& total,
                             const StateVector& s0, double tol = 1e-9,
                             BalanceMode mode = BalanceMode::Literal);

struct NoSurvivorCheck {
    bool max_diverged = false;
    std::vector<bool> per_node_exceeded;
    bool claim_holds = true; // max diverged implies every node exceeded the threshold
};

/// Desk-scale no-survivor claim: in a diverged run every node's |s_i| must
/// have exceeded `threshold` at some executed step.
NoSurvivorCheck no_survivor_check(const TrajectoryRecord& traj, double threshold);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

/// 95% Wilson score interval for a binomial fraction.
WilsonInterval wilson95(int successes, int trials);

/// Per-run claims checked by the Monte Carlo harness.
enum class Claim {
    Convergence,       // verdict is Converged
    AbsoluteConsensus, // converged and limits pass check_absolute_consensus
    Theorem2,          // converged and check_theorem2 passes
    Divergence,        // verdict is Diverged
    NoSurvivor,        // no_survivor_check claim holds
    Lemma1Monotone     // M never grew by more than the fp slack
};

std::string to_string(Claim claim);
std::optional<Claim> claim_from_string(const std::string& name);

/// Everything a batch needs to run one experiment; lowered from the CLI
/// config or built programmatically.
struct ExperimentSpec {
    explicit ExperimentSpec(GraphSchedule sched) : schedule(std::move(sched)) {}

    GraphSchedule schedule;
    InteractionModel model;
    UpdateParams params;

    std::optional<StateVector> s0_explicit; // absent: uniform in [-1,1] per run
    std::int64_t horizon = 1;
    std::int64_t probe_stride = 1;

    double eps_conv = 1e-9;
    std::int64_t window = 1000;
    double eps_cluster = 1e-6;
    double ceiling = 1e30;
    double no_survivor_factor = 1e6; // threshold = factor * max_abs(s0)

    std::vector<Claim> claims;
    std::optional<AttentionDraw> forced_attention;
    BalanceMode balance_mode = BalanceMode::Literal;
    int threads = 0; // 0: hardware concurrency
};

StateVector initial_state_for_run(const ExperimentSpec& spec, std::uint64_t base_seed,
                                  std::uint64_t run);

struct RunSummary {
    std::uint64_t run = 0;
    VerdictKind verdict = VerdictKind::Undecided;
    std::string reason;
    std::int64_t steps = 0;
    double final_max = 0.0;
    double peak_max = 0.0;
    std::optional<double> y_star;
    std::optional<std::int64_t> convergence_time;
    std::map<Claim, bool> claims;
    bool errored = false;
    std::string error;
};

struct ClaimStats {
    Claim claim{};
    int passed = 0;
    int total = 0;
    WilsonInterval ci;
};

struct MonteCarloReport {
    std::uint64_t base_seed = 0;
    int runs = 0;
    int converged = 0;
    int diverged = 0;
    int undecided = 0;
    int errors = 0;
    WilsonInterval converged_ci, diverged_ci, undecided_ci;
    std::vector<ClaimStats> claims;
    std::optional<double> mean_convergence_time; // over converged runs
    std::optional<double> y_star_min, y_star_mean, y_star_max;
    std::vector<RunSummary> per_run;
    bool all_claims_passed = true;
};

/// Runs n_runs independent seeded trajectories (possibly concurrently),
/// applies the enabled claims, and aggregates. Per-run errors land in the
/// error count; the batch never aborts. Deterministic given base_seed.
MonteCarloReport monte_carlo(const ExperimentSpec& spec, int n_runs, std::uint64_t base_seed);

struct BetaSweepRow {
    double beta = 0.0;
    int runs = 0;
    int diverged = 0;
    double fraction = 0.0;
    WilsonInterval ci;
};

/// Monte Carlo diverged fraction per beta over an ascending grid, reusing the
/// same base seed per point (common random numbers).
std::vector<BetaSweepRow> beta_sweep(const ExperimentSpec& spec, std::span<const double> grid,
                                     int n_runs, std::uint64_t base_seed);

} // namespace signet
