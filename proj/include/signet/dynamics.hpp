#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "signet/sampler.hpp"
#include "signet/schedule.hpp"

namespace signet {

/// Node beliefs at one step. All entries finite; a step that would produce a
/// non-finite value raises NonFiniteState instead.
using StateVector = std::vector<double>;

/// Relative floating-point slack applied by the lemma checkers; the bounds
/// are exact in real arithmetic.
inline constexpr double kLemmaSlack = 1e-12;

/// Update weights and attention probabilities, with the derived regime
/// quantities the convergence/divergence results are stated in.
struct UpdateParams {
    double alpha = 0.0;
    double beta = 0.0;
    AttentionProcess attention{};

    double gamma_star(int n) const { return 1.0 - (alpha + beta) * (n - 1); }
    /// alpha + beta <= 1/(n-1): the max absolute state cannot grow.
    bool nonexpansive(int n) const { return (alpha + beta) * (n - 1) <= 1.0; }
    /// alpha + beta < 1/(n-1): the convergence theorems apply.
    bool contractive(int n) const { return (alpha + beta) * (n - 1) < 1.0; }
    /// alpha <= (4n)^-1: the divergence construction applies to alpha.
    bool divergence_alpha(int n) const { return alpha <= 1.0 / (4.0 * n); }
    /// beta threshold for the sure-event floor on M(t+1); the divergence
    /// analysis opens with beta above this value.
    static double divergence_beta_threshold(int n);
};

double positive_recommendation(NodeId i, const StateVector& s, std::span<const NodeId> n_plus);
double negative_recommendation(NodeId i, const StateVector& s, std::span<const NodeId> n_minus);

/// One synchronous update of every node from time-t values:
///   s_i' = s_i + alpha*B*h_i_plus + beta*D*h_i_minus
/// with in-neighbor sets taken from the sampled arc set.
StateVector step(const StateVector& s, std::span<const SignedArc> sampled, int B, int D,
                 const UpdateParams& params);

/// M(t) = max_i |s_i(t)|.
double max_abs(const StateVector& s);

struct StepRecord {
    std::int64_t t = 0; // the step that produced this record: s(t) -> s(t+1)
    std::vector<SignedArc> sampled;
    int B = 0;
    int D = 0;
    double max_after = 0.0;
};

struct TrajectoryOptions {
    double ceiling = 1e30;              // M above this aborts with a Diverged hint
    std::int64_t probe_stride = 1;      // full state recorded every this many steps
    bool record_max_series = true;      // keep the full M(t) series
    std::int64_t step_record_cap = 0;   // keep at most this many per-step event records
    std::optional<AttentionDraw> forced_attention; // debug override of (B_t, D_t)
};

struct TrajectoryRecord {
    UpdateParams params;
    std::uint64_t seed = 0;
    std::uint64_t run = 0;
    std::int64_t steps_executed = 0;

    std::vector<double> max_series; // M(0..steps_executed) when recorded
    double initial_max = 0.0;
    double final_max = 0.0;
    double peak_max = 0.0;
    // max over executed steps of M(t+1)/M(t); 1 when M stays at 0
    double max_step_growth = 1.0;
    std::vector<double> node_peaks; // per node, max |s_i| over every executed step

    std::vector<std::int64_t> probe_times;
    std::vector<StateVector> probe_states;
    StateVector final_state;

    bool diverged = false; // terminal verdict hint: ceiling hit or non-finite
    std::int64_t divergence_step = -1;

    std::vector<StepRecord> step_records;
};

/// Executes `horizon` steps of the state-flipping dynamics, sampling the
/// interaction set and the attention pair per step from streams keyed by
/// (seed, run, t, purpose). Pure function of its arguments.
TrajectoryRecord run_trajectory(const GraphSchedule& sched, const InteractionModel& model,
                                const UpdateParams& params, const StateVector& s0,
                                std::int64_t horizon, std::uint64_t seed, std::uint64_t run,
                                const TrajectoryOptions& options = {});

/// Nonexpansiveness of M: with alpha+beta <= 1/(n-1), M(t+1) <= M(t) on every
/// sample path. Throws RegimeViolation outside the regime.
bool check_lemma1(const StateVector& before, const StateVector& after, const UpdateParams& params);

/// Contraction bound for a pinned node: given |s_i(t)| <= zeta0 * M(t) and the
/// nonexpansive regime, |s_i(t+k)| <= (1 - (1-zeta0) * gamma_star^k) * M(t)
/// for every k along the executed path. `path` holds s(t) .. s(t+k).
bool check_lemma2_contraction(std::span<const StateVector> path, NodeId i, double zeta0,
                              const UpdateParams& params);

/// Single-arc pull bound: if |s_i(t)| <= zeta0 * M(t) and arc (i,j) was
/// sampled with the attention bit matching its sign set, then
/// |s_j(t+1)| <= (1 - (1-zeta0) * min{alpha,beta}) * M(t).
/// The caller is responsible for having constructed that event.
bool check_lemma3_pull(const StateVector& before, const StateVector& after, NodeId j, double zeta0,
                       const UpdateParams& params);

/// Sure-event floor: with alpha < (4n)^-1 and beta above the divergence
/// threshold, M(t+1) >= M(t)/(2n). Throws RegimeViolation outside the regime.
bool check_lemma5_floor(const StateVector& before, const StateVector& after,
                        const UpdateParams& params, int n);

} // namespace signet
