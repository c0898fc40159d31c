#include "signet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace signet {

double UpdateParams::divergence_beta_threshold(int n) {
    // The stricter of the two exponents printed in the source analysis:
    // 16 * n^(n+1), the value the divergence proof opens with.
    return 16.0 * std::pow(static_cast<double>(n), n + 1);
}

double positive_recommendation(NodeId i, const StateVector& s, std::span<const NodeId> n_plus) {
    double h = 0.0; // empty neighbor set -> zero recommendation
    for (NodeId j : n_plus) {
        h -= s[static_cast<std::size_t>(i)] - s[static_cast<std::size_t>(j)];
    }
    return h;
}

double negative_recommendation(NodeId i, const StateVector& s, std::span<const NodeId> n_minus) {
    double h = 0.0;
    for (NodeId j : n_minus) {
        h -= s[static_cast<std::size_t>(i)] + s[static_cast<std::size_t>(j)];
    }
    return h;
}

StateVector step(const StateVector& s, std::span<const SignedArc> sampled, int B, int D,
                 const UpdateParams& params) {
    StateVector out = s;
    for (const SignedArc& a : sampled) {
        const double tail = s[static_cast<std::size_t>(a.tail)];
        const double head = s[static_cast<std::size_t>(a.head)];
        if (a.sign == Sign::Positive) {
            if (B) out[static_cast<std::size_t>(a.head)] -= params.alpha * (head - tail);
        } else {
            if (D) out[static_cast<std::size_t>(a.head)] -= params.beta * (head + tail);
        }
    }
    for (double v : out) {
        if (!std::isfinite(v)) {
            throw NonFiniteState("state update produced a non-finite value");
        }
    }
    return out;
}

double max_abs(const StateVector& s) {
    double m = 0.0;
    for (double v : s) m = std::max(m, std::abs(v));
    return m;
}

TrajectoryRecord run_trajectory(const GraphSchedule& sched, const InteractionModel& model,
                                const UpdateParams& params, const StateVector& s0,
                                std::int64_t horizon, std::uint64_t seed, std::uint64_t run,
                                const TrajectoryOptions& options) {
    if (horizon < 1) {
        throw SemanticError("trajectory horizon must be >= 1");
    }
    if (static_cast<int>(s0.size()) != sched.node_count()) {
        throw SemanticError("initial state length " + std::to_string(s0.size()) +
                            " does not match node count " + std::to_string(sched.node_count()));
    }
    const std::size_t n = s0.size();

    TrajectoryRecord rec;
    rec.params = params;
    rec.seed = seed;
    rec.run = run;
    rec.node_peaks.assign(n, 0.0);

    StateVector state = s0;
    StateVector next(n);
    double m = max_abs(state);
    rec.initial_max = m;
    rec.peak_max = m;
    if (options.record_max_series) rec.max_series.push_back(m);
    for (std::size_t i = 0; i < n; ++i) rec.node_peaks[i] = std::abs(state[i]);
    rec.probe_times.push_back(0);
    rec.probe_states.push_back(state);

    std::vector<SignedArc> sampled;
    bool nonfinite = false;

    std::int64_t t = 0;
    for (; t < horizon; ++t) {
        const SignedDigraph& g = sched.graph_at(t);
        RngStream arc_rng(seed, run, static_cast<std::uint64_t>(t), StreamPurpose::Arcs);
        sampled = sample_arcs(g, model, arc_rng);

        AttentionDraw att;
        if (options.forced_attention) {
            att = *options.forced_attention;
        } else {
            RngStream att_rng(seed, run, static_cast<std::uint64_t>(t), StreamPurpose::Attention);
            att = sample_attention(params.attention, att_rng);
        }

        // synchronous update, reading only time-t values
        next = state;
        for (const SignedArc& a : sampled) {
            const double tail = state[static_cast<std::size_t>(a.tail)];
            const double head = state[static_cast<std::size_t>(a.head)];
            if (a.sign == Sign::Positive) {
                if (att.B) next[static_cast<std::size_t>(a.head)] -= params.alpha * (head - tail);
            } else {
                if (att.D) next[static_cast<std::size_t>(a.head)] -= params.beta * (head + tail);
            }
        }

        double m_next = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = std::abs(next[i]);
            if (v > m_next || std::isnan(v)) m_next = v;
        }
        if (!std::isfinite(m_next)) {
            nonfinite = true; // converted to a Diverged hint below; state keeps time-t values
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double v = std::abs(next[i]);
            if (v > rec.node_peaks[i]) rec.node_peaks[i] = v;
        }
        state.swap(next);

        if (options.record_max_series) rec.max_series.push_back(m_next);
        if (m > 0.0 && m_next / m > rec.max_step_growth) rec.max_step_growth = m_next / m;
        if (m_next > rec.peak_max) rec.peak_max = m_next;
        m = m_next;

        const std::int64_t now = t + 1;
        const bool hit_ceiling = m_next > options.ceiling;
        if (now % options.probe_stride == 0 || now == horizon || hit_ceiling) {
            rec.probe_times.push_back(now);
            rec.probe_states.push_back(state);
        }
        if (static_cast<std::int64_t>(rec.step_records.size()) < options.step_record_cap) {
            rec.step_records.push_back(StepRecord{t, sampled, att.B, att.D, m_next});
        }
        if (hit_ceiling) {
            rec.diverged = true;
            rec.divergence_step = now;
            ++t;
            break;
        }
    }

    if (nonfinite) {
        // step t blew past double range; the record keeps the last finite state
        rec.diverged = true;
        rec.divergence_step = t + 1;
    }
    rec.steps_executed = t;
    rec.final_state = state;
    rec.final_max = m;
    return rec;
}

namespace {

void require_nonexpansive(const UpdateParams& params, int n, const char* who) {
    if (!params.nonexpansive(n)) {
        throw RegimeViolation(std::string(who) +
                              " requires alpha + beta <= 1/(n-1); got alpha + beta = " +
                              std::to_string(params.alpha + params.beta) + " at n = " +
                              std::to_string(n));
    }
}

} // namespace

bool check_lemma1(const StateVector& before, const StateVector& after,
                  const UpdateParams& params) {
    require_nonexpansive(params, static_cast<int>(before.size()), "check_lemma1");
    return max_abs(after) <= max_abs(before) * (1.0 + kLemmaSlack);
}

bool check_lemma2_contraction(std::span<const StateVector> path, NodeId i, double zeta0,
                              const UpdateParams& params) {
    if (path.empty()) {
        throw SemanticError("check_lemma2_contraction requires a nonempty path");
    }
    const int n = static_cast<int>(path.front().size());
    require_nonexpansive(params, n, "check_lemma2_contraction");
    if (zeta0 < 0.0 || zeta0 >= 1.0) {
        throw RegimeViolation("check_lemma2_contraction requires 0 <= zeta0 < 1");
    }
    const double m0 = max_abs(path.front());
    if (std::abs(path.front()[static_cast<std::size_t>(i)]) > zeta0 * m0 * (1.0 + kLemmaSlack)) {
        throw RegimeViolation("check_lemma2_contraction requires |s_i(t)| <= zeta0 * M(t)");
    }
    const double gamma = params.gamma_star(n);
    double gamma_k = 1.0;
    for (std::size_t k = 0; k < path.size(); ++k) {
        const double bound = (1.0 - (1.0 - zeta0) * gamma_k) * m0;
        if (std::abs(path[k][static_cast<std::size_t>(i)]) > bound * (1.0 + kLemmaSlack)) {
            return false;
        }
        gamma_k *= gamma;
    }
    return true;
}

bool check_lemma3_pull(const StateVector& before, const StateVector& after, NodeId j, double zeta0,
                       const UpdateParams& params) {
    const int n = static_cast<int>(before.size());
    require_nonexpansive(params, n, "check_lemma3_pull");
    if (zeta0 < 0.0 || zeta0 >= 1.0) {
        throw RegimeViolation("check_lemma3_pull requires 0 <= zeta0 < 1");
    }
    const double m0 = max_abs(before);
    const double bound = (1.0 - (1.0 - zeta0) * std::min(params.alpha, params.beta)) * m0;
    return std::abs(after[static_cast<std::size_t>(j)]) <= bound * (1.0 + kLemmaSlack);
}

bool check_lemma5_floor(const StateVector& before, const StateVector& after,
                        const UpdateParams& params, int n) {
    if (!(params.alpha < 1.0 / (4.0 * n))) {
        throw RegimeViolation("check_lemma5_floor requires alpha < (4n)^-1");
    }
    if (!(params.beta > UpdateParams::divergence_beta_threshold(n))) {
        throw RegimeViolation("check_lemma5_floor requires beta > 16 n^(n+1)");
    }
    const double floor = max_abs(before) / (2.0 * n);
    return max_abs(after) >= floor * (1.0 - kLemmaSlack);
}

} // namespace signet
