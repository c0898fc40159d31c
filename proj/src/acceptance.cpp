#include "signet/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

#include "signet/analysis.hpp"
#include "signet/report_json.hpp"

namespace signet::accept {

namespace {

constexpr std::uint64_t kBaseSeed = 1;

// -------------------------------------------------------------------------
// Bundled environments. These mirror the shipped fixture files; the suites
// build them programmatically so `verify` runs without any input paths.

// n=5, period 2; the union of consecutive frames is a 5-cycle plus chords,
// strongly connected with minimal window K = 2. Sign consistent.
GraphSchedule theorem1_schedule() {
    SignedDigraph frame0(5, {{0, 1, Sign::Positive},
                             {1, 2, Sign::Positive},
                             {2, 3, Sign::Positive},
                             {3, 4, Sign::Negative}});
    SignedDigraph frame1(5, {{4, 0, Sign::Positive},
                             {0, 2, Sign::Negative},
                             {1, 3, Sign::Positive}});
    return GraphSchedule({frame0, frame1});
}

// n=4, period 2; negative 4-cycle between sides {0,2} and {1,3}, positive
// arcs within the sides alternating per frame. Strongly balanced, negative
// arcs present in every frame.
GraphSchedule balanced4_schedule() {
    std::vector<SignedArc> negatives = {{0, 1, Sign::Negative},
                                        {1, 2, Sign::Negative},
                                        {2, 3, Sign::Negative},
                                        {3, 0, Sign::Negative}};
    std::vector<SignedArc> frame0_arcs = negatives;
    frame0_arcs.push_back({0, 2, Sign::Positive});
    frame0_arcs.push_back({1, 3, Sign::Positive});
    std::vector<SignedArc> frame1_arcs = negatives;
    frame1_arcs.push_back({2, 0, Sign::Positive});
    frame1_arcs.push_back({3, 1, Sign::Positive});
    return GraphSchedule({SignedDigraph(4, frame0_arcs), SignedDigraph(4, frame1_arcs)});
}

// n=3, period 1; all-negative directed triangle, not strongly balanced.
GraphSchedule negative_triangle_schedule() {
    return GraphSchedule({SignedDigraph(
        3, {{0, 1, Sign::Negative}, {1, 2, Sign::Negative}, {2, 0, Sign::Negative}})});
}

// n=3, period 1; positive 3-cycle one way, negative 3-cycle the other, so
// the positive and negative subgraphs are each strongly connected (K = 1).
GraphSchedule prop3_schedule() {
    return GraphSchedule({SignedDigraph(3, {{0, 1, Sign::Positive},
                                            {1, 2, Sign::Positive},
                                            {2, 0, Sign::Positive},
                                            {0, 2, Sign::Negative},
                                            {2, 1, Sign::Negative},
                                            {1, 0, Sign::Negative}})});
}

// -------------------------------------------------------------------------
// Random scenario helpers for the fuzz criteria.

std::vector<SignedArc> random_arc_set(int n, double arc_prob, RngStream& rng) {
    std::vector<SignedArc> arcs;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
            if (i == j) continue;
            if (rng.bernoulli(arc_prob)) {
                arcs.push_back({i, j, rng.bernoulli(0.5) ? Sign::Positive : Sign::Negative});
            }
        }
    }
    return arcs;
}

StateVector random_state(int n, double scale, RngStream& rng) {
    StateVector s(static_cast<std::size_t>(n));
    for (double& v : s) v = rng.uniform(-scale, scale);
    return s;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string claim_detail(const MonteCarloReport& report) {
    std::ostringstream out;
    out << "converged " << report.converged << "/" << report.runs << ", diverged "
        << report.diverged << "/" << report.runs;
    for (const ClaimStats& c : report.claims) {
        out << ", " << to_string(c.claim) << " " << c.passed << "/" << c.total << " (wilson lo "
            << c.ci.lo << ")";
    }
    if (report.errors > 0) out << ", errors " << report.errors;
    return out.str();
}

// -------------------------------------------------------------------------
// Criterion 1: nonexpansiveness of M under alpha + beta <= 1/(n-1).

CriterionResult criterion1(const Options&) {
    CriterionResult result{1, "lemma1_nonexpansive_fuzz", false, "", 0.0};
    Timer timer;
    const int trials = 10000;
    int failures = 0;
    for (int n : {3, 6, 10}) {
        for (int trial = 0; trial < trials; ++trial) {
            RngStream rng(0x51, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial),
                          StreamPurpose::Scratch);
            const double budget = 1.0 / (n - 1);
            // hit the boundary alpha + beta = 1/(n-1) exactly on some trials
            const double total = trial % 10 == 0 ? budget : budget * rng.uniform(0.01, 1.0);
            const double split = rng.uniform(0.05, 0.95);
            UpdateParams params;
            params.alpha = total * split;
            params.beta = total - params.alpha;
            const auto sampled = random_arc_set(n, 0.5, rng);
            const auto before = random_state(n, 5.0, rng);
            const int B = rng.bernoulli(0.5) ? 1 : 0;
            const int D = rng.bernoulli(0.5) ? 1 : 0;
            const auto after = step(before, sampled, B, D, params);
            if (!check_lemma1(before, after, params)) ++failures;
        }
    }
    result.seconds = timer.elapsed();
    result.passed = failures == 0 && result.seconds < 10.0;
    std::ostringstream out;
    out << (3 * trials - failures) << "/" << 3 * trials << " steps nonexpansive at n in {3,6,10}";
    if (failures > 0) out << ", " << failures << " violations";
    result.detail = out.str();
    return result;
}

// -------------------------------------------------------------------------
// Criterion 2: pinned-node contraction (k-step) and single-arc pull bounds.

CriterionResult criterion2(const Options&) {
    CriterionResult result{2, "lemma2_lemma3_bounds", false, "", 0.0};
    Timer timer;
    const int scenarios = 1000;
    int lemma2_failures = 0;
    int lemma3_failures = 0;

    for (int trial = 0; trial < scenarios; ++trial) {
        RngStream rng(0x52, 0, static_cast<std::uint64_t>(trial), StreamPurpose::Scratch);
        const int n = 5;
        const double total = rng.uniform(0.05, 1.0) / (n - 1);
        const double split = rng.uniform(0.05, 0.95);
        UpdateParams params;
        params.alpha = total * split;
        params.beta = total - params.alpha;
        const double zeta0 = trial % 20 == 0 ? 0.0 : rng.uniform(0.0, 0.95);

        StateVector s = random_state(n, 1.0, rng);
        std::size_t anchor = 0;
        for (std::size_t v = 1; v < s.size(); ++v) {
            if (std::abs(s[v]) > std::abs(s[anchor])) anchor = v;
        }
        NodeId pinned = static_cast<NodeId>((anchor + 1 +
                                             rng.uniform_index(static_cast<std::uint64_t>(n - 1))) %
                                            n);
        s[static_cast<std::size_t>(pinned)] =
            zeta0 * max_abs(s) * rng.uniform(-1.0, 1.0); // |s_i| <= zeta0 * M, anchor untouched

        const int k = trial % 25 == 0 ? 0 : static_cast<int>(rng.uniform_index(20)) + 1;
        std::vector<StateVector> path{s};
        for (int stepped = 0; stepped < k; ++stepped) {
            const auto sampled = random_arc_set(n, 0.3, rng);
            const int B = rng.bernoulli(0.6) ? 1 : 0;
            const int D = rng.bernoulli(0.6) ? 1 : 0;
            s = step(s, sampled, B, D, params);
            path.push_back(s);
        }
        if (!check_lemma2_contraction(path, pinned, zeta0, params)) ++lemma2_failures;
    }

    for (int trial = 0; trial < scenarios; ++trial) {
        RngStream rng(0x53, 0, static_cast<std::uint64_t>(trial), StreamPurpose::Scratch);
        const int n = 3 + static_cast<int>(rng.uniform_index(6));
        const double total = rng.uniform(0.05, 1.0) / (n - 1);
        const double split = rng.uniform(0.05, 0.95);
        UpdateParams params;
        params.alpha = total * split;
        params.beta = total - params.alpha;
        const double zeta0 = rng.uniform(0.0, 0.9);

        const NodeId i = static_cast<NodeId>(rng.uniform_index(static_cast<std::uint64_t>(n)));
        NodeId j = static_cast<NodeId>(rng.uniform_index(static_cast<std::uint64_t>(n)));
        while (j == i) j = static_cast<NodeId>(rng.uniform_index(static_cast<std::uint64_t>(n)));

        StateVector s = random_state(n, 1.0, rng);
        NodeId anchor = j; // keeps M positive and away from the pinned node
        s[static_cast<std::size_t>(anchor)] = rng.bernoulli(0.5) ? 1.0 : -1.0;
        s[static_cast<std::size_t>(i)] = zeta0 * max_abs(s) * rng.uniform(-1.0, 1.0);

        const Sign sign = rng.bernoulli(0.5) ? Sign::Positive : Sign::Negative;
        std::vector<SignedArc> sampled{{i, j, sign}};
        for (NodeId a = 0; a < n; ++a) {
            for (NodeId b = 0; b < n; ++b) {
                if (a == b || (a == i && b == j)) continue;
                if (rng.bernoulli(0.3)) {
                    sampled.push_back({a, b, rng.bernoulli(0.5) ? Sign::Positive : Sign::Negative});
                }
            }
        }
        const int B = sign == Sign::Positive ? 1 : (rng.bernoulli(0.5) ? 1 : 0);
        const int D = sign == Sign::Negative ? 1 : (rng.bernoulli(0.5) ? 1 : 0);
        const auto after = step(s, sampled, B, D, params);
        if (!check_lemma3_pull(s, after, j, zeta0, params)) ++lemma3_failures;
    }

    result.seconds = timer.elapsed();
    result.passed = lemma2_failures == 0 && lemma3_failures == 0 && result.seconds < 10.0;
    std::ostringstream out;
    out << "lemma2 " << (scenarios - lemma2_failures) << "/" << scenarios << ", lemma3 "
        << (scenarios - lemma3_failures) << "/" << scenarios;
    result.detail = out.str();
    return result;
}

// -------------------------------------------------------------------------
// Criterion 3: almost-sure convergence surrogate.

ExperimentSpec theorem1_spec(const Options& opts) {
    ExperimentSpec spec(theorem1_schedule());
    spec.model = InteractionModel::per_arc_bernoulli(0.5);
    spec.params.alpha = 0.1;
    spec.params.beta = 0.1;
    spec.params.attention = {0.5, 0.5};
    spec.horizon = 100000;
    spec.probe_stride = 10;
    spec.eps_conv = 1e-9;
    spec.window = 1000;
    spec.eps_cluster = 1e-6;
    spec.claims = {Claim::Convergence, Claim::AbsoluteConsensus};
    spec.threads = opts.threads;
    return spec;
}

CriterionResult criterion3(const Options& opts) {
    CriterionResult result{3, "theorem1_convergence", false, "", 0.0};
    Timer timer;
    const ExperimentSpec spec = theorem1_spec(opts);
    const auto window = minimal_connectivity_window(spec.schedule, ConnectivityMode::All);
    const MonteCarloReport report = monte_carlo(spec, 200, kBaseSeed);
    result.seconds = timer.elapsed();
    bool claims_ok = true;
    for (const ClaimStats& c : report.claims) claims_ok = claims_ok && c.passed == c.total;
    result.passed = window && *window <= 2 && report.converged == report.runs && claims_ok;
    result.detail = claim_detail(report) + ", A2 window K = " +
                    (window ? std::to_string(*window) : std::string("none"));
    return result;
}

// -------------------------------------------------------------------------
// Criteria 4 and 5: clustering under strong balance, zero limits without it.

ExperimentSpec clustering_spec(GraphSchedule sched, const Options& opts) {
    ExperimentSpec spec(std::move(sched));
    spec.model = InteractionModel::per_arc_bernoulli(0.5);
    spec.params.alpha = 0.1;
    spec.params.beta = 0.1;
    spec.params.attention = {0.5, 0.5};
    spec.horizon = 100000;
    spec.probe_stride = 10;
    spec.eps_conv = 1e-9;
    spec.window = 1000;
    spec.eps_cluster = 1e-6;
    spec.claims = {Claim::Convergence, Claim::Theorem2};
    spec.threads = opts.threads;
    return spec;
}

CriterionResult criterion4(const Options& opts) {
    CriterionResult result{4, "theorem2i_balanced_clustering", false, "", 0.0};
    Timer timer;
    const ExperimentSpec spec = clustering_spec(balanced4_schedule(), opts);
    const bool consistent = is_sign_consistent(spec.schedule);
    const bool balanced =
        consistent && strong_balance_bipartition(total_graph(spec.schedule).graph).has_value();
    const MonteCarloReport report = monte_carlo(spec, 200, kBaseSeed);
    result.seconds = timer.elapsed();
    bool claims_ok = true;
    for (const ClaimStats& c : report.claims) claims_ok = claims_ok && c.passed == c.total;
    result.passed = consistent && balanced && claims_ok;
    std::ostringstream out;
    out << claim_detail(report);
    if (report.y_star_max) {
        out << ", y* in [" << *report.y_star_min << ", " << *report.y_star_max << "]";
    }
    result.detail = out.str();
    return result;
}

CriterionResult criterion5(const Options& opts) {
    CriterionResult result{5, "theorem2ii_unbalanced_zero", false, "", 0.0};
    Timer timer;
    const ExperimentSpec spec = clustering_spec(negative_triangle_schedule(), opts);
    const bool unbalanced =
        !strong_balance_bipartition(total_graph(spec.schedule).graph).has_value();
    const MonteCarloReport report = monte_carlo(spec, 200, kBaseSeed);
    result.seconds = timer.elapsed();
    bool claims_ok = true;
    for (const ClaimStats& c : report.claims) claims_ok = claims_ok && c.passed == c.total;
    result.passed = unbalanced && claims_ok;
    std::ostringstream out;
    out << claim_detail(report);
    if (report.y_star_max) out << ", max y* = " << *report.y_star_max;
    result.detail = out.str();
    return result;
}

// -------------------------------------------------------------------------
// Criterion 6: sure-event floor M(t+1) >= M(t)/(2n).

CriterionResult criterion6(const Options&) {
    CriterionResult result{6, "lemma5_floor", false, "", 0.0};
    Timer timer;
    const int trials = 1000;
    const int n = 3;
    UpdateParams params;
    params.alpha = 0.08; // < 1/12
    params.beta = 1300.0; // > 16 * 3^4 = 1296
    int failures = 0;
    for (int trial = 0; trial < trials; ++trial) {
        RngStream rng(0x56, 0, static_cast<std::uint64_t>(trial), StreamPurpose::Scratch);
        const auto sampled = random_arc_set(n, 0.6, rng);
        const auto before = random_state(n, 2.0, rng);
        const int B = rng.bernoulli(0.5) ? 1 : 0;
        const int D = rng.bernoulli(0.5) ? 1 : 0;
        const auto after = step(before, sampled, B, D, params);
        if (!check_lemma5_floor(before, after, params, n)) ++failures;
    }
    result.seconds = timer.elapsed();
    result.passed = failures == 0;
    result.detail = std::to_string(trials - failures) + "/" + std::to_string(trials) +
                    " steps above the M/(2n) floor at n=3, alpha=0.08, beta=1300";
    return result;
}

// -------------------------------------------------------------------------
// Criteria 7 and 8: divergence above the beta threshold, no-survivor within
// the diverged runs, and the small-beta control.

ExperimentSpec prop3_spec(double beta, const Options& opts) {
    ExperimentSpec spec(prop3_schedule());
    spec.model = InteractionModel::per_arc_bernoulli(0.5);
    spec.params.alpha = 0.08;
    spec.params.beta = beta;
    spec.params.attention = {0.5, 0.5};
    spec.horizon = 10000;
    spec.probe_stride = 1;
    spec.ceiling = 1e30;
    spec.no_survivor_factor = 1e6;
    spec.claims = {Claim::Divergence, Claim::NoSurvivor};
    spec.threads = opts.threads;
    return spec;
}

CriterionResult criterion7(const Options& opts) {
    CriterionResult result{7, "prop3_divergence", false, "", 0.0};
    Timer timer;
    const ExperimentSpec divergence = prop3_spec(1400.0, opts);
    const auto a4 = minimal_connectivity_window(divergence.schedule, ConnectivityMode::PositiveOnly);
    const auto a5 = minimal_connectivity_window(divergence.schedule, ConnectivityMode::NegativeOnly);
    const MonteCarloReport hot = monte_carlo(divergence, 100, kBaseSeed);
    const MonteCarloReport control = monte_carlo(prop3_spec(0.05, opts), 100, kBaseSeed);
    result.seconds = timer.elapsed();
    result.passed = a4 && a5 && hot.diverged >= 99 && control.diverged == 0;
    std::ostringstream out;
    out << "beta=1400: " << hot.diverged << "/100 diverged; beta=0.05 control: "
        << control.diverged << "/100 diverged";
    result.detail = out.str();
    return result;
}

CriterionResult criterion8(const Options& opts) {
    CriterionResult result{8, "theorem4_no_survivor", false, "", 0.0};
    Timer timer;
    const MonteCarloReport hot = monte_carlo(prop3_spec(1400.0, opts), 100, kBaseSeed);
    int diverged = 0;
    int survivors = 0;
    for (const RunSummary& run : hot.per_run) {
        if (run.verdict != VerdictKind::Diverged) continue;
        ++diverged;
        auto it = run.claims.find(Claim::NoSurvivor);
        if (it == run.claims.end() || !it->second) ++survivors;
    }
    result.seconds = timer.elapsed();
    result.passed = diverged > 0 && survivors == 0;
    result.detail = "every node exceeded 1e6 * M(0) in " + std::to_string(diverged - survivors) +
                    "/" + std::to_string(diverged) + " diverged runs";
    return result;
}

// -------------------------------------------------------------------------
// Criterion 9: structural algorithms against exhaustive oracles.
//
// The oracles below are deliberately independent of the graph module's
// algorithms: bipartitions by exhaustive mask enumeration, components and
// reachability by boolean matrix closure.

struct OracleGraph {
    int n = 0;
    std::vector<SignedArc> arcs;
};

bool oracle_balanced(const OracleGraph& g) {
    const unsigned full = (1u << g.n) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        if (!(mask & 1u)) continue; // node 0 on side one; counts each split once
        bool ok = true;
        for (const SignedArc& a : g.arcs) {
            if (a.sign != Sign::Negative) continue;
            const bool tail_one = (mask >> a.tail) & 1u;
            const bool head_one = (mask >> a.head) & 1u;
            if (tail_one == head_one) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<std::vector<NodeId>> oracle_components(const OracleGraph& g, bool positive_only,
                                                   bool undirected) {
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(g.n),
                                         std::vector<char>(static_cast<std::size_t>(g.n), 0));
    for (int v = 0; v < g.n; ++v) reach[v][v] = 1;
    for (const SignedArc& a : g.arcs) {
        if (positive_only && a.sign != Sign::Positive) continue;
        reach[a.tail][a.head] = 1;
        if (undirected) reach[a.head][a.tail] = 1;
    }
    for (int k = 0; k < g.n; ++k) {
        for (int i = 0; i < g.n; ++i) {
            for (int j = 0; j < g.n; ++j) {
                if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
            }
        }
    }
    std::vector<std::vector<NodeId>> components;
    std::vector<char> assigned(static_cast<std::size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v) {
        if (assigned[v]) continue;
        std::vector<NodeId> comp;
        for (int w = 0; w < g.n; ++w) {
            if (reach[v][w] && reach[w][v] && !assigned[w]) {
                // undirected closure is symmetric, so this collects v's class
                comp.push_back(w);
                assigned[w] = 1;
            }
        }
        components.push_back(comp);
    }
    return components;
}

bool oracle_strongly_connected(const OracleGraph& g) {
    auto components = oracle_components(g, false, false);
    return components.size() == 1 && static_cast<int>(components.front().size()) == g.n;
}

CriterionResult criterion9(const Options&) {
    CriterionResult result{9, "structural_oracles", false, "", 0.0};
    Timer timer;
    const int graphs = 500;
    int balance_mismatch = 0;
    int predicate_failures = 0;
    int cluster_mismatch = 0;
    int connectivity_mismatch = 0;
    for (int trial = 0; trial < graphs; ++trial) {
        RngStream rng(0x59, 0, static_cast<std::uint64_t>(trial), StreamPurpose::Scratch);
        const int n = 3 + static_cast<int>(rng.uniform_index(8)); // 3..10
        const double arc_prob = rng.uniform(0.05, 0.55);
        OracleGraph og{n, random_arc_set(n, arc_prob, rng)};
        SignedDigraph g(n, og.arcs);

        const auto bipartition = strong_balance_bipartition(g, BalanceMode::Literal);
        if (bipartition.has_value() != oracle_balanced(og)) ++balance_mismatch;
        if (bipartition) {
            if (bipartition->side_one.empty() || bipartition->side_two.empty() ||
                bipartition->side_one.size() + bipartition->side_two.size() !=
                    static_cast<std::size_t>(n)) {
                ++predicate_failures;
            }
            std::vector<int> side(static_cast<std::size_t>(n), 0);
            for (NodeId v : bipartition->side_two) side[static_cast<std::size_t>(v)] = 1;
            for (const SignedArc& a : og.arcs) {
                if (a.sign == Sign::Negative && side[a.tail] == side[a.head]) {
                    ++predicate_failures;
                    break;
                }
            }
        }

        if (positive_cluster_partition(g).clusters != oracle_components(og, true, true)) {
            ++cluster_mismatch;
        }
        if (is_strongly_connected(g) != oracle_strongly_connected(og)) ++connectivity_mismatch;
    }
    result.seconds = timer.elapsed();
    result.passed = balance_mismatch == 0 && predicate_failures == 0 && cluster_mismatch == 0 &&
                    connectivity_mismatch == 0;
    std::ostringstream out;
    out << graphs << " random graphs (n <= 10): balance mismatches " << balance_mismatch
        << ", predicate failures " << predicate_failures << ", cluster mismatches "
        << cluster_mismatch << ", connectivity mismatches " << connectivity_mismatch;
    result.detail = out.str();
    return result;
}

// -------------------------------------------------------------------------
// Criterion 10: byte-identical Monte Carlo replay.

CriterionResult criterion10(const Options& opts) {
    CriterionResult result{10, "determinism_replay", false, "", 0.0};
    Timer timer;

    ExperimentSpec convergent = theorem1_spec(opts);
    convergent.horizon = 20000;
    const std::string conv_a = report_to_json(monte_carlo(convergent, 25, kBaseSeed));
    const std::string conv_b = report_to_json(monte_carlo(convergent, 25, kBaseSeed));

    const ExperimentSpec divergent = prop3_spec(1400.0, opts);
    const std::string div_a = report_to_json(monte_carlo(divergent, 10, kBaseSeed));
    const std::string div_b = report_to_json(monte_carlo(divergent, 10, kBaseSeed));

    result.seconds = timer.elapsed();
    const bool conv_match = conv_a == conv_b;
    const bool div_match = div_a == div_b;
    result.passed = conv_match && div_match;
    std::ostringstream out;
    out << "convergent suite replay " << (conv_match ? "identical" : "DIFFERS") << " ("
        << conv_a.size() << " bytes), divergent suite replay "
        << (div_match ? "identical" : "DIFFERS") << " (" << div_a.size() << " bytes)";
    result.detail = out.str();
    return result;
}

} // namespace

std::vector<int> all_criteria() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}; }

std::vector<int> suite_criteria(const std::string& suite) {
    static const std::map<std::string, std::vector<int>> suites = {
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
        {"lemmas", {1, 2, 6}},
        {"lemma1", {1}},
        {"lemma2_3", {2}},
        {"lemma5", {6}},
        {"theorem1", {3}},
        {"theorem2", {4, 5}},
        {"theorem2i", {4}},
        {"theorem2ii", {5}},
        {"prop3", {7, 8}},
        {"divergence", {7}},
        {"nosurvivor", {8}},
        {"structural", {9}},
        {"determinism", {10}},
    };
    auto it = suites.find(suite);
    return it == suites.end() ? std::vector<int>{} : it->second;
}

std::vector<std::string> suite_names() {
    return {"all",       "lemmas",     "lemma1",     "lemma2_3",  "lemma5",
            "theorem1",  "theorem2",   "theorem2i",  "theorem2ii", "prop3",
            "divergence", "nosurvivor", "structural", "determinism"};
}

CriterionResult run_criterion(int id, const Options& opts) {
    switch (id) {
    case 1: return criterion1(opts);
    case 2: return criterion2(opts);
    case 3: return criterion3(opts);
    case 4: return criterion4(opts);
    case 5: return criterion5(opts);
    case 6: return criterion6(opts);
    case 7: return criterion7(opts);
    case 8: return criterion8(opts);
    case 9: return criterion9(opts);
    case 10: return criterion10(opts);
    default: throw SemanticError("unknown acceptance criterion " + std::to_string(id));
    }
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << " C" << r.id << " " << r.name << " (" << r.detail
        << ") [" << r.seconds << "s]";
    return out.str();
}

} // namespace signet::accept
