#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "signet/dynamics.hpp"

using namespace signet;

namespace {

std::vector<SignedArc> random_arc_set(int n, double arc_prob, RngStream& rng) {
    std::vector<SignedArc> arcs;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j)
            if (i != j && rng.bernoulli(arc_prob))
                arcs.push_back({i, j, rng.bernoulli(0.5) ? Sign::Positive : Sign::Negative});
    return arcs;
}

StateVector random_state(int n, double scale, RngStream& rng) {
    StateVector s(n);
    for (double& v : s) v = rng.uniform(-scale, scale);
    return s;
}

UpdateParams nonexpansive_params(int n, RngStream& rng) {
    UpdateParams p;
    const double total = rng.uniform(0.05, 1.0) / (n - 1);
    const double split = rng.uniform(0.05, 0.95);
    p.alpha = total * split;
    p.beta = total - p.alpha;
    return p;
}

GraphSchedule triangle_schedule() {
    return GraphSchedule({SignedDigraph(
        3, {{0, 1, Sign::Positive}, {1, 2, Sign::Negative}, {2, 0, Sign::Positive}})});
}

} // namespace

TEST_CASE("recommendations follow the state-flipping formulas") {
    StateVector s{1.0, -0.5, 0.25};
    std::vector<NodeId> empty;
    CHECK(positive_recommendation(0, s, empty) == 0.0);
    CHECK(negative_recommendation(0, s, empty) == 0.0);

    StateVector consensus{1.0, 1.0, 1.0};
    std::vector<NodeId> both{1, 2};
    CHECK(positive_recommendation(0, consensus, both) == 0.0);

    CHECK(positive_recommendation(0, s, both) == doctest::Approx(-2.25));
    std::vector<NodeId> just2{2};
    CHECK(negative_recommendation(0, s, just2) == doctest::Approx(-1.25));

    StateVector antisymmetric{1.0, -1.0, 0.0};
    std::vector<NodeId> just1{1};
    CHECK(negative_recommendation(0, antisymmetric, just1) == 0.0);
}

TEST_CASE("step applies the update rule synchronously") {
    UpdateParams p;
    p.alpha = 0.1;
    p.beta = 0.05;
    StateVector s{1.0, -0.5, 0.25};
    std::vector<SignedArc> sampled{{1, 0, Sign::Positive}, {2, 0, Sign::Negative}};

    auto frozen = step(s, sampled, 0, 0, p);
    CHECK(frozen == s);

    auto next = step(s, sampled, 1, 1, p);
    CHECK(next[0] == doctest::Approx(0.7875));
    CHECK(next[1] == s[1]);
    CHECK(next[2] == s[2]);

    // consensus is a fixed point of all-positive dynamics
    StateVector c{0.7, 0.7, 0.7};
    std::vector<SignedArc> all_positive{{0, 1, Sign::Positive},
                                        {1, 2, Sign::Positive},
                                        {2, 0, Sign::Positive},
                                        {1, 0, Sign::Positive}};
    CHECK(step(c, all_positive, 1, 0, p) == c);
}

TEST_CASE("max_abs") {
    CHECK(max_abs({0.0, 0.0, 0.0}) == 0.0);
    CHECK(max_abs({1.0, -2.0, 0.5}) == 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        RngStream rng(21, 0, trial, StreamPurpose::Scratch);
        auto s = random_state(7, 3.0, rng);
        double m = 0.0;
        for (double v : s) m = std::max(m, std::abs(v));
        CHECK(max_abs(s) == m);
    }
}

TEST_CASE("step is odd in the state and permutation equivariant") {
    for (int trial = 0; trial < 200; ++trial) {
        RngStream rng(22, 0, trial, StreamPurpose::Scratch);
        const int n = 5;
        auto p = nonexpansive_params(n, rng);
        auto sampled = random_arc_set(n, 0.4, rng);
        auto s = random_state(n, 2.0, rng);
        const int B = rng.bernoulli(0.5), D = rng.bernoulli(0.5);

        auto negated = s;
        for (double& v : negated) v = -v;
        auto lhs = step(negated, sampled, B, D, p);
        auto rhs = step(s, sampled, B, D, p);
        for (int i = 0; i < n; ++i) CHECK(lhs[i] == -rhs[i]);

        // relabel nodes by a rotation
        std::vector<NodeId> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
        StateVector ps(n);
        for (int i = 0; i < n; ++i) ps[perm[i]] = s[i];
        std::vector<SignedArc> parcs;
        for (const SignedArc& a : sampled) parcs.push_back({perm[a.tail], perm[a.head], a.sign});
        auto permuted_out = step(ps, parcs, B, D, p);
        for (int i = 0; i < n; ++i) CHECK(permuted_out[perm[i]] == rhs[i]);
    }
}

TEST_CASE("run_trajectory basics") {
    auto sched = triangle_schedule();
    UpdateParams p;
    p.alpha = 0.1;
    p.beta = 0.1;
    p.attention = {0.5, 0.5};
    auto model = InteractionModel::per_arc_bernoulli(0.5);

    SUBCASE("frozen attention keeps the state at s0") {
        TrajectoryOptions options;
        options.forced_attention = AttentionDraw{0, 0};
        StateVector s0{0.3, -0.7, 0.2};
        auto rec = run_trajectory(sched, model, p, s0, 500, 1, 0, options);
        CHECK(rec.final_state == s0);
        CHECK(rec.max_step_growth == 1.0);
        CHECK_FALSE(rec.diverged);
    }

    SUBCASE("the origin is a fixed point") {
        StateVector zero{0.0, 0.0, 0.0};
        auto rec = run_trajectory(sched, model, p, zero, 200, 2, 0, {});
        CHECK(rec.final_state == zero);
        CHECK(rec.peak_max == 0.0);
    }

    SUBCASE("same seed replays bit-identically") {
        StateVector s0{1.0, -0.5, 0.25};
        TrajectoryOptions options;
        options.probe_stride = 7;
        auto a = run_trajectory(sched, model, p, s0, 300, 77, 3, options);
        auto b = run_trajectory(sched, model, p, s0, 300, 77, 3, options);
        CHECK(a.final_state == b.final_state);
        CHECK(a.max_series == b.max_series);
        CHECK(a.probe_times == b.probe_times);
        CHECK(a.probe_states == b.probe_states);
        CHECK(a.node_peaks == b.node_peaks);

        auto c = run_trajectory(sched, model, p, s0, 300, 77, 4, options);
        CHECK(a.final_state != c.final_state);
    }

    SUBCASE("probe bookkeeping") {
        StateVector s0{1.0, -0.5, 0.25};
        TrajectoryOptions options;
        options.probe_stride = 10;
        auto rec = run_trajectory(sched, model, p, s0, 95, 5, 0, options);
        CHECK(rec.steps_executed == 95);
        CHECK(rec.max_series.size() == 96);
        CHECK(rec.probe_times.front() == 0);
        CHECK(rec.probe_times.back() == 95); // final state probed even off-stride
        for (std::size_t k = 0; k + 1 < rec.probe_times.size() - 1; ++k) {
            CHECK(rec.probe_times[k + 1] - rec.probe_times[k] == 10);
        }
    }

    SUBCASE("the ceiling converts blow-up into a Diverged hint") {
        UpdateParams hot = p;
        hot.beta = 1400.0;
        TrajectoryOptions options;
        options.ceiling = 1e12;
        StateVector s0{1.0, -0.5, 0.25};
        auto rec = run_trajectory(sched, model, hot, s0, 100000, 6, 0, options);
        CHECK(rec.diverged);
        CHECK(rec.divergence_step > 0);
        CHECK(rec.steps_executed == rec.divergence_step);
        CHECK(rec.peak_max > 1e12);
        CHECK(rec.steps_executed < 100000);
    }

    SUBCASE("overflow past double range still surfaces as Diverged") {
        UpdateParams hot = p;
        hot.beta = 1e8;
        TrajectoryOptions options;
        options.ceiling = std::numeric_limits<double>::infinity();
        auto rec = run_trajectory(sched, model, hot, {1.0, -0.5, 0.25}, 100000, 8, 0, options);
        CHECK(rec.diverged);
        CHECK(rec.divergence_step == rec.steps_executed + 1);
        CHECK(rec.max_series.size() == static_cast<std::size_t>(rec.steps_executed) + 1);
        for (double v : rec.final_state) CHECK(std::isfinite(v));
    }

    SUBCASE("arc sampling never consults the attention stream") {
        StateVector s0{1.0, -0.5, 0.25};
        TrajectoryOptions options;
        options.step_record_cap = 60;
        UpdateParams other = p;
        other.attention = {0.9, 0.15};
        auto a = run_trajectory(sched, model, p, s0, 60, 11, 0, options);
        auto b = run_trajectory(sched, model, other, s0, 60, 11, 0, options);
        REQUIRE(a.step_records.size() == 60);
        REQUIRE(b.step_records.size() == 60);
        bool attention_differs = false;
        for (std::size_t k = 0; k < 60; ++k) {
            CHECK(a.step_records[k].sampled == b.step_records[k].sampled);
            if (a.step_records[k].B != b.step_records[k].B ||
                a.step_records[k].D != b.step_records[k].D) {
                attention_differs = true;
            }
        }
        CHECK(attention_differs);
    }
}

TEST_CASE("lemma 1: M is nonexpansive in the stated regime") {
    for (int n : {3, 6}) {
        for (int trial = 0; trial < 500; ++trial) {
            RngStream rng(23, n, trial, StreamPurpose::Scratch);
            auto p = nonexpansive_params(n, rng);
            if (trial % 7 == 0) {
                // exact boundary alpha + beta = 1/(n-1)
                const double total = 1.0 / (n - 1);
                p.alpha = total * 0.5;
                p.beta = total - p.alpha;
            }
            auto s = random_state(n, 4.0, rng);
            auto sampled = random_arc_set(n, 0.5, rng);
            auto after = step(s, sampled, rng.bernoulli(0.5), rng.bernoulli(0.5), p);
            CHECK(check_lemma1(s, after, p));
        }
    }

    UpdateParams loose;
    loose.alpha = 0.4;
    loose.beta = 0.4; // 0.8 > 1/2 at n = 3
    StateVector s{1.0, 0.0, 0.0};
    CHECK_THROWS_AS(check_lemma1(s, s, loose), RegimeViolation);
}

TEST_CASE("lemma 2: pinned-node contraction bound along fuzzed paths") {
    for (int trial = 0; trial < 500; ++trial) {
        RngStream rng(24, 0, trial, StreamPurpose::Scratch);
        const int n = 5;
        auto p = nonexpansive_params(n, rng);
        const double zeta0 = trial % 10 == 0 ? 0.0 : rng.uniform(0.0, 0.9);

        auto s = random_state(n, 1.0, rng);
        std::size_t anchor = 0;
        for (std::size_t v = 1; v < s.size(); ++v)
            if (std::abs(s[v]) > std::abs(s[anchor])) anchor = v;
        NodeId pinned = static_cast<NodeId>((anchor + 1) % n);
        s[pinned] = zeta0 * max_abs(s) * rng.uniform(-1.0, 1.0);

        const int k = trial % 15 == 0 ? 0 : 1 + static_cast<int>(rng.uniform_index(15));
        std::vector<StateVector> path{s};
        for (int stepped = 0; stepped < k; ++stepped) {
            s = step(s, random_arc_set(n, 0.35, rng), rng.bernoulli(0.6), rng.bernoulli(0.6), p);
            path.push_back(s);
        }
        CHECK(check_lemma2_contraction(path, pinned, zeta0, p));
    }
}

TEST_CASE("lemma 3: sampled arc with matching attention pulls the head down") {
    for (int trial = 0; trial < 500; ++trial) {
        RngStream rng(25, 0, trial, StreamPurpose::Scratch);
        const int n = 3 + static_cast<int>(rng.uniform_index(5));
        auto p = nonexpansive_params(n, rng);
        const double zeta0 = rng.uniform(0.0, 0.9);

        const NodeId i = static_cast<NodeId>(rng.uniform_index(n));
        NodeId j = static_cast<NodeId>(rng.uniform_index(n));
        while (j == i) j = static_cast<NodeId>(rng.uniform_index(n));

        auto s = random_state(n, 1.0, rng);
        s[j] = rng.bernoulli(0.5) ? 1.0 : -1.0; // M = 1, away from the pinned node
        s[i] = zeta0 * max_abs(s) * rng.uniform(-1.0, 1.0);

        const Sign sign = rng.bernoulli(0.5) ? Sign::Positive : Sign::Negative;
        std::vector<SignedArc> sampled{{i, j, sign}};
        for (NodeId a = 0; a < n; ++a)
            for (NodeId b = 0; b < n; ++b)
                if (a != b && !(a == i && b == j) && rng.bernoulli(0.3))
                    sampled.push_back({a, b, rng.bernoulli(0.5) ? Sign::Positive : Sign::Negative});
        const int B = sign == Sign::Positive ? 1 : rng.bernoulli(0.5);
        const int D = sign == Sign::Negative ? 1 : rng.bernoulli(0.5);
        auto after = step(s, sampled, B, D, p);
        CHECK(check_lemma3_pull(s, after, j, zeta0, p));
    }
}

TEST_CASE("lemma 5: sure-event floor on M in the divergence regime") {
    const int n = 3;
    UpdateParams p;
    p.alpha = 0.08;
    p.beta = 1300.0;

    for (int trial = 0; trial < 500; ++trial) {
        RngStream rng(26, 0, trial, StreamPurpose::Scratch);
        auto s = random_state(n, 2.0, rng);
        auto sampled = random_arc_set(n, 0.6, rng);
        auto after = step(s, sampled, rng.bernoulli(0.5), rng.bernoulli(0.5), p);
        CHECK(check_lemma5_floor(s, after, p, n));
    }

    // identity step and origin are trivially above the floor
    StateVector s{1.0, -0.2, 0.4};
    CHECK(check_lemma5_floor(s, s, p, n));
    StateVector zero{0.0, 0.0, 0.0};
    CHECK(check_lemma5_floor(zero, zero, p, n));

    UpdateParams weak = p;
    weak.beta = 100.0; // below 16 * 3^4
    CHECK_THROWS_AS(check_lemma5_floor(s, s, weak, n), RegimeViolation);
    UpdateParams big_alpha = p;
    big_alpha.alpha = 0.3;
    CHECK_THROWS_AS(check_lemma5_floor(s, s, big_alpha, n), RegimeViolation);
}
