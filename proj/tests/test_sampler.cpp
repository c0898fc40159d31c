#include "doctest.h"

#include <cmath>

#include "signet/sampler.hpp"

using namespace signet;

namespace {

SignedDigraph triangle() {
    return SignedDigraph(3, {{0, 1, Sign::Positive}, {1, 2, Sign::Negative}, {2, 0, Sign::Positive}});
}

} // namespace

TEST_CASE("rng streams replay exactly and separate by key") {
    RngStream a(42, 7, 100, StreamPurpose::Arcs);
    RngStream b(42, 7, 100, StreamPurpose::Arcs);
    for (int k = 0; k < 64; ++k) CHECK(a.next_u64() == b.next_u64());

    RngStream c(42, 7, 100, StreamPurpose::Attention);
    RngStream d(42, 8, 100, StreamPurpose::Arcs);
    RngStream e(43, 7, 100, StreamPurpose::Arcs);
    RngStream base(42, 7, 100, StreamPurpose::Arcs);
    CHECK(base.next_u64() != c.next_u64());
    CHECK(d.next_u64() != e.next_u64());

    RngStream u(1, 2, 3, StreamPurpose::Scratch);
    for (int k = 0; k < 1000; ++k) {
        double x = u.next_double();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(u.uniform_index(10) < 10);
    }
}

TEST_CASE("sample_arcs variants") {
    auto g = triangle();
    RngStream rng(1, 0, 0, StreamPurpose::Arcs);

    CHECK(sample_arcs(g, InteractionModel::full_activation(), rng) == g.arcs());
    CHECK(sample_arcs(g, InteractionModel::per_arc_bernoulli(1.0), rng) == g.arcs());

    for (int t = 0; t < 50; ++t) {
        RngStream r(2, 0, t, StreamPurpose::Arcs);
        auto one = sample_arcs(g, InteractionModel::gossip(), r);
        CHECK(one.size() == 1);
        CHECK(g.has_arc(one[0].tail, one[0].head));
    }

    SignedDigraph arcless(3, {});
    RngStream r(2, 1, 0, StreamPurpose::Arcs);
    CHECK(sample_arcs(arcless, InteractionModel::gossip(), r).empty());

    // sampled sets are always subsets of the graph's arcs
    for (int t = 0; t < 200; ++t) {
        RngStream r(3, 0, t, StreamPurpose::Arcs);
        for (const SignedArc& a : sample_arcs(g, InteractionModel::per_arc_bernoulli(0.4), r)) {
            CHECK(g.sign_of(a.tail, a.head) == a.sign);
        }
    }
}

TEST_CASE("per-arc bernoulli inclusion frequency matches p") {
    auto g = triangle();
    const int draws = 100000;
    const double p = 0.3;
    std::map<std::pair<NodeId, NodeId>, int> counts;
    for (int t = 0; t < draws; ++t) {
        RngStream rng(99, 0, t, StreamPurpose::Arcs);
        for (const SignedArc& a : sample_arcs(g, InteractionModel::per_arc_bernoulli(p), rng)) {
            ++counts[{a.tail, a.head}];
        }
    }
    for (const SignedArc& a : g.arcs()) {
        const double freq = static_cast<double>(counts[{a.tail, a.head}]) / draws;
        CHECK(std::abs(freq - p) < 0.01); // 3 sigma of the binomial is ~0.0043
    }
}

TEST_CASE("attention draws have the right means and are uncorrelated") {
    AttentionProcess proc{0.5, 0.25};
    const int draws = 100000;
    double sum_b = 0.0, sum_d = 0.0, sum_bd = 0.0;
    for (int t = 0; t < draws; ++t) {
        RngStream rng(7, 0, t, StreamPurpose::Attention);
        auto [B, D] = sample_attention(proc, rng);
        sum_b += B;
        sum_d += D;
        sum_bd += B * D;
    }
    const double mean_b = sum_b / draws;
    const double mean_d = sum_d / draws;
    CHECK(std::abs(mean_b - 0.5) < 0.005);
    CHECK(std::abs(mean_d - 0.25) < 0.005);
    const double cov = sum_bd / draws - mean_b * mean_d;
    const double corr = cov / std::sqrt(mean_b * (1 - mean_b) * mean_d * (1 - mean_d));
    CHECK(std::abs(corr) < 0.01);

    AttentionProcess extreme{0.999, 0.999};
    int ones = 0;
    for (int t = 0; t < 1000; ++t) {
        RngStream rng(8, 0, t, StreamPurpose::Attention);
        auto [B, D] = sample_attention(extreme, rng);
        ones += B + D;
    }
    CHECK(ones > 1980);
}

TEST_CASE("neighbor_sets collects in-neighbors by sign") {
    std::vector<SignedArc> sampled{{1, 0, Sign::Positive}, {2, 0, Sign::Negative}};
    auto sets = neighbor_sets(sampled, 0);
    CHECK(sets.plus == std::vector<NodeId>{1});
    CHECK(sets.minus == std::vector<NodeId>{2});

    std::vector<SignedArc> outgoing{{0, 1, Sign::Positive}};
    auto none = neighbor_sets(outgoing, 0);
    CHECK(none.plus.empty());
    CHECK(none.minus.empty());

    // brute-force scan oracle on random sets
    for (int trial = 0; trial < 100; ++trial) {
        RngStream rng(9, 0, trial, StreamPurpose::Scratch);
        const int n = 6;
        std::vector<SignedArc> arcs;
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = 0; j < n; ++j)
                if (i != j && rng.bernoulli(0.3))
                    arcs.push_back({i, j, rng.bernoulli(0.5) ? Sign::Positive : Sign::Negative});
        for (NodeId i = 0; i < n; ++i) {
            auto got = neighbor_sets(arcs, i);
            std::vector<NodeId> plus, minus;
            for (const SignedArc& a : arcs) {
                if (a.head == i && a.sign == Sign::Positive) plus.push_back(a.tail);
                if (a.head == i && a.sign == Sign::Negative) minus.push_back(a.tail);
            }
            std::sort(plus.begin(), plus.end());
            std::sort(minus.begin(), minus.end());
            CHECK(got.plus == plus);
            CHECK(got.minus == minus);
        }
    }
}

TEST_CASE("arc assumption reports") {
    GraphSchedule sched({triangle()});

    auto bernoulli = verify_a1_a6(InteractionModel::per_arc_bernoulli(0.4), sched);
    CHECK(bernoulli.a1_holds);
    CHECK(bernoulli.p_star == 0.4);
    CHECK(bernoulli.a6_holds);
    CHECK_FALSE(bernoulli.a6_boundary);
    CHECK(bernoulli.p_upper == 0.4);

    auto gossip = verify_a1_a6(InteractionModel::gossip(), sched);
    CHECK(gossip.a1_holds);
    CHECK(gossip.p_star == doctest::Approx(1.0 / 3.0));
    CHECK_FALSE(gossip.a6_holds);

    auto full = verify_a1_a6(InteractionModel::full_activation(), sched);
    CHECK(full.a1_holds);
    CHECK(full.a6_holds);
    CHECK(full.a6_boundary);

    auto mixed = InteractionModel::per_arc_bernoulli(0.5);
    mixed.per_arc[{0, 1}] = 0.2;
    mixed.per_arc[{1, 2}] = 0.9;
    auto report = verify_a1_a6(mixed, sched);
    CHECK(report.p_star == 0.2);
    CHECK(report.p_upper == 0.9);
}
