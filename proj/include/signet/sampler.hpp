#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "signet/graph.hpp"
#include "signet/rng.hpp"
#include "signet/schedule.hpp"

namespace signet {

/// Distribution of the random interaction set E_t over the arcs of G_t.
struct InteractionModel {
    enum class Kind {
        PerArcBernoulli, // each arc independently with its probability
        GossipSingleArc, // exactly one arc uniformly at random
        FullActivation   // all arcs, deterministically
    };

    Kind kind = Kind::PerArcBernoulli;
    double p = 1.0;
    // Optional per-arc overrides for PerArcBernoulli; arcs not listed use p.
    std::map<std::pair<NodeId, NodeId>, double> per_arc;

    static InteractionModel per_arc_bernoulli(double p) {
        return InteractionModel{Kind::PerArcBernoulli, p, {}};
    }
    static InteractionModel gossip() { return InteractionModel{Kind::GossipSingleArc, 0.0, {}}; }
    static InteractionModel full_activation() {
        return InteractionModel{Kind::FullActivation, 1.0, {}};
    }

    double arc_probability(NodeId tail, NodeId head) const;
};

/// Constant attention probabilities b = E{B_t}, d = E{D_t}, both in (0, 1).
struct AttentionProcess {
    double b = 0.5;
    double d = 0.5;
};

struct AttentionDraw {
    int B = 0;
    int D = 0;
};

/// Samples the interaction set for one step. Arcs are visited in canonical
/// order so a stream replays bit-identically.
std::vector<SignedArc> sample_arcs(const SignedDigraph& g, const InteractionModel& model,
                                   RngStream& rng);

/// Two independent Bernoulli draws: B with mean b first, then D with mean d.
AttentionDraw sample_attention(const AttentionProcess& proc, RngStream& rng);

struct NeighborSets {
    std::vector<NodeId> plus;
    std::vector<NodeId> minus;
};

/// In-neighbor sets of i within the sampled arc set: j in plus iff (j,i,+)
/// was sampled, j in minus iff (j,i,-) was sampled.
NeighborSets neighbor_sets(std::span<const SignedArc> sampled, NodeId i);

/// Static analysis of a model against the arc-selection assumptions: a lower
/// bound p_star > 0 on every arc's selection probability, and independent
/// arc events with an upper bound strictly below 1.
struct ArcAssumptionReport {
    bool a1_holds = false;
    double p_star = 0.0;
    std::string a1_reason;

    bool a6_holds = false;
    bool a6_boundary = false; // upper bound sits exactly at 1
    double p_upper = 0.0;
    std::string a6_reason;
};

ArcAssumptionReport verify_a1_a6(const InteractionModel& model, const GraphSchedule& sched);

} // namespace signet
