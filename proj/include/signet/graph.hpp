#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "signet/errors.hpp"

namespace signet {

using NodeId = std::int32_t;

enum class Sign : std::uint8_t { Positive, Negative };

inline char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

/// Directed arc tail -> head carrying a sign. No self-loops.
struct SignedArc {
    NodeId tail{};
    NodeId head{};
    Sign sign{};

    auto operator<=>(const SignedArc&) const = default;
};

/// Immutable simple signed digraph on nodes 0..n-1.
///
/// Arcs are stored canonically sorted by (tail, head). Each ordered pair
/// carries at most one sign; opposite directions between the same node pair
/// may carry different signs. Exact duplicate arcs in the input are merged,
/// conflicting signs for the same ordered pair are an error.
class SignedDigraph {
public:
    SignedDigraph(int n, std::vector<SignedArc> arcs);

    int node_count() const { return n_; }
    const std::vector<SignedArc>& arcs() const { return arcs_; }
    std::size_t arc_count() const { return arcs_.size(); }

    /// In-neighbors of i: (tail, sign) over arcs tail -> i.
    std::span<const std::pair<NodeId, Sign>> in_arcs(NodeId i) const {
        return in_adj_[static_cast<std::size_t>(i)];
    }
    /// Out-neighbors of i: (head, sign) over arcs i -> head.
    std::span<const std::pair<NodeId, Sign>> out_arcs(NodeId i) const {
        return out_adj_[static_cast<std::size_t>(i)];
    }

    std::optional<Sign> sign_of(NodeId tail, NodeId head) const;
    bool has_arc(NodeId tail, NodeId head) const { return sign_of(tail, head).has_value(); }

    bool operator==(const SignedDigraph& other) const {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

private:
    int n_;
    std::vector<SignedArc> arcs_;
    std::vector<std::vector<std::pair<NodeId, Sign>>> out_adj_;
    std::vector<std::vector<std::pair<NodeId, Sign>>> in_adj_;
};

/// Disjoint nonempty node sets covering the whole node set; each cluster is a
/// weakly connected component of the positive subgraph.
struct PositiveClusterPartition {
    std::vector<std::vector<NodeId>> clusters;

    int count() const { return static_cast<int>(clusters.size()); }
};

/// Two-set node partition with every negative arc crossing between the sides.
struct BalanceBipartition {
    std::vector<NodeId> side_one;
    std::vector<NodeId> side_two;
};

/// Literal: only negative arcs are constrained to cross between the sides.
/// Classical: positive arcs must additionally stay within a side.
enum class BalanceMode { Literal, Classical };

enum class UnionSignPolicy {
    Strict, // conflicting signs for the same ordered pair raise SignConflictError
    Erase   // keep first-seen sign; result intended for connectivity checks only
};

SignedDigraph positive_subgraph(const SignedDigraph& g);
SignedDigraph negative_subgraph(const SignedDigraph& g);

/// Partition of the node set into maximal sets connected when arc directions
/// are erased. Components ordered by smallest member, members ascending.
std::vector<std::vector<NodeId>> weakly_connected_components(const SignedDigraph& g);

PositiveClusterPartition positive_cluster_partition(const SignedDigraph& g);

/// True iff every node reaches every other along directed paths, signs ignored.
bool is_strongly_connected(const SignedDigraph& g);

std::optional<BalanceBipartition>
strong_balance_bipartition(const SignedDigraph& g, BalanceMode mode = BalanceMode::Literal);

SignedDigraph union_graph(std::span<const SignedDigraph> graphs,
                          UnionSignPolicy policy = UnionSignPolicy::Strict);

} // namespace signet
