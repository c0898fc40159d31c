#include "signet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace signet {

namespace {

std::string arc_str(NodeId tail, NodeId head) {
    return "(" + std::to_string(tail) + ", " + std::to_string(head) + ")";
}

// Union-find with path halving; used for weak components and parity coloring.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

std::vector<std::vector<NodeId>> group_by_root(int n, DisjointSets& sets) {
    // first-seen order over ascending node ids puts components in order of
    // their smallest member, with members ascending
    std::vector<int> comp_index(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<NodeId>> components;
    for (NodeId v = 0; v < n; ++v) {
        const int root = sets.find(v);
        if (comp_index[static_cast<std::size_t>(root)] == -1) {
            comp_index[static_cast<std::size_t>(root)] = static_cast<int>(components.size());
            components.emplace_back();
        }
        components[static_cast<std::size_t>(comp_index[static_cast<std::size_t>(root)])].push_back(
            v);
    }
    return components;
}

} // namespace

SignedDigraph::SignedDigraph(int n, std::vector<SignedArc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 3) {
        throw SemanticError("signed digraph requires n >= 3, got n = " + std::to_string(n_));
    }
    for (const SignedArc& a : arcs_) {
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_) {
            throw SemanticError("arc " + arc_str(a.tail, a.head) + " references node outside [0, " +
                                std::to_string(n_) + ")");
        }
        if (a.tail == a.head) {
            throw SemanticError("self-loop " + arc_str(a.tail, a.head) + " not allowed");
        }
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    for (std::size_t k = 1; k < arcs_.size(); ++k) {
        if (arcs_[k].tail == arcs_[k - 1].tail && arcs_[k].head == arcs_[k - 1].head) {
            throw SignConflictError("arc " + arc_str(arcs_[k].tail, arcs_[k].head) +
                                    " carries both signs");
        }
    }
    out_adj_.resize(static_cast<std::size_t>(n_));
    in_adj_.resize(static_cast<std::size_t>(n_));
    for (const SignedArc& a : arcs_) {
        out_adj_[static_cast<std::size_t>(a.tail)].emplace_back(a.head, a.sign);
        in_adj_[static_cast<std::size_t>(a.head)].emplace_back(a.tail, a.sign);
    }
}

std::optional<Sign> SignedDigraph::sign_of(NodeId tail, NodeId head) const {
    if (tail < 0 || tail >= n_) return std::nullopt;
    for (const auto& [h, s] : out_adj_[static_cast<std::size_t>(tail)]) {
        if (h == head) return s;
    }
    return std::nullopt;
}

namespace {

SignedDigraph filter_by_sign(const SignedDigraph& g, Sign keep) {
    std::vector<SignedArc> kept;
    for (const SignedArc& a : g.arcs()) {
        if (a.sign == keep) kept.push_back(a);
    }
    return SignedDigraph(g.node_count(), std::move(kept));
}

} // namespace

SignedDigraph positive_subgraph(const SignedDigraph& g) { return filter_by_sign(g, Sign::Positive); }

SignedDigraph negative_subgraph(const SignedDigraph& g) { return filter_by_sign(g, Sign::Negative); }

std::vector<std::vector<NodeId>> weakly_connected_components(const SignedDigraph& g) {
    DisjointSets sets(g.node_count());
    for (const SignedArc& a : g.arcs()) sets.unite(a.tail, a.head);
    return group_by_root(g.node_count(), sets);
}

PositiveClusterPartition positive_cluster_partition(const SignedDigraph& g) {
    return PositiveClusterPartition{weakly_connected_components(positive_subgraph(g))};
}

bool is_strongly_connected(const SignedDigraph& g) {
    const int n = g.node_count();
    auto reaches_all = [&](bool reversed) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<NodeId> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            auto next = reversed ? g.in_arcs(v) : g.out_arcs(v);
            for (const auto& [w, sign] : next) {
                (void)sign;
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n;
    };
    return reaches_all(false) && reaches_all(true);
}

namespace {

// Two-colors the given undirected constraint edges (parity 1 = endpoints on
// opposite sides). Returns node -> {0,1} colors, or nullopt on an odd cycle.
// Each constraint component is rooted at its smallest node with color 0;
// untouched nodes keep color 0.
std::optional<std::vector<int>> two_color(int n,
                                          const std::vector<std::vector<std::pair<NodeId, int>>>& adj) {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (NodeId root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        std::vector<NodeId> stack{root};
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            for (const auto& [w, parity] : adj[static_cast<std::size_t>(v)]) {
                int want = color[static_cast<std::size_t>(v)] ^ parity;
                int& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = want;
                    stack.push_back(w);
                } else if (cw != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

BalanceBipartition sides_from_colors(int n, const std::vector<int>& color) {
    BalanceBipartition out;
    for (NodeId v = 0; v < n; ++v) {
        (color[static_cast<std::size_t>(v)] == 0 ? out.side_one : out.side_two).push_back(v);
    }
    return out;
}

} // namespace

std::optional<BalanceBipartition> strong_balance_bipartition(const SignedDigraph& g,
                                                             BalanceMode mode) {
    const int n = g.node_count();
    bool has_negative = false;
    std::vector<std::vector<std::pair<NodeId, int>>> adj(static_cast<std::size_t>(n));
    for (const SignedArc& a : g.arcs()) {
        if (a.sign == Sign::Negative) has_negative = true;
        int parity = a.sign == Sign::Negative ? 1 : 0;
        if (mode == BalanceMode::Literal && a.sign == Sign::Positive) continue;
        adj[static_cast<std::size_t>(a.tail)].emplace_back(a.head, parity);
        adj[static_cast<std::size_t>(a.head)].emplace_back(a.tail, parity);
    }

    auto color = two_color(n, adj);
    if (!color) return std::nullopt;

    if (has_negative) {
        // some constraint component used both colors, so side_two is nonempty
        return sides_from_colors(n, *color);
    }

    // No negative arc: the crossing constraint is vacuous, but Def. 2 needs
    // two nonempty sides.
    if (mode == BalanceMode::Literal) {
        BalanceBipartition out;
        out.side_one.push_back(0);
        for (NodeId v = 1; v < n; ++v) out.side_two.push_back(v);
        return out;
    }
    // Classical mode: positive arcs pin whole components to one side, so put
    // the component of node 0 alone on side_one. A positively connected graph
    // admits no split.
    auto components = weakly_connected_components(g);
    if (components.size() < 2) return std::nullopt;
    BalanceBipartition out;
    out.side_one = components.front();
    for (std::size_t c = 1; c < components.size(); ++c) {
        out.side_two.insert(out.side_two.end(), components[c].begin(), components[c].end());
    }
    std::sort(out.side_two.begin(), out.side_two.end());
    return out;
}

SignedDigraph union_graph(std::span<const SignedDigraph> graphs, UnionSignPolicy policy) {
    if (graphs.empty()) {
        throw SemanticError("union_graph requires at least one input graph");
    }
    const int n = graphs.front().node_count();
    std::vector<SignedArc> merged;
    for (const SignedDigraph& g : graphs) {
        if (g.node_count() != n) {
            throw SemanticError("union_graph inputs disagree on node count");
        }
        merged.insert(merged.end(), g.arcs().begin(), g.arcs().end());
    }
    std::sort(merged.begin(), merged.end());
    std::vector<SignedArc> result;
    for (const SignedArc& a : merged) {
        if (!result.empty() && result.back().tail == a.tail && result.back().head == a.head) {
            if (result.back().sign != a.sign && policy == UnionSignPolicy::Strict) {
                throw SignConflictError("arc " + arc_str(a.tail, a.head) +
                                        " appears with both signs across union inputs");
            }
            continue; // Erase: conflicted pairs resolve to Positive (sort order)
        }
        result.push_back(a);
    }
    return SignedDigraph(n, std::move(result));
}

} // namespace signet
