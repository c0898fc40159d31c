#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "signet/graph.hpp"
#include "signet/graph_io.hpp"
#include "signet/rng.hpp"

using namespace signet;

namespace {

SignedDigraph triangle(Sign sign) {
    return SignedDigraph(3, {{0, 1, sign}, {1, 2, sign}, {2, 0, sign}});
}

std::vector<SignedArc> random_arcs(int n, double arc_prob, RngStream& rng) {
    std::vector<SignedArc> arcs;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
            if (i != j && rng.bernoulli(arc_prob)) {
                arcs.push_back({i, j, rng.bernoulli(0.5) ? Sign::Positive : Sign::Negative});
            }
        }
    }
    return arcs;
}

// Oracle: components via transitive closure of the symmetrized adjacency.
std::vector<std::vector<NodeId>> closure_components(int n, const std::vector<SignedArc>& arcs,
                                                    bool positive_only) {
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) reach[v][v] = 1;
    for (const SignedArc& a : arcs) {
        if (positive_only && a.sign != Sign::Positive) continue;
        reach[a.tail][a.head] = reach[a.head][a.tail] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
    std::vector<std::vector<NodeId>> components;
    std::vector<char> done(n, 0);
    for (int v = 0; v < n; ++v) {
        if (done[v]) continue;
        std::vector<NodeId> comp;
        for (int w = 0; w < n; ++w) {
            if (reach[v][w]) {
                comp.push_back(w);
                done[w] = 1;
            }
        }
        components.push_back(comp);
    }
    return components;
}

// Oracle: directed all-pairs reachability via closure.
bool closure_strongly_connected(int n, const std::vector<SignedArc>& arcs) {
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) reach[v][v] = 1;
    for (const SignedArc& a : arcs) reach[a.tail][a.head] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!reach[i][j]) return false;
    return true;
}

// Oracle: strong balance existence over all 2^n - 2 bipartitions.
bool brute_force_balanced(int n, const std::vector<SignedArc>& arcs) {
    const unsigned full = (1u << n) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        if (!(mask & 1u)) continue;
        bool ok = true;
        for (const SignedArc& a : arcs) {
            if (a.sign != Sign::Negative) continue;
            if (((mask >> a.tail) & 1u) == ((mask >> a.head) & 1u)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

} // namespace

TEST_CASE("graph construction enforces its invariants") {
    CHECK_THROWS_AS(SignedDigraph(2, {}), SemanticError);
    CHECK_THROWS_AS(SignedDigraph(3, {{0, 0, Sign::Positive}}), SemanticError);
    CHECK_THROWS_AS(SignedDigraph(3, {{0, 5, Sign::Positive}}), SemanticError);
    CHECK_THROWS_AS(SignedDigraph(3, {{0, 1, Sign::Positive}, {0, 1, Sign::Negative}}),
                    SignConflictError);

    // exact duplicates merge; opposite directions may differ in sign
    SignedDigraph g(3, {{0, 1, Sign::Positive}, {0, 1, Sign::Positive}, {1, 0, Sign::Negative}});
    CHECK(g.arc_count() == 2);
    CHECK(g.sign_of(0, 1) == Sign::Positive);
    CHECK(g.sign_of(1, 0) == Sign::Negative);
    CHECK_FALSE(g.has_arc(2, 0));
}

TEST_CASE("positive and negative subgraphs filter by sign") {
    CHECK(positive_subgraph(triangle(Sign::Negative)).arc_count() == 0);
    CHECK(positive_subgraph(triangle(Sign::Positive)) == triangle(Sign::Positive));
    CHECK(negative_subgraph(triangle(Sign::Positive)).arc_count() == 0);
    CHECK(negative_subgraph(triangle(Sign::Negative)) == triangle(Sign::Negative));

    SignedDigraph mixed(3, {{0, 1, Sign::Positive}, {1, 2, Sign::Negative}});
    CHECK(positive_subgraph(mixed).arcs() ==
          std::vector<SignedArc>{{0, 1, Sign::Positive}});
    CHECK(negative_subgraph(mixed).arcs() ==
          std::vector<SignedArc>{{1, 2, Sign::Negative}});
}

TEST_CASE("weakly connected components") {
    SignedDigraph isolated(4, {});
    CHECK(weakly_connected_components(isolated) ==
          std::vector<std::vector<NodeId>>{{0}, {1}, {2}, {3}});

    SignedDigraph pairs(4, {{0, 1, Sign::Positive}, {2, 3, Sign::Positive}});
    CHECK(weakly_connected_components(pairs) ==
          std::vector<std::vector<NodeId>>{{0, 1}, {2, 3}});

    SignedDigraph chain(5, {{0, 1, Sign::Positive},
                            {1, 2, Sign::Positive},
                            {3, 4, Sign::Positive}});
    CHECK(weakly_connected_components(chain) ==
          std::vector<std::vector<NodeId>>{{0, 1, 2}, {3, 4}});
}

TEST_CASE("weak components match the closure oracle and ignore direction") {
    for (int trial = 0; trial < 200; ++trial) {
        RngStream rng(11, 0, trial, StreamPurpose::Scratch);
        const int n = 3 + static_cast<int>(rng.uniform_index(8));
        auto arcs = random_arcs(n, rng.uniform(0.05, 0.4), rng);
        SignedDigraph g(n, arcs);
        CHECK(weakly_connected_components(g) == closure_components(n, arcs, false));

        std::vector<SignedArc> reversed;
        for (const SignedArc& a : arcs) reversed.push_back({a.head, a.tail, a.sign});
        std::sort(reversed.begin(), reversed.end());
        // reversing can merge an (i,j)/(j,i) sign pair into a conflict; skip those
        bool conflict = false;
        for (std::size_t k = 1; k < reversed.size(); ++k) {
            if (reversed[k].tail == reversed[k - 1].tail &&
                reversed[k].head == reversed[k - 1].head) {
                conflict = true;
            }
        }
        if (!conflict) {
            SignedDigraph rg(n, reversed);
            CHECK(weakly_connected_components(positive_subgraph(g)) ==
                  weakly_connected_components(positive_subgraph(rg)));
        }
    }
}

TEST_CASE("positive cluster partition") {
    auto all_negative = positive_cluster_partition(triangle(Sign::Negative));
    CHECK(all_negative.count() == 3);

    auto all_positive = positive_cluster_partition(triangle(Sign::Positive));
    CHECK(all_positive.count() == 1);
    CHECK(all_positive.clusters.front() == std::vector<NodeId>{0, 1, 2});

    SignedDigraph g(5, {{0, 1, Sign::Positive},
                        {1, 2, Sign::Positive},
                        {0, 2, Sign::Negative},
                        {3, 4, Sign::Negative}});
    auto partition = positive_cluster_partition(g);
    CHECK(partition.clusters == std::vector<std::vector<NodeId>>{{0, 1, 2}, {3}, {4}});
}

TEST_CASE("positive cluster partition is a partition") {
    for (int trial = 0; trial < 200; ++trial) {
        RngStream rng(12, 0, trial, StreamPurpose::Scratch);
        const int n = 3 + static_cast<int>(rng.uniform_index(8));
        SignedDigraph g(n, random_arcs(n, rng.uniform(0.05, 0.5), rng));
        auto partition = positive_cluster_partition(g);
        std::vector<char> seen(n, 0);
        for (const auto& cluster : partition.clusters) {
            CHECK_FALSE(cluster.empty());
            for (NodeId v : cluster) {
                CHECK_FALSE(seen[v]);
                seen[v] = 1;
            }
        }
        CHECK(std::count(seen.begin(), seen.end(), 1) == n);
    }
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(triangle(Sign::Positive)));
    SignedDigraph path(3, {{0, 1, Sign::Positive}, {1, 2, Sign::Positive}});
    CHECK_FALSE(is_strongly_connected(path));

    for (int trial = 0; trial < 300; ++trial) {
        RngStream rng(13, 0, trial, StreamPurpose::Scratch);
        auto arcs = random_arcs(8, rng.uniform(0.05, 0.5), rng);
        CHECK(is_strongly_connected(SignedDigraph(8, arcs)) ==
              closure_strongly_connected(8, arcs));
    }
}

TEST_CASE("strong balance: literal mode") {
    CHECK_FALSE(strong_balance_bipartition(triangle(Sign::Negative)).has_value());

    SignedDigraph four(4, {{0, 1, Sign::Negative},
                           {1, 2, Sign::Negative},
                           {2, 3, Sign::Negative},
                           {3, 0, Sign::Negative},
                           {0, 2, Sign::Positive},
                           {1, 3, Sign::Positive}});
    auto sides = strong_balance_bipartition(four);
    REQUIRE(sides.has_value());
    CHECK(sides->side_one == std::vector<NodeId>{0, 2});
    CHECK(sides->side_two == std::vector<NodeId>{1, 3});

    // vacuous constraint: node 0 alone when the negative subgraph is empty
    SignedDigraph no_negative(3, {{0, 1, Sign::Positive}, {1, 2, Sign::Positive}});
    auto split = strong_balance_bipartition(no_negative);
    REQUIRE(split.has_value());
    CHECK(split->side_one == std::vector<NodeId>{0});
    CHECK(split->side_two == std::vector<NodeId>{1, 2});
}

TEST_CASE("strong balance matches the exhaustive oracle on existence") {
    for (int trial = 0; trial < 300; ++trial) {
        RngStream rng(14, 0, trial, StreamPurpose::Scratch);
        const int n = 3 + static_cast<int>(rng.uniform_index(8));
        auto arcs = random_arcs(n, rng.uniform(0.05, 0.5), rng);
        SignedDigraph g(n, arcs);
        auto sides = strong_balance_bipartition(g, BalanceMode::Literal);
        CHECK(sides.has_value() == brute_force_balanced(n, arcs));
        if (sides) {
            CHECK_FALSE(sides->side_one.empty());
            CHECK_FALSE(sides->side_two.empty());
            CHECK(sides->side_one.size() + sides->side_two.size() == static_cast<std::size_t>(n));
            std::vector<int> side(n, 0);
            for (NodeId v : sides->side_two) side[v] = 1;
            for (const SignedArc& a : arcs) {
                if (a.sign == Sign::Negative) CHECK(side[a.tail] != side[a.head]);
            }
        }
    }
}

TEST_CASE("strong balance: classical mode also constrains positive arcs") {
    // literally balanced (negative 4-cycle) but a positive arc crosses sides
    SignedDigraph crossing(4, {{0, 1, Sign::Negative},
                               {1, 2, Sign::Negative},
                               {2, 3, Sign::Negative},
                               {3, 0, Sign::Negative},
                               {0, 3, Sign::Positive}});
    CHECK(strong_balance_bipartition(crossing, BalanceMode::Literal).has_value());
    CHECK_FALSE(strong_balance_bipartition(crossing, BalanceMode::Classical).has_value());

    // positively connected graph with no negative arcs admits no classical split
    CHECK_FALSE(
        strong_balance_bipartition(triangle(Sign::Positive), BalanceMode::Classical).has_value());

    // two positive components split component-wise
    SignedDigraph components(4, {{0, 1, Sign::Positive}, {2, 3, Sign::Positive}});
    auto split = strong_balance_bipartition(components, BalanceMode::Classical);
    REQUIRE(split.has_value());
    CHECK(split->side_one == std::vector<NodeId>{0, 1});
    CHECK(split->side_two == std::vector<NodeId>{2, 3});
}

TEST_CASE("union graph") {
    SignedDigraph a(3, {{0, 1, Sign::Positive}});
    SignedDigraph b(3, {{1, 0, Sign::Negative}});
    std::vector<SignedDigraph> both{a, b};
    auto u = union_graph(both);
    CHECK(u.arc_count() == 2);
    CHECK(u.sign_of(0, 1) == Sign::Positive);
    CHECK(u.sign_of(1, 0) == Sign::Negative);

    std::vector<SignedDigraph> copies{a, a, a};
    CHECK(union_graph(copies) == a);

    SignedDigraph conflicting(3, {{0, 1, Sign::Negative}});
    std::vector<SignedDigraph> conflict{a, conflicting};
    CHECK_THROWS_AS(union_graph(conflict), SignConflictError);
    CHECK(union_graph(conflict, UnionSignPolicy::Erase).arc_count() == 1);
}

TEST_CASE("union graph is commutative, associative, idempotent on consistent inputs") {
    for (int trial = 0; trial < 50; ++trial) {
        RngStream rng(15, 0, trial, StreamPurpose::Scratch);
        const int n = 4;
        // sign per ordered pair fixed up front keeps the inputs consistent
        std::vector<Sign> pair_sign(n * n);
        for (auto& s : pair_sign) s = rng.bernoulli(0.5) ? Sign::Positive : Sign::Negative;
        auto make = [&] {
            std::vector<SignedArc> arcs;
            for (NodeId i = 0; i < n; ++i)
                for (NodeId j = 0; j < n; ++j)
                    if (i != j && rng.bernoulli(0.4))
                        arcs.push_back({i, j, pair_sign[i * n + j]});
            return SignedDigraph(n, arcs);
        };
        SignedDigraph x = make(), y = make(), z = make();
        std::vector<SignedDigraph> xy{x, y}, yx{y, x};
        CHECK(union_graph(xy) == union_graph(yx));
        std::vector<SignedDigraph> xy_z{union_graph(xy), z}, x_yz{x, union_graph({std::vector<SignedDigraph>{y, z}})};
        CHECK(union_graph(xy_z) == union_graph(x_yz));
        std::vector<SignedDigraph> xx{x, x};
        CHECK(union_graph(xx) == x);
    }
}

TEST_CASE("graph text format round trip") {
    std::istringstream in("# demo\nn 5\n0 1 +\n4 2 -\n\n# trailing comment\n");
    auto g = read_graph(in);
    CHECK(g.node_count() == 5);
    CHECK(g.sign_of(0, 1) == Sign::Positive);
    CHECK(g.sign_of(4, 2) == Sign::Negative);

    for (int trial = 0; trial < 100; ++trial) {
        RngStream rng(16, 0, trial, StreamPurpose::Scratch);
        const int n = 3 + static_cast<int>(rng.uniform_index(10));
        SignedDigraph original(n, random_arcs(n, rng.uniform(0.05, 0.5), rng));
        std::ostringstream out;
        write_graph(out, original);
        std::istringstream back(out.str());
        CHECK(read_graph(back) == original);
    }

    std::istringstream missing_header("0 1 +\n");
    CHECK_THROWS_AS(read_graph(missing_header), ParseError);
    std::istringstream bad_sign("n 3\n0 1 ?\n");
    CHECK_THROWS_AS(read_graph(bad_sign), ParseError);
    std::istringstream trailing("n 3\n0 1 + extra\n");
    CHECK_THROWS_AS(read_graph(trailing), ParseError);
}
