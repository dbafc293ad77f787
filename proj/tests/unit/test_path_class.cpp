#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "brute_force.hpp"
#include "csale/bench/instances.hpp"
#include "csale/core_model.hpp"
#include "csale/errors.hpp"
#include "csale/path_class.hpp"

using namespace csale;

namespace {

constexpr double tol = 1e-12;

// Draws digraphs until one has at least one source->target path.
GraphInstance connected_digraph(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_edges) {
    for (;;) {
        const std::size_t nodes = std::uniform_int_distribution<std::size_t>(2, max_nodes)(rng);
        GraphInstance g = brute::random_digraph(rng, nodes, max_edges);
        if (!brute::all_simple_paths(g).empty()) return g;
    }
}

// Checks oracle(w, req, forb) against enumeration; returns true if feasible.
bool check_against_enumeration(const PathClass& pc, const std::vector<ArmSet>& paths,
                               const std::vector<double>& w, const ArmSet& req, const ArmSet& forb) {
    const auto got = pc.oracle(w, req, forb);
    const auto want = brute::constrained_best(paths, w, req, forb);
    EXPECT_EQ(got.has_value(), want.has_value()) << "req " << req << " forb " << forb;
    if (!got || !want) return false;
    EXPECT_TRUE(req.is_subset_of(*got));
    EXPECT_FALSE(got->intersects(forb));
    EXPECT_TRUE(pc.contains(*got)) << *got;
    EXPECT_NEAR(set_reward(w, *got), *want, tol);
    return true;
}

}  // namespace

TEST(SyntheticPathGraph, Shape) {
    const GraphInstance g = bench::synthetic_path_graph();
    EXPECT_EQ(g.node_count, 14u);
    EXPECT_EQ(g.edges.size(), 16u);
    const auto paths = brute::all_simple_paths(g);
    ASSERT_EQ(paths.size(), 4u);
    for (std::size_t p = 0; p < 4; ++p) {
        EXPECT_EQ(paths[p].size(), 4u);
        EXPECT_EQ(paths[p], (ArmSet{4 * p, 4 * p + 1, 4 * p + 2, 4 * p + 3}));
    }
    EXPECT_EQ(PathClass(g).d_bound({}), 4u);
}

TEST(PathClass, SyntheticOracleIsCheapestPath) {
    const PathClass pc(bench::synthetic_path_graph());
    const std::vector<double> costs{0.9, 0.9, 0.9, 0.9, 0.5, 0.1, 0.5, 0.9,
                                    0.1, 0.5, 0.5, 0.5, 0.1, 0.1, 0.9, 0.1};
    const auto mu = canonicalize(RewardModel::bernoulli(costs, Sense::Minimize)).means();
    EXPECT_EQ(*pc.oracle(mu, {}, {}), (ArmSet{12, 13, 14, 15}));
    EXPECT_EQ(*pc.oracle(mu, {}, ArmSet{14}), (ArmSet{8, 9, 10, 11}));
    EXPECT_EQ(*pc.oracle(mu, {}, ArmSet{8, 14}), (ArmSet{4, 5, 6, 7}));
    EXPECT_EQ(*pc.oracle(mu, ArmSet{1}, {}), (ArmSet{0, 1, 2, 3}));
    EXPECT_FALSE(pc.oracle(mu, ArmSet{1, 5}, {}).has_value());
}

TEST(PathClass, SyntheticEliminationOfFirstEdge) {
    const PathClass pc(bench::synthetic_path_graph());
    EXPECT_EQ(pc.elim(ArmSet{0}), (ArmSet{4, 8, 12}));
    EXPECT_EQ(pc.elim(ArmSet{3}), (ArmSet{7, 11, 15}));
    EXPECT_TRUE(pc.elim(ArmSet{1}).empty());
}

TEST(PathClass, SingleEdge) {
    GraphInstance g;
    g.node_count = 2;
    g.edges = {{0, 1}};
    g.source = 0;
    g.target = 1;
    const PathClass pc(g);
    EXPECT_EQ(*pc.oracle(std::vector<double>{-0.3}, {}, {}), (ArmSet{0}));
    EXPECT_TRUE(pc.contains(ArmSet{0}));
    EXPECT_FALSE(pc.contains(ArmSet{}));
    EXPECT_EQ(pc.d_bound({}), 1u);
    EXPECT_FALSE(pc.oracle(std::vector<double>{-0.3}, {}, ArmSet{0}).has_value());
}

TEST(PathClass, RejectsBadInstances) {
    GraphInstance g;
    g.node_count = 3;
    g.edges = {{0, 1}, {1, 2}};
    g.source = 0;
    g.target = 0;
    EXPECT_THROW(PathClass{g}, std::invalid_argument);
    g.target = 2;
    g.directed = false;
    EXPECT_THROW(PathClass{g}, std::invalid_argument);
}

TEST(PathClass, ContainsRequiresSimpleSourceTargetPath) {
    // 0->1->2->3 plus a detour 1->4->2 and a back edge 2->1.
    GraphInstance g;
    g.node_count = 5;
    g.edges = {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 2}, {2, 1}};
    g.source = 0;
    g.target = 3;
    const PathClass pc(g);
    EXPECT_TRUE(pc.contains(ArmSet{0, 1, 2}));
    EXPECT_TRUE(pc.contains(ArmSet{0, 3, 4, 2}));
    EXPECT_FALSE(pc.contains(ArmSet{0, 1}));
    EXPECT_FALSE(pc.contains(ArmSet{0, 1, 2, 5}));
    EXPECT_FALSE(pc.contains(ArmSet{1, 2}));
    EXPECT_FALSE(pc.contains(ArmSet{0, 1, 2, 3}));
}

TEST(PathClass, MinimizeMatchesShortestPathByEnumeration) {
    // 5-node graph with several routes.
    GraphInstance g;
    g.node_count = 5;
    g.edges = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {1, 4}};
    g.source = 0;
    g.target = 4;
    const std::vector<double> costs{0.2, 0.9, 0.1, 0.6, 0.1, 0.7, 0.3, 0.95};
    const auto paths = brute::all_simple_paths(g);
    ArmSet shortest = paths.front();
    for (const ArmSet& p : paths)
        if (brute::sum_of(costs, p) < brute::sum_of(costs, shortest)) shortest = p;
    const PathClass pc(g);
    const auto mu = canonicalize(RewardModel::bernoulli(costs, Sense::Minimize)).means();
    EXPECT_EQ(*pc.oracle(mu, {}, {}), shortest);
    EXPECT_EQ(shortest, (ArmSet{0, 2, 4, 6}));
}

TEST(PathClass, OracleMatchesEnumerationWithNonNegativeCosts) {
    std::mt19937_64 rng(21);
    int feasible = 0;
    for (int iter = 0; iter < 300; ++iter) {
        const GraphInstance g = connected_digraph(rng, 8, 14);
        const PathClass pc(g);
        const auto paths = brute::all_simple_paths(g);
        const auto w = brute::random_weights(rng, g.edges.size(), -1.0, 0.0);
        const std::size_t m = g.edges.size();
        ASSERT_TRUE(check_against_enumeration(pc, paths, w, {}, {}));
        const ArmSet forb = brute::random_subset(rng, m, 0.2);
        check_against_enumeration(pc, paths, w, {}, forb);
        // Required edges drawn from a real path, so the constraint is often feasible.
        const ArmSet& base = paths[std::uniform_int_distribution<std::size_t>(0, paths.size() - 1)(rng)];
        const ArmSet req = brute::random_subset_of(rng, base, 0.5);
        feasible += check_against_enumeration(pc, paths, w, req, forb.minus(req)) ? 1 : 0;
        check_against_enumeration(pc, paths, w, brute::random_subset(rng, m, 0.2), forb);
    }
    EXPECT_GT(feasible, 100);
}

TEST(PathClass, OracleMatchesEnumerationWithMixedSignWeights) {
    std::mt19937_64 rng(22);
    for (int iter = 0; iter < 200; ++iter) {
        const GraphInstance g = connected_digraph(rng, 8, 14);
        const PathClass pc(g);
        const auto paths = brute::all_simple_paths(g);
        const auto w = brute::random_weights(rng, g.edges.size(), -1.0, 1.0);
        const std::size_t m = g.edges.size();
        check_against_enumeration(pc, paths, w, {}, {});
        const ArmSet& base = paths[std::uniform_int_distribution<std::size_t>(0, paths.size() - 1)(rng)];
        const ArmSet req = brute::random_subset_of(rng, base, 0.5);
        check_against_enumeration(pc, paths, w, req, brute::random_subset(rng, m, 0.2).minus(req));
    }
}

TEST(PathClass, RequiredEdgesOfAnyShape) {
    // Required sets that are not sub-paths: branching, cycles, into the
    // source, out of the target. All must come back infeasible when
    // enumeration says so.
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 300; ++iter) {
        const GraphInstance g = connected_digraph(rng, 7, 12);
        const PathClass pc(g);
        const auto paths = brute::all_simple_paths(g);
        const auto w = brute::random_weights(rng, g.edges.size(), -1.0, 0.0);
        check_against_enumeration(pc, paths, w, brute::random_subset(rng, g.edges.size(), 0.35), {});
    }
}

TEST(PathClass, EliminationIsSound) {
    std::mt19937_64 rng(24);
    for (int iter = 0; iter < 300; ++iter) {
        const GraphInstance g = connected_digraph(rng, 8, 14);
        const PathClass pc(g);
        const auto paths = brute::all_simple_paths(g);
        const ArmSet& base = paths[std::uniform_int_distribution<std::size_t>(0, paths.size() - 1)(rng)];
        const ArmSet acc = brute::random_subset_of(rng, base, 0.5);
        const ArmSet e = pc.elim(acc);
        EXPECT_FALSE(e.intersects(acc));
        for (const ArmSet& p : paths)
            if (acc.is_subset_of(p)) {
                EXPECT_FALSE(e.intersects(p)) << "acc " << acc << " path " << p;
            }
    }
}

TEST(PathClass, DBoundIsLongestSimplePath) {
    std::mt19937_64 rng(25);
    for (int iter = 0; iter < 100; ++iter) {
        const GraphInstance g = connected_digraph(rng, 8, 14);
        std::size_t longest = 0;
        for (const ArmSet& p : brute::all_simple_paths(g)) longest = std::max(longest, p.size());
        const PathClass pc(g);
        EXPECT_EQ(pc.d_bound({}), longest);
        EXPECT_EQ(pc.d_bound(ArmSet{0}), longest);
    }
    EXPECT_EQ(PathClass(bench::synthetic_path_graph(), 9).d_bound({}), 9u);
}

TEST(PathClass, EnumerationBudgetIsEnforced) {
    // Complete digraph on 9 nodes: positive weights force enumeration.
    GraphInstance g;
    g.node_count = 9;
    for (NodeId u = 0; u < 9; ++u)
        for (NodeId v = 0; v < 9; ++v)
            if (u != v) g.edges.push_back({u, v});
    g.source = 0;
    g.target = 8;
    const PathClass pc(g, 8, 50);
    const std::vector<double> w(g.edges.size(), 0.5);
    EXPECT_THROW((void)pc.oracle(w, {}, {}), SizeGuardError);
}
