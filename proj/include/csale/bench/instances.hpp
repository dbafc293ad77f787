// instances.hpp - benchmark instance generators and weight policies
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "csale/core_model.hpp"
#include "csale/explicit_class.hpp"
#include "csale/graph.hpp"
#include "csale/matching_class.hpp"
#include "csale/path_class.hpp"

namespace csale::bench {

/// 4 node-disjoint source->target paths of 4 edges each: 14 nodes, 16 edges.
/// Node 0 is the source and node 13 the target; path p uses nodes
/// 3p+1, 3p+2, 3p+3 and edges 4p .. 4p+3 in order.
inline GraphInstance synthetic_path_graph() {
    GraphInstance g;
    g.node_count = 14;
    g.directed = true;
    g.source = 0;
    g.target = 13;
    for (NodeId p = 0; p < 4; ++p) {
        const NodeId a = 3 * p + 1;
        g.edges.push_back({0, a});
        g.edges.push_back({a, a + 1});
        g.edges.push_back({a + 1, a + 2});
        g.edges.push_back({a + 2, 13});
    }
    return g;
}

/// Complete undirected graph; edges (i, j), i < j, in lexicographic order.
inline GraphInstance complete_graph(std::size_t k) {
    if (k < 2) throw std::invalid_argument("complete_graph: need at least 2 nodes");
    GraphInstance g;
    g.node_count = k;
    g.directed = false;
    for (NodeId i = 0; i < k; ++i)
        for (NodeId j = i + 1; j < k; ++j) g.edges.push_back({i, j});
    return g;
}

inline constexpr std::array<double, 3> ternary_levels{0.1, 0.5, 0.9};

/// Per-arm means drawn uniformly from {0.1, 0.5, 0.9}.
inline std::vector<double> ternary_weights(std::size_t n, std::uint64_t seed) {
    const CounterStream stream(seed);
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = ternary_levels[stream(i) % ternary_levels.size()];
    return w;
}

/// A decision class of any of the supported kinds.
using AnyClass = std::variant<ExplicitClass, PathClass, MatchingClass>;

/// A fully specified problem: class, true means (in [0,1]) and sense.
struct Problem {
    std::string id;
    AnyClass decision_class;
    std::vector<double> means;
    Sense sense = Sense::Maximize;

    [[nodiscard]] RewardModel model() const { return RewardModel::bernoulli(means, sense); }
    [[nodiscard]] std::size_t arm_count() const {
        return std::visit([](const auto& dc) { return dc.arm_count(); }, decision_class);
    }
};

}  // namespace csale::bench
