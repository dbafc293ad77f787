// subgraph.hpp - sampling small path and matching instances out of large graphs
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "csale/blossom.hpp"
#include "csale/core_model.hpp"
#include "csale/errors.hpp"
#include "csale/graph.hpp"

namespace csale::bench {

enum class ExtractMode { PathPair, NodeSample };

struct ExtractParams {
    // PathPair: keep nodes on source->target walks of at most max_hops edges;
    // accept if hop distance >= min_distance and at most max_nodes nodes remain.
    std::size_t max_hops = 5;
    std::size_t min_distance = 4;
    std::size_t max_nodes = 10;
    // NodeSample: induce on sample_nodes random nodes, accept with at least
    // min_edges edges and, if asked, a perfect matching.
    std::size_t sample_nodes = 6;
    std::size_t min_edges = 5;
    bool require_perfect_matching = true;
    std::size_t retries = 1000;
};

struct Subgraph {
    GraphInstance graph;
    std::vector<std::size_t> original_edge;  // arm i of `graph` is this edge of the input
};

namespace detail {

inline std::vector<std::size_t> hop_distances(const GraphInstance& g, NodeId from, bool reverse) {
    constexpr auto inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<NodeId>> adj(g.node_count);
    for (const Edge& e : g.edges) {
        if (reverse) adj[e.head].push_back(e.tail);
        else adj[e.tail].push_back(e.head);
        if (!g.directed) (reverse ? adj[e.tail] : adj[e.head]).push_back(reverse ? e.head : e.tail);
    }
    std::vector<std::size_t> dist(g.node_count, inf);
    std::deque<NodeId> q{from};
    dist[from] = 0;
    while (!q.empty()) {
        const NodeId v = q.front();
        q.pop_front();
        for (NodeId u : adj[v])
            if (dist[u] == inf) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    return dist;
}

inline bool has_perfect_matching(const GraphInstance& g) {
    if (g.node_count % 2 != 0) return false;
    std::vector<WeightedEdge> edges;
    for (const Edge& e : g.edges) edges.push_back({e.tail, e.head, 1});
    const auto mate = max_weight_matching(g.node_count, edges, true);
    return std::none_of(mate.begin(), mate.end(), [](std::int64_t m) { return m < 0; });
}

}  // namespace detail

/// One extraction attempt driven by `seed`; nullopt when the draw is rejected.
inline std::optional<Subgraph> try_extract_subgraph(const GraphInstance& g, ExtractMode mode,
                                                    const ExtractParams& p, std::uint64_t seed) {
    if (g.node_count < 2) return std::nullopt;
    const CounterStream stream(seed);
    std::uint64_t draw = 0;
    auto below = [&](std::size_t bound) { return static_cast<std::size_t>(stream(draw++) % bound); };

    std::vector<char> keep(g.node_count, 0);
    NodeId s = 0, t = 0;
    if (mode == ExtractMode::PathPair) {
        s = below(g.node_count);
        t = below(g.node_count - 1);
        if (t >= s) ++t;
        const auto fwd = detail::hop_distances(g, s, false);
        const auto bwd = detail::hop_distances(g, t, true);
        constexpr auto inf = std::numeric_limits<std::size_t>::max();
        if (fwd[t] == inf || fwd[t] < p.min_distance || fwd[t] > p.max_hops) return std::nullopt;
        std::size_t count = 0;
        for (NodeId v = 0; v < g.node_count; ++v)
            if (fwd[v] != inf && bwd[v] != inf && fwd[v] + bwd[v] <= p.max_hops) {
                keep[v] = 1;
                ++count;
            }
        if (count > p.max_nodes) return std::nullopt;
    } else {
        if (p.sample_nodes > g.node_count) return std::nullopt;
        std::vector<NodeId> order(g.node_count);
        for (NodeId v = 0; v < g.node_count; ++v) order[v] = v;
        for (std::size_t i = 0; i < p.sample_nodes; ++i) {
            std::swap(order[i], order[i + below(g.node_count - i)]);
            keep[order[i]] = 1;
        }
    }

    std::vector<NodeId> local(g.node_count, 0);
    std::size_t nodes = 0;
    for (NodeId v = 0; v < g.node_count; ++v)
        if (keep[v]) local[v] = nodes++;

    Subgraph out;
    out.graph.node_count = nodes;
    out.graph.directed = mode == ExtractMode::PathPair ? g.directed : false;
    std::set<std::pair<NodeId, NodeId>> seen;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        if (!keep[ed.tail] || !keep[ed.head]) continue;
        Edge le{local[ed.tail], local[ed.head]};
        if (!out.graph.directed) {
            if (!seen.insert(std::minmax(le.tail, le.head)).second) continue;
        } else if (!seen.insert({le.tail, le.head}).second) {
            continue;
        }
        out.graph.edges.push_back(le);
        out.original_edge.push_back(e);
    }

    if (mode == ExtractMode::PathPair) {
        out.graph.source = local[s];
        out.graph.target = local[t];
    } else {
        if (out.graph.edges.size() < p.min_edges) return std::nullopt;
        if (p.require_perfect_matching && !detail::has_perfect_matching(out.graph)) return std::nullopt;
    }
    return out;
}

/// Retries rejected draws with fresh sub-seeds; throws RetriesExhausted.
inline Subgraph extract_subgraph(const GraphInstance& g, ExtractMode mode, const ExtractParams& p,
                                 std::uint64_t seed) {
    for (std::size_t attempt = 0; attempt < p.retries; ++attempt)
        if (auto sub = try_extract_subgraph(g, mode, p, CounterStream::derive(seed, attempt)))
            return std::move(*sub);
    throw RetriesExhausted("extract_subgraph: no acceptable draw in " + std::to_string(p.retries) +
                           " attempts");
}

}  // namespace csale::bench
