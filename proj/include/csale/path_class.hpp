// path_class.hpp - simple source->target paths of a directed graph as a decision class
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csale/arm_set.hpp"
#include "csale/decision_class.hpp"
#include "csale/errors.hpp"
#include "csale/graph.hpp"

namespace csale {

namespace detail {

struct ShortestPathTree {
    std::vector<double> dist;
    std::vector<std::size_t> pred_edge;  // npos at the root and at unreached nodes
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
inline constexpr double infinity = std::numeric_limits<double>::infinity();

}  // namespace detail

/// Decision class of simple source->target paths, arms being edges.
///
/// Oracle weights are rewards to maximize; an edge's cost is its negated
/// weight, which is nonnegative for canonicalized Minimize models. Without
/// required edges the oracle is Dijkstra. With required edges, the edges are
/// merged into chains, chain orderings are optimized exactly by Held-Karp over
/// pairwise shortest distances, and the concatenated walk is accepted if it is
/// simple. Otherwise, and whenever some allowed edge has negative cost, the
/// oracle falls back to exhaustive simple-path enumeration, capped by
/// `enumeration_budget` node expansions.
class PathClass {
public:
    static constexpr std::uint64_t default_enumeration_budget = 20'000'000;

    /// `d_bound` caps the number of edges of any source->target path; when
    /// omitted it is computed exactly by enumeration.
    explicit PathClass(GraphInstance g, std::optional<std::size_t> d_bound = std::nullopt,
                       std::uint64_t enumeration_budget = default_enumeration_budget)
        : g_(std::move(g)), budget_(enumeration_budget) {
        g_.validate();
        if (!g_.directed) throw std::invalid_argument("PathClass: graph must be directed");
        if (g_.source >= g_.node_count || g_.target >= g_.node_count || g_.source == g_.target)
            throw std::invalid_argument("PathClass: invalid source/target");
        out_.resize(g_.node_count);
        for (std::size_t e = 0; e < g_.edges.size(); ++e) out_[g_.edges[e].tail].push_back(e);
        d_bound_ = d_bound ? *d_bound : longest_simple_path();
    }

    [[nodiscard]] std::size_t arm_count() const noexcept { return g_.edges.size(); }
    [[nodiscard]] const GraphInstance& graph() const noexcept { return g_; }
    [[nodiscard]] std::size_t d_bound(const ArmSet& /*required*/) const noexcept { return d_bound_; }

    [[nodiscard]] std::optional<ArmSet> oracle(std::span<const double> w, const ArmSet& required,
                                               const ArmSet& forbidden) const {
        if (required.intersects(forbidden)) return std::nullopt;
        std::vector<char> allowed(arm_count(), 1);
        for (ArmIndex e : forbidden) allowed.at(e) = 0;
        std::vector<double> cost(arm_count());
        bool negative = false;
        for (std::size_t e = 0; e < cost.size(); ++e) {
            cost[e] = -w[e];
            if (allowed[e] && cost[e] < 0.0) negative = true;
        }
        if (negative) return enumerate(cost, allowed, required);

        if (required.empty()) {
            const auto tree = dijkstra(g_.source, cost, allowed);
            if (tree.dist[g_.target] == detail::infinity) return std::nullopt;
            return ArmSet(trace(tree, g_.source, g_.target));
        }
        return chained(cost, allowed, required);
    }

    /// Edges leaving the tail, or entering the head, of an accepted edge.
    [[nodiscard]] ArmSet elim(const ArmSet& accepted) const {
        std::vector<char> tail_used(g_.node_count, 0), head_used(g_.node_count, 0);
        for (ArmIndex e : accepted) {
            tail_used[g_.edges.at(e).tail] = 1;
            head_used[g_.edges.at(e).head] = 1;
        }
        std::vector<ArmIndex> out;
        for (std::size_t e = 0; e < g_.edges.size(); ++e)
            if ((tail_used[g_.edges[e].tail] || head_used[g_.edges[e].head]) && !accepted.contains(e))
                out.push_back(e);
        return ArmSet(std::move(out));
    }

    [[nodiscard]] bool contains(const ArmSet& s) const {
        if (s.empty() || s.max_arm() >= arm_count()) return false;
        std::vector<std::size_t> next(g_.node_count, detail::npos);
        for (ArmIndex e : s) {
            auto& slot = next[g_.edges[e].tail];
            if (slot != detail::npos) return false;
            slot = e;
        }
        std::vector<char> seen(g_.node_count, 0);
        NodeId v = g_.source;
        std::size_t used = 0;
        seen[v] = 1;
        while (v != g_.target) {
            const std::size_t e = next[v];
            if (e == detail::npos) return false;
            v = g_.edges[e].head;
            if (seen[v]) return false;
            seen[v] = 1;
            ++used;
        }
        return used == s.size();
    }

    /// Maximum edge count over simple source->target paths (0 if none).
    [[nodiscard]] std::size_t longest_simple_path() const {
        std::vector<char> visited(g_.node_count, 0);
        std::uint64_t expansions = 0;
        std::size_t best = 0;
        std::function<void(NodeId, std::size_t)> dfs = [&](NodeId v, std::size_t depth) {
            if (++expansions > budget_)
                throw SizeGuardError("PathClass: path enumeration budget exceeded");
            if (v == g_.target) {
                best = std::max(best, depth);
                return;
            }
            visited[v] = 1;
            for (std::size_t e : out_[v])
                if (!visited[g_.edges[e].head]) dfs(g_.edges[e].head, depth + 1);
            visited[v] = 0;
        };
        dfs(g_.source, 0);
        return best;
    }

private:
    [[nodiscard]] detail::ShortestPathTree dijkstra(NodeId from, std::span<const double> cost,
                                                    const std::vector<char>& allowed) const {
        detail::ShortestPathTree t{std::vector<double>(g_.node_count, detail::infinity),
                                   std::vector<std::size_t>(g_.node_count, detail::npos)};
        using Item = std::pair<double, NodeId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        t.dist[from] = 0.0;
        pq.emplace(0.0, from);
        while (!pq.empty()) {
            const auto [d, v] = pq.top();
            pq.pop();
            if (d > t.dist[v]) continue;
            for (std::size_t e : out_[v]) {
                if (!allowed[e]) continue;
                const NodeId u = g_.edges[e].head;
                const double nd = d + cost[e];
                if (nd < t.dist[u]) {
                    t.dist[u] = nd;
                    t.pred_edge[u] = e;
                    pq.emplace(nd, u);
                }
            }
        }
        return t;
    }

    [[nodiscard]] std::vector<ArmIndex> trace(const detail::ShortestPathTree& t, NodeId from,
                                              NodeId to) const {
        std::vector<ArmIndex> edges;
        for (NodeId v = to; v != from;) {
            const std::size_t e = t.pred_edge[v];
            edges.push_back(e);
            v = g_.edges[e].tail;
        }
        std::reverse(edges.begin(), edges.end());
        return edges;
    }

    struct Chain {
        NodeId first;
        NodeId last;
        std::vector<ArmIndex> edges;
        double cost = 0.0;
    };

    /// Splits the required edges into maximal directed chains; nullopt when no
    /// simple path could contain them all.
    [[nodiscard]] std::optional<std::vector<Chain>> build_chains(const ArmSet& required,
                                                                 std::span<const double> cost) const {
        std::vector<std::size_t> out_req(g_.node_count, detail::npos);
        std::vector<char> has_in(g_.node_count, 0);
        for (ArmIndex e : required) {
            if (e >= arm_count()) throw std::out_of_range("PathClass: required arm out of range");
            const Edge& ed = g_.edges[e];
            if (out_req[ed.tail] != detail::npos || has_in[ed.head]) return std::nullopt;
            out_req[ed.tail] = e;
            has_in[ed.head] = 1;
        }
        if (has_in[g_.source] || out_req[g_.target] != detail::npos) return std::nullopt;

        std::vector<Chain> chains;
        std::size_t covered = 0;
        for (ArmIndex e : required) {
            const NodeId start = g_.edges[e].tail;
            if (has_in[start]) continue;  // not the first edge of its chain
            Chain c{start, start, {}, 0.0};
            for (std::size_t cur = out_req[start]; cur != detail::npos;
                 cur = out_req[g_.edges[cur].head]) {
                c.edges.push_back(cur);
                c.cost += cost[cur];
                c.last = g_.edges[cur].head;
            }
            covered += c.edges.size();
            chains.push_back(std::move(c));
        }
        if (covered != required.size()) return std::nullopt;  // a required cycle
        return chains;
    }

    [[nodiscard]] std::optional<ArmSet> chained(std::span<const double> cost,
                                                const std::vector<char>& allowed,
                                                const ArmSet& required) const {
        for (ArmIndex e : required)
            if (!allowed.at(e)) return std::nullopt;
        auto chains_opt = build_chains(required, cost);
        if (!chains_opt) return std::nullopt;
        const std::vector<Chain>& chains = *chains_opt;
        const std::size_t k = chains.size();
        if (k > 12) return enumerate(cost, allowed, required);

        // Trees rooted at the source (index k) and at each chain end.
        std::vector<detail::ShortestPathTree> trees;
        trees.reserve(k + 1);
        for (const Chain& c : chains) trees.push_back(dijkstra(c.last, cost, allowed));
        trees.push_back(dijkstra(g_.source, cost, allowed));

        const std::size_t full = (std::size_t{1} << k) - 1;
        std::vector<double> dp((full + 1) * k, detail::infinity);
        std::vector<std::size_t> parent((full + 1) * k, detail::npos);
        for (std::size_t j = 0; j < k; ++j)
            dp[(std::size_t{1} << j) * k + j] = trees[k].dist[chains[j].first] + chains[j].cost;
        for (std::size_t mask = 1; mask <= full; ++mask) {
            for (std::size_t last = 0; last < k; ++last) {
                const double base = dp[mask * k + last];
                if (!(mask >> last & 1) || base == detail::infinity) continue;
                for (std::size_t nxt = 0; nxt < k; ++nxt) {
                    if (mask >> nxt & 1) continue;
                    const double gap = trees[last].dist[chains[nxt].first];
                    if (gap == detail::infinity) continue;
                    const std::size_t m2 = mask | (std::size_t{1} << nxt);
                    const double v = base + gap + chains[nxt].cost;
                    if (v < dp[m2 * k + nxt]) {
                        dp[m2 * k + nxt] = v;
                        parent[m2 * k + nxt] = last;
                    }
                }
            }
        }
        double best = detail::infinity;
        std::size_t best_last = detail::npos;
        for (std::size_t last = 0; last < k; ++last) {
            const double tail_gap = trees[last].dist[g_.target];
            if (dp[full * k + last] + tail_gap < best) {
                best = dp[full * k + last] + tail_gap;
                best_last = last;
            }
        }
        // Every simple path through the chains is one of these walks or costs
        // more, so an unreachable optimum means no path exists at all.
        if (best_last == detail::npos) return std::nullopt;

        std::vector<std::size_t> order;
        for (std::size_t mask = full, cur = best_last; cur != detail::npos;) {
            order.push_back(cur);
            const std::size_t prev = parent[mask * k + cur];
            mask &= ~(std::size_t{1} << cur);
            cur = prev;
        }
        std::reverse(order.begin(), order.end());

        std::vector<ArmIndex> walk;
        auto append = [&](const std::vector<ArmIndex>& seg) { walk.insert(walk.end(), seg.begin(), seg.end()); };
        append(trace(trees[k], g_.source, chains[order.front()].first));
        for (std::size_t i = 0; i < order.size(); ++i) {
            append(chains[order[i]].edges);
            const NodeId to = i + 1 < order.size() ? chains[order[i + 1]].first : g_.target;
            append(trace(trees[order[i]], chains[order[i]].last, to));
        }

        std::vector<char> seen(g_.node_count, 0);
        seen[g_.source] = 1;
        for (ArmIndex e : walk) {
            const NodeId h = g_.edges[e].head;
            if (seen[h]) return enumerate(cost, allowed, required);
            seen[h] = 1;
        }
        return ArmSet(std::move(walk));
    }

    /// Exact minimum-cost simple path containing `required`, by depth-first
    /// enumeration. Ties go to the first path in edge-index DFS order.
    [[nodiscard]] std::optional<ArmSet> enumerate(std::span<const double> cost,
                                                  const std::vector<char>& allowed,
                                                  const ArmSet& required) const {
        std::vector<std::size_t> forced_out(g_.node_count, detail::npos);
        std::vector<std::size_t> forced_in(g_.node_count, detail::npos);
        for (ArmIndex e : required) {
            if (!allowed.at(e)) return std::nullopt;
            const Edge& ed = g_.edges[e];
            if (forced_out[ed.tail] != detail::npos || forced_in[ed.head] != detail::npos)
                return std::nullopt;
            forced_out[ed.tail] = e;
            forced_in[ed.head] = e;
        }
        const bool nonnegative = std::all_of(cost.begin(), cost.end(), [](double c) { return c >= 0.0; });

        std::vector<char> visited(g_.node_count, 0);
        std::vector<ArmIndex> stack, best_path;
        double best = detail::infinity;
        std::uint64_t expansions = 0;

        std::function<void(NodeId, double, std::size_t)> dfs = [&](NodeId v, double acc,
                                                                    std::size_t req_seen) {
            if (++expansions > budget_)
                throw SizeGuardError("PathClass: path enumeration budget exceeded");
            if (nonnegative && acc >= best) return;
            if (v == g_.target) {
                if (req_seen == required.size() && acc < best) {
                    best = acc;
                    best_path = stack;
                }
                return;
            }
            visited[v] = 1;
            for (std::size_t e : out_[v]) {
                if (!allowed[e]) continue;
                if (forced_out[v] != detail::npos && forced_out[v] != e) continue;
                const NodeId u = g_.edges[e].head;
                if (visited[u]) continue;
                if (forced_in[u] != detail::npos && forced_in[u] != e) continue;
                stack.push_back(e);
                dfs(u, acc + cost[e], req_seen + (forced_out[v] == e ? 1 : 0));
                stack.pop_back();
            }
            visited[v] = 0;
        };
        dfs(g_.source, 0.0, 0);
        if (best == detail::infinity) return std::nullopt;
        return ArmSet(std::move(best_path));
    }

    GraphInstance g_;
    std::uint64_t budget_;
    std::vector<std::vector<std::size_t>> out_;
    std::size_t d_bound_ = 0;
};

static_assert(DecisionClass<PathClass>);

}  // namespace csale
