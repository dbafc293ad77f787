// matching_class.hpp - perfect matchings of an undirected graph as a decision class
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csale/arm_set.hpp"
#include "csale/blossom.hpp"
#include "csale/decision_class.hpp"
#include "csale/graph.hpp"

namespace csale {

/// Decision class of perfect matchings; arms are edges.
///
/// The oracle removes forbidden edges and every edge touching an endpoint of
/// a required edge, solves maximum-weight perfect matching on the rest with
/// the blossom algorithm, and adds the required edges back.
class MatchingClass {
public:
    explicit MatchingClass(GraphInstance g) : g_(std::move(g)) {
        g_.validate();
        if (g_.directed) throw std::invalid_argument("MatchingClass: graph must be undirected");
        if (g_.node_count % 2 != 0) throw std::invalid_argument("MatchingClass: odd node count");
        std::map<std::pair<NodeId, NodeId>, int> pairs;
        for (const Edge& e : g_.edges) ++pairs[std::minmax(e.tail, e.head)];
        complete_ = pairs.size() == g_.edges.size() &&
                    pairs.size() == g_.node_count * (g_.node_count - 1) / 2;
    }

    [[nodiscard]] std::size_t arm_count() const noexcept { return g_.edges.size(); }
    [[nodiscard]] const GraphInstance& graph() const noexcept { return g_; }
    [[nodiscard]] std::size_t d_bound(const ArmSet& /*required*/) const noexcept {
        return g_.node_count / 2;
    }

    [[nodiscard]] std::optional<ArmSet> oracle(std::span<const double> w, const ArmSet& required,
                                               const ArmSet& forbidden) const {
        if (required.intersects(forbidden)) return std::nullopt;
        std::vector<char> covered(g_.node_count, 0);
        for (ArmIndex e : required) {
            const Edge& ed = g_.edges.at(e);
            if (covered[ed.tail] || covered[ed.head]) return std::nullopt;
            covered[ed.tail] = covered[ed.head] = 1;
        }

        // Residual graph on uncovered nodes; parallel edges collapse to the
        // heaviest one (lowest index on ties).
        std::vector<std::size_t> local(g_.node_count, static_cast<std::size_t>(-1));
        std::size_t residual_nodes = 0;
        for (NodeId v = 0; v < g_.node_count; ++v)
            if (!covered[v]) local[v] = residual_nodes++;
        if (residual_nodes == 0) return required;

        std::map<std::pair<std::size_t, std::size_t>, ArmIndex> best;
        for (std::size_t e = 0; e < g_.edges.size(); ++e) {
            const Edge& ed = g_.edges[e];
            if (covered[ed.tail] || covered[ed.head] || forbidden.contains(e)) continue;
            const auto key = std::minmax(local[ed.tail], local[ed.head]);
            auto [it, inserted] = best.try_emplace(key, e);
            if (!inserted && w[e] > w[it->second]) it->second = e;
        }
        if (best.size() < residual_nodes / 2) return std::nullopt;

        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto& [key, e] : best) {
            lo = std::min(lo, w[e]);
            hi = std::max(hi, w[e]);
        }
        // Perfect matchings all have the same size, so shifting every weight by
        // a constant keeps the optimum; the shift makes weights positive.
        const double span = hi - lo;
        const double scale = span > 0.0 ? std::ldexp(1.0, 40) / span : 1.0;
        std::vector<WeightedEdge> edges;
        std::vector<ArmIndex> arm_of;
        edges.reserve(best.size());
        for (const auto& [key, e] : best) {
            const auto iw = static_cast<std::int64_t>(std::llround((w[e] - lo) * scale)) + 1;
            edges.push_back({key.first, key.second, iw});
            arm_of.push_back(e);
        }

        const auto mate = max_weight_matching(residual_nodes, edges, /*max_cardinality=*/true);
        std::vector<ArmIndex> chosen(required.begin(), required.end());
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (mate[edges[k].u] == static_cast<std::int64_t>(edges[k].v)) chosen.push_back(arm_of[k]);
        if (chosen.size() != g_.node_count / 2) return std::nullopt;
        return ArmSet(std::move(chosen));
    }

    /// Edges sharing a node with an accepted edge.
    [[nodiscard]] ArmSet elim(const ArmSet& accepted) const {
        std::vector<char> touched(g_.node_count, 0);
        for (ArmIndex e : accepted) touched[g_.edges.at(e).tail] = touched[g_.edges.at(e).head] = 1;
        std::vector<ArmIndex> out;
        for (std::size_t e = 0; e < g_.edges.size(); ++e)
            if ((touched[g_.edges[e].tail] || touched[g_.edges[e].head]) && !accepted.contains(e))
                out.push_back(e);
        return ArmSet(std::move(out));
    }

    [[nodiscard]] bool contains(const ArmSet& s) const {
        if (s.size() != g_.node_count / 2 || (!s.empty() && s.max_arm() >= arm_count())) return false;
        std::vector<char> covered(g_.node_count, 0);
        for (ArmIndex e : s) {
            const Edge& ed = g_.edges[e];
            if (covered[ed.tail] || covered[ed.head]) return false;
            covered[ed.tail] = covered[ed.head] = 1;
        }
        return true;
    }

    /// On a complete graph K_m, k accepted edges touch the fewest edges when
    /// they cover the fewest nodes c (smallest c with c(c-1)/2 >= k), giving
    /// Q = c(c-1)/2 + c(m-c).
    [[nodiscard]] std::optional<std::size_t> closed_form_elimination_measure(std::size_t k) const {
        if (!complete_ || k > arm_count()) return std::nullopt;
        if (k == 0) return 0;
        const std::size_t m = g_.node_count;
        std::size_t c = 2;
        while (c * (c - 1) / 2 < k) ++c;
        return c * (c - 1) / 2 + c * (m - c);
    }

private:
    GraphInstance g_;
    bool complete_ = false;
};

static_assert(DecisionClass<MatchingClass>);
static_assert(HasClosedFormMeasure<MatchingClass>);

}  // namespace csale
