// graph.hpp - graph instances and the whitespace edge-list format
#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace csale {

using NodeId = std::size_t;

/// Edge `i` of a graph is arm `i` of the problem built on it.
struct Edge {
    NodeId tail;
    NodeId head;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct GraphInstance {
    std::size_t node_count = 0;
    std::vector<Edge> edges;
    bool directed = true;
    NodeId source = 0;  // path problems only
    NodeId target = 0;

    [[nodiscard]] std::size_t edge_count() const noexcept { return edges.size(); }

    /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
    void validate() const {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Edge& e = edges[i];
            if (e.tail >= node_count || e.head >= node_count)
                throw std::invalid_argument("graph: edge " + std::to_string(i) +
                                            " has an endpoint outside the node range");
            if (e.tail == e.head)
                throw std::invalid_argument("graph: edge " + std::to_string(i) + " is a self-loop");
        }
    }

    friend bool operator==(const GraphInstance&, const GraphInstance&) = default;
};

/// Parsed edge-list file. Node tokens are mapped to dense ids in order of
/// first appearance; weights are present only if every edge line had one.
struct EdgeList {
    std::vector<std::string> node_names;
    std::vector<Edge> edges;
    std::vector<double> weights;

    [[nodiscard]] bool weighted() const noexcept { return !weights.empty(); }

    [[nodiscard]] std::optional<NodeId> find_node(const std::string& name) const {
        for (std::size_t i = 0; i < node_names.size(); ++i)
            if (node_names[i] == name) return i;
        return std::nullopt;
    }

    [[nodiscard]] GraphInstance to_graph(bool directed) const {
        GraphInstance g;
        g.node_count = node_names.size();
        g.edges = edges;
        g.directed = directed;
        return g;
    }
};

/// Format: one edge per line, `tail head [weight]`, whitespace separated.
/// `#` starts a comment that runs to the end of the line. Self-loops are
/// rejected; directedness is the caller's business.
inline EdgeList parse_edge_list(std::istream& in, const std::string& origin = "<stream>") {
    EdgeList out;
    std::unordered_map<std::string, NodeId> ids;
    auto intern = [&](const std::string& tok) {
        auto [it, inserted] = ids.try_emplace(tok, out.node_names.size());
        if (inserted) out.node_names.push_back(tok);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    std::optional<bool> has_weight;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(std::move(t));
        if (tok.empty()) continue;

        auto fail = [&](const std::string& why) {
            throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": " + why);
        };
        if (tok.size() != 2 && tok.size() != 3) fail("expected `tail head [weight]`");
        const bool weighted = tok.size() == 3;
        if (has_weight && *has_weight != weighted) fail("weight column present on some lines only");
        has_weight = weighted;
        if (tok[0] == tok[1]) fail("self-loop on node '" + tok[0] + "'");

        const NodeId tail = intern(tok[0]);
        const NodeId head = intern(tok[1]);
        out.edges.push_back({tail, head});
        if (weighted) {
            std::size_t used = 0;
            double w = 0.0;
            try {
                w = std::stod(tok[2], &used);
            } catch (const std::exception&) {
                fail("bad weight '" + tok[2] + "'");
            }
            if (used != tok[2].size()) fail("bad weight '" + tok[2] + "'");
            out.weights.push_back(w);
        }
    }
    return out;
}

inline EdgeList read_edge_list(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open edge list '" + path + "'");
    return parse_edge_list(f, path);
}

/// Writes `g` (and optional per-edge weights) in the edge-list format, with
/// node ids as tokens.
inline void write_edge_list(std::ostream& out, const GraphInstance& g,
                            const std::vector<double>& weights = {}) {
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        out << g.edges[i].tail << ' ' << g.edges[i].head;
        if (!weights.empty()) out << ' ' << weights.at(i);
        out << '\n';
    }
}

}  // namespace csale
