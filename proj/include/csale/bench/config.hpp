// config.hpp - flat `key = value` experiment configuration
//
// Recognized keys (values in brackets are defaults):
//   instance        synthetic_path | synthetic_matching | k_full:K | example1 | <edge-list path>
//   problem         path | matching | explicit          [inferred from instance]
//   epsilons        comma list of positive reals        (required)
//   delta           [0.05]
//   repeats         [1]
//   seed            [1]
//   algorithms      comma list of csale, naive, clucb_pac   [csale]
//   weights         file | ternary                      [ternary; file for weighted inputs]
//   source, target  node names, path problems on files (omit both to extract subgraphs)
//   extract         none | path_pair | node_sample      [none]
//   max_hops, min_distance, max_nodes, sample_nodes, min_edges, retries
//   d_bound         path d_bound override               [exact]
//   naive_convention  table | literal                   [table]
//   clucb_budget    pull budget for clucb_pac           [100000000]
//   threads         worker threads                      [1]
//   example1_n, example1_gamma                          [11, 0.05]
// Blank lines and text after `#` are ignored.
#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "csale/algorithms.hpp"
#include "csale/bench/subgraph.hpp"

namespace csale::bench {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ProblemKind { Path, Matching, Explicit };
enum class WeightPolicy { FromFile, RandomTernary };
enum class ExtractChoice { None, PathPair, NodeSample };

struct ExperimentConfig {
    std::string instance;
    std::optional<ProblemKind> problem;
    std::vector<double> epsilons;
    double delta = 0.05;
    std::size_t repeats = 1;
    std::uint64_t seed = 1;
    std::vector<Algorithm> algorithms{Algorithm::Csale};
    std::optional<WeightPolicy> weights;

    std::optional<std::string> source;
    std::optional<std::string> target;
    ExtractChoice extract = ExtractChoice::None;
    ExtractParams extract_params;
    std::optional<std::size_t> d_bound;
    AlgorithmOptions algorithm_options;
    std::size_t threads = 1;
    std::size_t example1_n = 11;
    double example1_gamma = 0.05;

    void validate() const {
        if (instance.empty()) throw ConfigError("config: `instance` is required");
        if (epsilons.empty()) throw ConfigError("config: `epsilons` is required");
        for (double e : epsilons)
            if (!(e > 0.0)) throw ConfigError("config: every epsilon must be positive");
        if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("config: delta must lie in (0,1)");
        if (repeats < 1) throw ConfigError("config: repeats must be at least 1");
        if (algorithms.empty()) throw ConfigError("config: `algorithms` is empty");
        if (threads < 1) throw ConfigError("config: threads must be at least 1");
        if (source.has_value() != target.has_value())
            throw ConfigError("config: `source` and `target` go together");
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    while (true) {
        const auto comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (!item.empty()) out.emplace_back(item);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

inline double parse_real(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size()) throw ConfigError("config: `" + key + "` expects a number, got '" + v + "'");
    return x;
}

inline std::uint64_t parse_uint(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    std::uint64_t x = 0;
    try {
        if (!v.empty() && v.front() != '-') x = std::stoull(v, &used, 0);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size())
        throw ConfigError("config: `" + key + "` expects a non-negative integer, got '" + v + "'");
    return x;
}

}  // namespace detail

inline ExperimentConfig parse_config(std::istream& in, const std::string& origin = "<config>") {
    ExperimentConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto body = detail::trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        const std::string where = origin + ":" + std::to_string(line_no);
        if (eq == std::string_view::npos) throw ConfigError(where + ": expected `key = value`");
        const std::string key(detail::trim(body.substr(0, eq)));
        const std::string value(detail::trim(body.substr(eq + 1)));
        if (key.empty()) throw ConfigError(where + ": empty key");

        try {
            if (key == "instance") {
                cfg.instance = value;
            } else if (key == "problem") {
                if (value == "path") cfg.problem = ProblemKind::Path;
                else if (value == "matching") cfg.problem = ProblemKind::Matching;
                else if (value == "explicit") cfg.problem = ProblemKind::Explicit;
                else throw ConfigError("unknown problem '" + value + "'");
            } else if (key == "epsilons") {
                cfg.epsilons.clear();
                for (const auto& item : detail::split_list(value))
                    cfg.epsilons.push_back(detail::parse_real(key, item));
            } else if (key == "delta") {
                cfg.delta = detail::parse_real(key, value);
            } else if (key == "repeats") {
                cfg.repeats = detail::parse_uint(key, value);
            } else if (key == "seed") {
                cfg.seed = detail::parse_uint(key, value);
            } else if (key == "algorithms") {
                cfg.algorithms.clear();
                for (const auto& item : detail::split_list(value)) {
                    auto alg = parse_algorithm(item);
                    if (!alg) throw ConfigError("unknown algorithm '" + item + "'");
                    cfg.algorithms.push_back(*alg);
                }
            } else if (key == "weights") {
                if (value == "file") cfg.weights = WeightPolicy::FromFile;
                else if (value == "ternary") cfg.weights = WeightPolicy::RandomTernary;
                else throw ConfigError("unknown weight policy '" + value + "'");
            } else if (key == "source") {
                cfg.source = value;
            } else if (key == "target") {
                cfg.target = value;
            } else if (key == "extract") {
                if (value == "none") cfg.extract = ExtractChoice::None;
                else if (value == "path_pair") cfg.extract = ExtractChoice::PathPair;
                else if (value == "node_sample") cfg.extract = ExtractChoice::NodeSample;
                else throw ConfigError("unknown extract mode '" + value + "'");
            } else if (key == "max_hops") {
                cfg.extract_params.max_hops = detail::parse_uint(key, value);
            } else if (key == "min_distance") {
                cfg.extract_params.min_distance = detail::parse_uint(key, value);
            } else if (key == "max_nodes") {
                cfg.extract_params.max_nodes = detail::parse_uint(key, value);
            } else if (key == "sample_nodes") {
                cfg.extract_params.sample_nodes = detail::parse_uint(key, value);
            } else if (key == "min_edges") {
                cfg.extract_params.min_edges = detail::parse_uint(key, value);
            } else if (key == "retries") {
                cfg.extract_params.retries = detail::parse_uint(key, value);
            } else if (key == "d_bound") {
                cfg.d_bound = detail::parse_uint(key, value);
            } else if (key == "naive_convention") {
                if (value == "table") cfg.algorithm_options.naive_convention = NaiveConvention::TableCalibrated;
                else if (value == "literal") cfg.algorithm_options.naive_convention = NaiveConvention::Literal;
                else throw ConfigError("unknown naive convention '" + value + "'");
            } else if (key == "clucb_budget") {
                cfg.algorithm_options.clucb.pull_budget = detail::parse_uint(key, value);
            } else if (key == "threads") {
                cfg.threads = detail::parse_uint(key, value);
            } else if (key == "example1_n") {
                cfg.example1_n = detail::parse_uint(key, value);
            } else if (key == "example1_gamma") {
                cfg.example1_gamma = detail::parse_real(key, value);
            } else {
                throw ConfigError("unknown key `" + key + "`");
            }
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            throw ConfigError(msg.rfind("config:", 0) == 0 ? where + ": " + msg.substr(8)
                                                           : where + ": " + msg);
        }
    }
    cfg.validate();
    return cfg;
}

inline ExperimentConfig parse_config_string(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    return parse_config(in, path);
}

}  // namespace csale::bench
