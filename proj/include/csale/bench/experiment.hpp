// experiment.hpp - sweep orchestration: instances x repeats x epsilons x algorithms
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "csale/algorithms.hpp"
#include "csale/analysis.hpp"
#include "csale/bench/config.hpp"
#include "csale/bench/instances.hpp"
#include "csale/bench/subgraph.hpp"
#include "csale/graph.hpp"

namespace csale::bench {

struct ResultRow {
    std::string instance;
    std::string algorithm;
    double epsilon = 0.0;
    std::size_t run = 0;
    std::uint64_t samples = 0;
    std::uint64_t oracle_calls = 0;
    double time_ms = 0.0;
    bool eps_optimal = false;
    double accepted_early_frac = 0.0;
    bool failed = false;   // numeric fields are meaningless when set
    std::string error;     // not serialized

    friend bool operator==(const ResultRow& a, const ResultRow& b) {
        return a.instance == b.instance && a.algorithm == b.algorithm && a.epsilon == b.epsilon &&
               a.run == b.run && a.samples == b.samples && a.oracle_calls == b.oracle_calls &&
               a.time_ms == b.time_ms && a.eps_optimal == b.eps_optimal &&
               a.accepted_early_frac == b.accepted_early_frac && a.failed == b.failed;
    }
};

inline ResultRow failed_row(std::string instance, Algorithm alg, double epsilon, std::size_t run,
                            std::string error) {
    ResultRow row;
    row.instance = std::move(instance);
    row.algorithm = std::string(to_string(alg));
    row.epsilon = epsilon;
    row.run = run;
    row.failed = true;
    row.error = std::move(error);
    return row;
}

/// Rounds to 6 significant digits, the precision written to CSV, so rows
/// survive a write/read cycle unchanged.
inline double round_sig6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::strtod(buf, nullptr);
}

struct SweepOptions {
    std::optional<std::size_t> threads;  // overrides the config
    bool record_timing = true;           // false writes time_ms = 0 for byte-stable output
};

/// The sweep's input, resolved from an ExperimentConfig: either one fixed
/// problem or a source graph from which every repeat extracts its own.
class InstanceSource {
public:
    explicit InstanceSource(const ExperimentConfig& cfg) : cfg_(cfg) { resolve(); }

    [[nodiscard]] const std::string& id() const noexcept { return id_; }
    [[nodiscard]] ProblemKind kind() const noexcept { return kind_; }
    [[nodiscard]] WeightPolicy weight_policy() const noexcept { return policy_; }

    /// Problem for repeat `r`; deterministic in (seed, r).
    [[nodiscard]] Problem problem(std::size_t r) const {
        const std::uint64_t weight_seed = CounterStream::derive(CounterStream::derive(cfg_.seed, 1), r);
        const std::uint64_t extract_seed = CounterStream::derive(CounterStream::derive(cfg_.seed, 2), r);

        if (kind_ == ProblemKind::Explicit) {
            auto inst = make_three_set_instance(cfg_.example1_n, cfg_.example1_gamma);
            return {id_, std::move(inst.decision_class), std::move(inst.means), Sense::Maximize};
        }

        GraphInstance g = graph_;
        std::vector<std::size_t> original(g.edges.size());
        for (std::size_t e = 0; e < original.size(); ++e) original[e] = e;
        if (cfg_.extract != ExtractChoice::None) {
            const auto mode = cfg_.extract == ExtractChoice::PathPair ? ExtractMode::PathPair
                                                                      : ExtractMode::NodeSample;
            Subgraph sub = extract_subgraph(graph_, mode, cfg_.extract_params, extract_seed);
            g = std::move(sub.graph);
            original = std::move(sub.original_edge);
        }

        std::vector<double> means(g.edges.size());
        if (policy_ == WeightPolicy::FromFile) {
            for (std::size_t e = 0; e < means.size(); ++e) means[e] = file_weights_[original[e]];
        } else {
            means = ternary_weights(g.edges.size(), weight_seed);
        }

        // Paths are shortest-path instances: means are expected edge costs.
        if (kind_ == ProblemKind::Path) {
            std::optional<std::size_t> bound = cfg_.d_bound;
            return {id_, PathClass(std::move(g), bound), std::move(means), Sense::Minimize};
        }
        return {id_, MatchingClass(std::move(g)), std::move(means), Sense::Maximize};
    }

private:
    void resolve() {
        const std::string& inst = cfg_.instance;
        auto expect_kind = [&](ProblemKind k) {
            if (cfg_.problem && *cfg_.problem != k)
                throw ConfigError("config: instance '" + inst + "' does not fit the requested problem");
            kind_ = k;
        };
        auto generated = [&] {
            if (cfg_.weights == WeightPolicy::FromFile)
                throw ConfigError("config: generated instance '" + inst + "' has no file weights");
            policy_ = WeightPolicy::RandomTernary;
        };

        if (inst == "synthetic_path") {
            expect_kind(ProblemKind::Path);
            generated();
            graph_ = synthetic_path_graph();
        } else if (inst == "synthetic_matching" || inst.rfind("k_full:", 0) == 0) {
            std::size_t k = 6;
            if (inst != "synthetic_matching") {
                const std::string digits = inst.substr(7);
                char* end = nullptr;
                k = std::strtoul(digits.c_str(), &end, 10);
                if (digits.empty() || *end != '\0' || k < 2 || k % 2 != 0)
                    throw ConfigError("config: k_full needs an even K >= 2, got '" + inst + "'");
            }
            expect_kind(ProblemKind::Matching);
            generated();
            graph_ = complete_graph(k);
        } else if (inst == "example1") {
            expect_kind(ProblemKind::Explicit);
            if (cfg_.weights == WeightPolicy::RandomTernary)
                throw ConfigError("config: example1 has fixed means");
            policy_ = WeightPolicy::FromFile;
            const double s = static_cast<double>((cfg_.example1_n - 1) / 2);
            if (cfg_.example1_n < 5 || cfg_.example1_n % 2 == 0 || !(cfg_.example1_gamma > 0.0) ||
                s * cfg_.example1_gamma > 1.0)
                throw ConfigError("config: example1 needs odd n >= 5 and 0 < gamma <= 2/(n-1)");
        } else {
            load_file(inst);
        }
        if (cfg_.extract != ExtractChoice::None && kind_ == ProblemKind::Explicit)
            throw ConfigError("config: extraction needs a graph instance");
        if (cfg_.extract == ExtractChoice::PathPair && kind_ != ProblemKind::Path)
            throw ConfigError("config: path_pair extraction is for path problems");
        if (cfg_.extract == ExtractChoice::NodeSample && kind_ != ProblemKind::Matching)
            throw ConfigError("config: node_sample extraction is for matching problems");
        if (cfg_.source && kind_ != ProblemKind::Path)
            throw ConfigError("config: source/target only apply to path problems");
        id_ = inst;
    }

    void load_file(const std::string& path) {
        if (!cfg_.problem || *cfg_.problem == ProblemKind::Explicit)
            throw ConfigError("config: file instances need problem = path or matching");
        kind_ = *cfg_.problem;
        EdgeList list;
        try {
            list = read_edge_list(path);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
        graph_ = list.to_graph(kind_ == ProblemKind::Path);

        if (cfg_.weights == WeightPolicy::FromFile && !list.weighted())
            throw ConfigError("config: '" + path + "' has no weight column");
        policy_ = cfg_.weights.value_or(list.weighted() ? WeightPolicy::FromFile
                                                        : WeightPolicy::RandomTernary);
        if (policy_ == WeightPolicy::FromFile) {
            file_weights_ = list.weights;
            double top = 0.0;
            for (double w : file_weights_) {
                if (w < 0.0) throw ConfigError("config: '" + path + "' has a negative weight");
                top = std::max(top, w);
            }
            if (top > 1.0)
                for (double& w : file_weights_) w /= top;
        }

        if (kind_ == ProblemKind::Path) {
            if (cfg_.source) {
                const auto s = list.find_node(*cfg_.source);
                const auto t = list.find_node(*cfg_.target);
                if (!s || !t) throw ConfigError("config: source or target not found in '" + path + "'");
                graph_.source = *s;
                graph_.target = *t;
            } else if (cfg_.extract == ExtractChoice::None) {
                throw ConfigError("config: path problem on a file needs source/target or extract = path_pair");
            }
        } else if (cfg_.extract == ExtractChoice::None && graph_.node_count % 2 != 0) {
            throw ConfigError("config: matching on '" + path + "' needs an even node count");
        }
    }

    ExperimentConfig cfg_;
    std::string id_;
    ProblemKind kind_ = ProblemKind::Path;
    WeightPolicy policy_ = WeightPolicy::RandomTernary;
    GraphInstance graph_;
    std::vector<double> file_weights_;
};

/// Runs one algorithm on one problem and scores its output against the true means.
inline ResultRow run_row(const Problem& p, Algorithm alg, double epsilon, double delta,
                         std::size_t run, std::uint64_t seed, const AlgorithmOptions& opts,
                         bool record_timing) {
    ResultRow row;
    row.instance = p.id;
    row.algorithm = std::string(to_string(alg));
    row.epsilon = epsilon;
    row.run = run;
    try {
        const RewardModel model = p.model();
        const CsaleConfig cfg{epsilon, delta};
        std::visit(
            [&](const auto& dc) {
                const RunReport rep = run_algorithm(alg, dc, model, cfg, seed, opts);
                const std::vector<double> mu = canonicalize(model).means();
                const double best = optimal_value(dc, mu);
                row.samples = rep.total_samples;
                row.oracle_calls = rep.oracle_calls;
                row.time_ms = record_timing
                                  ? round_sig6(std::chrono::duration<double, std::milli>(rep.wall_time).count())
                                  : 0.0;
                row.eps_optimal = dc.contains(rep.output) &&
                                  set_reward(mu, rep.output) >= best - epsilon - value_tolerance;
                row.accepted_early_frac = round_sig6(rep.accepted_early_fraction());
            },
            p.decision_class);
    } catch (const std::exception& e) {
        row = failed_row(p.id, alg, epsilon, run, e.what());
    }
    return row;
}

/// Rows come out in sweep order: repeat, then epsilon, then algorithm. Row i
/// draws its samples from CounterStream::derive(seed, i), so the thread
/// count never changes the result.
inline std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, const SweepOptions& opts = {}) {
    cfg.validate();
    const InstanceSource source(cfg);
    const std::size_t per_repeat = cfg.epsilons.size() * cfg.algorithms.size();
    const std::size_t total = cfg.repeats * per_repeat;
    std::vector<ResultRow> rows(total);

    std::vector<std::optional<Problem>> problems(cfg.repeats);
    std::vector<std::string> problem_errors(cfg.repeats);
    for (std::size_t r = 0; r < cfg.repeats; ++r) {
        try {
            problems[r] = source.problem(r);
        } catch (const std::exception& e) {
            problem_errors[r] = e.what();
        }
    }

    const std::uint64_t pull_key = CounterStream::derive(cfg.seed, 3);
    auto compute = [&](std::size_t i) {
        const std::size_t r = i / per_repeat;
        const double eps = cfg.epsilons[(i % per_repeat) / cfg.algorithms.size()];
        const Algorithm alg = cfg.algorithms[i % cfg.algorithms.size()];
        if (!problems[r]) {
            rows[i] = failed_row(source.id(), alg, eps, r, problem_errors[r]);
            return;
        }
        rows[i] = run_row(*problems[r], alg, eps, cfg.delta, r, CounterStream::derive(pull_key, i),
                          cfg.algorithm_options, opts.record_timing);
    };

    const std::size_t workers = std::min(opts.threads.value_or(cfg.threads), std::max<std::size_t>(total, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) compute(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < total; i = next++) compute(i);
            });
    }
    return rows;
}

}  // namespace csale::bench
