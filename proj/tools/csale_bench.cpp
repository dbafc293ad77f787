// csale_bench - generate instances, run sweeps, summarize results
//
//   csale_bench gen synthetic_path [--weights ternary --seed S] [-o FILE]
//   csale_bench gen k_full:6 [-o FILE]
//   csale_bench run CONFIG [--out results.csv] [--threads N] [--no-timing]
//   csale_bench report results.csv
//
// `run` exits 0 when every row succeeded, 1 if any row failed, 2 on a bad config.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "csale/bench/config.hpp"
#include "csale/bench/csv.hpp"
#include "csale/bench/experiment.hpp"
#include "csale/bench/instances.hpp"
#include "csale/bench/report.hpp"
#include "csale/graph.hpp"

namespace {

using namespace csale;
using namespace csale::bench;

int do_gen(const std::string& name, const std::string& weights, std::uint64_t seed, const std::string& out_path) {
    GraphInstance g;
    if (name == "synthetic_path") {
        g = synthetic_path_graph();
    } else if (name == "synthetic_matching") {
        g = complete_graph(6);
    } else if (name.rfind("k_full:", 0) == 0) {
        g = complete_graph(std::stoul(name.substr(7)));
    } else {
        std::cerr << "gen: unknown generator '" << name << "'\n";
        return 2;
    }
    std::vector<double> w;
    if (weights == "ternary") w = ternary_weights(g.edges.size(), seed);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "gen: cannot open '" << out_path << "'\n";
            return 1;
        }
        out = &file;
    }
    *out << "# " << name << ": " << g.node_count << " nodes, " << g.edges.size() << " edges";
    if (g.directed) *out << ", source " << g.source << ", target " << g.target;
    *out << '\n';
    write_edge_list(*out, g, w);
    return 0;
}

int do_run(const std::string& config_path, const std::string& out_path, std::optional<std::size_t> threads,
           bool no_timing) {
    ExperimentConfig cfg;
    std::vector<ResultRow> rows;
    try {
        cfg = load_config(config_path);
        rows = run_experiment(cfg, SweepOptions{threads, !no_timing});
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    std::size_t failures = 0;
    for (const ResultRow& r : rows)
        if (r.failed) {
            ++failures;
            std::cerr << "row failed: " << r.instance << ' ' << r.algorithm << " eps=" << r.epsilon
                      << " run=" << r.run << ": " << r.error << '\n';
        }

    try {
        if (out_path.empty() || out_path == "-") write_csv(std::cout, rows);
        else write_csv(out_path, rows);
    } catch (const CsvError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return failures == 0 ? 0 : 1;
}

int do_report(const std::string& csv_path) {
    try {
        print_summary(std::cout, summarize(read_csv(csv_path)));
    } catch (const CsvError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial pure exploration benchmark"};
    app.require_subcommand(1);

    std::string gen_name, gen_weights = "none", gen_out;
    std::uint64_t gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "Write a generated instance as an edge list");
    gen->add_option("generator", gen_name, "synthetic_path, synthetic_matching or k_full:K")->required();
    gen->add_option("--weights", gen_weights, "none or ternary")->check(CLI::IsMember({"none", "ternary"}));
    gen->add_option("--seed", gen_seed, "Seed for ternary weights");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    std::string run_config, run_out;
    std::optional<std::size_t> run_threads;
    bool run_no_timing = false;
    auto* run = app.add_subcommand("run", "Execute an experiment config and write CSV");
    run->add_option("config", run_config, "Config file")->required()->check(CLI::ExistingFile);
    run->add_option("-o,--out", run_out, "CSV output (default stdout)");
    run->add_option("-j,--threads", run_threads, "Worker threads (overrides the config)")
        ->check(CLI::PositiveNumber);
    run->add_flag("--no-timing", run_no_timing, "Write time_ms as 0 so output is byte-stable");

    std::string report_csv;
    auto* report = app.add_subcommand("report", "Summarize a results CSV as mean+-sd tables");
    report->add_option("csv", report_csv, "Results CSV")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*gen) return do_gen(gen_name, gen_weights, gen_seed, gen_out);
        if (*run) return do_run(run_config, run_out, run_threads, run_no_timing);
        if (*report) return do_report(report_csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
