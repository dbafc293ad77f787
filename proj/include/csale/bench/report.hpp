// report.hpp - mean and standard deviation per (instance, algorithm, epsilon)
#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "csale/bench/experiment.hpp"

namespace csale::bench {

struct RunningStat {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    /// Sample standard deviation; 0 for fewer than two values.
    [[nodiscard]] double stddev() const { return n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0; }
};

struct SummaryRow {
    std::string instance;
    std::string algorithm;
    double epsilon = 0.0;
    std::size_t runs = 0;
    std::size_t errors = 0;
    RunningStat samples, oracle_calls, time_ms, accepted_early;
    std::size_t eps_optimal = 0;
    std::optional<double> ratio_to_naive;  // mean samples / naive mean samples
};

/// Groups rows by (instance, algorithm, epsilon), preserving first-seen order.
inline std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
    std::vector<SummaryRow> out;
    std::map<std::tuple<std::string, std::string, double>, std::size_t> index;
    for (const ResultRow& r : rows) {
        const auto key = std::make_tuple(r.instance, r.algorithm, r.epsilon);
        auto [it, fresh] = index.try_emplace(key, out.size());
        if (fresh) {
            out.emplace_back();
            out.back().instance = r.instance;
            out.back().algorithm = r.algorithm;
            out.back().epsilon = r.epsilon;
        }
        SummaryRow& s = out[it->second];
        ++s.runs;
        if (r.failed) {
            ++s.errors;
            continue;
        }
        s.samples.add(static_cast<double>(r.samples));
        s.oracle_calls.add(static_cast<double>(r.oracle_calls));
        s.time_ms.add(r.time_ms);
        s.accepted_early.add(r.accepted_early_frac);
        s.eps_optimal += r.eps_optimal ? 1 : 0;
    }
    for (SummaryRow& s : out) {
        const auto naive = index.find(std::make_tuple(s.instance, std::string("naive"), s.epsilon));
        if (naive == index.end() || s.samples.n == 0) continue;
        const SummaryRow& base = out[naive->second];
        if (base.samples.n > 0 && base.samples.mean > 0.0) s.ratio_to_naive = s.samples.mean / base.samples.mean;
    }
    return out;
}

inline void print_summary(std::ostream& out, const std::vector<SummaryRow>& summary) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-22s %-10s %8s %5s %24s %16s %18s %14s %9s %8s\n", "instance",
                  "algorithm", "epsilon", "runs", "samples", "oracle calls", "time (ms)",
                  "accepted early", "eps-opt", "ratio");
    out << buf;
    auto pm = [](const RunningStat& s, int precision) {
        char cell[64];
        std::snprintf(cell, sizeof cell, "%.*f+-%.*f", precision, s.mean, precision, s.stddev());
        return std::string(cell);
    };
    for (const SummaryRow& s : summary) {
        char ratio[32] = "-";
        if (s.ratio_to_naive) std::snprintf(ratio, sizeof ratio, "%.1f%%", 100.0 * *s.ratio_to_naive);
        const std::size_t ok_runs = s.runs - s.errors;
        char opt[32];
        std::snprintf(opt, sizeof opt, "%zu/%zu", s.eps_optimal, ok_runs);
        std::snprintf(buf, sizeof buf, "%-22s %-10s %8g %5zu %24s %16s %18s %14s %9s %8s\n",
                      s.instance.c_str(), s.algorithm.c_str(), s.epsilon, s.runs,
                      pm(s.samples, 0).c_str(), pm(s.oracle_calls, 1).c_str(), pm(s.time_ms, 3).c_str(),
                      pm(s.accepted_early, 2).c_str(), opt, ratio);
        out << buf;
        if (s.errors > 0) out << "  (" << s.errors << " failed runs)\n";
    }
}

}  // namespace csale::bench
