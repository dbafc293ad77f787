// algorithms.hpp - name-based dispatch over the exploration algorithms
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "csale/clucb_pac.hpp"
#include "csale/csale.hpp"
#include "csale/naive.hpp"

namespace csale {

enum class Algorithm { Csale, Naive, ClucbPac };

inline std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Csale: return "csale";
        case Algorithm::Naive: return "naive";
        case Algorithm::ClucbPac: return "clucb_pac";
    }
    return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
    if (s == "csale") return Algorithm::Csale;
    if (s == "naive") return Algorithm::Naive;
    if (s == "clucb_pac" || s == "clucb-pac" || s == "clucb") return Algorithm::ClucbPac;
    return std::nullopt;
}

struct AlgorithmOptions {
    NaiveConvention naive_convention = NaiveConvention::TableCalibrated;
    ClucbOptions clucb;
};

template <DecisionClass C>
RunReport run_algorithm(Algorithm alg, const C& dc, const RewardModel& model, const CsaleConfig& cfg,
                        std::uint64_t seed, const AlgorithmOptions& opts = {}) {
    switch (alg) {
        case Algorithm::Csale: return csale_run(dc, model, cfg, seed);
        case Algorithm::Naive: return naive_run(dc, model, cfg, seed, opts.naive_convention);
        case Algorithm::ClucbPac: return clucb_pac_run(dc, model, cfg, seed, opts.clucb);
    }
    throw std::invalid_argument("run_algorithm: unknown algorithm");
}

}  // namespace csale
