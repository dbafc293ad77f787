// naive.hpp - uniform-sampling baseline
#pragma once

#include <cstdint>
#include <vector>

#include "csale/core_model.hpp"
#include "csale/csale.hpp"
#include "csale/decision_class.hpp"
#include "csale/errors.hpp"
#include "csale/run_report.hpp"

namespace csale {

enum class NaiveConvention {
    /// hoeffding_n(eps / (4d), delta / n): per-arm target eps / (2d) sampled
    /// at half accuracy. Reproduces the published naive totals (3312 on the
    /// 16-edge path graph and 1740 on K6 at eps = 2).
    TableCalibrated,
    /// hoeffding_n(eps / d, delta / n).
    Literal,
};

inline std::uint64_t naive_pulls_per_arm(std::size_t n, std::size_t d, const CsaleConfig& cfg,
                                         NaiveConvention convention = NaiveConvention::TableCalibrated) {
    cfg.validate();
    if (n == 0 || d == 0) throw std::invalid_argument("naive: n and d must be positive");
    const double per_arm = convention == NaiveConvention::TableCalibrated
                               ? cfg.epsilon / (4.0 * static_cast<double>(d))
                               : cfg.epsilon / static_cast<double>(d);
    return hoeffding_n(per_arm, cfg.delta / static_cast<double>(n));
}

/// Pulls every arm the same number of times, then makes one oracle call.
template <DecisionClass C>
RunReport naive_run(const C& dc, const RewardModel& model_in, const CsaleConfig& cfg,
                    std::uint64_t seed,
                    NaiveConvention convention = NaiveConvention::TableCalibrated) {
    detail::check_run_inputs(dc, model_in, cfg);
    const RewardModel model = canonicalize(model_in);
    const RunTimer timer;
    const std::size_t n = dc.arm_count();

    RunReport rep;
    rep.d = dc.d_bound(ArmSet{});
    rep.round_limit = 1;
    const std::uint64_t per_arm = naive_pulls_per_arm(n, rep.d, cfg, convention);
    EmpiricalState state(n, seed);
    for (std::size_t a = 0; a < n; ++a) state.pull(model, a, per_arm);

    const std::vector<double> mu = state.estimates();
    ++rep.oracle_calls;
    auto out = dc.oracle(mu, ArmSet{}, ArmSet{});
    if (!out) throw InfeasibleError("naive: decision class has no valid set");
    rep.output = std::move(*out);
    rep.total_samples = state.total_pulls();
    rep.per_round.push_back({.t = 1,
                             .eps_t = cfg.epsilon,
                             .delta_split = cfg.delta / static_cast<double>(n),
                             .target_pulls = per_arm,
                             .pulls_per_arm = per_arm,
                             .active_count = n,
                             .final_batch = true});
    timer.stop(rep);
    return rep;
}

}  // namespace csale
