// clucb_pac.hpp - CLUCB-PAC baseline (reconstruction of Chen et al., 2014)
//
// The loop below follows the published CLUCB scheme: one pull per arm, then
// at every step an empirical optimum M_t, a perturbed vector that penalizes
// M_t's arms by their confidence radius and rewards the others, and a second
// oracle call on it. The run stops once the perturbed optimum beats M_t by at
// most epsilon; otherwise the widest arm of M_t xor M~_t is pulled. The radius
// used is sqrt(ln(4 n t^3 / delta) / (2 T_a)), t being the total number of
// pulls so far and T_a the arm's own count.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "csale/core_model.hpp"
#include "csale/csale.hpp"
#include "csale/decision_class.hpp"
#include "csale/errors.hpp"
#include "csale/run_report.hpp"

namespace csale {

struct ClucbOptions {
    std::uint64_t pull_budget = 100'000'000;
};

template <DecisionClass C>
RunReport clucb_pac_run(const C& dc, const RewardModel& model_in, const CsaleConfig& cfg,
                        std::uint64_t seed, const ClucbOptions& opts = {}) {
    detail::check_run_inputs(dc, model_in, cfg);
    const RewardModel model = canonicalize(model_in);
    const RunTimer timer;
    const std::size_t n = dc.arm_count();
    const double nd = static_cast<double>(n);

    RunReport rep;
    rep.d = dc.d_bound(ArmSet{});
    EmpiricalState state(n, seed);
    for (std::size_t a = 0; a < n; ++a) state.pull(model, a, 1);
    std::vector<double> mu = state.estimates();
    std::vector<double> perturbed(n);
    std::vector<double> radius(n);

    for (std::uint64_t t = n;; ++t) {
        ++rep.oracle_calls;
        auto best = dc.oracle(mu, ArmSet{}, ArmSet{});
        if (!best) throw InfeasibleError("clucb_pac: decision class has no valid set");

        const double td = static_cast<double>(t);
        const double log_term = std::log(4.0 * nd * td * td * td / cfg.delta);
        for (std::size_t a = 0; a < n; ++a) {
            radius[a] = std::sqrt(log_term / (2.0 * static_cast<double>(state.count(a))));
            perturbed[a] = best->contains(a) ? mu[a] - radius[a] : mu[a] + radius[a];
        }
        ++rep.oracle_calls;
        auto challenger = dc.oracle(perturbed, ArmSet{}, ArmSet{});
        if (!challenger) throw InfeasibleError("clucb_pac: decision class has no valid set");

        if (set_reward(perturbed, *challenger) - set_reward(perturbed, *best) <= cfg.epsilon) {
            rep.output = std::move(*best);
            break;
        }

        const ArmSet contested = best->symmetric_difference(*challenger);
        ArmIndex pick = *contested.begin();
        for (ArmIndex a : contested)
            if (radius[a] > radius[pick]) pick = a;

        if (state.total_pulls() >= opts.pull_budget)
            throw BudgetExceeded("clucb_pac: pull budget of " + std::to_string(opts.pull_budget) +
                                 " exhausted");
        state.pull(model, pick, 1);
        mu[pick] = state.mean(pick);
    }

    rep.total_samples = state.total_pulls();
    rep.round_limit = 0;
    timer.stop(rep);
    return rep;
}

}  // namespace csale
