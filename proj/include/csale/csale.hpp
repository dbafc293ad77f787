// csale.hpp - Combinatorial Successive Acceptance with Light Elimination
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "csale/arm_set.hpp"
#include "csale/core_model.hpp"
#include "csale/decision_class.hpp"
#include "csale/errors.hpp"
#include "csale/run_report.hpp"

namespace csale {

namespace detail {

template <DecisionClass C>
void check_run_inputs(const C& dc, const RewardModel& model, const CsaleConfig& cfg) {
    cfg.validate();
    if (model.arm_count() != dc.arm_count())
        throw std::invalid_argument("reward model has " + std::to_string(model.arm_count()) +
                                    " arms, decision class has " + std::to_string(dc.arm_count()));
}

}  // namespace detail

/// PAC combinatorial pure exploration with O(d log d) oracle calls.
///
/// Rounds t = 1, 2, ... sample every active arm to accuracy eps_t / 2 with
/// eps_1 = epsilon halving each round, and accept arms of the constrained
/// empirical optimum whose empirical gap exceeds
/// theta = (d_bound(Acc) - |Acc|) * eps_t. Gaps are computed once per round.
/// Each acceptance removes elim(Acc) from the active set. Rounds run while
/// eps_t > epsilon / (d_bound(Acc) - |Acc|); a final batch then samples the
/// remaining active arms to accuracy epsilon / (2 (d_bound(Acc) - |Acc|)) and
/// the constrained optimum is returned. If the accepted set becomes valid on
/// its own the run returns it immediately.
///
/// Minimize models are canonicalized first. When a later batch needs fewer
/// samples than already taken (the active set shrank), it adds none.
template <DecisionClass C>
RunReport csale_run(const C& dc, const RewardModel& model_in, const CsaleConfig& cfg,
                    std::uint64_t seed) {
    detail::check_run_inputs(dc, model_in, cfg);
    const RewardModel model = canonicalize(model_in);
    const RunTimer timer;
    const std::size_t n = dc.arm_count();

    RunReport rep;
    EmpiricalState state(n, seed);
    auto oracle = [&](const std::vector<double>& w, const ArmSet& req, const ArmSet& forb) {
        ++rep.oracle_calls;
        return dc.oracle(w, req, forb);
    };
    auto finish = [&](ArmSet out) {
        rep.output = std::move(out);
        rep.total_samples = state.total_pulls();
        timer.stop(rep);
        return rep;
    };

    ArmSet accepted;
    std::vector<char> active(n, 1);
    std::size_t active_count = n;

    rep.d = dc.d_bound(accepted);
    if (rep.d == 0) {
        if (!dc.contains(accepted))
            throw InconsistencyError("csale: d_bound is 0 but the empty set is not valid");
        rep.returned_early = true;
        return finish(accepted);
    }
    const std::size_t T = round_count(rep.d);
    rep.round_limit = T;

    auto remaining_room = [&] {
        const std::size_t db = dc.d_bound(accepted);
        if (db <= accepted.size())
            throw InconsistencyError("csale: accepted set exhausts d_bound but is not valid");
        return db - accepted.size();
    };

    std::uint64_t cumulative = 0;  // N_{t-1}
    auto sample_batch = [&](RoundRecord rec) {
        rec.active_count = active_count;
        rec.delta_split = cfg.delta / (static_cast<double>(T) * static_cast<double>(active_count));
        rec.target_pulls = hoeffding_n(rec.eps_t / 2.0, rec.delta_split);
        rec.pulls_per_arm = rec.target_pulls > cumulative ? rec.target_pulls - cumulative : 0;
        for (std::size_t a = 0; a < n; ++a)
            if (active[a]) state.pull(model, a, rec.pulls_per_arm);
        cumulative += rec.pulls_per_arm;
        rep.per_round.push_back(rec);
    };

    double eps_t = cfg.epsilon;
    for (std::size_t t = 1;; ++t, eps_t /= 2.0) {
        std::size_t room = remaining_room();
        if (!(eps_t > cfg.epsilon / static_cast<double>(room))) break;

        sample_batch(RoundRecord{.t = t, .eps_t = eps_t});

        const std::vector<double> mu = state.estimates();
        const auto best = oracle(mu, accepted, ArmSet{});
        if (!best) throw InfeasibleError("csale: no valid set contains the accepted arms");
        const double best_value = set_reward(mu, *best);

        std::vector<std::pair<ArmIndex, double>> gaps;  // ascending arm index
        for (ArmIndex a : *best) {
            if (!active[a]) continue;
            const auto alt = oracle(mu, accepted, ArmSet{a});
            gaps.emplace_back(a, alt ? best_value - set_reward(mu, *alt)
                                     : std::numeric_limits<double>::infinity());
        }

        double theta = static_cast<double>(room) * eps_t;
        for (;;) {
            auto hit = std::find_if(gaps.begin(), gaps.end(), [&](const auto& g) {
                return active[g.first] && g.second > theta;
            });
            if (hit == gaps.end()) break;
            const ArmIndex a = hit->first;
            accepted = accepted.with(a);
            active[a] = 0;
            --active_count;
            rep.accepted_early.push_back({a, t});
            for (ArmIndex e : dc.elim(accepted)) {
                if (!active[e]) continue;
                active[e] = 0;
                --active_count;
                rep.eliminated.push_back({e, t});
            }
            if (dc.d_bound(accepted) <= accepted.size()) break;  // nothing left to add
            room = remaining_room();
            theta = static_cast<double>(room) * eps_t;
        }

        if (!accepted.empty() && dc.contains(accepted)) {
            rep.returned_early = true;
            return finish(accepted);
        }
    }

    const double eps_last = cfg.epsilon / static_cast<double>(remaining_room());
    if (active_count > 0)
        sample_batch(RoundRecord{.t = rep.per_round.size() + 1, .eps_t = eps_last, .final_batch = true});
    const std::vector<double> mu = state.estimates();
    auto out = oracle(mu, accepted, ArmSet{});
    if (!out) throw InfeasibleError("csale: no valid set contains the accepted arms");
    return finish(std::move(*out));
}

}  // namespace csale
