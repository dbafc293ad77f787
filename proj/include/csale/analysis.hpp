// analysis.hpp - ground-truth diagnostics: arm gaps and the elimination measure
#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "csale/arm_set.hpp"
#include "csale/decision_class.hpp"
#include "csale/errors.hpp"

namespace csale {

/// Slack for comparing arm-set values summed in different orders.
inline constexpr double value_tolerance = 1e-9;

/// Value of the best valid set under `w`; throws InfeasibleError for an
/// empty class.
template <DecisionClass C>
double optimal_value(const C& dc, std::span<const double> w) {
    const auto best = dc.oracle(w, ArmSet{}, ArmSet{});
    if (!best) throw InfeasibleError("optimal_value: decision class has no valid set");
    return set_reward(w, *best);
}

/// Gap of arm `a` under true means `mu` (already in maximization form):
/// mu* minus the best value without `a` when `a` is in every optimal set,
/// mu* minus the best value with `a` when `a` is in no optimal set, and 0
/// when it is in some optimal sets only. An empty comparison family yields
/// +infinity.
template <DecisionClass C>
double true_gap(const C& dc, std::span<const double> mu, ArmIndex a) {
    const double best = optimal_value(dc, mu);
    const ArmSet arm{a};
    const auto with_a = dc.oracle(mu, arm, ArmSet{});
    const auto without_a = dc.oracle(mu, ArmSet{}, arm);
    const bool in_some_optimum = with_a && set_reward(mu, *with_a) >= best - value_tolerance;
    if (in_some_optimum) {
        if (!without_a) return std::numeric_limits<double>::infinity();
        const double rest = set_reward(mu, *without_a);
        if (rest >= best - value_tolerance) return 0.0;
        return best - rest;
    }
    if (!with_a) return std::numeric_limits<double>::infinity();
    return std::max(0.0, best - set_reward(mu, *with_a));
}

/// Largest n for which the elimination measure is computed by enumeration.
inline constexpr std::size_t elimination_measure_limit = 24;

/// Exhaustive Q(n, k) over all k-subsets; refuses classes above the limit.
template <DecisionClass C>
std::size_t elimination_measure_brute_force(const C& dc, std::size_t k) {
    const std::size_t n = dc.arm_count();
    if (k > n) throw std::invalid_argument("elimination_measure: k exceeds the arm count");
    if (n > elimination_measure_limit)
        throw SizeGuardError("elimination_measure: " + std::to_string(n) +
                             " arms exceeds the enumeration limit");
    std::vector<ArmIndex> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (;;) {
        best = std::min(best, dc.elim(ArmSet(pick)).size());
        // Next k-combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return k + best;
}

/// Q(n, k) = k + min over k-subsets A of |elim(A)|. Uses the class's closed
/// form when it has one, otherwise enumerates all k-subsets.
template <DecisionClass C>
std::size_t elimination_measure(const C& dc, std::size_t k) {
    const std::size_t n = dc.arm_count();
    if (k > n) throw std::invalid_argument("elimination_measure: k exceeds the arm count");
    if constexpr (HasClosedFormMeasure<C>) {
        if (auto q = dc.closed_form_elimination_measure(k)) return *q;
    }
    return elimination_measure_brute_force(dc, k);
}

}  // namespace csale
