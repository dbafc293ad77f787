// explicit_class.hpp - decision class given by an explicit list of arm sets
#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "csale/arm_set.hpp"
#include "csale/decision_class.hpp"

namespace csale {

/// Decision class enumerated set by set. Every operation is a linear scan,
/// so elimination is maximal and d_bound is exact.
class ExplicitClass {
public:
    ExplicitClass(std::vector<ArmSet> sets, std::size_t n) : sets_(std::move(sets)), n_(n) {
        if (sets_.empty()) throw std::invalid_argument("ExplicitClass: no arm sets given");
        for (const ArmSet& s : sets_)
            if (!s.empty() && s.max_arm() >= n_)
                throw std::invalid_argument("ExplicitClass: set member outside [0, n)");
        std::sort(sets_.begin(), sets_.end());
        sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    }

    [[nodiscard]] std::size_t arm_count() const noexcept { return n_; }
    [[nodiscard]] const std::vector<ArmSet>& sets() const noexcept { return sets_; }

    /// Ties go to the lexicographically smallest set, which is the first one
    /// met because the list is kept sorted.
    [[nodiscard]] std::optional<ArmSet> oracle(std::span<const double> w, const ArmSet& required,
                                               const ArmSet& forbidden) const {
        const ArmSet* best = nullptr;
        double best_value = 0.0;
        for (const ArmSet& s : sets_) {
            if (!required.is_subset_of(s) || s.intersects(forbidden)) continue;
            const double v = set_reward(w, s);
            if (best == nullptr || v > best_value) {
                best = &s;
                best_value = v;
            }
        }
        if (best == nullptr) return std::nullopt;
        return *best;
    }

    [[nodiscard]] ArmSet elim(const ArmSet& accepted) const {
        ArmSet reachable;
        for (const ArmSet& s : sets_)
            if (accepted.is_subset_of(s)) reachable = reachable.union_with(s);
        return ArmSet::range(n_).minus(reachable).minus(accepted);
    }

    [[nodiscard]] std::size_t d_bound(const ArmSet& required) const {
        std::size_t d = 0;
        for (const ArmSet& s : sets_)
            if (required.is_subset_of(s)) d = std::max(d, s.size());
        return d;
    }

    [[nodiscard]] bool contains(const ArmSet& s) const {
        return std::binary_search(sets_.begin(), sets_.end(), s);
    }

private:
    std::vector<ArmSet> sets_;
    std::size_t n_;
};

static_assert(DecisionClass<ExplicitClass>);

/// The three-set instance on n = 2s + 1 arms: arms 0..s-2 have mean s*gamma,
/// arm s-1 has mean gamma, the rest 0. Valid sets are {0..s-1},
/// {0..s-2, s} and {s+1..n-1}, with rewards (s^2-s+1)gamma, (s^2-s)gamma, 0.
struct ThreeSetInstance {
    ExplicitClass decision_class;
    std::vector<double> means;
    std::size_t s;
};

inline ThreeSetInstance make_three_set_instance(std::size_t n = 11, double gamma = 0.05) {
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("three-set instance needs odd n >= 5");
    const std::size_t s = (n - 1) / 2;
    std::vector<double> means(n, 0.0);
    for (std::size_t a = 0; a + 1 < s; ++a) means[a] = static_cast<double>(s) * gamma;
    means[s - 1] = gamma;

    std::vector<ArmIndex> first, second, third;
    for (std::size_t a = 0; a < s; ++a) first.push_back(a);
    for (std::size_t a = 0; a + 1 < s; ++a) second.push_back(a);
    second.push_back(s);
    for (std::size_t a = s + 1; a < n; ++a) third.push_back(a);
    std::vector<ArmSet> sets{ArmSet(first), ArmSet(second), ArmSet(third)};
    return {ExplicitClass(std::move(sets), n), std::move(means), s};
}

}  // namespace csale
