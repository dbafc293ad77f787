// decision_class.hpp - the contract every combinatorial problem implements
#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>

#include "csale/arm_set.hpp"

namespace csale {

/// A family of valid arm sets over arms [0, arm_count()).
///
///  - oracle(w, required, forbidden): a set M of the family maximizing w(M)
///    with required ⊆ M and forbidden ∩ M = ∅, or nullopt when none exists.
///    Deterministic for equal inputs.
///  - elim(A): arms that lie in no valid superset of A; never intersects A.
///  - d_bound(A): upper bound on the cardinality of any valid superset of A,
///    non-increasing as A grows; 0 is allowed only if no superset exists.
///  - contains(S): membership test.
template <class C>
concept DecisionClass = requires(const C& c, std::span<const double> w, const ArmSet& s) {
    { c.arm_count() } -> std::convertible_to<std::size_t>;
    { c.d_bound(s) } -> std::convertible_to<std::size_t>;
    { c.oracle(w, s, s) } -> std::same_as<std::optional<ArmSet>>;
    { c.elim(s) } -> std::same_as<ArmSet>;
    { c.contains(s) } -> std::same_as<bool>;
};

/// Classes that know their elimination measure Q(n, k) without enumeration.
template <class C>
concept HasClosedFormMeasure = requires(const C& c, std::size_t k) {
    { c.closed_form_elimination_measure(k) } -> std::same_as<std::optional<std::size_t>>;
};

/// ceil(log2 d) + 1 for d >= 1.
constexpr std::size_t round_count(std::size_t d) noexcept {
    std::size_t ceil_log = 0;
    while ((std::size_t{1} << ceil_log) < d) ++ceil_log;
    return ceil_log + 1;
}

}  // namespace csale
