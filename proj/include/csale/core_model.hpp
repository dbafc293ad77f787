// core_model.hpp - reward models, simulated arm pulls and Hoeffding sample counts
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "csale/arm_set.hpp"

namespace csale {

/// Number of samples of a [0,1]-bounded variable after which the empirical
/// mean is within `eps_tilde` of the expectation with probability at least
/// 1 - `delta_tilde`: ceil(ln(2/delta) / (2 eps^2)).
inline std::uint64_t hoeffding_n(double eps_tilde, double delta_tilde) {
    if (!(eps_tilde > 0.0) || !std::isfinite(eps_tilde))
        throw std::domain_error("hoeffding_n: eps must be positive and finite");
    if (!(delta_tilde > 0.0 && delta_tilde < 1.0))
        throw std::domain_error("hoeffding_n: delta must lie in (0,1)");
    const double n = std::log(2.0 / delta_tilde) / (2.0 * eps_tilde * eps_tilde);
    if (n >= static_cast<double>(std::numeric_limits<std::uint64_t>::max()))
        throw std::domain_error("hoeffding_n: sample count overflows");
    return static_cast<std::uint64_t>(std::ceil(n));
}

enum class Sense { Maximize, Minimize };

/// True per-arm means of Bernoulli arms plus the objective sense.
///
/// A mean m >= 0 denotes an arm whose samples are Bernoulli(m). A mean m < 0
/// only arises after `canonicalize` and denotes the negated arm -Bernoulli(-m),
/// whose support [-1, 0] still has width 1.
class RewardModel {
public:
    RewardModel(std::vector<double> means, Sense sense) : means_(std::move(means)), sense_(sense) {
        if (means_.empty()) throw std::invalid_argument("RewardModel: at least one arm required");
        for (double m : means_)
            if (!(m >= -1.0 && m <= 1.0))
                throw std::invalid_argument("RewardModel: mean outside [-1,1]: " + std::to_string(m));
    }

    /// Model over plain Bernoulli arms; means must lie in [0,1].
    static RewardModel bernoulli(std::vector<double> means, Sense sense = Sense::Maximize) {
        for (double m : means)
            if (!(m >= 0.0 && m <= 1.0))
                throw std::invalid_argument("RewardModel: Bernoulli mean outside [0,1]: " +
                                            std::to_string(m));
        return RewardModel(std::move(means), sense);
    }

    [[nodiscard]] std::size_t arm_count() const noexcept { return means_.size(); }
    [[nodiscard]] const std::vector<double>& means() const noexcept { return means_; }
    [[nodiscard]] double mean(ArmIndex a) const { return means_.at(a); }
    [[nodiscard]] Sense sense() const noexcept { return sense_; }

    friend bool operator==(const RewardModel&, const RewardModel&) = default;

private:
    std::vector<double> means_;
    Sense sense_;
};

/// Rewrites a model as a maximization problem. Minimize models are negated,
/// so argmax over the result equals argmin over the original for any family
/// of arm sets.
inline RewardModel canonicalize(const RewardModel& model) {
    if (model.sense() == Sense::Maximize) return model;
    std::vector<double> neg(model.means());
    for (double& m : neg) m = -m;
    return RewardModel(std::move(neg), Sense::Maximize);
}

/// Random-access SplitMix64 stream: draw i of a stream depends only on
/// (key, i), so the samples an arm sees do not depend on pull order or batching.
class CounterStream {
public:
    explicit constexpr CounterStream(std::uint64_t key) noexcept : key_(key) {}

    [[nodiscard]] constexpr std::uint64_t operator()(std::uint64_t counter) const noexcept {
        return mix(key_ + (counter + 1) * 0x9E3779B97F4A7C15ULL);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Independent key for sub-stream `index` of `seed`.
    static constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t index) noexcept {
        return mix(mix(seed ^ 0x6A09E667F3BCC909ULL) + mix(index + 0x3C6EF372FE94F82BULL));
    }

private:
    std::uint64_t key_;
};

/// Per-arm pull counts and sample sums. Bernoulli samples are integers, so
/// sums are kept exact as signed counts of +1 / -1 outcomes.
class EmpiricalState {
public:
    EmpiricalState(std::size_t n, std::uint64_t rng_seed)
        : counts_(n, 0), sums_(n, 0), rng_seed_(rng_seed) {}

    /// Draws `k` fresh samples of `arm` from its deterministic stream.
    void pull(const RewardModel& model, ArmIndex arm, std::uint64_t k) {
        if (arm >= counts_.size() || model.arm_count() != counts_.size())
            throw std::out_of_range("EmpiricalState::pull: arm index out of range");
        if (k == 0) return;
        const double m = model.mean(arm);
        const double p = std::fabs(m);
        const CounterStream stream(CounterStream::derive(rng_seed_, arm));
        const std::uint64_t start = counts_[arm];
        std::uint64_t ones = 0;
        const double scaled = std::ldexp(p, 64);
        if (scaled >= 0x1p64) {
            ones = k;
        } else if (p > 0.0) {
            const auto threshold = static_cast<std::uint64_t>(scaled);
            for (std::uint64_t i = 0; i < k; ++i) ones += stream(start + i) < threshold;
        }
        counts_[arm] += k;
        sums_[arm] += (m < 0.0 ? -1 : 1) * static_cast<std::int64_t>(ones);
    }

    [[nodiscard]] std::size_t arm_count() const noexcept { return counts_.size(); }
    [[nodiscard]] std::uint64_t count(ArmIndex a) const { return counts_.at(a); }
    [[nodiscard]] std::int64_t sum(ArmIndex a) const { return sums_.at(a); }
    [[nodiscard]] std::uint64_t rng_seed() const noexcept { return rng_seed_; }

    /// Empirical mean; throws when the arm was never pulled.
    [[nodiscard]] double mean(ArmIndex a) const {
        if (counts_.at(a) == 0) throw std::logic_error("EmpiricalState::mean: arm never pulled");
        return static_cast<double>(sums_[a]) / static_cast<double>(counts_[a]);
    }

    /// Empirical means with unpulled arms reported as 0.
    [[nodiscard]] std::vector<double> estimates() const {
        std::vector<double> v(counts_.size(), 0.0);
        for (std::size_t a = 0; a < v.size(); ++a)
            if (counts_[a] > 0) v[a] = static_cast<double>(sums_[a]) / static_cast<double>(counts_[a]);
        return v;
    }

    [[nodiscard]] std::uint64_t total_pulls() const noexcept {
        std::uint64_t total = 0;
        for (auto c : counts_) total += c;
        return total;
    }

    friend bool operator==(const EmpiricalState&, const EmpiricalState&) = default;

private:
    std::vector<std::uint64_t> counts_;
    std::vector<std::int64_t> sums_;
    std::uint64_t rng_seed_;
};

}  // namespace csale
