// run_report.hpp - configuration and per-run records shared by the algorithms
#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "csale/arm_set.hpp"

namespace csale {

struct CsaleConfig {
    double epsilon = 0.1;
    double delta = 0.05;

    void validate() const {
        if (!(epsilon > 0.0)) throw std::invalid_argument("config: epsilon must be positive");
        if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("config: delta must lie in (0,1)");
    }
};

struct ArmEvent {
    ArmIndex arm;
    std::size_t round;
    friend bool operator==(const ArmEvent&, const ArmEvent&) = default;
};

/// One sampling batch. Every arm active at the top of the batch received
/// `pulls_per_arm` new samples, bringing it to `target_pulls` in total.
struct RoundRecord {
    std::size_t t = 0;
    double eps_t = 0.0;        // round accuracy; eps_last for the final batch
    double delta_split = 0.0;  // delta / (T * active_count)
    std::uint64_t target_pulls = 0;
    std::uint64_t pulls_per_arm = 0;
    std::size_t active_count = 0;
    bool final_batch = false;
    friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct RunReport {
    ArmSet output;
    std::uint64_t total_samples = 0;
    std::uint64_t oracle_calls = 0;
    std::vector<ArmEvent> accepted_early;
    std::vector<ArmEvent> eliminated;
    std::chrono::nanoseconds wall_time{0};
    std::vector<RoundRecord> per_round;
    std::size_t d = 0;             // d_bound of the unrestricted class
    std::size_t round_limit = 0;   // T = ceil(log2 d) + 1
    bool returned_early = false;   // accepted set was itself valid

    /// Share of the output's arms that were accepted before the final batch.
    [[nodiscard]] double accepted_early_fraction() const {
        if (output.empty()) return 0.0;
        std::size_t hits = 0;
        for (const ArmEvent& ev : accepted_early) hits += output.contains(ev.arm) ? 1 : 0;
        return static_cast<double>(hits) / static_cast<double>(output.size());
    }

    [[nodiscard]] ArmSet accepted_set() const {
        std::vector<ArmIndex> v;
        for (const ArmEvent& ev : accepted_early) v.push_back(ev.arm);
        return ArmSet(std::move(v));
    }
};

/// Restarts a steady clock on construction and writes the elapsed time to a
/// report when `stop` is called.
class RunTimer {
public:
    RunTimer() : start_(std::chrono::steady_clock::now()) {}
    void stop(RunReport& r) const {
        r.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - start_);
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace csale
