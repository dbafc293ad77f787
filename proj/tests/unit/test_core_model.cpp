#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "csale/arm_set.hpp"
#include "csale/core_model.hpp"

using namespace csale;

TEST(Hoeffding, KnownValues) {
    EXPECT_EQ(hoeffding_n(0.5, 0.1), 6u);
    EXPECT_EQ(hoeffding_n(0.125, 0.05 / 16), 207u);
    EXPECT_EQ(hoeffding_n(0.25, 0.05 / (3 * 16)), 61u);
    // K6 matching naive per-arm count: eps/(4d) = 2/12, delta/n = 0.05/15.
    EXPECT_EQ(hoeffding_n(2.0 / 12.0, 0.05 / 15), 116u);
}

TEST(Hoeffding, UsesNaturalLog) {
    for (double eps : {0.01, 0.1, 0.3, 0.9})
        for (double delta : {1e-6, 0.01, 0.05, 0.5}) {
            const double raw = std::log(2.0 / delta) / (2.0 * eps * eps);
            const auto n = hoeffding_n(eps, delta);
            EXPECT_GE(static_cast<double>(n), raw);
            EXPECT_LT(static_cast<double>(n) - 1.0, raw);
        }
}

TEST(Hoeffding, RejectsBadArguments) {
    EXPECT_THROW((void)hoeffding_n(0.0, 0.1), std::domain_error);
    EXPECT_THROW((void)hoeffding_n(-1.0, 0.1), std::domain_error);
    EXPECT_THROW((void)hoeffding_n(std::numeric_limits<double>::quiet_NaN(), 0.1), std::domain_error);
    EXPECT_THROW((void)hoeffding_n(0.1, 0.0), std::domain_error);
    EXPECT_THROW((void)hoeffding_n(0.1, 1.0), std::domain_error);
    EXPECT_THROW((void)hoeffding_n(0.1, -0.2), std::domain_error);
}

TEST(Hoeffding, MonotoneAndQuadraticInAccuracy) {
    const std::vector<double> epss{0.02, 0.05, 0.1, 0.2, 0.4, 0.8, 1.6};
    const std::vector<double> deltas{1e-5, 1e-3, 0.01, 0.05, 0.2, 0.6};
    for (std::size_t i = 0; i < epss.size(); ++i)
        for (std::size_t j = 0; j < deltas.size(); ++j) {
            const auto n = hoeffding_n(epss[i], deltas[j]);
            if (i + 1 < epss.size()) {
                EXPECT_GE(n, hoeffding_n(epss[i + 1], deltas[j]));
            }
            if (j + 1 < deltas.size()) {
                EXPECT_GE(n, hoeffding_n(epss[i], deltas[j + 1]));
            }
            EXPECT_GE(hoeffding_n(epss[i] / 2, deltas[j]) + 4, 4 * n);
        }
}

TEST(RewardModel, Validation) {
    EXPECT_THROW(RewardModel::bernoulli({}), std::invalid_argument);
    EXPECT_THROW(RewardModel::bernoulli({0.5, 1.1}), std::invalid_argument);
    EXPECT_THROW(RewardModel::bernoulli({-0.1}), std::invalid_argument);
    EXPECT_THROW(RewardModel::bernoulli({std::numeric_limits<double>::quiet_NaN()}), std::invalid_argument);
    const auto m = RewardModel::bernoulli({0.0, 0.3, 1.0});
    EXPECT_EQ(m.arm_count(), 3u);
    EXPECT_EQ(m.sense(), Sense::Maximize);
    EXPECT_DOUBLE_EQ(m.mean(1), 0.3);
}

TEST(Canonicalize, MaximizeIsIdentity) {
    const auto m = RewardModel::bernoulli({0.1, 0.9});
    EXPECT_EQ(canonicalize(m), m);
}

TEST(Canonicalize, MinimizeNegates) {
    const auto m = RewardModel::bernoulli({0.1, 0.9}, Sense::Minimize);
    const auto c = canonicalize(m);
    EXPECT_EQ(c.sense(), Sense::Maximize);
    EXPECT_EQ(c.means(), (std::vector<double>{-0.1, -0.9}));
}

TEST(Canonicalize, InvolutionUpToSense) {
    const auto m = RewardModel::bernoulli({0.2, 0.0, 0.7, 1.0}, Sense::Minimize);
    const auto twice = canonicalize(RewardModel(canonicalize(m).means(), Sense::Minimize));
    EXPECT_EQ(twice.means(), m.means());
}

TEST(Canonicalize, ArgmaxOfNegatedIsArgminOverExplicitFamilies) {
    const std::vector<ArmSet> family{{0}, {1, 2}, {0, 2, 3}, {3}, {1, 3}};
    const std::vector<double> costs{0.4, 0.1, 0.15, 0.3};
    const auto c = canonicalize(RewardModel::bernoulli(costs, Sense::Minimize));
    std::size_t argmin = 0, argmax = 0;
    for (std::size_t i = 1; i < family.size(); ++i) {
        if (set_reward(costs, family[i]) < set_reward(costs, family[argmin])) argmin = i;
        if (set_reward(c.means(), family[i]) > set_reward(c.means(), family[argmax])) argmax = i;
    }
    EXPECT_EQ(argmin, argmax);
    EXPECT_EQ(family[argmin], (ArmSet{1, 2}));
}

TEST(SetReward, Examples) {
    const std::vector<double> v{0.3, 0.4, 0.9};
    EXPECT_EQ(set_reward(v, ArmSet{}), 0.0);
    EXPECT_DOUBLE_EQ(set_reward(v, ArmSet{0, 1}), 0.7);
}

TEST(Pull, DegenerateMeans) {
    const auto m = RewardModel::bernoulli({1.0, 0.0});
    EmpiricalState s(2, 99);
    s.pull(m, 0, 5);
    s.pull(m, 1, 5);
    EXPECT_EQ(s.sum(0), 5);
    EXPECT_EQ(s.sum(1), 0);
    EXPECT_EQ(s.count(0), 5u);
    EXPECT_EQ(s.count(1), 5u);
}

TEST(Pull, FairCoinConcentrates) {
    const auto m = RewardModel::bernoulli({0.5});
    EmpiricalState s(1, 12345);
    s.pull(m, 0, 1'000'000);
    EXPECT_NEAR(s.mean(0), 0.5, 0.005);
}

TEST(Pull, NegatedMeansDrawNegativeSamples) {
    const auto m = canonicalize(RewardModel::bernoulli({0.3, 1.0}, Sense::Minimize));
    EmpiricalState s(2, 5);
    s.pull(m, 0, 200'000);
    s.pull(m, 1, 10);
    EXPECT_NEAR(s.mean(0), -0.3, 0.01);
    EXPECT_EQ(s.sum(1), -10);
    EXPECT_LE(s.sum(0), 0);
}

TEST(Pull, OnlyTouchesTheArm) {
    const auto m = RewardModel::bernoulli({0.5, 0.5, 0.5});
    EmpiricalState s(3, 1);
    s.pull(m, 1, 40);
    EXPECT_EQ(s.count(0), 0u);
    EXPECT_EQ(s.count(2), 0u);
    EXPECT_EQ(s.count(1), 40u);
    EXPECT_LE(s.sum(1), 40);
    EXPECT_EQ(s.total_pulls(), 40u);
    EXPECT_THROW((void)s.mean(0), std::logic_error);
    EXPECT_EQ(s.estimates()[0], 0.0);
    EXPECT_THROW(s.pull(m, 3, 1), std::out_of_range);
}

TEST(Pull, DeterministicAndOrderIndependent) {
    const auto m = RewardModel::bernoulli({0.3, 0.6, 0.5});
    EmpiricalState a(3, 777), b(3, 777), c(3, 777);
    a.pull(m, 0, 100);
    a.pull(m, 1, 50);
    a.pull(m, 2, 70);
    b.pull(m, 2, 70);
    b.pull(m, 1, 50);
    b.pull(m, 0, 100);
    // Split batches read the same counters as one big batch.
    c.pull(m, 0, 30);
    c.pull(m, 1, 50);
    c.pull(m, 0, 70);
    c.pull(m, 2, 1);
    c.pull(m, 2, 69);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);

    EmpiricalState other(3, 778);
    other.pull(m, 0, 100);
    other.pull(m, 1, 50);
    other.pull(m, 2, 70);
    EXPECT_NE(a, other);
}

TEST(Pull, CoverageBound) {
    // Over 1000 trials, hoeffding_n(eps, delta) pulls land within eps of p in
    // at least a (1 - delta) fraction, less three binomial deviations.
    const double eps = 0.1, delta = 0.1, p = 0.3;
    const auto n = hoeffding_n(eps, delta);
    const auto m = RewardModel::bernoulli({p});
    const int trials = 1000;
    int covered = 0;
    for (int t = 0; t < trials; ++t) {
        EmpiricalState s(1, CounterStream::derive(2024, static_cast<std::uint64_t>(t)));
        s.pull(m, 0, n);
        covered += std::fabs(s.mean(0) - p) <= eps ? 1 : 0;
    }
    const double floor = (1.0 - delta) - 3.0 * std::sqrt(delta * (1.0 - delta) / trials);
    EXPECT_GE(static_cast<double>(covered) / trials, floor);
}

TEST(CounterStream, RandomAccessAndDistinctKeys) {
    const CounterStream s(42);
    EXPECT_EQ(s(10), CounterStream(42)(10));
    EXPECT_NE(s(10), s(11));
    EXPECT_NE(CounterStream::derive(1, 0), CounterStream::derive(1, 1));
    EXPECT_NE(CounterStream::derive(1, 0), CounterStream::derive(2, 0));
}
