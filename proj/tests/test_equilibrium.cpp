#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "overload/equilibrium.hpp"

using namespace overload;

namespace {

const double kRoot145 = 13.0 - std::sqrt(145.0);
const double kRoot577 = (25.0 - std::sqrt(577.0)) / 2.0;

EconomyParams economy(int n) { return {n, 1.0, 24.0}; }

}  // namespace

TEST(NashSymmetric, ZeroAwarenessIsNaive) {
  for (int n : {1, 2, 5}) {
    const auto r = nash_symmetric(0.0, {}, {2.0}, economy(n));
    EXPECT_NEAR(r.result.consumption, 12.0, 1e-9);
    EXPECT_TRUE(r.report.converged);
  }
}

TEST(NashSymmetric, LinearPollutionClosedFormInOneStep) {
  const auto r = nash_symmetric(1.0, {1.0, 1.0, 1.0, 0.0}, {1.0}, economy(2));
  EXPECT_NEAR(r.result.consumption, kRoot145, 1e-9);
  EXPECT_LE(r.report.iterations, 1);
  EXPECT_TRUE(r.report.converged);
}

TEST(NashSymmetric, ConvexPollutionMatchesBruteForceIteration) {
  const auto r = nash_symmetric(1.0, {1.0, 1.0, 0.01, 0.0}, {2.0}, economy(2));
  oracle::ChoiceOracle o;
  o.delta = 0.01;
  o.gamma = 2.0;
  EXPECT_NEAR(r.result.consumption, o.nash(1.0, 2, 1e-5), 1e-4);
}

TEST(NashSymmetric, IsFixedPointOfBestResponse) {
  auto gen = oracle::rng(21);
  for (int k = 0; k < 15; ++k) {
    const Preferences p{1.0, 1.0, oracle::uniform(gen, 0.01, 1.0), 0.0};
    const PollutionTech tech{oracle::uniform(gen, 1.0, 2.5)};
    const int n = 2 + static_cast<int>(gen() % 4);
    const double a = oracle::uniform(gen, 0.05, 1.0);
    const auto r = nash_symmetric(a, p, tech, economy(n));
    ASSERT_TRUE(r.report.converged) << "draw " << k;
    const double again = best_response(a, (n - 1) * r.result.consumption, p, tech, economy(n)).result.consumption;
    EXPECT_NEAR(again, r.result.consumption, 1e-8) << "draw " << k;
  }
}

TEST(NashSymmetric, StrongInteractionStillConverges) {
  // Large n * a * delta makes the plain 0.5-damped iteration oscillate.
  const auto r = nash_symmetric(1.0, {1.0, 1.0, 1.0, 0.0}, {2.0}, economy(5));
  EXPECT_TRUE(r.report.converged);
  const double again = best_response(1.0, 4 * r.result.consumption, {1.0, 1.0, 1.0, 0.0}, {2.0}, economy(5))
                           .result.consumption;
  EXPECT_NEAR(again, r.result.consumption, 1e-8);
}

TEST(EfficientSymmetric, SingleAgentEqualsNash) {
  for (double a : {0.2, 0.7, 1.0}) {
    const auto e = efficient_symmetric(a, {1.0, 1.0, 0.3, 0.0}, {2.0}, economy(1));
    const auto n = nash_symmetric(a, {1.0, 1.0, 0.3, 0.0}, {2.0}, economy(1));
    EXPECT_NEAR(e.result.consumption, n.result.consumption, 1e-9);
  }
}

TEST(EfficientSymmetric, LinearPollutionClosedForm) {
  const auto r = efficient_symmetric(1.0, {1.0, 1.0, 1.0, 0.0}, {1.0}, economy(2));
  EXPECT_NEAR(r.result.consumption, kRoot577, 1e-9);
  EXPECT_NEAR(r.result.consumption, 0.48958785053568654, 1e-9);
}

TEST(EfficientSymmetric, ConvexPollutionMatchesGridOracle) {
  const auto r = efficient_symmetric(1.0, {1.0, 1.0, 0.01, 0.0}, {2.0}, economy(2));
  oracle::ChoiceOracle o;
  o.delta = 0.01;
  o.gamma = 2.0;
  EXPECT_NEAR(r.result.consumption, o.efficient(1.0, 2, 1e-6), 1e-4);
}

TEST(EfficientSymmetric, SamuelsonResidual) {
  const Preferences p{1.0, 1.0, 0.05, 0.0};
  const auto r = efficient_symmetric(0.8, p, {1.5}, economy(3));
  auto planner = [&](double l) {
    const double c = 24.0 - l;
    return std::log(c) + std::log(l) - 0.8 * 0.05 * pollution(3.0 * c, {1.5});
  };
  EXPECT_LE(std::abs(fd_derivative(planner, r.result.leisure)), 1e-6);
}

TEST(Figure1, OrderingExample) {
  const auto f = figure1(0.5, {1.0, 1.0, 0.2, 0.0}, {1.0}, economy(2));
  EXPECT_NEAR(f.naive.consumption, 12.0, 1e-12);
  EXPECT_GT(f.naive.consumption, f.nash.consumption);
  EXPECT_GT(f.nash.consumption, f.efficient.consumption);
  EXPECT_GT(f.efficient.consumption, 0.0);
  EXPECT_TRUE(f.ordering_ok);
  EXPECT_GE(f.pollution_gap, 0.0);
  EXPECT_TRUE(f.converged);
}

TEST(Figure1, ZeroAwarenessCollapses) {
  const auto f = figure1(0.0, {1.0, 1.0, 0.5, 0.0}, {2.0}, economy(3));
  EXPECT_NEAR(f.nash.consumption, 12.0, 1e-9);
  EXPECT_NEAR(f.efficient.consumption, 12.0, 1e-9);
  EXPECT_NEAR(f.pollution_gap, 0.0, 1e-6);
}

TEST(Figure1, SingleAgentNashEqualsEfficient) {
  const auto f = figure1(0.7, {1.0, 1.0, 0.2, 0.0}, {1.0}, economy(1));
  EXPECT_NEAR(f.nash.consumption, f.efficient.consumption, 1e-9);
  EXPECT_GT(f.naive.consumption, f.nash.consumption);
}

TEST(Figure1, OrderingOnRandomDraws) {
  auto gen = oracle::rng(31);
  for (int k = 0; k < 30; ++k) {
    const double a = oracle::uniform(gen, 0.01, 1.0);
    const Preferences p{1.0, 1.0, oracle::uniform(gen, 0.01, 1.0), 0.0};
    const PollutionTech tech{(gen() % 2) ? 2.0 : 1.0};
    const int n = 2 + static_cast<int>(gen() % 4);
    const auto f = figure1(a, p, tech, economy(n));
    EXPECT_GT(f.naive.consumption - f.nash.consumption, 1e-6) << "draw " << k;
    EXPECT_GT(f.nash.consumption - f.efficient.consumption, 1e-6) << "draw " << k;
    EXPECT_GE(f.pollution_gap, 0.0) << "draw " << k;
  }
}

TEST(WelfareGap, FullAwarenessHasNoGap) {
  EXPECT_EQ(welfare_gap(1.0, {1.0, 1.0, 0.3, 0.0}, {2.0}, economy(3)), 0.0);
}

TEST(WelfareGap, SingleAgentNoAwarenessClosedForm) {
  const Preferences p{1.0, 1.0, 0.5, 0.0};
  const double gap = welfare_gap(0.0, p, {1.0}, economy(1));
  // aware optimum solves 1/C - 1/(24 - C) - 1/2 = 0, i.e. C^2 - 28 C + 48 = 0
  const double c_aware = 14.0 - std::sqrt(148.0);
  const double direct =
      (std::log(c_aware) + std::log(24.0 - c_aware) - 0.5 * c_aware) - (2.0 * std::log(12.0) - 0.5 * 12.0);
  EXPECT_GT(gap, 0.0);
  EXPECT_NEAR(gap, direct, 1e-9);
}

TEST(WelfareGap, NonNegativeAndNonIncreasing) {
  for (double gamma : {1.0, 2.0}) {
    double prev = INFINITY;
    for (int i = 0; i <= 10; ++i) {
      const double gap = welfare_gap(i / 10.0, {1.0, 1.0, 0.2, 0.0}, {gamma}, economy(3));
      EXPECT_GE(gap, 0.0);
      EXPECT_LE(gap, prev);
      prev = gap;
    }
  }
  EXPECT_GE(welfare_gap(0.25, {}, {1.0}, economy(2)), welfare_gap(0.75, {}, {1.0}, economy(2)));
}
