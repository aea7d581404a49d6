// Copyright 2026 The qemlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "qemlab/errors.hpp"
#include "qemlab/stats.hpp"

using namespace qemlab;

TEST(Rem, Definition) {
    EXPECT_DOUBLE_EQ(rem(1.0, 0.9, 0.5), 0.2);
    EXPECT_DOUBLE_EQ(rem(-0.5, -0.1, -0.3), 2.0);
    EXPECT_DOUBLE_EQ(rem(1.0, 1.0, 0.2), 0.0);
    EXPECT_THROW(rem(0.4, 0.1, 0.4), DegenerateStatistics);
}

TEST(OneSample, ClosedForm) {
    const TestReport t = one_sample_prop_test(5200, 10000, 0.5);
    EXPECT_NEAR(t.z, 4.0, 1e-12);
    EXPECT_TRUE(t.reject);
    EXPECT_NEAR(t.critical, 1.6448536269514722, 1e-12);
    const double half = 1.96 * std::sqrt(0.52 * 0.48 / 10000);
    EXPECT_NEAR(t.ci_low, 100 * (0.52 - half), 1e-10);
    EXPECT_NEAR(t.ci_high, 100 * (0.52 + half), 1e-10);
    EXPECT_FALSE(one_sample_prop_test(5050, 10000, 0.5).reject);
}

TEST(OneSample, SmallSamplesAreDegenerate) {
    EXPECT_THROW(one_sample_prop_test(20, 29, 0.5), DegenerateStatistics);
    EXPECT_NO_THROW(one_sample_prop_test(20, 30, 0.5));
    EXPECT_THROW(one_sample_prop_test(31, 30, 0.5), std::invalid_argument);
}

TEST(Interval, ClampedToPercentRange) {
    const auto [lo, hi] = prop_ci(1000, 1000);
    EXPECT_DOUBLE_EQ(lo, 100.0);
    EXPECT_DOUBLE_EQ(hi, 100.0);
    const auto [lo0, hi0] = prop_ci(0, 100);
    EXPECT_DOUBLE_EQ(lo0, 0.0);
    EXPECT_DOUBLE_EQ(hi0, 0.0);
    EXPECT_DOUBLE_EQ(two_sided_critical(0.95), 1.96);
    EXPECT_NEAR(two_sided_critical(0.99), 2.5758293035489, 1e-9);
}

TEST(TwoSample, ClosedForm) {
    auto z = [](double xa, double na, double xb, double nb) {
        const double pooled = (xa + xb) / (na + nb);
        return (xa / na - xb / nb) / std::sqrt(pooled * (1 - pooled) * (1 / na + 1 / nb));
    };
    const TestReport t = two_sample_prop_test(900, 1000, 800, 1000);
    EXPECT_NEAR(t.z, 6.262, 1e-3);
    EXPECT_NEAR(t.z, z(900, 1000, 800, 1000), 1e-12);
    EXPECT_NEAR(t.p0, 0.85, 1e-15);
    EXPECT_TRUE(t.reject);
    EXPECT_NEAR(two_sample_prop_test(9000, 10000, 8000, 10000).z, 19.80, 0.01);
    const double se = std::sqrt(0.9 * 0.1 / 1000 + 0.8 * 0.2 / 1000);
    EXPECT_NEAR(t.ci_low, 100 * (0.1 - 1.96 * se), 1e-10);
    EXPECT_NEAR(t.ci_high, 100 * (0.1 + 1.96 * se), 1e-10);
}

TEST(TwoSample, SelfComparisonAndDegenerate) {
    const TestReport t = two_sample_prop_test(700, 1000, 700, 1000);
    EXPECT_DOUBLE_EQ(t.z, 0.0);
    EXPECT_FALSE(t.reject);
    EXPECT_THROW(two_sample_prop_test(1000, 1000, 1000, 1000), DegenerateStatistics);
    EXPECT_LT(two_sample_prop_test(800, 1000, 900, 1000).z, 0);
}

TEST(TwoSample, PlainLanguageReading) {
    EXPECT_EQ(describe_difference(6, 10), "6% to 10% more successfully error-mitigated");
    EXPECT_EQ(describe_difference(-10, -6), "6% to 10% less successfully error-mitigated");
    EXPECT_EQ(describe_difference(-2, 3), "between 2% less and 3% more successfully error-mitigated");
}

TEST(Psr, LowerEndOfInterval) {
    EXPECT_NEAR(psr(9000, 10000), prop_ci(9000, 10000).first / 100, 1e-15);
    EXPECT_NEAR(psr(9000, 10000), 0.9 - 1.96 * std::sqrt(0.09 / 10000), 1e-12);
}

TEST(Algorithm1, IdenticalDistributionsAreAFairCoin) {
    std::vector<ExpectationTriple> triples;
    for (int k = 0; k < 10; ++k) {
        const MeanStd same{0.3 + 0.05 * k, 0.04 + 0.01 * k};
        triples.push_back({0.5 + 0.1 * k, same, same});
    }
    const RemPopulation pop = sample_rem_population(triples, 1000, 2024);
    EXPECT_EQ(pop.n(), 10000u);
    EXPECT_NEAR(pop.proportion(), 0.5, 0.02);
    EXPECT_FALSE(one_sample_prop_test(pop.successes, pop.n(), 0.5).reject);
}

TEST(Algorithm1, PerfectMitigationAlwaysSucceeds) {
    const std::vector<ExpectationTriple> triples{{1.0, {1.0, 0.0}, {0.6, 0.05}}, {0.5, {0.5, 0.0}, {0.2, 0.01}}};
    const RemPopulation pop = sample_rem_population(triples, 500, 1);
    EXPECT_EQ(pop.successes, 1000u);
    for (double r : pop.rem_values) EXPECT_DOUBLE_EQ(r, 0.0);
}

TEST(Algorithm1, TallyAgreesWithValues) {
    const std::vector<ExpectationTriple> triples{{1.0, {0.9, 0.1}, {0.7, 0.1}}, {-0.4, {-0.3, 0.2}, {-0.1, 0.05}}};
    const RemPopulation a = sample_rem_population(triples, 800, 77);
    const RemPopulation b = sample_rem_population(triples, 800, 77);
    EXPECT_EQ(a.rem_values, b.rem_values);
    std::uint64_t below = 0;
    for (double r : a.rem_values) {
        EXPECT_GE(r, 0.0);
        below += r < 1.0;
    }
    EXPECT_EQ(below, a.successes);
    EXPECT_EQ(a.n(), 1600u);
}

TEST(Median, OddEvenAndBootstrapBound) {
    EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2.0);
    EXPECT_DOUBLE_EQ(median({4, 1, 3, 2}), 2.5);
    std::vector<double> xs;
    for (int i = 0; i < 999; ++i) xs.push_back(std::fmod(i * 0.6180339887, 1.0));
    const double m = median(xs);
    const double up = median_rem_upper(xs, 2000, 3);
    EXPECT_GE(up, m);
    EXPECT_LT(up - m, 0.1);
    EXPECT_EQ(up, median_rem_upper(xs, 2000, 3));
    const std::vector<double> flat(100, 0.25);
    EXPECT_DOUBLE_EQ(median_rem_upper(flat, 200, 1), 0.25);
}

TEST(Power, SizeAtNullAndMonotoneInN) {
    EXPECT_NEAR(power_one_sample(0.5, 0.5, 10000), 0.05, 1e-9);
    EXPECT_LT(power_one_sample(0.52, 0.5, 1000), power_one_sample(0.52, 0.5, 10000));
    EXPECT_GT(power_one_sample(0.52, 0.5, 10000), 0.97);
}
