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

#ifndef QEMLAB_STATS_HPP
#define QEMLAB_STATS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qemlab {

/// Relative error mitigation |ideal - mitigated| / |ideal - noisy|.
/// Throws DegenerateStatistics when the noisy value equals the ideal one.
double rem(double ideal, double mitigated, double noisy);

struct MeanStd {
    double mu = 0.0;
    double sigma = 0.0;
};

struct ExpectationTriple {
    double ideal = 0.0;
    MeanStd mitigated;  ///< lambda = 0
    MeanStd noisy;      ///< lambda = 1
};

/// Binarized REM draws: SUCCESS when REM < 1, FAIL when REM >= 1.
struct RemPopulation {
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
    std::vector<double> rem_values;

    std::uint64_t n() const { return successes + failures; }
    double proportion() const;
};

/// Draws `per_param` Gaussian samples of the mitigated and noisy expectations
/// for each triple, forms REM values, and tallies successes over all triples.
RemPopulation sample_rem_population(std::span<const ExpectationTriple> triples, int per_param, std::uint64_t seed);

inline constexpr double kDefaultAlpha = 0.05;
inline constexpr double kDefaultLevel = 0.95;
/// Smallest sample for which the normal approximation is used.
inline constexpr std::uint64_t kMinNormalSample = 30;

struct TestReport {
    double z = 0.0;
    double p_hat = 0.0;
    double p_hat_b = 0.0;  ///< two-sample only
    double p0 = 0.0;       ///< one-sample null proportion, or the pooled p* for two-sample
    double alpha = kDefaultAlpha;
    double critical = 0.0;
    bool reject = false;
    double ci_low = 0.0;  ///< percent
    double ci_high = 0.0; ///< percent
    std::uint64_t x = 0, n = 0, x_b = 0, n_b = 0;
};

double normal_cdf(double z);
/// Upper-tail critical value z with P(Z > z) = alpha.
double one_sided_critical(double alpha);
/// z* for a two-sided interval at `level`; 1.96 at 95%.
double two_sided_critical(double level);

/// H0: p = p0 vs HA: p > p0. Rejects when z exceeds the one-sided critical value.
TestReport one_sample_prop_test(std::uint64_t x, std::uint64_t n, double p0, double alpha = kDefaultAlpha);

/// 100 (p_hat +/- z* sqrt(p_hat (1 - p_hat) / n)), clamped to [0, 100].
std::pair<double, double> prop_ci(std::uint64_t x, std::uint64_t n, double level = kDefaultLevel);

/// H0: pA = pB vs HA: pA > pB with the pooled standard error.
TestReport two_sample_prop_test(std::uint64_t xa, std::uint64_t na, std::uint64_t xb, std::uint64_t nb,
                                double alpha = kDefaultAlpha);

/// 100 ((pA - pB) +/- z* SE) with the unpooled SE.
std::pair<double, double> two_sample_ci(std::uint64_t xa, std::uint64_t na, std::uint64_t xb, std::uint64_t nb,
                                        double level = kDefaultLevel);

/// Plain-language reading of a two-sample interval, e.g.
/// "6% to 10% more successfully error-mitigated".
std::string describe_difference(double ci_low, double ci_high);

/// Pipeline success rate: lower end of the 95% interval of the success proportion, as a fraction.
double psr(std::uint64_t x, std::uint64_t n);

/// Upper end of the 95% percentile-bootstrap interval of the median, never
/// below the sample median.
double median_rem_upper(std::span<const double> rem_values, int n_boot, std::uint64_t seed);

double median(std::vector<double> xs);

/// Normal-approximation power of the one-sided one-sample test.
double power_one_sample(double p_true, double p0, std::uint64_t n, double alpha = kDefaultAlpha);

}  // namespace qemlab

#endif  // QEMLAB_STATS_HPP
