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

#include "qemlab/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "qemlab/errors.hpp"

namespace qemlab {

namespace {

void check_counts(std::uint64_t x, std::uint64_t n) {
    if (x > n) throw std::invalid_argument("successes exceed the sample size");
    if (n < kMinNormalSample) {
        throw DegenerateStatistics("sample size " + std::to_string(n) + " is below the normal-approximation floor of " +
                                   std::to_string(kMinNormalSample));
    }
}

double draw(double mu, double sigma, std::mt19937_64& rng, std::normal_distribution<double>& unit) {
    return sigma > 0 ? mu + sigma * unit(rng) : mu;
}

// Linear interpolation between order statistics (numpy's default percentile).
double percentile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::string percent(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g%%", v);
    return buf;
}

}  // namespace

double rem(double ideal, double mitigated, double noisy) {
    const double denom = std::abs(ideal - noisy);
    if (!(denom > 0)) throw DegenerateStatistics("degenerate noisy baseline: noisy value equals the ideal value");
    return std::abs(ideal - mitigated) / denom;
}

double RemPopulation::proportion() const {
    if (n() == 0) throw std::invalid_argument("empty REM population");
    return static_cast<double>(successes) / static_cast<double>(n());
}

RemPopulation sample_rem_population(std::span<const ExpectationTriple> triples, int per_param, std::uint64_t seed) {
    if (triples.empty()) throw std::invalid_argument("no expectation triples");
    if (per_param < 1) throw std::invalid_argument("per_param must be at least 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> unit(0.0, 1.0);
    RemPopulation pop;
    pop.rem_values.reserve(triples.size() * static_cast<std::size_t>(per_param));
    std::vector<double> mitigated(static_cast<std::size_t>(per_param)), noisy(mitigated.size());
    for (const ExpectationTriple& t : triples) {
        if (t.mitigated.sigma < 0 || t.noisy.sigma < 0) throw std::invalid_argument("negative standard deviation");
        for (double& v : mitigated) v = draw(t.mitigated.mu, t.mitigated.sigma, rng, unit);
        for (double& v : noisy) v = draw(t.noisy.mu, t.noisy.sigma, rng, unit);
        for (std::size_t j = 0; j < mitigated.size(); ++j) {
            if (noisy[j] == t.ideal) noisy[j] = draw(t.noisy.mu, t.noisy.sigma, rng, unit);
            const double r = rem(t.ideal, mitigated[j], noisy[j]);
            pop.rem_values.push_back(r);
            if (r < 1.0) {
                ++pop.successes;
            } else {
                ++pop.failures;
            }
        }
    }
    return pop;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double one_sided_critical(double alpha) {
    if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("alpha must lie in (0, 1)");
    return boost::math::quantile(boost::math::complement(boost::math::normal(), alpha));
}

double two_sided_critical(double level) {
    if (!(level > 0 && level < 1)) throw std::invalid_argument("confidence level must lie in (0, 1)");
    if (level == 0.95) return 1.96;
    return boost::math::quantile(boost::math::complement(boost::math::normal(), (1 - level) / 2));
}

TestReport one_sample_prop_test(std::uint64_t x, std::uint64_t n, double p0, double alpha) {
    check_counts(x, n);
    if (!(p0 > 0 && p0 < 1)) throw std::invalid_argument("p0 must lie in (0, 1)");
    TestReport r;
    r.x = x;
    r.n = n;
    r.p0 = p0;
    r.alpha = alpha;
    r.p_hat = static_cast<double>(x) / static_cast<double>(n);
    r.z = (r.p_hat - p0) / std::sqrt(p0 * (1 - p0) / static_cast<double>(n));
    r.critical = one_sided_critical(alpha);
    r.reject = r.z > r.critical;
    std::tie(r.ci_low, r.ci_high) = prop_ci(x, n);
    return r;
}

std::pair<double, double> prop_ci(std::uint64_t x, std::uint64_t n, double level) {
    check_counts(x, n);
    const double p = static_cast<double>(x) / static_cast<double>(n);
    const double half = two_sided_critical(level) * std::sqrt(p * (1 - p) / static_cast<double>(n));
    return {std::clamp(100 * (p - half), 0.0, 100.0), std::clamp(100 * (p + half), 0.0, 100.0)};
}

TestReport two_sample_prop_test(std::uint64_t xa, std::uint64_t na, std::uint64_t xb, std::uint64_t nb,
                                double alpha) {
    check_counts(xa, na);
    check_counts(xb, nb);
    TestReport r;
    r.x = xa;
    r.n = na;
    r.x_b = xb;
    r.n_b = nb;
    r.alpha = alpha;
    r.p_hat = static_cast<double>(xa) / static_cast<double>(na);
    r.p_hat_b = static_cast<double>(xb) / static_cast<double>(nb);
    const double pooled = static_cast<double>(xa + xb) / static_cast<double>(na + nb);
    r.p0 = pooled;
    if (pooled <= 0.0 || pooled >= 1.0) {
        throw DegenerateStatistics("pooled proportion is 0 or 1; the two-sample statistic has zero variance");
    }
    const double se = std::sqrt(pooled * (1 - pooled) * (1.0 / static_cast<double>(na) + 1.0 / static_cast<double>(nb)));
    r.z = (r.p_hat - r.p_hat_b) / se;
    r.critical = one_sided_critical(alpha);
    r.reject = r.z > r.critical;
    std::tie(r.ci_low, r.ci_high) = two_sample_ci(xa, na, xb, nb);
    return r;
}

std::pair<double, double> two_sample_ci(std::uint64_t xa, std::uint64_t na, std::uint64_t xb, std::uint64_t nb,
                                        double level) {
    check_counts(xa, na);
    check_counts(xb, nb);
    const double pa = static_cast<double>(xa) / static_cast<double>(na);
    const double pb = static_cast<double>(xb) / static_cast<double>(nb);
    const double se = std::sqrt(pa * (1 - pa) / static_cast<double>(na) + pb * (1 - pb) / static_cast<double>(nb));
    const double half = two_sided_critical(level) * se;
    return {100 * (pa - pb - half), 100 * (pa - pb + half)};
}

std::string describe_difference(double ci_low, double ci_high) {
    if (ci_low >= 0) return percent(ci_low) + " to " + percent(ci_high) + " more successfully error-mitigated";
    if (ci_high <= 0) return percent(-ci_high) + " to " + percent(-ci_low) + " less successfully error-mitigated";
    return "between " + percent(-ci_low) + " less and " + percent(ci_high) + " more successfully error-mitigated";
}

double psr(std::uint64_t x, std::uint64_t n) { return prop_ci(x, n, 0.95).first / 100.0; }

double median(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("median of an empty list");
    const std::size_t mid = xs.size() / 2;
    std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid), xs.end());
    const double upper = xs[mid];
    if (xs.size() % 2 == 1) return upper;
    const double lower = *std::max_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

double median_rem_upper(std::span<const double> rem_values, int n_boot, std::uint64_t seed) {
    if (rem_values.empty()) throw std::invalid_argument("no REM values");
    if (n_boot < 1) throw std::invalid_argument("n_boot must be positive");
    const std::size_t n = rem_values.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<double> resample(n);
    std::vector<double> medians(static_cast<std::size_t>(n_boot));
    for (double& m : medians) {
        for (double& v : resample) v = rem_values[pick(rng)];
        m = median(resample);
    }
    std::sort(medians.begin(), medians.end());
    const double upper = percentile_sorted(medians, 0.975);
    return std::max(upper, median(std::vector<double>(rem_values.begin(), rem_values.end())));
}

double power_one_sample(double p_true, double p0, std::uint64_t n, double alpha) {
    if (!(p_true > 0 && p_true < 1) || !(p0 > 0 && p0 < 1)) throw std::invalid_argument("proportions must lie in (0, 1)");
    if (n == 0) throw std::invalid_argument("n must be positive");
    const double nn = static_cast<double>(n);
    const double threshold = p0 + one_sided_critical(alpha) * std::sqrt(p0 * (1 - p0) / nn);
    return 1.0 - normal_cdf((threshold - p_true) / std::sqrt(p_true * (1 - p_true) / nn));
}

}  // namespace qemlab
