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

#ifndef QEMLAB_EXTRAPOLATION_HPP
#define QEMLAB_EXTRAPOLATION_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qemlab {

enum class FitOrder { Linear = 1, Quadratic = 2 };

std::string_view fit_name(FitOrder order);
FitOrder parse_fit(std::string_view name);

struct ScalePoint {
    double scale;
    double value;
};

/// Least-squares polynomial of the given order through `points`; returns its
/// value at scale 0. Needs at least order + 1 distinct scales.
double fit_extrapolate(std::span<const ScalePoint> points, FitOrder order);

/// Linear weights w with intercept = sum_k w_k y_k for values y_k at `scales`.
std::vector<double> intercept_weights(std::span<const double> scales, FitOrder order);

/// Repeat-level expectation values per noise scale.
struct ScaledSamples {
    std::vector<double> scales;
    std::vector<std::vector<double>> samples;

    /// Scales strictly increasing starting at 1; per-scale lists non-empty and of equal length.
    void validate() const;
};

struct ZneEstimate {
    double mu_lambda0 = 0.0;
    double sigma_lambda0 = 0.0;
    double mu_lambda1 = 0.0;
    double sigma_lambda1 = 0.0;
    bool operator==(const ZneEstimate&) const = default;
};

double mean(std::span<const double> xs);
/// Sample standard deviation with the n - 1 divisor; 0 for a single value.
double sample_std(std::span<const double> xs);

/// Non-parametric bootstrap of the zero-noise intercept. Each scale's repeat
/// list is resampled independently with replacement, the per-scale means are
/// fitted, and the intercepts' mean/std are reported. The lambda = 1 figures
/// are the plain mean/std of the scale-1 repeats.
ZneEstimate bootstrap_zero_noise(const ScaledSamples& samples, FitOrder order, int n_boot, std::uint64_t seed);

}  // namespace qemlab

#endif  // QEMLAB_EXTRAPOLATION_HPP
