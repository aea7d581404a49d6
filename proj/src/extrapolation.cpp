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

#include "qemlab/extrapolation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace qemlab {

std::string_view fit_name(FitOrder order) { return order == FitOrder::Linear ? "linear" : "quadratic"; }

FitOrder parse_fit(std::string_view name) {
    if (name == "linear") return FitOrder::Linear;
    if (name == "quadratic") return FitOrder::Quadratic;
    throw std::invalid_argument("fit must be 'linear' or 'quadratic', got '" + std::string(name) + "'");
}

std::vector<double> intercept_weights(std::span<const double> scales, FitOrder order) {
    const int degree = static_cast<int>(order);
    if (std::set<double>(scales.begin(), scales.end()).size() < static_cast<std::size_t>(degree + 1)) {
        throw std::invalid_argument("need at least " + std::to_string(degree + 1) + " distinct scales for a " +
                                    std::string(fit_name(order)) + " fit");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(scales.size());
    Eigen::MatrixXd v(n, degree + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        double p = 1.0;
        for (int d = 0; d <= degree; ++d, p *= scales[i]) v(i, d) = p;
    }
    // Row 0 of the pseudo-inverse maps values to the constant coefficient.
    const Eigen::MatrixXd pinv = v.colPivHouseholderQr().solve(Eigen::MatrixXd::Identity(n, n));
    std::vector<double> w(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) w[i] = pinv(0, i);
    return w;
}

double fit_extrapolate(std::span<const ScalePoint> points, FitOrder order) {
    std::vector<double> scales;
    scales.reserve(points.size());
    for (const ScalePoint& p : points) scales.push_back(p.scale);
    const auto w = intercept_weights(scales, order);
    double intercept = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) intercept += w[i] * points[i].value;
    return intercept;
}

void ScaledSamples::validate() const {
    if (scales.empty() || scales.size() != samples.size()) throw std::invalid_argument("scales/samples size mismatch");
    if (scales.front() != 1.0) throw std::invalid_argument("the first scale must be 1");
    for (std::size_t k = 1; k < scales.size(); ++k) {
        if (!(scales[k] > scales[k - 1])) throw std::invalid_argument("scales must be strictly increasing");
    }
    for (const auto& s : samples) {
        if (s.empty()) throw std::invalid_argument("every scale needs at least one sample");
        if (s.size() != samples.front().size()) throw std::invalid_argument("per-scale sample lists differ in length");
    }
}

double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean of an empty list");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_std(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

ZneEstimate bootstrap_zero_noise(const ScaledSamples& samples, FitOrder order, int n_boot, std::uint64_t seed) {
    samples.validate();
    if (n_boot < 100) throw std::invalid_argument("n_boot must be at least 100");
    const auto w = intercept_weights(samples.scales, order);
    const std::size_t reps = samples.samples.front().size();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, reps - 1);
    std::vector<double> intercepts(static_cast<std::size_t>(n_boot));
    for (double& out : intercepts) {
        double intercept = 0.0;
        for (std::size_t k = 0; k < samples.scales.size(); ++k) {
            const auto& row = samples.samples[k];
            double sum = 0.0;
            for (std::size_t r = 0; r < reps; ++r) sum += row[pick(rng)];
            intercept += w[k] * (sum / static_cast<double>(reps));
        }
        out = intercept;
    }

    ZneEstimate est;
    est.mu_lambda0 = mean(intercepts);
    est.sigma_lambda0 = sample_std(intercepts);
    est.mu_lambda1 = mean(samples.samples.front());
    est.sigma_lambda1 = sample_std(samples.samples.front());
    // Identical resamples still leave rounding noise in the intercepts.
    const bool constant = std::all_of(samples.samples.begin(), samples.samples.end(), [](const auto& row) {
        return std::all_of(row.begin(), row.end(), [&](double v) { return v == row.front(); });
    });
    if (constant) {
        std::vector<ScalePoint> pts;
        for (std::size_t k = 0; k < samples.scales.size(); ++k) pts.push_back({samples.scales[k], samples.samples[k][0]});
        est.mu_lambda0 = fit_extrapolate(pts, order);
        est.sigma_lambda0 = 0.0;
    }
    return est;
}

}  // namespace qemlab
