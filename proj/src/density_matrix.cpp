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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qemlab/noisy_sim.hpp"

namespace qemlab {

DensityMatrix::DensityMatrix(int n_qubits)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits), data_(dim_ * dim_, 0.0) {
    if (n_qubits <= 0 || n_qubits > 12) throw std::invalid_argument("density matrix size out of range");
    data_[0] = 1.0;
}

void DensityMatrix::apply_1q(int qubit, const std::array<cplx, 4>& m) {
    const std::size_t bit = std::size_t{1} << qubit;
    // Left: rho <- M rho.
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i & bit) continue;
        cplx* r0 = &data_[i * dim_];
        cplx* r1 = &data_[(i | bit) * dim_];
        for (std::size_t c = 0; c < dim_; ++c) {
            const cplx a = r0[c], b = r1[c];
            r0[c] = m[0] * a + m[1] * b;
            r1[c] = m[2] * a + m[3] * b;
        }
    }
    // Right: rho <- rho M^dagger.
    const cplx c00 = std::conj(m[0]), c01 = std::conj(m[1]), c10 = std::conj(m[2]), c11 = std::conj(m[3]);
    for (std::size_t r = 0; r < dim_; ++r) {
        cplx* row = &data_[r * dim_];
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j & bit) continue;
            const cplx a = row[j], b = row[j | bit];
            row[j] = a * c00 + b * c01;
            row[j | bit] = a * c10 + b * c11;
        }
    }
}

void DensityMatrix::apply_cnot(int control, int target) {
    const std::size_t c = std::size_t{1} << control;
    const std::size_t t = std::size_t{1} << target;
    for (std::size_t i = 0; i < dim_; ++i) {
        if ((i & c) && !(i & t)) {
            std::swap_ranges(&data_[i * dim_], &data_[i * dim_] + dim_, &data_[(i | t) * dim_]);
        }
    }
    for (std::size_t r = 0; r < dim_; ++r) {
        cplx* row = &data_[r * dim_];
        for (std::size_t j = 0; j < dim_; ++j) {
            if ((j & c) && !(j & t)) std::swap(row[j], row[j | t]);
        }
    }
}

void DensityMatrix::apply_diagonal(const std::vector<cplx>& phase) {
    if (phase.size() != dim_) throw std::invalid_argument("diagonal size mismatch");
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) data_[r * dim_ + c] *= phase[r] * std::conj(phase[c]);
    }
}

void DensityMatrix::depolarize(std::span<const int> support, double p) {
    if (p == 0.0) return;
    std::size_t mask = 0;
    for (int q : support) mask |= std::size_t{1} << q;
    // Every assignment of the support bits.
    std::vector<std::size_t> patterns{0};
    for (int q : support) {
        const std::size_t bit = std::size_t{1} << q;
        const std::size_t n = patterns.size();
        for (std::size_t k = 0; k < n; ++k) patterns.push_back(patterns[k] | bit);
    }
    const double inv_d = 1.0 / static_cast<double>(patterns.size());

    for (std::size_t r0 = 0; r0 < dim_; ++r0) {
        if (r0 & mask) continue;
        for (std::size_t c0 = 0; c0 < dim_; ++c0) {
            if (c0 & mask) continue;
            cplx traced = 0.0;
            for (std::size_t s : patterns) traced += data_[(r0 | s) * dim_ + (c0 | s)];
            for (std::size_t rs : patterns) {
                for (std::size_t cs : patterns) {
                    cplx& v = data_[(r0 | rs) * dim_ + (c0 | cs)];
                    v *= (1.0 - p);
                    if (rs == cs) v += p * inv_d * traced;
                }
            }
        }
    }
}

void DensityMatrix::dephase(int qubit, double factor) {
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if ((r ^ c) & bit) data_[r * dim_ + c] *= factor;
        }
    }
}

std::vector<double> DensityMatrix::diagonal() const {
    std::vector<double> d(dim_);
    for (std::size_t i = 0; i < dim_; ++i) d[i] = data_[i * dim_ + i].real();
    return d;
}

double DensityMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i].real();
    return t;
}

double DensityMatrix::physicality_error() const {
    Eigen::MatrixXcd m(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) m(r, c) = data_[r * dim_ + c];
    }
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    const double tr = std::abs(m.trace().real() - 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    const double neg = std::max(0.0, -es.eigenvalues().minCoeff());
    return std::max({herm, tr, neg});
}

}  // namespace qemlab
