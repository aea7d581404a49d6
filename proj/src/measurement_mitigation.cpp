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
#include <cmath>
#include <stdexcept>
#include <string>

#include "qemlab/errors.hpp"
#include "qemlab/resource.hpp"
#include "qemlab/seeds.hpp"
#include "qemlab/transforms.hpp"

namespace qemlab {

namespace {

Eigen::VectorXd solve_calibration(const CalibrationMatrix& calib, const Eigen::VectorXd& rhs, double max_condition) {
    const Eigen::Index dim = Eigen::Index{1} << calib.n_qubits;
    if (static_cast<std::size_t>(dim * dim) != calib.matrix.size()) {
        throw std::invalid_argument("calibration matrix has the wrong size");
    }
    if (rhs.size() != dim) throw std::invalid_argument("distribution does not match the calibration width");
    const Eigen::MatrixXd m =
        Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(calib.matrix.data(),
                                                                                                 dim, dim);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    const double smallest = sv(sv.size() - 1);
    if (!(smallest > 0) || sv(0) / smallest > max_condition) {
        throw IllConditionedCalibration("calibration matrix condition number " +
                                        std::to_string(smallest > 0 ? sv(0) / smallest : INFINITY) +
                                        " exceeds bound " + std::to_string(max_condition));
    }
    return m.partialPivLu().solve(rhs);
}

}  // namespace

void CalibrationMatrix::validate(double tol) const {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (n_qubits <= 0 || matrix.size() != dim * dim) throw std::invalid_argument("calibration matrix has the wrong size");
    for (std::size_t c = 0; c < dim; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            const double v = at(r, c);
            if (v < -tol || v > 1 + tol) throw std::invalid_argument("calibration entry outside [0, 1]");
            sum += v;
        }
        if (std::abs(sum - 1.0) > tol) throw std::invalid_argument("calibration column does not sum to 1");
    }
}

std::vector<double> QuasiCounts::probabilities() const {
    std::vector<double> p = values;
    for (double& v : p) v /= shots;
    return p;
}

Circuit calibration_circuit(int n_qubits, std::uint64_t basis_state, const DurationTable& durations) {
    std::vector<Gate> gates;
    for (int q = 0; q < n_qubits; ++q) {
        if ((basis_state >> q) & 1u) gates.push_back(Gate::single(GateKind::X, q, durations));
    }
    for (int q = 0; q < n_qubits; ++q) gates.push_back(Gate::measure(q, durations));
    return Circuit(n_qubits, std::move(gates));
}

CalibrationMatrix mem_calibrate(int n_qubits, const NoiseModel& noise, std::uint64_t seed,
                                const CalibrationOptions& options, UsageLedger* ledger) {
    if (n_qubits <= 0 || n_qubits > options.sim.qubit_cap) {
        throw QubitCapExceeded("calibration width " + std::to_string(n_qubits) + " outside [1, " +
                               std::to_string(options.sim.qubit_cap) + "]");
    }
    if (options.shots == 0) throw std::invalid_argument("calibration shots must be positive");
    const std::size_t dim = std::size_t{1} << n_qubits;
    CalibrationMatrix calib{n_qubits, std::vector<double>(dim * dim, 0.0)};
    for (std::size_t j = 0; j < dim; ++j) {
        const Circuit circuit = calibration_circuit(n_qubits, j, options.durations);
        std::vector<double> column;
        if (options.exact) {
            column = outcome_distribution(circuit, noise, options.sim);
        } else {
            column = simulate_counts(circuit, noise, options.shots, derive_seed(seed, {j}), options.sim).frequencies();
        }
        for (std::size_t r = 0; r < dim; ++r) calib.matrix[r * dim + j] = column[r];
        if (ledger) ledger->record(circuit, options.shots);
    }
    return calib;
}

QuasiCounts mem_apply(const CalibrationMatrix& calib, const CountsMap& counts, double max_condition) {
    if (counts.n_qubits() != calib.n_qubits) throw std::invalid_argument("counts do not match the calibration width");
    const auto freq = counts.frequencies();
    const Eigen::VectorXd x =
        solve_calibration(calib, Eigen::Map<const Eigen::VectorXd>(freq.data(), freq.size()), max_condition);
    QuasiCounts out{calib.n_qubits, static_cast<double>(counts.shots()), {}};
    out.values.resize(freq.size());
    for (std::size_t i = 0; i < freq.size(); ++i) out.values[i] = x(i) * out.shots;
    return out;
}

std::vector<double> mem_apply(const CalibrationMatrix& calib, const std::vector<double>& probabilities,
                              double max_condition) {
    const Eigen::VectorXd x = solve_calibration(
        calib, Eigen::Map<const Eigen::VectorXd>(probabilities.data(), probabilities.size()), max_condition);
    return std::vector<double>(x.data(), x.data() + x.size());
}

}  // namespace qemlab
