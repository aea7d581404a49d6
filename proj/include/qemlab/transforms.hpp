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

#ifndef QEMLAB_TRANSFORMS_HPP
#define QEMLAB_TRANSFORMS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "qemlab/circuit.hpp"
#include "qemlab/noisy_sim.hpp"

namespace qemlab {

class UsageLedger;

// ---- Digital noise amplification -------------------------------------------

/// Replaces every CNOT by `scale` identical consecutive CNOTs. `scale` must be odd and positive.
Circuit fold_local_cnot(const Circuit& circuit, int scale);

/// Returns C (C^dagger C)^((scale-1)/2) followed by the original measurements.
/// Throws if the circuit measures before its last unitary gate.
Circuit fold_global(const Circuit& circuit, int scale);

enum class FoldingKind { Local, Global };
std::string_view folding_name(FoldingKind kind);
FoldingKind parse_folding(std::string_view name);
Circuit fold(const Circuit& circuit, FoldingKind kind, int scale);

// ---- Randomized compiling ----------------------------------------------------

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Pauli frame around a CNOT: (p on control, q on target) before, (r, s) after.
struct RcRow {
    Pauli p, q, r, s;
    bool operator==(const RcRow&) const = default;
};

inline constexpr std::string_view kRcTableVersion = "rc-table/1";

/// The sixteen dressings; each leaves the CNOT unchanged up to a global phase.
inline constexpr std::array<RcRow, 16> kRcTable{{
    {Pauli::I, Pauli::I, Pauli::I, Pauli::I}, {Pauli::I, Pauli::X, Pauli::I, Pauli::X},
    {Pauli::I, Pauli::Y, Pauli::Z, Pauli::Y}, {Pauli::I, Pauli::Z, Pauli::Z, Pauli::Z},
    {Pauli::Y, Pauli::I, Pauli::Y, Pauli::X}, {Pauli::Y, Pauli::X, Pauli::Y, Pauli::I},
    {Pauli::Y, Pauli::Y, Pauli::X, Pauli::Z}, {Pauli::Y, Pauli::Z, Pauli::X, Pauli::Y},
    {Pauli::X, Pauli::I, Pauli::X, Pauli::X}, {Pauli::X, Pauli::X, Pauli::X, Pauli::I},
    {Pauli::X, Pauli::Y, Pauli::Y, Pauli::Z}, {Pauli::X, Pauli::Z, Pauli::Y, Pauli::Y},
    {Pauli::Z, Pauli::I, Pauli::Z, Pauli::I}, {Pauli::Z, Pauli::X, Pauli::Z, Pauli::X},
    {Pauli::Z, Pauli::Y, Pauli::I, Pauli::Y}, {Pauli::Z, Pauli::Z, Pauli::I, Pauli::Z},
}};

char pauli_char(Pauli p);

/// Dresses the k-th CNOT of `circuit` with `choose(k)`. Identity Paulis are
/// not emitted as gates.
Circuit dress_cnots(const Circuit& circuit, const std::function<RcRow(std::size_t)>& choose,
                    const DurationTable& durations);

/// `n_duplicates` independently dressed copies; every CNOT draws a uniform row.
std::vector<Circuit> randomize_compile(const Circuit& circuit, int n_duplicates, std::uint64_t seed,
                                       const DurationTable& durations = {});

// ---- Dynamical decoupling ------------------------------------------------------

/// Fills every open idle gap of length g >= 2 dur(X) with
/// DELAY(tau/4) X DELAY(tau/2) X DELAY(tau/4), tau = g - 2 dur(X).
/// The start time of every original gate is preserved.
Circuit insert_dd(const Circuit& circuit, const DurationTable& durations);

// ---- Measurement error mitigation ---------------------------------------------

/// Column j holds the measured distribution when basis state j is prepared.
struct CalibrationMatrix {
    int n_qubits = 0;
    /// Row-major 2^n x 2^n.
    std::vector<double> matrix;

    double at(std::size_t row, std::size_t col) const { return matrix[row * (std::size_t{1} << n_qubits) + col]; }
    void validate(double tol = 1e-9) const;
};

/// Real-valued counts after inversion; entries may be negative.
struct QuasiCounts {
    int n_qubits = 0;
    double shots = 0.0;
    std::vector<double> values;

    std::vector<double> probabilities() const;
};

/// X on every set bit of `basis_state`, then MEASURE on all qubits.
Circuit calibration_circuit(int n_qubits, std::uint64_t basis_state, const DurationTable& durations);

struct CalibrationOptions {
    std::uint64_t shots = 10000;
    /// Use the infinite-shot distributions instead of sampled counts.
    bool exact = false;
    DurationTable durations{};
    SimOptions sim{};
};

/// Runs the 2^n calibration circuits. When `ledger` is non-null each circuit is
/// recorded in it with `options.shots` shots.
CalibrationMatrix mem_calibrate(int n_qubits, const NoiseModel& noise, std::uint64_t seed,
                                const CalibrationOptions& options = {}, UsageLedger* ledger = nullptr);

inline constexpr double kDefaultMaxCondition = 1e6;

/// Solves M x = f for the empirical frequencies f and scales x by shots.
QuasiCounts mem_apply(const CalibrationMatrix& calib, const CountsMap& counts,
                      double max_condition = kDefaultMaxCondition);
std::vector<double> mem_apply(const CalibrationMatrix& calib, const std::vector<double>& probabilities,
                              double max_condition = kDefaultMaxCondition);

// ---- Estimation circuits ---------------------------------------------------------

/// CNOT skeleton: drops every 1-qubit gate and DELAY, keeps CNOTs (with their
/// folding multiplicity) and measurements.
Circuit derive_estimation_circuit(const Circuit& circuit);

inline constexpr double kDefaultEstimationFloor = 0.05;

struct EstimationCorrection {
    double one_minus_p;
};

/// 1 - p = (all-zero outcomes) / shots. Throws EstimationFloorBreached below `floor`.
EstimationCorrection estimation_factor(const CountsMap& est_counts, double floor = kDefaultEstimationFloor);
/// Same for a (quasi-)probability vector; entry 0 is the all-zero outcome.
EstimationCorrection estimation_factor(const std::vector<double>& est_probabilities,
                                       double floor = kDefaultEstimationFloor);

/// raw / (1 - p).
double estimation_correct(double raw_expectation, const CountsMap& est_counts,
                          double floor = kDefaultEstimationFloor);

}  // namespace qemlab

#endif  // QEMLAB_TRANSFORMS_HPP
