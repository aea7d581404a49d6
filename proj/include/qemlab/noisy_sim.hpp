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

#ifndef QEMLAB_NOISY_SIM_HPP
#define QEMLAB_NOISY_SIM_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qemlab/circuit.hpp"

namespace qemlab {

/// Noise channels applied by the density-matrix engine.
///
/// Each mitigation technique has a channel it can act on: gate depolarizing
/// (ZNE), a coherent ZZ over-rotation after every CNOT (RC), idle-time
/// dephasing plus a static detuning during idle gaps (DD), and readout
/// confusion (MEM). The defaults are configuration, not a device model.
struct NoiseModel {
    double depol_1q = 0.001;
    double depol_2q = 0.01;
    /// Extra exp(-i (theta/2) Z x Z) after each CNOT, in radians.
    double coherent_zz = 0.05;
    /// Phase damping over an idle gap of length t keeps coherences by exp(-t / T2).
    double idle_dephase_t2_us = 50.0;
    /// Static qubit detuning: an idle gap of length t applies RZ(2 pi f t).
    double idle_detuning_khz = 120.0;
    double readout_p10 = 0.02;
    double readout_p01 = 0.03;

    static NoiseModel ideal();
    static NoiseModel defaults();
    void validate() const;
    bool operator==(const NoiseModel&) const = default;
};

struct BusyInterval {
    double start_ns;
    double end_ns;
    std::size_t gate_index;
};

struct IdleGap {
    double start_ns;
    double end_ns;
    double length() const { return end_ns - start_ns; }
};

/// As-soon-as-possible schedule. `gaps` on a qubit are the idle windows
/// between its first and last busy interval, with DELAY gates counted as idle
/// time. `open_gaps` excludes DELAY intervals (the windows nothing occupies).
struct QubitTimeline {
    std::vector<BusyInterval> busy;
    std::vector<IdleGap> gaps;
    std::vector<IdleGap> open_gaps;
};

struct Schedule {
    std::vector<QubitTimeline> qubits;
    std::vector<double> gate_start_ns;
    double total_ns = 0.0;
};

Schedule schedule(const Circuit& circuit);

/// Histogram of measured bitstrings. Character i of a key is qubit i.
class CountsMap {
   public:
    explicit CountsMap(int n_qubits) : n_qubits_(n_qubits) {}
    CountsMap(int n_qubits, std::map<std::string, std::uint64_t> counts);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t shots() const { return shots_; }
    const std::map<std::string, std::uint64_t>& counts() const { return counts_; }
    std::uint64_t count(const std::string& bits) const;

    void add(const std::string& bits, std::uint64_t n);
    void merge(const CountsMap& other);
    /// Frequencies indexed by basis state.
    std::vector<double> frequencies() const;

    bool operator==(const CountsMap&) const = default;

   private:
    int n_qubits_;
    std::map<std::string, std::uint64_t> counts_;
    std::uint64_t shots_ = 0;
};

struct SimOptions {
    int qubit_cap = kDefaultQubitCap;
    /// Verify Hermiticity, unit trace and positivity after every channel.
    bool check_physical = false;
    double physical_tol = 1e-9;
};

/// Dense 2^n x 2^n density matrix. Bit q of a basis index is qubit q.
class DensityMatrix {
   public:
    using cplx = std::complex<double>;

    explicit DensityMatrix(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dim_; }
    cplx at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    void apply_1q(int qubit, const std::array<cplx, 4>& m);
    void apply_cnot(int control, int target);
    /// Multiplies by the diagonal unitary diag(phase(i)).
    void apply_diagonal(const std::vector<cplx>& phase);
    /// With probability p, replaces the marginal on `support` by the maximally mixed state.
    void depolarize(std::span<const int> support, double p);
    /// Scales coherences between |0> and |1> of `qubit` by `factor`.
    void dephase(int qubit, double factor);

    std::vector<double> diagonal() const;
    double trace() const;
    /// Max deviation from Hermiticity, unit trace and positivity.
    double physicality_error() const;

   private:
    int n_qubits_;
    std::size_t dim_;
    std::vector<cplx> data_;
};

/// Evolves the circuit under `noise` and returns the pre-readout outcome
/// distribution indexed by basis state.
std::vector<double> true_outcome_distribution(const Circuit& circuit, const NoiseModel& noise,
                                              const SimOptions& options = {});

/// Applies per-qubit readout confusion to a distribution.
std::vector<double> apply_readout_confusion(const std::vector<double>& probs, int n_qubits,
                                            const NoiseModel& noise);

/// Post-readout outcome distribution (the infinite-shot limit of simulate_counts).
std::vector<double> outcome_distribution(const Circuit& circuit, const NoiseModel& noise,
                                         const SimOptions& options = {});

/// Multinomial draw of `shots` outcomes.
CountsMap sample_counts(const std::vector<double>& probs, int n_qubits, std::uint64_t shots, std::mt19937_64& rng);

CountsMap simulate_counts(const Circuit& circuit, const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed,
                          const SimOptions& options = {});

double exact_expectation(const Circuit& circuit, const NoiseModel& noise, const Observable& obs,
                         const SimOptions& options = {});

double expectation_from_counts(const CountsMap& counts, const Observable& obs);
/// Expectation over a (quasi-)distribution indexed by basis state; entries may be negative.
double expectation_from_distribution(const std::vector<double>& probs, const Observable& obs);

}  // namespace qemlab

#endif  // QEMLAB_NOISY_SIM_HPP
