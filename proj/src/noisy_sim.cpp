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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gate_matrices.hpp"
#include "qemlab/errors.hpp"
#include "qemlab/noisy_sim.hpp"

namespace qemlab {

namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

void check_cap(const Circuit& circuit, const SimOptions& options) {
    if (circuit.n_qubits() > options.qubit_cap) {
        throw QubitCapExceeded("circuit has " + std::to_string(circuit.n_qubits()) + " qubits, cap is " +
                               std::to_string(options.qubit_cap));
    }
}

void apply_idle(DensityMatrix& rho, int qubit, double length_ns, const NoiseModel& noise, double detuning_khz) {
    if (length_ns <= 0) return;
    rho.dephase(qubit, std::exp(-length_ns / (noise.idle_dephase_t2_us * 1e3)));
    if (detuning_khz != 0.0) {
        const double angle = 2 * std::numbers::pi * detuning_khz * length_ns * 1e-6;
        rho.apply_1q(qubit, detail::gate_matrix(Gate::from_parts(GateKind::RZ, {qubit}, angle, 1.0)));
    }
}

std::vector<std::complex<double>> zz_phase(int n_qubits, int a, int b, double theta) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<std::complex<double>> phase(dim);
    const std::complex<double> plus = std::polar(1.0, -theta / 2), minus = std::polar(1.0, theta / 2);
    for (std::size_t i = 0; i < dim; ++i) {
        const bool odd = (((i >> a) ^ (i >> b)) & 1u) != 0;
        phase[i] = odd ? minus : plus;
    }
    return phase;
}

}  // namespace

NoiseModel NoiseModel::ideal() {
    NoiseModel m;
    m.depol_1q = m.depol_2q = m.coherent_zz = 0.0;
    m.idle_dephase_t2_us = std::numeric_limits<double>::infinity();
    m.idle_detuning_khz = 0.0;
    m.readout_p10 = m.readout_p01 = 0.0;
    return m;
}

NoiseModel NoiseModel::defaults() { return NoiseModel{}; }

void NoiseModel::validate() const {
    check_probability(depol_1q, "depol_1q");
    check_probability(depol_2q, "depol_2q");
    check_probability(readout_p10, "readout_p10");
    check_probability(readout_p01, "readout_p01");
    if (!(idle_dephase_t2_us > 0)) throw std::invalid_argument("idle_dephase_t2_us must be positive");
    if (!std::isfinite(coherent_zz) || !std::isfinite(idle_detuning_khz)) {
        throw std::invalid_argument("coherent noise parameters must be finite");
    }
}

CountsMap::CountsMap(int n_qubits, std::map<std::string, std::uint64_t> counts) : n_qubits_(n_qubits) {
    for (const auto& [bits, n] : counts) add(bits, n);
}

std::uint64_t CountsMap::count(const std::string& bits) const {
    auto it = counts_.find(bits);
    return it == counts_.end() ? 0 : it->second;
}

void CountsMap::add(const std::string& bits, std::uint64_t n) {
    if (static_cast<int>(bits.size()) != n_qubits_) throw std::invalid_argument("bitstring length mismatch");
    bits_to_index(bits);  // validates the alphabet
    if (n == 0) return;
    counts_[bits] += n;
    shots_ += n;
}

void CountsMap::merge(const CountsMap& other) {
    if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("cannot merge counts of different widths");
    for (const auto& [bits, n] : other.counts_) add(bits, n);
}

std::vector<double> CountsMap::frequencies() const {
    if (shots_ == 0) throw std::invalid_argument("empty counts");
    std::vector<double> f(std::size_t{1} << n_qubits_, 0.0);
    for (const auto& [bits, n] : counts_) f[bits_to_index(bits)] = static_cast<double>(n) / static_cast<double>(shots_);
    return f;
}

namespace {

std::vector<double> evolve(const Circuit& circuit, const Schedule& sched, const NoiseModel& noise,
                           const SimOptions& options, double detuning_khz) {
    const int n = circuit.n_qubits();
    DensityMatrix rho(n);
    std::vector<double> free_at(n, 0.0);
    std::vector<bool> active(n, false);

    auto check = [&](const Gate& g) {
        if (!options.check_physical) return;
        const double err = rho.physicality_error();
        if (err > options.physical_tol) {
            throw std::runtime_error("density matrix left the physical set after " + serialize_gate(g) +
                                     " (error " + std::to_string(err) + ")");
        }
    };

    const auto& gates = circuit.gates();
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
        const Gate& g = gates[gi];
        const double start = sched.gate_start_ns[gi];
        for (int q : g.qubits()) {
            if (active[q]) apply_idle(rho, q, start - free_at[q], noise, detuning_khz);
            active[q] = true;
            free_at[q] = start + g.duration_ns();
        }
        switch (g.kind()) {
            case GateKind::MEASURE:
                break;
            case GateKind::DELAY:
                apply_idle(rho, g.qubits()[0], g.duration_ns(), noise, detuning_khz);
                break;
            case GateKind::CNOT: {
                const int c = g.qubits()[0], t = g.qubits()[1];
                rho.apply_cnot(c, t);
                rho.depolarize(g.qubits(), noise.depol_2q);
                if (noise.coherent_zz != 0.0) rho.apply_diagonal(zz_phase(n, c, t, noise.coherent_zz));
                break;
            }
            default:
                if (g.kind() != GateKind::I) rho.apply_1q(g.qubits()[0], detail::gate_matrix(g));
                rho.depolarize(g.qubits(), noise.depol_1q);
                break;
        }
        check(g);
    }
    return rho.diagonal();
}

}  // namespace

std::vector<double> true_outcome_distribution(const Circuit& circuit, const NoiseModel& noise,
                                              const SimOptions& options) {
    check_cap(circuit, options);
    noise.validate();
    const Schedule sched = schedule(circuit);
    std::vector<double> probs = evolve(circuit, sched, noise, options, noise.idle_detuning_khz);
    for (double& p : probs) p = std::max(p, 0.0);
    return probs;
}

std::vector<double> apply_readout_confusion(const std::vector<double>& probs, int n_qubits, const NoiseModel& noise) {
    if (probs.size() != (std::size_t{1} << n_qubits)) throw std::invalid_argument("distribution size mismatch");
    std::vector<double> out = probs;
    const double p10 = noise.readout_p10, p01 = noise.readout_p01;
    for (int q = 0; q < n_qubits; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i & bit) continue;
            const double zero = out[i], one = out[i | bit];
            out[i] = (1 - p10) * zero + p01 * one;
            out[i | bit] = p10 * zero + (1 - p01) * one;
        }
    }
    return out;
}

std::vector<double> outcome_distribution(const Circuit& circuit, const NoiseModel& noise, const SimOptions& options) {
    return apply_readout_confusion(true_outcome_distribution(circuit, noise, options), circuit.n_qubits(), noise);
}

CountsMap sample_counts(const std::vector<double>& probs, int n_qubits, std::uint64_t shots, std::mt19937_64& rng) {
    if (shots == 0) throw std::invalid_argument("shots must be positive");
    std::discrete_distribution<std::size_t> dist(probs.begin(), probs.end());
    std::vector<std::uint64_t> tally(probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) ++tally[dist(rng)];
    CountsMap counts(n_qubits);
    for (std::size_t i = 0; i < tally.size(); ++i) counts.add(index_to_bits(i, n_qubits), tally[i]);
    return counts;
}

CountsMap simulate_counts(const Circuit& circuit, const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed,
                          const SimOptions& options) {
    if (shots == 0) throw std::invalid_argument("shots must be positive");
    const auto probs = outcome_distribution(circuit, noise, options);
    std::mt19937_64 rng(seed);
    return sample_counts(probs, circuit.n_qubits(), shots, rng);
}

double exact_expectation(const Circuit& circuit, const NoiseModel& noise, const Observable& obs,
                         const SimOptions& options) {
    if (obs.n_qubits() != circuit.n_qubits()) throw std::invalid_argument("observable/circuit size mismatch");
    return expectation_from_distribution(outcome_distribution(circuit, noise, options), obs);
}

double expectation_from_counts(const CountsMap& counts, const Observable& obs) {
    if (counts.shots() == 0) throw std::invalid_argument("empty counts");
    if (counts.n_qubits() != obs.n_qubits()) throw std::invalid_argument("observable/counts size mismatch");
    double total = 0.0;
    for (const auto& [bits, n] : counts.counts()) total += static_cast<double>(n) * obs.eigenvalue(bits);
    return total / static_cast<double>(counts.shots());
}

double expectation_from_distribution(const std::vector<double>& probs, const Observable& obs) {
    if (probs.size() != (std::size_t{1} << obs.n_qubits())) throw std::invalid_argument("distribution size mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) total += probs[i] * obs.eigenvalue(i);
    return total;
}

}  // namespace qemlab
