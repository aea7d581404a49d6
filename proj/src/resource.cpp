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
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qemlab/errors.hpp"
#include "qemlab/noisy_sim.hpp"
#include "qemlab/resource.hpp"

namespace qemlab {

namespace {

void require_entries(const UsageLedger& ledger) {
    if (ledger.empty()) throw std::invalid_argument("usage ledger is empty");
}

std::vector<double> weights(const UsageLedger& ledger) {
    const double q_max = ledger.q_max();
    std::vector<double> w;
    w.reserve(ledger.entries().size());
    for (const CircuitUsage& e : ledger.entries()) {
        w.push_back(static_cast<double>(e.shots) * e.duration_s * (e.qubits / q_max));
    }
    return w;
}

}  // namespace

void UsageLedger::record(const std::string& label, std::uint64_t shots, double duration_s, int qubits) {
    if (shots < 1) throw std::invalid_argument("ledger entry needs at least one shot");
    if (!(duration_s > 0)) throw std::invalid_argument("ledger duration must be positive");
    if (qubits < 1) throw std::invalid_argument("ledger entry needs at least one qubit");
    for (CircuitUsage& e : entries_) {
        if (e.label != label) continue;
        if (e.qubits != qubits || std::abs(e.duration_s - duration_s) > 1e-15 * std::max(1.0, e.duration_s)) {
            throw std::invalid_argument("ledger label '" + label + "' recorded with a different shape");
        }
        e.shots += shots;
        return;
    }
    entries_.push_back({label, shots, duration_s, qubits});
}

void UsageLedger::record(const Circuit& circuit, std::uint64_t shots) {
    record(circuit.id(), shots, circuit_duration_seconds(circuit), circuit.n_qubits());
}

void UsageLedger::merge(const UsageLedger& other) {
    for (const CircuitUsage& e : other.entries_) record(e.label, e.shots, e.duration_s, e.qubits);
}

std::uint64_t UsageLedger::total_shots() const {
    std::uint64_t total = 0;
    for (const CircuitUsage& e : entries_) total += e.shots;
    return total;
}

int UsageLedger::q_max() const {
    int q = 0;
    for (const CircuitUsage& e : entries_) q = std::max(q, e.qubits);
    return q;
}

std::string UsageLedger::to_csv() const {
    std::string out = "label,shots,duration_s,qubits\n";
    char buf[64];
    for (const CircuitUsage& e : entries_) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.duration_s);
        out += e.label + "," + std::to_string(e.shots) + "," + buf + "," + std::to_string(e.qubits) + "\n";
    }
    return out;
}

UsageLedger UsageLedger::from_csv(const std::string& csv) {
    UsageLedger ledger;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line != "label,shots,duration_s,qubits") throw std::invalid_argument("unexpected ledger CSV header");
            continue;
        }
        std::istringstream row(line);
        std::string label, shots, duration, qubits;
        if (!std::getline(row, label, ',') || !std::getline(row, shots, ',') || !std::getline(row, duration, ',') ||
            !std::getline(row, qubits, ',')) {
            throw std::invalid_argument("malformed ledger row '" + line + "'");
        }
        ledger.record(label, std::stoull(shots), std::stod(duration), std::stoi(qubits));
    }
    return ledger;
}

double circuit_duration_seconds(const Circuit& circuit) { return schedule(circuit).total_ns * 1e-9; }

double weighted_shots(const UsageLedger& ledger) {
    require_entries(ledger);
    double total = 0.0;
    for (double w : weights(ledger)) total += w;
    return total;
}

double entropy(const UsageLedger& ledger) {
    require_entries(ledger);
    const auto w = weights(ledger);
    double total = 0.0;
    for (double x : w) total += x;
    double s = 0.0;
    for (double x : w) {
        const double p = x / total;
        if (p > 0) s -= p * std::log(p);
    }
    return std::max(s, 0.0);
}

double resource(double weighted_shots, double entropy) { return weighted_shots * (1.0 + entropy); }

double resource(const UsageLedger& ledger) { return resource(weighted_shots(ledger), entropy(ledger)); }

double quality(double psr, double epsilon, double resource) {
    if (!(epsilon > 0)) throw DegenerateStatistics("quality needs a positive median REM bound");
    if (!(resource > 0)) throw DegenerateStatistics("quality needs a positive resource");
    return 100.0 * psr / (epsilon * resource);
}

}  // namespace qemlab
