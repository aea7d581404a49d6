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

#ifndef QEMLAB_RESOURCE_HPP
#define QEMLAB_RESOURCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qemlab/circuit.hpp"

namespace qemlab {

/// Usage of one distinct circuit: total shots, per-shot duration (s) and width.
struct CircuitUsage {
    std::string label;
    std::uint64_t shots = 0;
    double duration_s = 0.0;
    int qubits = 0;
    bool operator==(const CircuitUsage&) const = default;
};

/// Shot ledger keyed by distinct circuit. Recording the same label again adds
/// to its shots; duration and width must agree.
class UsageLedger {
   public:
    void record(const std::string& label, std::uint64_t shots, double duration_s, int qubits);
    /// Records under `circuit.id()` with the scheduled length (including measurement).
    void record(const Circuit& circuit, std::uint64_t shots);
    void merge(const UsageLedger& other);

    const std::vector<CircuitUsage>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t distinct_circuits() const { return entries_.size(); }
    std::uint64_t total_shots() const;
    int q_max() const;

    /// CSV with header `label,shots,duration_s,qubits`.
    std::string to_csv() const;
    static UsageLedger from_csv(const std::string& csv);

    bool operator==(const UsageLedger&) const = default;

   private:
    std::vector<CircuitUsage> entries_;
};

/// Scheduled length of `circuit` in seconds.
double circuit_duration_seconds(const Circuit& circuit);

/// T = sum_i N_i D_i (Q_i / Q_max), in seconds.
double weighted_shots(const UsageLedger& ledger);
/// S = -sum_i p_i ln p_i with p_i = N_i D_i (Q_i / Q_max) / T, in nats.
double entropy(const UsageLedger& ledger);
/// R = T (1 + S).
double resource(const UsageLedger& ledger);
double resource(double weighted_shots, double entropy);

/// M = 100 psr / (epsilon R).
double quality(double psr, double epsilon, double resource);

struct QualityScore {
    double T = 0.0;
    double S = 0.0;
    double R = 0.0;
    double psr = 0.0;
    double epsilon = 0.0;
    double M = 0.0;
};

}  // namespace qemlab

#endif  // QEMLAB_RESOURCE_HPP
