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

#ifndef QEMLAB_CIRCUIT_HPP
#define QEMLAB_CIRCUIT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qemlab {

enum class GateKind { H, X, Y, Z, I, RZ, RX, CNOT, MEASURE, DELAY };

std::string_view gate_kind_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);

/// Nominal gate durations in nanoseconds. DELAY gates carry their own length.
struct DurationTable {
    double single_qubit_ns = 35.0;
    double cnot_ns = 300.0;
    double measure_ns = 700.0;

    double of(GateKind kind) const;
    void validate() const;
    bool operator==(const DurationTable&) const = default;
};

/// One instruction of a circuit. Construct through the named factories, which
/// enforce arity, distinct qubits, finite angles and non-negative delays.
class Gate {
   public:
    static Gate single(GateKind kind, int qubit, const DurationTable& durations);
    static Gate rotation(GateKind kind, int qubit, double angle, const DurationTable& durations);
    static Gate cnot(int control, int target, const DurationTable& durations);
    static Gate measure(int qubit, const DurationTable& durations);
    static Gate delay(int qubit, double duration_ns);
    /// Rebuilds a gate from its serialized fields; validates like the factories.
    static Gate from_parts(GateKind kind, std::vector<int> qubits, double angle, double duration_ns);

    GateKind kind() const { return kind_; }
    std::span<const int> qubits() const { return qubits_; }
    double angle() const { return angle_; }
    double duration_ns() const { return duration_ns_; }

    bool is_rotation() const { return kind_ == GateKind::RZ || kind_ == GateKind::RX; }
    /// True for every 1-qubit gate that acts on the state (DELAY and MEASURE excluded).
    bool is_single_qubit_unitary() const;
    /// Unitary inverse; rotations negate their angle, everything else is self-inverse.
    Gate inverse() const;

    bool operator==(const Gate&) const = default;

   private:
    Gate(GateKind kind, std::vector<int> qubits, double angle, double duration_ns);

    GateKind kind_;
    std::vector<int> qubits_;
    double angle_;
    double duration_ns_;
};

/// Immutable ordered gate sequence over `n_qubits` qubits.
///
/// Once a qubit is measured no further gate may touch it. The label is a pure
/// function of (n_qubits, gates) and identifies structurally equal circuits.
class Circuit {
   public:
    Circuit(int n_qubits, std::vector<Gate> gates);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }

    /// Canonical text serialization (versioned header line plus one gate per line).
    std::string label() const;
    /// Short stable digest of `label()`, used as the ledger key.
    std::string id() const;

    std::size_t count(GateKind kind) const;
    bool has_measurements() const;
    /// Gates before the first MEASURE, and the MEASURE tail. Throws if a
    /// unitary gate follows a measurement.
    std::vector<Gate> unitary_part() const;
    std::vector<Gate> measurement_part() const;

    /// Copy with `extra` appended; re-validates.
    Circuit with_gates_appended(std::span<const Gate> extra) const;

    bool operator==(const Circuit&) const = default;

   private:
    int n_qubits_;
    std::vector<Gate> gates_;
};

/// One gate per line as `KIND q0[,q1][@angle][#duration_ns]`.
std::string serialize_gate(const Gate& gate);
std::string serialize_circuit(const Circuit& circuit);
Circuit parse_circuit(std::string_view text);

/// Product of Z on `support`, scaled by `coefficient`.
struct ZTerm {
    double coefficient;
    std::vector<int> support;
};

/// Real linear combination of Z-strings. Diagonal in the computational basis.
class Observable {
   public:
    Observable(int n_qubits, std::vector<ZTerm> terms);

    int n_qubits() const { return n_qubits_; }
    const std::vector<ZTerm>& terms() const { return terms_; }

    /// Eigenvalue on basis state `index`; bit q of `index` is the value of qubit q.
    double eigenvalue(std::uint64_t index) const;
    /// Same, for a bitstring whose i-th character is qubit i.
    double eigenvalue(std::string_view bits) const;

   private:
    int n_qubits_;
    std::vector<ZTerm> terms_;
};

/// Bitstring helpers. Character i of the string is qubit i.
std::string index_to_bits(std::uint64_t index, int n_qubits);
std::uint64_t bits_to_index(std::string_view bits);

struct QaoaParams {
    double gamma;
    double beta;
    bool operator==(const QaoaParams&) const = default;
};

/// The 1-layer QAOA MaxCut circuit on the complete graph K4: H on all qubits,
/// a CNOT-RZ(2 gamma)-CNOT block per edge, RX(2 beta) mixer, measure all.
Circuit build_qaoa_maxcut(QaoaParams params, const DurationTable& durations);

/// E = -sum_{i<j} Z_i Z_j over the complete graph on n_nodes vertices.
///
/// This is the MaxCut cost sum (1 - Z_i Z_j) with its constant part removed,
/// so a cut edge contributes +1 and an uncut edge -1. For K4 the largest
/// eigenvalue is 2 (a 2|2 cut).
Observable maxcut_observable(int n_nodes);

inline constexpr int kDefaultQubitCap = 8;

/// Noiseless expectation of `obs` on the circuit's pre-measurement state.
double ideal_expectation(const Circuit& circuit, const Observable& obs, int qubit_cap = kDefaultQubitCap);

/// Deterministic coarse grid search for `count` parameter pairs whose ideal
/// expectations are spread evenly over [low_target, attainable maximum].
std::vector<QaoaParams> select_param_pairs(int count, double low_target, const DurationTable& durations);

}  // namespace qemlab

#endif  // QEMLAB_CIRCUIT_HPP
