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

#include <random>
#include <stdexcept>

#include "qemlab/transforms.hpp"

namespace qemlab {

namespace {

void emit_pauli(std::vector<Gate>& out, Pauli p, int qubit, const DurationTable& durations) {
    switch (p) {
        case Pauli::I:
            return;
        case Pauli::X:
            out.push_back(Gate::single(GateKind::X, qubit, durations));
            return;
        case Pauli::Y:
            out.push_back(Gate::single(GateKind::Y, qubit, durations));
            return;
        case Pauli::Z:
            out.push_back(Gate::single(GateKind::Z, qubit, durations));
            return;
    }
}

}  // namespace

char pauli_char(Pauli p) {
    constexpr char names[] = {'I', 'X', 'Y', 'Z'};
    return names[static_cast<int>(p)];
}

Circuit dress_cnots(const Circuit& circuit, const std::function<RcRow(std::size_t)>& choose,
                    const DurationTable& durations) {
    std::vector<Gate> out;
    out.reserve(circuit.gates().size() + 4 * circuit.count(GateKind::CNOT));
    std::size_t k = 0;
    for (const Gate& g : circuit.gates()) {
        if (g.kind() != GateKind::CNOT) {
            out.push_back(g);
            continue;
        }
        const RcRow row = choose(k++);
        const int c = g.qubits()[0], t = g.qubits()[1];
        emit_pauli(out, row.p, c, durations);
        emit_pauli(out, row.q, t, durations);
        out.push_back(g);
        emit_pauli(out, row.r, c, durations);
        emit_pauli(out, row.s, t, durations);
    }
    return Circuit(circuit.n_qubits(), std::move(out));
}

std::vector<Circuit> randomize_compile(const Circuit& circuit, int n_duplicates, std::uint64_t seed,
                                       const DurationTable& durations) {
    if (n_duplicates <= 0) throw std::invalid_argument("n_duplicates must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, kRcTable.size() - 1);
    std::vector<Circuit> out;
    out.reserve(static_cast<std::size_t>(n_duplicates));
    for (int d = 0; d < n_duplicates; ++d) {
        out.push_back(dress_cnots(circuit, [&](std::size_t) { return kRcTable[pick(rng)]; }, durations));
    }
    return out;
}

}  // namespace qemlab
