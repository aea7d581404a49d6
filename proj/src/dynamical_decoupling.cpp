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

#include <map>

#include "qemlab/transforms.hpp"

namespace qemlab {

Circuit insert_dd(const Circuit& circuit, const DurationTable& durations) {
    const double x_ns = durations.of(GateKind::X);
    const Schedule sched = schedule(circuit);

    // Padding for a gap is emitted right before the gate that closes it; it
    // touches only the idle qubit, so no other start time moves.
    std::map<std::size_t, std::vector<Gate>> before;
    for (int q = 0; q < circuit.n_qubits(); ++q) {
        const auto& busy = sched.qubits[q].busy;
        for (std::size_t k = 1; k < busy.size(); ++k) {
            const double gap = busy[k].start_ns - busy[k - 1].end_ns;
            if (gap < 2 * x_ns) continue;
            const double tau = gap - 2 * x_ns;
            auto& seq = before[busy[k].gate_index];
            seq.push_back(Gate::delay(q, tau / 4));
            seq.push_back(Gate::single(GateKind::X, q, durations));
            seq.push_back(Gate::delay(q, tau / 2));
            seq.push_back(Gate::single(GateKind::X, q, durations));
            seq.push_back(Gate::delay(q, tau / 4));
        }
    }
    if (before.empty()) return circuit;

    std::vector<Gate> out;
    const auto& gates = circuit.gates();
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
        if (auto it = before.find(gi); it != before.end()) out.insert(out.end(), it->second.begin(), it->second.end());
        out.push_back(gates[gi]);
    }
    return Circuit(circuit.n_qubits(), std::move(out));
}

}  // namespace qemlab
