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

#include "qemlab/noisy_sim.hpp"

namespace qemlab {

Schedule schedule(const Circuit& circuit) {
    const int n = circuit.n_qubits();
    Schedule out;
    out.qubits.resize(n);
    out.gate_start_ns.reserve(circuit.gates().size());
    std::vector<double> free_at(n, 0.0);
    std::vector<bool> active(n, false);

    const auto& gates = circuit.gates();
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
        const Gate& g = gates[gi];
        double start = 0.0;
        for (int q : g.qubits()) start = std::max(start, free_at[q]);
        const double end = start + g.duration_ns();
        out.gate_start_ns.push_back(start);
        for (int q : g.qubits()) {
            QubitTimeline& tl = out.qubits[q];
            if (active[q] && start > free_at[q]) tl.open_gaps.push_back({free_at[q], start});
            tl.busy.push_back({start, end, gi});
            active[q] = true;
            free_at[q] = end;
        }
        out.total_ns = std::max(out.total_ns, end);
    }

    // Merge open gaps with DELAY intervals into the idle-time view.
    for (QubitTimeline& tl : out.qubits) {
        std::vector<IdleGap> idle = tl.open_gaps;
        for (const BusyInterval& b : tl.busy) {
            if (gates[b.gate_index].kind() == GateKind::DELAY && b.end_ns > b.start_ns) {
                idle.push_back({b.start_ns, b.end_ns});
            }
        }
        std::sort(idle.begin(), idle.end(), [](const IdleGap& a, const IdleGap& b) { return a.start_ns < b.start_ns; });
        for (const IdleGap& gap : idle) {
            if (!tl.gaps.empty() && tl.gaps.back().end_ns >= gap.start_ns) {
                tl.gaps.back().end_ns = std::max(tl.gaps.back().end_ns, gap.end_ns);
            } else {
                tl.gaps.push_back(gap);
            }
        }
    }
    return out;
}

}  // namespace qemlab
