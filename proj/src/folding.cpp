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

#include <stdexcept>
#include <string>

#include "qemlab/transforms.hpp"

namespace qemlab {

namespace {

void check_scale(int scale) {
    if (scale < 1 || scale % 2 == 0) {
        throw std::invalid_argument("fold scale must be odd and positive, got " + std::to_string(scale));
    }
}

}  // namespace

Circuit fold_local_cnot(const Circuit& circuit, int scale) {
    check_scale(scale);
    std::vector<Gate> out;
    out.reserve(circuit.gates().size() + circuit.count(GateKind::CNOT) * (scale - 1));
    for (const Gate& g : circuit.gates()) {
        const int copies = g.kind() == GateKind::CNOT ? scale : 1;
        for (int k = 0; k < copies; ++k) out.push_back(g);
    }
    return Circuit(circuit.n_qubits(), std::move(out));
}

Circuit fold_global(const Circuit& circuit, int scale) {
    check_scale(scale);
    const std::vector<Gate> body = circuit.unitary_part();
    std::vector<Gate> inverse;
    inverse.reserve(body.size());
    for (auto it = body.rbegin(); it != body.rend(); ++it) inverse.push_back(it->inverse());

    std::vector<Gate> out = body;
    for (int k = 0; k < (scale - 1) / 2; ++k) {
        out.insert(out.end(), inverse.begin(), inverse.end());
        out.insert(out.end(), body.begin(), body.end());
    }
    for (const Gate& m : circuit.measurement_part()) out.push_back(m);
    return Circuit(circuit.n_qubits(), std::move(out));
}

std::string_view folding_name(FoldingKind kind) { return kind == FoldingKind::Local ? "local" : "global"; }

FoldingKind parse_folding(std::string_view name) {
    if (name == "local") return FoldingKind::Local;
    if (name == "global") return FoldingKind::Global;
    throw std::invalid_argument("folding must be 'local' or 'global', got '" + std::string(name) + "'");
}

Circuit fold(const Circuit& circuit, FoldingKind kind, int scale) {
    return kind == FoldingKind::Local ? fold_local_cnot(circuit, scale) : fold_global(circuit, scale);
}

}  // namespace qemlab
