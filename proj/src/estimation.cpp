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

#include "qemlab/errors.hpp"
#include "qemlab/transforms.hpp"

namespace qemlab {

Circuit derive_estimation_circuit(const Circuit& circuit) {
    std::vector<Gate> out;
    for (const Gate& g : circuit.gates()) {
        if (g.kind() == GateKind::CNOT || g.kind() == GateKind::MEASURE) out.push_back(g);
    }
    return Circuit(circuit.n_qubits(), std::move(out));
}

EstimationCorrection estimation_factor(const std::vector<double>& est_probabilities, double floor) {
    if (est_probabilities.empty()) throw std::invalid_argument("empty estimation distribution");
    const double one_minus_p = est_probabilities[0];
    if (!(one_minus_p >= floor) || one_minus_p <= 0.0) throw EstimationFloorBreached(one_minus_p, floor);
    return {one_minus_p};
}

EstimationCorrection estimation_factor(const CountsMap& est_counts, double floor) {
    if (est_counts.shots() == 0) throw std::invalid_argument("estimation counts are empty");
    const double zeros = static_cast<double>(est_counts.count(std::string(est_counts.n_qubits(), '0')));
    const double one_minus_p = zeros / static_cast<double>(est_counts.shots());
    if (!(one_minus_p >= floor) || one_minus_p <= 0.0) throw EstimationFloorBreached(one_minus_p, floor);
    return {one_minus_p};
}

double estimation_correct(double raw_expectation, const CountsMap& est_counts, double floor) {
    return raw_expectation / estimation_factor(est_counts, floor).one_minus_p;
}

}  // namespace qemlab
