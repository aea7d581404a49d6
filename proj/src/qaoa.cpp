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
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gate_matrices.hpp"
#include "qemlab/circuit.hpp"
#include "qemlab/errors.hpp"

namespace qemlab {

namespace {

using detail::cplx;

std::vector<std::pair<int, int>> complete_graph_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return edges;
}

std::vector<cplx> run_statevector(const Circuit& circuit) {
    const std::size_t dim = std::size_t{1} << circuit.n_qubits();
    std::vector<cplx> psi(dim, 0.0);
    psi[0] = 1.0;
    for (const Gate& g : circuit.gates()) {
        if (g.kind() == GateKind::CNOT) {
            const std::size_t c = std::size_t{1} << g.qubits()[0];
            const std::size_t t = std::size_t{1} << g.qubits()[1];
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & c) && !(i & t)) std::swap(psi[i], psi[i | t]);
            }
        } else if (g.is_single_qubit_unitary()) {
            const auto m = detail::gate_matrix(g);
            const std::size_t bit = std::size_t{1} << g.qubits()[0];
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & bit) continue;
                cplx a = psi[i], b = psi[i | bit];
                psi[i] = m[0] * a + m[1] * b;
                psi[i | bit] = m[2] * a + m[3] * b;
            }
        }
        // DELAY and MEASURE leave the pre-measurement state untouched.
    }
    return psi;
}

}  // namespace

Circuit build_qaoa_maxcut(QaoaParams params, const DurationTable& durations) {
    if (!std::isfinite(params.gamma) || !std::isfinite(params.beta)) {
        throw std::invalid_argument("QAOA parameters must be finite");
    }
    durations.validate();
    constexpr int n = 4;
    std::vector<Gate> gates;
    for (int q = 0; q < n; ++q) gates.push_back(Gate::single(GateKind::H, q, durations));
    for (auto [i, j] : complete_graph_edges(n)) {
        gates.push_back(Gate::cnot(i, j, durations));
        gates.push_back(Gate::rotation(GateKind::RZ, j, 2 * params.gamma, durations));
        gates.push_back(Gate::cnot(i, j, durations));
    }
    for (int q = 0; q < n; ++q) gates.push_back(Gate::rotation(GateKind::RX, q, 2 * params.beta, durations));
    for (int q = 0; q < n; ++q) gates.push_back(Gate::measure(q, durations));
    return Circuit(n, std::move(gates));
}

Observable maxcut_observable(int n_nodes) {
    if (n_nodes < 2) throw std::invalid_argument("MaxCut needs at least two nodes");
    std::vector<ZTerm> terms;
    for (auto [i, j] : complete_graph_edges(n_nodes)) terms.push_back({-1.0, {i, j}});
    return Observable(n_nodes, std::move(terms));
}

double ideal_expectation(const Circuit& circuit, const Observable& obs, int qubit_cap) {
    if (circuit.n_qubits() > qubit_cap) {
        throw QubitCapExceeded("circuit has " + std::to_string(circuit.n_qubits()) + " qubits, cap is " +
                               std::to_string(qubit_cap));
    }
    if (obs.n_qubits() != circuit.n_qubits()) throw std::invalid_argument("observable/circuit size mismatch");
    const auto psi = run_statevector(circuit);
    double total = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) total += std::norm(psi[i]) * obs.eigenvalue(i);
    return total;
}

std::vector<QaoaParams> select_param_pairs(int count, double low_target, const DurationTable& durations) {
    if (count < 2) throw std::invalid_argument("need at least two parameter pairs");
    // gamma in [0, pi), beta in [0, pi/2); both periods of the K4 landscape.
    constexpr int kGammaSteps = 72;
    constexpr int kBetaSteps = 36;
    const Observable obs = maxcut_observable(4);
    struct Point {
        QaoaParams params;
        double value;
    };
    std::vector<Point> grid;
    grid.reserve(kGammaSteps * kBetaSteps);
    for (int a = 0; a < kGammaSteps; ++a) {
        for (int b = 0; b < kBetaSteps; ++b) {
            QaoaParams p{std::numbers::pi * a / kGammaSteps, 0.5 * std::numbers::pi * b / kBetaSteps};
            grid.push_back({p, ideal_expectation(build_qaoa_maxcut(p, durations), obs)});
        }
    }
    const double high = std::max_element(grid.begin(), grid.end(), [](const Point& x, const Point& y) {
                            return x.value < y.value;
                        })->value;
    std::vector<QaoaParams> out;
    for (int k = 0; k < count; ++k) {
        const double target = low_target + (high - low_target) * k / (count - 1);
        const Point* best = nullptr;
        for (const Point& pt : grid) {
            bool taken = std::find(out.begin(), out.end(), pt.params) != out.end();
            if (taken) continue;
            if (!best || std::abs(pt.value - target) < std::abs(best->value - target)) best = &pt;
        }
        out.push_back(best->params);
    }
    return out;
}

}  // namespace qemlab
