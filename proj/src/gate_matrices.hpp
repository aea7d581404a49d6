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

// Internal: 2x2 gate matrices shared by the state-vector and density-matrix engines.

#ifndef QEMLAB_SRC_GATE_MATRICES_HPP
#define QEMLAB_SRC_GATE_MATRICES_HPP

#include <array>
#include <cmath>
#include <complex>

#include "qemlab/circuit.hpp"

namespace qemlab::detail {

using cplx = std::complex<double>;
/// Row-major {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

inline Mat2 gate_matrix(const Gate& g) {
    constexpr cplx i1{0.0, 1.0};
    const double s = 1.0 / std::sqrt(2.0);
    switch (g.kind()) {
        case GateKind::H:
            return {s, s, s, -s};
        case GateKind::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -i1, i1, 0.0};
        case GateKind::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::RZ: {
            double h = g.angle() / 2;
            return {std::exp(-i1 * h), 0.0, 0.0, std::exp(i1 * h)};
        }
        case GateKind::RX: {
            double h = g.angle() / 2;
            return {std::cos(h), -i1 * std::sin(h), -i1 * std::sin(h), std::cos(h)};
        }
        default:
            return {1.0, 0.0, 0.0, 1.0};
    }
}

}  // namespace qemlab::detail

#endif  // QEMLAB_SRC_GATE_MATRICES_HPP
