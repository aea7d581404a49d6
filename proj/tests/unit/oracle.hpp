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

// Reference linear algebra for the tests: full 2^n x 2^n operators built
// from Kronecker products, independent of the library's gate kernels.

#ifndef QEMLAB_TESTS_ORACLE_HPP
#define QEMLAB_TESTS_ORACLE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "qemlab/circuit.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Mat single(qemlab::GateKind kind, double angle = 0.0) {
    using qemlab::GateKind;
    const cplx i(0, 1);
    Mat m(2, 2);
    switch (kind) {
        case GateKind::H: m << 1, 1, 1, -1; return m / std::sqrt(2.0);
        case GateKind::X: m << 0, 1, 1, 0; return m;
        case GateKind::Y: m << 0, -i, i, 0; return m;
        case GateKind::Z: m << 1, 0, 0, -1; return m;
        case GateKind::RZ: m << std::exp(-i * angle / 2.0), 0, 0, std::exp(i * angle / 2.0); return m;
        case GateKind::RX:
            m << std::cos(angle / 2), -i * std::sin(angle / 2), -i * std::sin(angle / 2), std::cos(angle / 2);
            return m;
        default: return Mat::Identity(2, 2);
    }
}

// Operator acting with `m` on qubit q of n; qubit q is bit q of the basis index.
inline Mat embed(const Mat& m, int q, int n) {
    Mat out = Mat::Identity(1, 1);
    for (int k = n - 1; k >= 0; --k) out = kron(out, k == q ? m : Mat::Identity(2, 2));
    return out;
}

inline Mat cnot(int c, int t, int n) {
    Mat p0(2, 2), p1(2, 2);
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    return embed(p0, c, n) + embed(p1, c, n) * embed(single(qemlab::GateKind::X), t, n);
}

inline Mat unitary(const qemlab::Circuit& circuit) {
    const int n = circuit.n_qubits();
    Mat u = Mat::Identity(1 << n, 1 << n);
    for (const qemlab::Gate& g : circuit.gates()) {
        switch (g.kind()) {
            case qemlab::GateKind::MEASURE:
            case qemlab::GateKind::DELAY: break;
            case qemlab::GateKind::CNOT: u = cnot(g.qubits()[0], g.qubits()[1], n) * u; break;
            default: u = embed(single(g.kind(), g.angle()), g.qubits()[0], n) * u;
        }
    }
    return u;
}

inline Vec final_state(const qemlab::Circuit& circuit) { return unitary(circuit).col(0); }

inline double expectation(const qemlab::Circuit& circuit, const qemlab::Observable& obs) {
    const Vec psi = final_state(circuit);
    double e = 0.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) e += std::norm(psi(i)) * obs.eigenvalue(static_cast<std::uint64_t>(i));
    return e;
}

// max |a - e^{i phi} b| over the best global phase.
inline double distance_up_to_phase(const Mat& a, const Mat& b) {
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    const cplx phase = a(r, c) / b(r, c);
    if (std::abs(std::abs(phase) - 1.0) > 1e-9) return std::abs(std::abs(phase) - 1.0);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace oracle

#endif  // QEMLAB_TESTS_ORACLE_HPP
