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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qemlab/errors.hpp"
#include "qemlab/noisy_sim.hpp"

using namespace qemlab;

namespace {

NoiseModel only_idle(double t2_us, double detuning_khz) {
    NoiseModel n = NoiseModel::ideal();
    n.idle_dephase_t2_us = t2_us;
    n.idle_detuning_khz = detuning_khz;
    return n;
}

Circuit random_circuit(int n, int depth, std::mt19937_64& rng) {
    DurationTable d;
    std::uniform_int_distribution<int> kind(0, 5), qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-3, 3);
    std::vector<Gate> gates;
    for (int k = 0; k < depth; ++k) {
        const int q = qubit(rng);
        switch (kind(rng)) {
            case 0: gates.push_back(Gate::single(GateKind::H, q, d)); break;
            case 1: gates.push_back(Gate::rotation(GateKind::RZ, q, angle(rng), d)); break;
            case 2: gates.push_back(Gate::rotation(GateKind::RX, q, angle(rng), d)); break;
            case 3: gates.push_back(Gate::single(GateKind::Y, q, d)); break;
            case 4: gates.push_back(Gate::delay(q, 100 + 50 * k)); break;
            default: {
                const int t = (q + 1 + qubit(rng) % (n - 1)) % n;
                gates.push_back(Gate::cnot(q, t, d));
            }
        }
    }
    return Circuit(n, std::move(gates));
}

}  // namespace

TEST(NoiseModel, ValidateRejectsBadValues) {
    NoiseModel n = NoiseModel::defaults();
    EXPECT_NO_THROW(n.validate());
    n.depol_2q = 1.5;
    EXPECT_THROW(n.validate(), std::invalid_argument);
    n = NoiseModel::defaults();
    n.readout_p01 = -0.1;
    EXPECT_THROW(n.validate(), std::invalid_argument);
    n = NoiseModel::defaults();
    n.idle_dephase_t2_us = 0;
    EXPECT_THROW(n.validate(), std::invalid_argument);
}

TEST(Schedule, QaoaTimelineByHand) {
    const Schedule s = schedule(build_qaoa_maxcut({0.3, 0.2}, {}));
    EXPECT_DOUBLE_EQ(s.total_ns, 3945.0);
    ASSERT_EQ(s.qubits[3].open_gaps.size(), 1u);
    EXPECT_DOUBLE_EQ(s.qubits[3].open_gaps[0].start_ns, 35.0);
    EXPECT_DOUBLE_EQ(s.qubits[3].open_gaps[0].end_ns, 1305.0);
}

TEST(Schedule, DelayCountsAsIdleButNotOpen) {
    DurationTable d;
    const Circuit c(2, {Gate::single(GateKind::H, 0, d), Gate::delay(0, 200), Gate::single(GateKind::H, 0, d)});
    const Schedule s = schedule(c);
    ASSERT_EQ(s.qubits[0].gaps.size(), 1u);
    EXPECT_DOUBLE_EQ(s.qubits[0].gaps[0].length(), 200.0);
    EXPECT_TRUE(s.qubits[0].open_gaps.empty());
    EXPECT_DOUBLE_EQ(s.total_ns, 270.0);
}

TEST(DensityMatrix, NoiselessMatchesStatevector) {
    const Circuit c = build_qaoa_maxcut({0.77, -0.4}, {});
    const auto probs = true_outcome_distribution(c, NoiseModel::ideal());
    const oracle::Vec psi = oracle::final_state(c);
    for (std::size_t i = 0; i < probs.size(); ++i) EXPECT_NEAR(probs[i], std::norm(psi(i)), 1e-12);
}

TEST(DensityMatrix, FullDepolarizationIsMaximallyMixed) {
    DensityMatrix rho(3);
    rho.apply_1q(0, {1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), -1 / std::sqrt(2.0)});
    const int all[] = {0, 1, 2};
    rho.depolarize(all, 1.0);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) EXPECT_NEAR(std::abs(rho.at(r, c)), r == c ? 0.125 : 0.0, 1e-15);
}

TEST(DensityMatrix, RandomNoisyCircuitsStayPhysical) {
    std::mt19937_64 rng(11);
    NoiseModel n = NoiseModel::defaults();
    n.depol_1q = 0.05;
    n.depol_2q = 0.2;
    n.coherent_zz = 0.4;
    n.idle_dephase_t2_us = 0.5;
    SimOptions opts;
    opts.check_physical = true;
    for (int k = 0; k < 10; ++k) {
        const Circuit c = random_circuit(3, 25, rng);
        std::vector<double> p;
        ASSERT_NO_THROW(p = true_outcome_distribution(c, n, opts));
        double total = 0;
        for (double v : p) total += v;
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(IdleNoise, DephasingDecaysCoherence) {
    DurationTable d;
    const double t = 5000.0;
    const Circuit ramsey(1, {Gate::single(GateKind::H, 0, d), Gate::delay(0, t), Gate::single(GateKind::H, 0, d)});
    const auto p = true_outcome_distribution(ramsey, only_idle(10.0, 0.0));
    EXPECT_NEAR(p[0], 0.5 * (1 + std::exp(-t / 10000.0)), 1e-12);
}

TEST(IdleNoise, DetuningRotatesPhase) {
    DurationTable d;
    const double t = 3000.0, f = 50.0;
    const Circuit ramsey(1, {Gate::single(GateKind::H, 0, d), Gate::delay(0, t), Gate::single(GateKind::H, 0, d)});
    const auto p = true_outcome_distribution(ramsey, only_idle(20.0, f));
    const double phase = 2 * std::numbers::pi * f * t * 1e-6;
    EXPECT_NEAR(p[0], 0.5 * (1 + std::exp(-t / 20000.0) * std::cos(phase)), 1e-12);
}

TEST(IdleNoise, ImplicitGapsAreCharged) {
    DurationTable d;
    // Qubit 0 waits from 35 ns to 300 ns for the CNOT on (1, 2) to release qubit 1.
    const Circuit c(3, {Gate::single(GateKind::H, 0, d), Gate::cnot(1, 2, d), Gate::cnot(0, 1, d),
                        Gate::cnot(0, 1, d), Gate::single(GateKind::H, 0, d)});
    const auto p = true_outcome_distribution(c, only_idle(1.0, 0.0));
    EXPECT_NEAR(p[0], 0.5 * (1 + std::exp(-265.0 / 1000.0)), 1e-12);
}

TEST(Readout, ConfusionMatchesKroneckerOracle) {
    NoiseModel n = NoiseModel::ideal();
    n.readout_p10 = 0.07;
    n.readout_p01 = 0.02;
    std::vector<double> probs(8, 0.0);
    probs[0] = 0.25;
    probs[5] = 0.5;
    probs[6] = 0.25;
    Eigen::Matrix2d a;
    a << 1 - n.readout_p10, n.readout_p01, n.readout_p10, 1 - n.readout_p01;
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(1, 1);
    for (int k = 0; k < 3; ++k) {
        Eigen::MatrixXd next(m.rows() * 2, m.cols() * 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = a(i, j) * m;
        m = next;
    }
    const Eigen::VectorXd expect = m * Eigen::Map<Eigen::VectorXd>(probs.data(), 8);
    const auto got = apply_readout_confusion(probs, 3, n);
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(got[i], expect(i), 1e-15);
}

TEST(Sampling, CountsAreDeterministicAndSumToShots) {
    const Circuit c = build_qaoa_maxcut({0.5, 0.3}, {});
    const CountsMap a = simulate_counts(c, NoiseModel::defaults(), 5000, 42);
    const CountsMap b = simulate_counts(c, NoiseModel::defaults(), 5000, 42);
    const CountsMap other = simulate_counts(c, NoiseModel::defaults(), 5000, 43);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, other);
    EXPECT_EQ(a.shots(), 5000u);
}

TEST(Sampling, FrequenciesConvergeToDistribution) {
    const Circuit c = build_qaoa_maxcut({0.5, 0.3}, {});
    const auto probs = outcome_distribution(c, NoiseModel::defaults());
    const std::uint64_t shots = 200000;
    const CountsMap counts = simulate_counts(c, NoiseModel::defaults(), shots, 3);
    const auto freq = counts.frequencies();
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double sd = std::sqrt(probs[i] * (1 - probs[i]) / shots);
        EXPECT_NEAR(freq[i], probs[i], 5 * sd + 1e-12);
    }
    const Observable obs = maxcut_observable(4);
    EXPECT_NEAR(expectation_from_counts(counts, obs), expectation_from_distribution(probs, obs), 0.03);
}

TEST(Sampling, ExactExpectationMatchesDistribution) {
    const Circuit c = build_qaoa_maxcut({0.5, 0.3}, {});
    const Observable obs = maxcut_observable(4);
    EXPECT_NEAR(exact_expectation(c, NoiseModel::defaults(), obs),
                expectation_from_distribution(outcome_distribution(c, NoiseModel::defaults()), obs), 1e-15);
}

TEST(CountsMap, WidthChecked) {
    CountsMap m(2);
    EXPECT_THROW(m.add("010", 1), std::invalid_argument);
    EXPECT_THROW(m.add("0a", 1), std::invalid_argument);
    m.add("01", 3);
    m.add("01", 2);
    EXPECT_EQ(m.count("01"), 5u);
    EXPECT_EQ(m.shots(), 5u);
}

TEST(Simulator, QubitCapEnforced) {
    DurationTable d;
    const Circuit wide(9, {Gate::single(GateKind::H, 8, d)});
    EXPECT_THROW(true_outcome_distribution(wide, NoiseModel::ideal()), QubitCapExceeded);
}
