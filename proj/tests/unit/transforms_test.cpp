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
#include <map>
#include <set>

#include "oracle.hpp"
#include "qemlab/errors.hpp"
#include "qemlab/pipeline.hpp"
#include "qemlab/resource.hpp"
#include "qemlab/transforms.hpp"

using namespace qemlab;

namespace {

const DurationTable kD{};

oracle::Mat pauli(Pauli p) {
    switch (p) {
        case Pauli::X: return oracle::single(GateKind::X);
        case Pauli::Y: return oracle::single(GateKind::Y);
        case Pauli::Z: return oracle::single(GateKind::Z);
        default: return oracle::Mat::Identity(2, 2);
    }
}

Circuit one_cnot() { return Circuit(2, {Gate::cnot(0, 1, kD)}); }

double ideal_value(const Circuit& c) { return exact_expectation(c, NoiseModel::ideal(), maxcut_observable(4)); }

}  // namespace

TEST(RcTable, EveryRowIsCnotUpToPhaseByKronecker) {
    const oracle::Mat cx = oracle::cnot(0, 1, 2);
    for (const RcRow& row : kRcTable) {
        const oracle::Mat before = oracle::embed(pauli(row.p), 0, 2) * oracle::embed(pauli(row.q), 1, 2);
        const oracle::Mat after = oracle::embed(pauli(row.r), 0, 2) * oracle::embed(pauli(row.s), 1, 2);
        EXPECT_LT(oracle::distance_up_to_phase(after * cx * before, cx), 1e-12);
    }
}

TEST(RcTable, DressedCircuitsAreCnotUpToPhase) {
    for (std::size_t k = 0; k < kRcTable.size(); ++k) {
        const Circuit dressed = dress_cnots(one_cnot(), [&](std::size_t) { return kRcTable[k]; }, kD);
        EXPECT_LT(oracle::distance_up_to_phase(oracle::unitary(dressed), oracle::cnot(0, 1, 2)), 1e-12);
    }
}

TEST(RcTable, CoversEveryPrePair) {
    std::set<std::pair<Pauli, Pauli>> pre;
    for (const RcRow& row : kRcTable) pre.insert({row.p, row.q});
    EXPECT_EQ(pre.size(), 16u);
}

TEST(RcTable, IdentityRowLeavesCircuitUnchanged) {
    const Circuit c = build_qaoa_maxcut({0.3, 0.4}, kD);
    EXPECT_EQ(dress_cnots(c, [](std::size_t) { return kRcTable[0]; }, kD), c);
}

TEST(RandomizedCompiling, DuplicatesPreserveLogicAndAreSeeded) {
    const Circuit c = build_qaoa_maxcut({0.9, 0.2}, kD);
    const auto dups = randomize_compile(c, 8, 99, kD);
    ASSERT_EQ(dups.size(), 8u);
    EXPECT_EQ(dups, randomize_compile(c, 8, 99, kD));
    EXPECT_NE(dups, randomize_compile(c, 8, 100, kD));
    const oracle::Mat u = oracle::unitary(c);
    for (const Circuit& d : dups) {
        EXPECT_EQ(d.count(GateKind::CNOT), c.count(GateKind::CNOT));
        EXPECT_LT(oracle::distance_up_to_phase(oracle::unitary(d), u), 1e-10);
    }
}

TEST(RandomizedCompiling, RowsAreDrawnUniformly) {
    // (p, q) identifies the row, so the gates in front of the CNOT reveal the draw.
    const int n = 3200;
    std::map<std::pair<char, char>, int> seen;
    for (const Circuit& d : randomize_compile(one_cnot(), n, 17, kD)) {
        char p = 'I', q = 'I';
        for (const Gate& g : d.gates()) {
            if (g.kind() == GateKind::CNOT) break;
            (g.qubits()[0] == 0 ? p : q) = gate_kind_name(g.kind())[0];
        }
        ++seen[{p, q}];
    }
    ASSERT_EQ(seen.size(), 16u);
    const double expect = n / 16.0, sd = std::sqrt(expect * (15.0 / 16.0));
    for (const auto& [pq, count] : seen) EXPECT_NEAR(count, expect, 5 * sd);
}

TEST(Folding, LocalMultipliesCnots) {
    const Circuit c = build_qaoa_maxcut({0.3, 0.4}, kD);
    for (int s : {1, 3, 5, 7}) {
        const Circuit f = fold_local_cnot(c, s);
        EXPECT_EQ(f.count(GateKind::CNOT), 12u * s);
        EXPECT_EQ(f.gates().size(), c.gates().size() + 12u * (s - 1));
    }
    EXPECT_EQ(fold_local_cnot(c, 1), c);
    EXPECT_THROW(fold_local_cnot(c, 2), std::invalid_argument);
    EXPECT_THROW(fold_local_cnot(c, 0), std::invalid_argument);
}

TEST(Folding, GlobalRepeatsUnitaryBlock) {
    const Circuit c = build_qaoa_maxcut({0.3, 0.4}, kD);
    const std::size_t u = c.unitary_part().size();
    for (int s : {1, 3, 5}) {
        const Circuit f = fold_global(c, s);
        EXPECT_EQ(f.gates().size(), u * s + 4);
        EXPECT_LT(oracle::distance_up_to_phase(oracle::unitary(f), oracle::unitary(c)), 1e-12);
    }
    EXPECT_THROW(fold_global(c, 4), std::invalid_argument);
    const Circuit mid(2, {Gate::measure(0, kD), Gate::single(GateKind::X, 1, kD)});
    EXPECT_THROW(fold_global(mid, 3), std::invalid_argument);
}

TEST(Folding, NoiselessExpectationInvariant) {
    for (const QaoaParams& p : default_param_pairs(kD)) {
        const Circuit c = build_qaoa_maxcut(p, kD);
        const double base = ideal_value(c);
        for (FoldingKind kind : {FoldingKind::Local, FoldingKind::Global}) {
            for (int s : {1, 3, 5}) EXPECT_NEAR(ideal_value(fold(c, kind, s)), base, 1e-12);
        }
    }
}

TEST(Folding, NamesRoundTrip) {
    EXPECT_EQ(parse_folding(folding_name(FoldingKind::Global)), FoldingKind::Global);
    EXPECT_THROW(parse_folding("sideways"), std::invalid_argument);
}

TEST(DynamicalDecoupling, PreservesStartTimesAndLogic) {
    for (int s : {1, 3, 5}) {
        const Circuit c = fold_local_cnot(build_qaoa_maxcut({0.6, 0.9}, kD), s);
        const Circuit dd = insert_dd(c, kD);
        const Schedule a = schedule(c), b = schedule(dd);
        EXPECT_DOUBLE_EQ(a.total_ns, b.total_ns);
        // Original gates appear in order inside the padded circuit.
        std::size_t j = 0;
        for (std::size_t i = 0; i < dd.gates().size() && j < c.gates().size(); ++i) {
            if (dd.gates()[i] == c.gates()[j]) {
                EXPECT_NEAR(b.gate_start_ns[i], a.gate_start_ns[j], 1e-9);
                ++j;
            }
        }
        EXPECT_EQ(j, c.gates().size());
        EXPECT_LT(oracle::distance_up_to_phase(oracle::unitary(dd), oracle::unitary(c)), 1e-12);
        for (const auto& q : b.qubits)
            for (const auto& g : q.open_gaps) EXPECT_LT(g.length(), 2 * kD.single_qubit_ns);
    }
}

TEST(DynamicalDecoupling, NoiselessExpectationInvariant) {
    for (const QaoaParams& p : default_param_pairs(kD)) {
        const Circuit c = build_qaoa_maxcut(p, kD);
        EXPECT_NEAR(ideal_value(insert_dd(c, kD)), ideal_value(c), 1e-12);
    }
}

TEST(DynamicalDecoupling, SequenceShape) {
    // q0 idles from 35 ns to 935 ns until three CNOTs on (1, 2) release qubit 1.
    const Circuit c(3, {Gate::single(GateKind::H, 0, kD), Gate::single(GateKind::X, 2, kD), Gate::cnot(1, 2, kD),
                        Gate::cnot(1, 2, kD), Gate::cnot(1, 2, kD), Gate::cnot(0, 1, kD), Gate::cnot(0, 1, kD),
                        Gate::single(GateKind::H, 0, kD)});
    const Circuit dd = insert_dd(c, kD);
    const double tau = 900.0 - 70.0;
    std::vector<std::pair<GateKind, double>> q0;
    for (const Gate& g : dd.gates())
        if (g.qubits()[0] == 0 && g.qubits().size() == 1) q0.push_back({g.kind(), g.duration_ns()});
    ASSERT_EQ(q0.size(), 7u);
    EXPECT_EQ(q0[1].first, GateKind::DELAY);
    EXPECT_DOUBLE_EQ(q0[1].second, tau / 4);
    EXPECT_EQ(q0[2].first, GateKind::X);
    EXPECT_DOUBLE_EQ(q0[3].second, tau / 2);
    EXPECT_EQ(q0[4].first, GateKind::X);
    EXPECT_DOUBLE_EQ(q0[5].second, tau / 4);

    // A static detuning over the gap is refocused exactly.
    NoiseModel detuned = NoiseModel::ideal();
    detuned.idle_detuning_khz = 300.0;
    auto q0_zero = [&](const Circuit& circuit) {
        const auto p = true_outcome_distribution(circuit, detuned);
        double total = 0.0;
        for (std::size_t i = 0; i < p.size(); i += 2) total += p[i];
        return total;
    };
    EXPECT_LT(q0_zero(c), 0.9);
    EXPECT_NEAR(q0_zero(dd), 1.0, 1e-12);
}

TEST(DynamicalDecoupling, ShortGapsLeftAlone) {
    const Circuit c(2, {Gate::single(GateKind::H, 0, kD), Gate::single(GateKind::H, 1, kD),
                        Gate::single(GateKind::H, 1, kD), Gate::cnot(0, 1, kD)});
    EXPECT_EQ(insert_dd(c, kD), c);
}

TEST(Mem, ReadoutOnlyRecoversIdealDistribution) {
    NoiseModel n = NoiseModel::ideal();
    n.readout_p10 = 0.02;
    n.readout_p01 = 0.03;
    CalibrationOptions opts;
    opts.exact = true;
    const CalibrationMatrix calib = mem_calibrate(4, n, 1, opts);
    EXPECT_NO_THROW(calib.validate());
    for (const QaoaParams& p : default_param_pairs(kD)) {
        const Circuit c = build_qaoa_maxcut(p, kD);
        const auto ideal = true_outcome_distribution(c, NoiseModel::ideal());
        const auto fixed = mem_apply(calib, outcome_distribution(c, n));
        double l1 = 0;
        for (std::size_t i = 0; i < ideal.size(); ++i) l1 += std::abs(fixed[i] - ideal[i]);
        EXPECT_LT(l1, 1e-8);
    }
}

TEST(Mem, CountsPathMatchesProbabilityPath) {
    const NoiseModel n = NoiseModel::defaults();
    CalibrationOptions opts;
    opts.shots = 4000;
    UsageLedger ledger;
    const CalibrationMatrix calib = mem_calibrate(4, n, 8, opts, &ledger);
    EXPECT_EQ(ledger.distinct_circuits(), 16u);
    EXPECT_EQ(ledger.total_shots(), 16u * 4000u);
    const CountsMap counts = simulate_counts(build_qaoa_maxcut({0.4, 0.2}, kD), n, 3000, 5);
    const QuasiCounts q = mem_apply(calib, counts);
    const auto direct = mem_apply(calib, counts.frequencies());
    const auto probs = q.probabilities();
    double sum = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        EXPECT_NEAR(probs[i], direct[i], 1e-12);
        sum += probs[i];
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST(Mem, IllConditionedCalibrationRejected) {
    NoiseModel n = NoiseModel::ideal();
    n.readout_p10 = 0.5;
    n.readout_p01 = 0.5;
    CalibrationOptions opts;
    opts.exact = true;
    const CalibrationMatrix calib = mem_calibrate(2, n, 1, opts);
    EXPECT_THROW(mem_apply(calib, std::vector<double>{1, 0, 0, 0}), IllConditionedCalibration);
}

TEST(Estimation, SkeletonKeepsOnlyCnotsAndMeasurements) {
    const Circuit c = fold_local_cnot(build_qaoa_maxcut({0.3, 0.4}, kD), 3);
    const Circuit e = derive_estimation_circuit(c);
    EXPECT_EQ(e.count(GateKind::CNOT), 36u);
    EXPECT_EQ(e.count(GateKind::MEASURE), 4u);
    EXPECT_EQ(e.gates().size(), 40u);
    EXPECT_NEAR(true_outcome_distribution(e, NoiseModel::ideal())[0], 1.0, 1e-15);
    const Circuit dressed = derive_estimation_circuit(insert_dd(randomize_compile(c, 1, 3, kD)[0], kD));
    EXPECT_EQ(dressed.count(GateKind::CNOT), 36u);
}

TEST(Estimation, FactorAndFloor) {
    CountsMap counts(2, {{"00", 600}, {"01", 300}, {"11", 100}});
    EXPECT_DOUBLE_EQ(estimation_factor(counts).one_minus_p, 0.6);
    EXPECT_DOUBLE_EQ(estimation_correct(0.3, counts), 0.5);
    CountsMap bad(2, {{"00", 4}, {"01", 96}});
    try {
        estimation_factor(bad);
        FAIL() << "expected a floor breach";
    } catch (const EstimationFloorBreached& e) {
        EXPECT_DOUBLE_EQ(e.one_minus_p(), 0.04);
    }
    EXPECT_NO_THROW(estimation_factor(bad, 0.01));
    EXPECT_THROW(estimation_factor(std::vector<double>{0.0, 1.0}, 0.01), EstimationFloorBreached);
}
