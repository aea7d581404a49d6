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

#include "qemlab/errors.hpp"
#include "qemlab/resource.hpp"

using namespace qemlab;

namespace {

double shannon(const std::vector<double>& w) {
    double total = 0, s = 0;
    for (double x : w) total += x;
    for (double x : w) s -= x / total * std::log(x / total);
    return s;
}

}  // namespace

TEST(Ledger, AggregatesByLabel) {
    UsageLedger l;
    l.record("a", 100, 1e-6, 4);
    l.record("a", 50, 1e-6, 4);
    l.record("b", 10, 2e-6, 2);
    EXPECT_EQ(l.distinct_circuits(), 2u);
    EXPECT_EQ(l.total_shots(), 160u);
    EXPECT_EQ(l.q_max(), 4);
    EXPECT_THROW(l.record("a", 1, 3e-6, 4), std::invalid_argument);
    EXPECT_THROW(l.record("c", 0, 3e-6, 4), std::invalid_argument);
}

TEST(Ledger, CsvRoundTripAndMerge) {
    UsageLedger l;
    l.record("x", 7, 1.234567890123e-6, 4);
    l.record("y", 9, 3.3e-6, 3);
    EXPECT_EQ(UsageLedger::from_csv(l.to_csv()), l);
    UsageLedger m;
    m.record("y", 1, 3.3e-6, 3);
    m.merge(l);
    EXPECT_EQ(m.total_shots(), 17u);
    EXPECT_THROW(UsageLedger::from_csv("bad header\n"), std::invalid_argument);
}

TEST(Ledger, CircuitRecordUsesScheduledLength) {
    UsageLedger l;
    const Circuit c = build_qaoa_maxcut({0.1, 0.2}, {});
    l.record(c, 10);
    l.record(c, 5);
    ASSERT_EQ(l.entries().size(), 1u);
    EXPECT_EQ(l.entries()[0].label, c.id());
    EXPECT_NEAR(l.entries()[0].duration_s, 3945e-9, 1e-18);
    EXPECT_EQ(l.entries()[0].shots, 15u);
}

TEST(Resource, WeightedShotsAndEntropyByHand) {
    UsageLedger l;
    l.record("s1", 1000, 1e-6, 4);
    l.record("s3", 1000, 3e-6, 4);
    l.record("s5", 1000, 5e-6, 2);
    EXPECT_NEAR(weighted_shots(l), 1000 * (1e-6 + 3e-6 + 5e-6 * 0.5), 1e-15);
    EXPECT_NEAR(entropy(l), shannon({1, 3, 2.5}), 1e-12);
    EXPECT_NEAR(resource(l), weighted_shots(l) * (1 + entropy(l)), 1e-15);
}

TEST(Resource, EntropyOfScaleLadder) {
    UsageLedger l;
    for (int s : {1, 3, 5}) l.record("scale" + std::to_string(s), 150000, s * 1e-6, 4);
    EXPECT_NEAR(entropy(l), 0.9369, 5e-5);

    // Splitting each circuit into 50 equal duplicates adds ln 50.
    UsageLedger refined;
    for (int s : {1, 3, 5})
        for (int d = 0; d < 50; ++d) refined.record("s" + std::to_string(s) + "d" + std::to_string(d), 3000, s * 1e-6, 4);
    EXPECT_NEAR(entropy(refined), entropy(l) + std::log(50.0), 1e-12);
    EXPECT_NEAR(weighted_shots(refined), weighted_shots(l), 1e-12);
}

TEST(Resource, SingleCircuitHasZeroEntropy) {
    UsageLedger l;
    l.record("only", 10, 1e-6, 4);
    EXPECT_DOUBLE_EQ(entropy(l), 0.0);
    EXPECT_THROW(entropy(UsageLedger{}), std::invalid_argument);
}

TEST(Quality, Definition) {
    EXPECT_NEAR(resource(1.4662, 0.9434), 2.8494, 5e-4);
    EXPECT_NEAR(quality(0.9858, 0.5397, 2.8494), 64.1009, 0.05);
    EXPECT_THROW(quality(0.9, 0.0, 1.0), DegenerateStatistics);
    EXPECT_THROW(quality(0.9, 0.5, 0.0), DegenerateStatistics);
}
