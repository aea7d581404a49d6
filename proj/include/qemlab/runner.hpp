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

#ifndef QEMLAB_RUNNER_HPP
#define QEMLAB_RUNNER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qemlab/extrapolation.hpp"
#include "qemlab/pipeline.hpp"
#include "qemlab/resource.hpp"
#include "qemlab/stats.hpp"

namespace qemlab {

inline constexpr int kRunRecordSchemaVersion = 1;

/// Outcome of one parameter pair within a run.
struct ParameterResult {
    QaoaParams params{};
    double ideal = 0.0;
    /// Repeat-level (mitigated) expectation values per noise scale.
    ScaledSamples samples;
    ZneEstimate linear;
    ZneEstimate quadratic;
    /// Smallest 1 - p seen across estimation circuits; 1 when estimation is off.
    double min_one_minus_p = 1.0;
    /// Set when an estimation circuit fell below the floor. Excluded
    /// parameters keep their ledger but do not enter the REM population.
    bool excluded = false;
    std::string reason;
    UsageLedger ledger;

    const ZneEstimate& estimate(FitOrder fit) const { return fit == FitOrder::Linear ? linear : quadratic; }
};

/// Everything one pipeline execution produced. Immutable once written.
struct RunRecord {
    int schema_version = kRunRecordSchemaVersion;
    std::string pipeline;
    PipelineSpec spec;
    nlohmann::json config;
    std::string config_hash;
    std::uint64_t seed = 0;
    /// ISO-8601 UTC; empty when the run was asked not to stamp times.
    std::string started_at;
    std::string finished_at;
    std::vector<ParameterResult> parameters;

    ExperimentConfig experiment_config() const;
    nlohmann::json to_json() const;
    /// Verifies the schema version and that the stored hash matches the stored config.
    static RunRecord from_json(const nlohmann::json& j);
};

/// Writes `<dir>/<pipeline>.json`, creating `dir` if needed. Refuses to
/// overwrite an existing record. Returns the path written.
std::string save_record(const RunRecord& record, const std::string& dir);
RunRecord load_record(const std::string& path);
/// All records in `dir`, in table order (P1..P8, P1E..P8E).
std::vector<RunRecord> load_run_dir(const std::string& dir);

struct RunOptions {
    bool timestamps = true;
    /// Called with human-readable warnings (estimation floor breaches).
    std::function<void(const std::string&)> warn;
};

/// Executes `spec` over every parameter pair of `config`. The folding kind is
/// taken from `spec`; both fits are bootstrapped and stored.
RunRecord run_pipeline(const PipelineSpec& spec, const ExperimentConfig& config, const RunOptions& options = {});

/// Mean T and S over the per-parameter ledgers and R = T (1 + S).
QualityScore pipeline_resource(const RunRecord& record);

/// One-row summary of a pipeline under one fit.
struct Evaluation {
    std::string pipeline;
    FitOrder fit = FitOrder::Linear;
    QualityScore score;
    RemPopulation population;
    TestReport test;
    std::size_t excluded = 0;
};

/// Algorithm 1 over the non-excluded parameters, the one-sided test at
/// p0 = 0.5 with its interval, PSR, the median REM bound and M.
Evaluation evaluate_pipeline(const RunRecord& record, FitOrder fit);
/// Same, with externally supplied ideal values (one per parameter pair).
Evaluation evaluate_pipeline(const RunRecord& record, FitOrder fit, const std::vector<double>& ideal_values);

/// Two-sample test of A against B; a positive interval means A succeeds more
/// often. Throws ConfigError when the runs used different parameter pairs or
/// population sizes.
TestReport compare_pipelines(const RunRecord& a, const RunRecord& b, FitOrder fit);
TestReport compare_evaluations(const Evaluation& a, const Evaluation& b);

struct ReportRow {
    std::string pipeline;
    FitOrder fit = FitOrder::Linear;
    double T = 0.0, S = 0.0, R = 0.0;
    double rem_median_upper = 0.0;
    double psr = 0.0;
    double M = 0.0;
    bool significant = false;
};

ReportRow report_row(const Evaluation& evaluation);
/// Columns pipeline,fit,T,S,R,REM_median_upper,PSR,M,significant.
std::string report_csv(const std::vector<ReportRow>& rows);
nlohmann::json evaluation_to_json(const Evaluation& evaluation);

}  // namespace qemlab

#endif  // QEMLAB_RUNNER_HPP
