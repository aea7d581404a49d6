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

#ifndef QEMLAB_PIPELINE_HPP
#define QEMLAB_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qemlab/circuit.hpp"
#include "qemlab/extrapolation.hpp"
#include "qemlab/noisy_sim.hpp"
#include "qemlab/transforms.hpp"

namespace qemlab {

/// A composition of mitigation techniques on top of ZNE.
///
///   P1 ZNE            P5 ZNE + RC
///   P2 ZNE + MEM      P6 ZNE + RC + MEM
///   P3 ZNE + DD       P7 ZNE + RC + DD
///   P4 ZNE + DD + MEM P8 ZNE + RC + DD + MEM
///
/// A trailing "E" marks estimation-circuit correction of the values fed to ZNE.
struct PipelineSpec {
    bool use_estimation = false;
    bool use_mem = false;
    bool use_rc = false;
    bool use_dd = false;
    FoldingKind folding = FoldingKind::Local;
    FitOrder fit = FitOrder::Linear;

    std::string name() const;
    static PipelineSpec from_name(std::string_view name, FoldingKind folding = FoldingKind::Local,
                                  FitOrder fit = FitOrder::Linear);
    bool operator==(const PipelineSpec&) const = default;
};

/// All sixteen pipelines in table order: P1..P8 then P1E..P8E.
std::vector<PipelineSpec> all_pipelines(FoldingKind folding = FoldingKind::Local);

/// Parses "P1..P8,P1E..P8E", "P3,P4E" or "all" into canonical names.
std::vector<std::string> parse_pipeline_list(std::string_view list);

inline constexpr int kConfigSchemaVersion = 1;

/// Everything a run depends on. JSON round-trips through to_json/from_json.
struct ExperimentConfig {
    std::string profile = "desk";
    std::vector<QaoaParams> param_pairs;
    int repeats = 5;
    std::uint64_t shots = 2000;
    std::vector<int> scales{1, 3, 5};
    int rc_duplicates = 50;
    std::uint64_t rc_shots_per_duplicate = 40;
    int n_boot = 2000;
    int algorithm1_per_param = 1000;
    std::uint64_t calibration_shots = 2000;
    double estimation_floor = kDefaultEstimationFloor;
    FoldingKind folding = FoldingKind::Local;
    /// Infinite-shot mode: repeats use exact distributions instead of samples.
    bool exact = false;
    int qubit_cap = kDefaultQubitCap;
    NoiseModel noise = NoiseModel::defaults();
    DurationTable durations{};
    std::uint64_t master_seed = 20230117;

    /// Reduced counts for a laptop run.
    static ExperimentConfig desk();
    /// 15 repeats x 10,000 shots, 50 x 200 RC shots, 10,000 bootstrap samples.
    static ExperimentConfig paper();

    /// Throws ConfigError on any broken invariant.
    void validate() const;

    nlohmann::json to_json() const;
    /// Starts from the named profile's defaults (field "profile", default
    /// "desk") and overrides any field present.
    static ExperimentConfig from_json(const nlohmann::json& j);
    static ExperimentConfig load(const std::string& path);

    /// Hex digest of the canonical JSON form.
    std::string hash() const;
};

/// Default parameter pairs: ideal expectations spread from -0.62 to the
/// attainable maximum of the K4 landscape.
std::vector<QaoaParams> default_param_pairs(const DurationTable& durations = {});

nlohmann::json noise_to_json(const NoiseModel& noise);
NoiseModel noise_from_json(const nlohmann::json& j, NoiseModel base = NoiseModel::defaults());
nlohmann::json counts_to_json(const CountsMap& counts);
CountsMap counts_from_json(const nlohmann::json& j);

}  // namespace qemlab

#endif  // QEMLAB_PIPELINE_HPP
