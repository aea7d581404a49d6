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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "qemlab/errors.hpp"
#include "qemlab/pipeline.hpp"
#include "qemlab/seeds.hpp"

namespace qemlab {

using nlohmann::json;

namespace {

const std::set<std::string> kConfigKeys = {
    "schema_version", "profile", "param_pairs", "repeats", "shots", "scales", "rc_duplicates",
    "rc_shots_per_duplicate", "n_boot", "algorithm1_per_param", "calibration_shots", "estimation_floor",
    "folding", "exact", "qubit_cap", "noise", "durations", "master_seed"};

const std::set<std::string> kNoiseKeys = {"depol_1q", "depol_2q", "coherent_zz", "idle_dephase_t2_us",
                                          "idle_detuning_khz", "readout_p10", "readout_p01"};

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
    for (const auto& [key, _] : j.items()) {
        if (!known.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
}

}  // namespace

std::vector<QaoaParams> default_param_pairs(const DurationTable& durations) {
    return select_param_pairs(10, -0.62, durations);
}

ExperimentConfig ExperimentConfig::desk() {
    ExperimentConfig c;
    c.profile = "desk";
    c.param_pairs = default_param_pairs(c.durations);
    return c;
}

ExperimentConfig ExperimentConfig::paper() {
    ExperimentConfig c = desk();
    c.profile = "paper";
    c.repeats = 15;
    c.shots = 10000;
    c.rc_duplicates = 50;
    c.rc_shots_per_duplicate = 200;
    c.n_boot = 10000;
    c.algorithm1_per_param = 1000;
    c.calibration_shots = 10000;
    return c;
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (param_pairs.empty()) fail("param_pairs must not be empty");
    for (const QaoaParams& p : param_pairs) {
        if (!std::isfinite(p.gamma) || !std::isfinite(p.beta)) fail("parameter pairs must be finite");
    }
    if (repeats < 2) fail("repeats must be at least 2");
    if (shots < 1) fail("shots must be positive");
    if (scales.empty() || scales.front() != 1) fail("scales must start at 1");
    for (std::size_t k = 0; k < scales.size(); ++k) {
        if (scales[k] < 1 || scales[k] % 2 == 0) fail("scales must be odd positive integers");
        if (k && scales[k] <= scales[k - 1]) fail("scales must be strictly increasing");
    }
    if (scales.size() < 3) fail("quadratic extrapolation needs at least three scales");
    if (rc_duplicates < 1 || rc_shots_per_duplicate < 1) fail("RC duplicates and shots must be positive");
    if (static_cast<std::uint64_t>(rc_duplicates) * rc_shots_per_duplicate != shots) {
        fail("rc_duplicates x rc_shots_per_duplicate must equal shots");
    }
    if (n_boot < 100) fail("n_boot must be at least 100");
    if (algorithm1_per_param < 1) fail("algorithm1_per_param must be positive");
    if (calibration_shots < 1) fail("calibration_shots must be positive");
    if (!(estimation_floor > 0 && estimation_floor < 1)) fail("estimation_floor must lie in (0, 1)");
    if (qubit_cap < 4) fail("qubit_cap must admit the 4-qubit test circuit");
    try {
        noise.validate();
        durations.validate();
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

json noise_to_json(const NoiseModel& n) {
    json j;
    j["depol_1q"] = n.depol_1q;
    j["depol_2q"] = n.depol_2q;
    j["coherent_zz"] = n.coherent_zz;
    j["idle_dephase_t2_us"] = std::isinf(n.idle_dephase_t2_us) ? json(nullptr) : json(n.idle_dephase_t2_us);
    j["idle_detuning_khz"] = n.idle_detuning_khz;
    j["readout_p10"] = n.readout_p10;
    j["readout_p01"] = n.readout_p01;
    return j;
}

NoiseModel noise_from_json(const json& j, NoiseModel n) {
    if (!j.is_object()) throw ConfigError("noise must be a JSON object");
    reject_unknown(j, kNoiseKeys, "noise");
    read(j, "depol_1q", n.depol_1q);
    read(j, "depol_2q", n.depol_2q);
    read(j, "coherent_zz", n.coherent_zz);
    if (j.contains("idle_dephase_t2_us") && j.at("idle_dephase_t2_us").is_null()) {
        n.idle_dephase_t2_us = std::numeric_limits<double>::infinity();
    } else {
        read(j, "idle_dephase_t2_us", n.idle_dephase_t2_us);
    }
    read(j, "idle_detuning_khz", n.idle_detuning_khz);
    read(j, "readout_p10", n.readout_p10);
    read(j, "readout_p01", n.readout_p01);
    return n;
}

json ExperimentConfig::to_json() const {
    json j;
    j["schema_version"] = kConfigSchemaVersion;
    j["profile"] = profile;
    json pairs = json::array();
    for (const QaoaParams& p : param_pairs) pairs.push_back({p.gamma, p.beta});
    j["param_pairs"] = pairs;
    j["repeats"] = repeats;
    j["shots"] = shots;
    j["scales"] = scales;
    j["rc_duplicates"] = rc_duplicates;
    j["rc_shots_per_duplicate"] = rc_shots_per_duplicate;
    j["n_boot"] = n_boot;
    j["algorithm1_per_param"] = algorithm1_per_param;
    j["calibration_shots"] = calibration_shots;
    j["estimation_floor"] = estimation_floor;
    j["folding"] = std::string(folding_name(folding));
    j["exact"] = exact;
    j["qubit_cap"] = qubit_cap;
    j["noise"] = noise_to_json(noise);
    j["durations"] = {{"single_qubit_ns", durations.single_qubit_ns},
                      {"cnot_ns", durations.cnot_ns},
                      {"measure_ns", durations.measure_ns}};
    j["master_seed"] = master_seed;
    return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown(j, kConfigKeys, "config");
    int version = kConfigSchemaVersion;
    read(j, "schema_version", version);
    if (version != kConfigSchemaVersion) throw ConfigError("unsupported config schema_version " + std::to_string(version));

    std::string profile = "desk";
    read(j, "profile", profile);
    ExperimentConfig c;
    if (profile == "desk") {
        c = desk();
    } else if (profile == "paper") {
        c = paper();
    } else {
        throw ConfigError("unknown profile '" + profile + "'");
    }

    if (j.contains("durations")) {
        const json& d = j.at("durations");
        read(d, "single_qubit_ns", c.durations.single_qubit_ns);
        read(d, "cnot_ns", c.durations.cnot_ns);
        read(d, "measure_ns", c.durations.measure_ns);
    }
    if (j.contains("param_pairs")) {
        c.param_pairs.clear();
        for (const json& p : j.at("param_pairs")) {
            if (!p.is_array() || p.size() != 2) throw ConfigError("param_pairs entries must be [gamma, beta]");
            c.param_pairs.push_back({p[0].get<double>(), p[1].get<double>()});
        }
    }
    read(j, "repeats", c.repeats);
    read(j, "shots", c.shots);
    read(j, "scales", c.scales);
    read(j, "rc_duplicates", c.rc_duplicates);
    read(j, "rc_shots_per_duplicate", c.rc_shots_per_duplicate);
    read(j, "n_boot", c.n_boot);
    read(j, "algorithm1_per_param", c.algorithm1_per_param);
    read(j, "calibration_shots", c.calibration_shots);
    read(j, "estimation_floor", c.estimation_floor);
    if (j.contains("folding")) {
        try {
            c.folding = parse_folding(j.at("folding").get<std::string>());
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    }
    read(j, "exact", c.exact);
    read(j, "qubit_cap", c.qubit_cap);
    if (j.contains("noise")) c.noise = noise_from_json(j.at("noise"), c.noise);
    read(j, "master_seed", c.master_seed);
    c.validate();
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(j);
}

std::string ExperimentConfig::hash() const {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(to_json().dump())));
    return buf;
}

json counts_to_json(const CountsMap& counts) {
    json j = json::object();
    for (const auto& [bits, n] : counts.counts()) j[bits] = n;
    return j;
}

CountsMap counts_from_json(const json& j) {
    if (!j.is_object() || j.empty()) throw std::invalid_argument("counts must be a non-empty JSON object");
    const int width = static_cast<int>(j.begin().key().size());
    CountsMap counts(width);
    for (const auto& [bits, n] : j.items()) counts.add(bits, n.get<std::uint64_t>());
    return counts;
}

}  // namespace qemlab
