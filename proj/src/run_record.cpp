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
#include <filesystem>
#include <fstream>
#include <regex>

#include "qemlab/errors.hpp"
#include "qemlab/runner.hpp"

namespace qemlab {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json estimate_to_json(const ZneEstimate& e) {
    return {{"mu_lambda0", e.mu_lambda0},
            {"sigma_lambda0", e.sigma_lambda0},
            {"mu_lambda1", e.mu_lambda1},
            {"sigma_lambda1", e.sigma_lambda1}};
}

ZneEstimate estimate_from_json(const json& j) {
    return {j.at("mu_lambda0").get<double>(), j.at("sigma_lambda0").get<double>(), j.at("mu_lambda1").get<double>(),
            j.at("sigma_lambda1").get<double>()};
}

json ledger_to_json(const UsageLedger& ledger) {
    json rows = json::array();
    for (const CircuitUsage& u : ledger.entries()) {
        rows.push_back({{"label", u.label}, {"shots", u.shots}, {"duration_s", u.duration_s}, {"qubits", u.qubits}});
    }
    return rows;
}

UsageLedger ledger_from_json(const json& rows) {
    UsageLedger ledger;
    for (const json& r : rows) {
        ledger.record(r.at("label").get<std::string>(), r.at("shots").get<std::uint64_t>(),
                      r.at("duration_s").get<double>(), r.at("qubits").get<int>());
    }
    return ledger;
}

json parameter_to_json(const ParameterResult& p) {
    return {{"gamma", p.params.gamma},
            {"beta", p.params.beta},
            {"ideal", p.ideal},
            {"scales", p.samples.scales},
            {"samples", p.samples.samples},
            {"linear", estimate_to_json(p.linear)},
            {"quadratic", estimate_to_json(p.quadratic)},
            {"min_one_minus_p", p.min_one_minus_p},
            {"excluded", p.excluded},
            {"reason", p.reason},
            {"ledger", ledger_to_json(p.ledger)}};
}

ParameterResult parameter_from_json(const json& j) {
    ParameterResult p;
    p.params = {j.at("gamma").get<double>(), j.at("beta").get<double>()};
    p.ideal = j.at("ideal").get<double>();
    p.samples.scales = j.at("scales").get<std::vector<double>>();
    p.samples.samples = j.at("samples").get<std::vector<std::vector<double>>>();
    p.linear = estimate_from_json(j.at("linear"));
    p.quadratic = estimate_from_json(j.at("quadratic"));
    p.min_one_minus_p = j.at("min_one_minus_p").get<double>();
    p.excluded = j.at("excluded").get<bool>();
    p.reason = j.at("reason").get<std::string>();
    p.ledger = ledger_from_json(j.at("ledger"));
    return p;
}

const std::regex kRecordStem("P[1-8]E?");

int table_position(const std::string& name) {
    const PipelineSpec s = PipelineSpec::from_name(name);
    const int k = 1 + (s.use_mem ? 1 : 0) + (s.use_dd ? 2 : 0) + (s.use_rc ? 4 : 0);
    return k + (s.use_estimation ? 8 : 0);
}

}  // namespace

ExperimentConfig RunRecord::experiment_config() const { return ExperimentConfig::from_json(config); }

json RunRecord::to_json() const {
    json params = json::array();
    for (const ParameterResult& p : parameters) params.push_back(parameter_to_json(p));
    return {{"schema_version", schema_version},
            {"pipeline", pipeline},
            {"spec",
             {{"use_estimation", spec.use_estimation},
              {"use_mem", spec.use_mem},
              {"use_rc", spec.use_rc},
              {"use_dd", spec.use_dd},
              {"folding", std::string(folding_name(spec.folding))}}},
            {"config", config},
            {"config_hash", config_hash},
            {"seed", seed},
            {"started_at", started_at},
            {"finished_at", finished_at},
            {"parameters", params}};
}

RunRecord RunRecord::from_json(const json& j) {
    RunRecord r;
    try {
        r.schema_version = j.at("schema_version").get<int>();
        if (r.schema_version != kRunRecordSchemaVersion) {
            throw ConfigError("unsupported run record schema_version " + std::to_string(r.schema_version));
        }
        r.pipeline = j.at("pipeline").get<std::string>();
        const json& s = j.at("spec");
        r.spec = PipelineSpec::from_name(r.pipeline, parse_folding(s.at("folding").get<std::string>()));
        if (r.spec.use_estimation != s.at("use_estimation").get<bool>() || r.spec.use_mem != s.at("use_mem").get<bool>() ||
            r.spec.use_rc != s.at("use_rc").get<bool>() || r.spec.use_dd != s.at("use_dd").get<bool>()) {
            throw ConfigError("run record flags do not match pipeline " + r.pipeline);
        }
        r.config = j.at("config");
        r.config_hash = j.at("config_hash").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.started_at = j.at("started_at").get<std::string>();
        r.finished_at = j.at("finished_at").get<std::string>();
        for (const json& p : j.at("parameters")) r.parameters.push_back(parameter_from_json(p));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed run record: ") + e.what());
    }
    if (r.experiment_config().hash() != r.config_hash) {
        throw ConfigError("run record " + r.pipeline + ": config hash does not match the stored config");
    }
    return r;
}

std::string save_record(const RunRecord& record, const std::string& dir) {
    fs::create_directories(dir);
    const fs::path path = fs::path(dir) / (record.pipeline + ".json");
    if (fs::exists(path)) throw ConfigError("refusing to overwrite existing record " + path.string());
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << record.to_json().dump(1) << '\n';
    return path.string();
}

RunRecord load_record(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open run record '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("run record '" + path + "' is not valid JSON: " + e.what());
    }
    return RunRecord::from_json(j);
}

std::vector<RunRecord> load_run_dir(const std::string& dir) {
    if (!fs::is_directory(dir)) throw ConfigError("'" + dir + "' is not a run directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        if (std::regex_match(entry.path().stem().string(), kRecordStem)) files.push_back(entry.path());
    }
    std::vector<RunRecord> records;
    for (const fs::path& f : files) records.push_back(load_record(f.string()));
    std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
        return table_position(a.pipeline) < table_position(b.pipeline);
    });
    if (records.empty()) throw ConfigError("no run records in '" + dir + "'");
    return records;
}

}  // namespace qemlab
