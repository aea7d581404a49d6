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

// Command line front end: run pipelines, evaluate and compare run records,
// and emit the resource/quality report.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qemlab/errors.hpp"
#include "qemlab/runner.hpp"

namespace {

using namespace qemlab;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << text;
}

std::vector<RunRecord> load_runs(const std::string& path) {
    if (std::filesystem::is_directory(path)) return load_run_dir(path);
    return {load_record(path)};
}

int cmd_run(const std::string& config_path, const std::string& pipelines, const std::string& out_dir,
            bool timestamps, bool quiet) {
    const ExperimentConfig cfg = config_path.empty() ? ExperimentConfig::desk() : ExperimentConfig::load(config_path);
    std::vector<std::string> names;
    try {
        names = parse_pipeline_list(pipelines);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    RunOptions options;
    options.timestamps = timestamps;
    options.warn = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
    for (const std::string& name : names) {
        const RunRecord rec = run_pipeline(PipelineSpec::from_name(name, cfg.folding), cfg, options);
        const std::string path = save_record(rec, out_dir);
        if (!quiet) std::cerr << name << " -> " << path << '\n';
    }
    return kExitOk;
}

int cmd_evaluate(const std::string& run, const std::string& fit, const std::string& out) {
    const FitOrder order = parse_fit(fit);
    json results = json::array();
    for (const RunRecord& rec : load_runs(run)) results.push_back(evaluation_to_json(evaluate_pipeline(rec, order)));
    write_text(out, results.dump(2) + "\n");
    return kExitOk;
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& fit) {
    const TestReport t = compare_pipelines(load_record(a), load_record(b), parse_fit(fit));
    const json j = {{"z", t.z},
                    {"p_hat_a", t.p_hat},
                    {"p_hat_b", t.p_hat_b},
                    {"pooled", t.p0},
                    {"critical", t.critical},
                    {"reject", t.reject},
                    {"ci_low_percent", t.ci_low},
                    {"ci_high_percent", t.ci_high},
                    {"reading", describe_difference(t.ci_low, t.ci_high)}};
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_report(const std::string& runs, const std::string& format, const std::string& out) {
    std::vector<ReportRow> rows;
    json evaluations = json::array();
    for (const RunRecord& rec : load_runs(runs)) {
        for (FitOrder fit : {FitOrder::Linear, FitOrder::Quadratic}) {
            const Evaluation ev = evaluate_pipeline(rec, fit);
            rows.push_back(report_row(ev));
            evaluations.push_back(evaluation_to_json(ev));
        }
    }
    if (format == "csv") {
        write_text(out, report_csv(rows));
    } else {
        write_text(out, evaluations.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_tables(const std::string& config_path) {
    const ExperimentConfig cfg = config_path.empty() ? ExperimentConfig::desk() : ExperimentConfig::load(config_path);
    std::printf("# %s\n# p q r s\n", std::string(kRcTableVersion).c_str());
    for (const RcRow& row : kRcTable) {
        std::printf("%c %c %c %c\n", pauli_char(row.p), pauli_char(row.q), pauli_char(row.r), pauli_char(row.s));
    }
    std::printf("\n# parameter pairs\n# gamma beta ideal\n");
    const Observable obs = maxcut_observable(4);
    for (const QaoaParams& p : cfg.param_pairs) {
        std::printf("%.6f %.6f %.6f\n", p.gamma, p.beta,
                    ideal_expectation(build_qaoa_maxcut(p, cfg.durations), obs, cfg.qubit_cap));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qemlab: composable error mitigation pipelines on a noisy simulator"};
    app.require_subcommand(1);

    std::string config_path, pipelines = "all", out_dir, run, fit = "linear", out, a, b, runs, format = "csv";
    bool no_timestamps = false, quiet = false;

    auto* run_cmd = app.add_subcommand("run", "execute pipelines and write one record per pipeline");
    run_cmd->add_option("--config", config_path, "experiment config JSON (default: desk profile)");
    run_cmd->add_option("--pipelines", pipelines, "e.g. P1..P8,P1E..P8E or all");
    run_cmd->add_option("--out", out_dir, "run directory")->required();
    run_cmd->add_flag("--no-timestamps", no_timestamps, "omit wall-clock times from records");
    run_cmd->add_flag("--quiet", quiet, "do not print per-pipeline progress");

    auto* eval_cmd = app.add_subcommand("evaluate", "score run records under one fit");
    eval_cmd->add_option("--run", run, "run directory or record file")->required();
    eval_cmd->add_option("--fit", fit)->check(CLI::IsMember({"linear", "quadratic"}));
    eval_cmd->add_option("--out", out, "output JSON (default: stdout)");

    auto* cmp_cmd = app.add_subcommand("compare", "two-sample test of record A against record B");
    cmp_cmd->add_option("--a", a)->required();
    cmp_cmd->add_option("--b", b)->required();
    cmp_cmd->add_option("--fit", fit)->check(CLI::IsMember({"linear", "quadratic"}));

    auto* rep_cmd = app.add_subcommand("report", "evaluate every record under both fits");
    rep_cmd->add_option("--runs", runs, "run directory")->required();
    rep_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    rep_cmd->add_option("--out", out, "output file (default: stdout)");

    auto* tab_cmd = app.add_subcommand("tables", "print the RC table and parameter pairs");
    tab_cmd->add_option("--config", config_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*run_cmd) return cmd_run(config_path, pipelines, out_dir, !no_timestamps, quiet);
        if (*eval_cmd) return cmd_evaluate(run, fit, out);
        if (*cmp_cmd) return cmd_compare(a, b, fit);
        if (*rep_cmd) return cmd_report(runs, format, out);
        if (*tab_cmd) return cmd_tables(config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DegenerateStatistics& e) {
        std::cerr << "degenerate statistics: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
