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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qemlab/errors.hpp"
#include "qemlab/runner.hpp"

namespace py = pybind11;
using namespace qemlab;

namespace {

// Records, configs and reports cross the boundary as JSON text.
py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_python(const py::object& o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

UsageLedger ledger_from(const std::vector<std::tuple<std::string, std::uint64_t, double, int>>& rows) {
    UsageLedger ledger;
    for (const auto& [label, shots, duration_s, qubits] : rows) ledger.record(label, shots, duration_s, qubits);
    return ledger;
}

py::dict report_dict(const TestReport& r) {
    py::dict d;
    d["z"] = r.z;
    d["p_hat"] = r.p_hat;
    d["critical"] = r.critical;
    d["reject"] = r.reject;
    d["ci_low"] = r.ci_low;
    d["ci_high"] = r.ci_high;
    return d;
}

}  // namespace

PYBIND11_MODULE(qemlab, m) {
    m.doc() = "Error-mitigation pipelines on a density-matrix simulator, with statistical scoring";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DegenerateStatistics>(m, "DegenerateStatistics", PyExc_ArithmeticError);
    py::register_exception<QubitCapExceeded>(m, "QubitCapExceeded", PyExc_ValueError);
    py::register_exception<IllConditionedCalibration>(m, "IllConditionedCalibration", PyExc_ArithmeticError);

    py::class_<NoiseModel>(m, "NoiseModel")
        .def(py::init(&NoiseModel::defaults))
        .def_static("ideal", &NoiseModel::ideal)
        .def_readwrite("depol_1q", &NoiseModel::depol_1q)
        .def_readwrite("depol_2q", &NoiseModel::depol_2q)
        .def_readwrite("coherent_zz", &NoiseModel::coherent_zz)
        .def_readwrite("idle_dephase_t2_us", &NoiseModel::idle_dephase_t2_us)
        .def_readwrite("idle_detuning_khz", &NoiseModel::idle_detuning_khz)
        .def_readwrite("readout_p10", &NoiseModel::readout_p10)
        .def_readwrite("readout_p01", &NoiseModel::readout_p01);

    py::class_<Circuit>(m, "Circuit")
        .def_static("parse", [](const std::string& text) { return parse_circuit(text); })
        .def_property_readonly("n_qubits", &Circuit::n_qubits)
        .def_property_readonly("id", &Circuit::id)
        .def("__len__", [](const Circuit& c) { return c.gates().size(); })
        .def("__str__", [](const Circuit& c) { return serialize_circuit(c); })
        .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
        .def("cnot_count", [](const Circuit& c) { return c.count(GateKind::CNOT); });

    m.def(
        "qaoa_circuit", [](double gamma, double beta) { return build_qaoa_maxcut({gamma, beta}, DurationTable{}); },
        py::arg("gamma"), py::arg("beta"));
    m.def("default_param_pairs", []() {
        std::vector<std::pair<double, double>> out;
        for (const QaoaParams& p : default_param_pairs()) out.emplace_back(p.gamma, p.beta);
        return out;
    });
    m.def("ideal_value", [](const Circuit& c) { return ideal_expectation(c, maxcut_observable(c.n_qubits())); });
    m.def(
        "noisy_value",
        [](const Circuit& c, const NoiseModel& noise) {
            return exact_expectation(c, noise, maxcut_observable(c.n_qubits()));
        },
        py::arg("circuit"), py::arg("noise") = NoiseModel::defaults());
    m.def(
        "distribution",
        [](const Circuit& c, const NoiseModel& noise) { return outcome_distribution(c, noise); },
        py::arg("circuit"), py::arg("noise") = NoiseModel::defaults());
    m.def(
        "sample_counts",
        [](const Circuit& c, const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed) {
            return simulate_counts(c, noise, shots, seed).counts();
        },
        py::arg("circuit"), py::arg("noise"), py::arg("shots"), py::arg("seed"));

    m.def(
        "fold",
        [](const Circuit& c, int scale, const std::string& kind) { return fold(c, parse_folding(kind), scale); },
        py::arg("circuit"), py::arg("scale"), py::arg("kind") = "local");
    m.def(
        "randomize_compile",
        [](const Circuit& c, int n, std::uint64_t seed) { return randomize_compile(c, n, seed); },
        py::arg("circuit"), py::arg("n_duplicates"), py::arg("seed"));
    m.def(
        "insert_dd", [](const Circuit& c) { return insert_dd(c, DurationTable{}); }, py::arg("circuit"));

    m.def(
        "fit_extrapolate",
        [](const std::vector<std::pair<double, double>>& points, const std::string& fit) {
            std::vector<ScalePoint> pts;
            for (const auto& [s, v] : points) pts.push_back({s, v});
            return fit_extrapolate(pts, parse_fit(fit));
        },
        py::arg("points"), py::arg("fit"));
    m.def("rem", &rem, py::arg("ideal"), py::arg("mitigated"), py::arg("noisy"));
    m.def(
        "one_sample_test",
        [](std::uint64_t x, std::uint64_t n, double p0) { return report_dict(one_sample_prop_test(x, n, p0)); },
        py::arg("x"), py::arg("n"), py::arg("p0") = 0.5);
    m.def(
        "two_sample_test",
        [](std::uint64_t xa, std::uint64_t na, std::uint64_t xb, std::uint64_t nb) {
            return report_dict(two_sample_prop_test(xa, na, xb, nb));
        },
        py::arg("xa"), py::arg("na"), py::arg("xb"), py::arg("nb"));
    m.def("psr", &psr, py::arg("x"), py::arg("n"));

    m.def(
        "entropy", [](const std::vector<std::tuple<std::string, std::uint64_t, double, int>>& rows) {
            return entropy(ledger_from(rows));
        },
        py::arg("ledger"), "Ledger rows are (label, shots, duration_s, qubits).");
    m.def(
        "resource",
        [](const std::vector<std::tuple<std::string, std::uint64_t, double, int>>& rows) {
            return resource(ledger_from(rows));
        },
        py::arg("ledger"));
    m.def("quality", &quality, py::arg("psr"), py::arg("epsilon"), py::arg("resource"));

    m.def(
        "config",
        [](const py::object& overrides) {
            const ExperimentConfig cfg =
                ExperimentConfig::from_json(overrides.is_none() ? nlohmann::json::object() : from_python(overrides));
            cfg.validate();
            return to_python(cfg.to_json());
        },
        py::arg("overrides") = py::none(), "Full configuration dict for the given overrides.");
    m.def(
        "run",
        [](const std::string& pipeline, const py::object& config) {
            const ExperimentConfig cfg = ExperimentConfig::from_json(from_python(config));
            cfg.validate();
            RunOptions options;
            options.timestamps = false;
            RunRecord rec;
            {
                py::gil_scoped_release release;
                rec = run_pipeline(PipelineSpec::from_name(pipeline, cfg.folding), cfg, options);
            }
            return to_python(rec.to_json());
        },
        py::arg("pipeline"), py::arg("config"));
    m.def(
        "evaluate",
        [](const py::object& record, const std::string& fit) {
            const RunRecord rec = RunRecord::from_json(from_python(record));
            return to_python(evaluation_to_json(evaluate_pipeline(rec, parse_fit(fit))));
        },
        py::arg("record"), py::arg("fit") = "linear");
}
