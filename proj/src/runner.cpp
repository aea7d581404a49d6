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

#include <chrono>
#include <ctime>
#include <map>
#include <optional>

#include "qemlab/errors.hpp"
#include "qemlab/runner.hpp"
#include "qemlab/seeds.hpp"

namespace qemlab {

namespace {

constexpr int kWidth = 4;

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Executes one parameter pair. Holds the per-pair distribution cache so every
// distinct circuit is simulated once regardless of how many repeats sample it.
class ParameterTask {
   public:
    ParameterTask(const PipelineSpec& spec, const ExperimentConfig& cfg, const CalibrationMatrix* calib,
                  std::size_t index)
        : spec_(spec), cfg_(cfg), calib_(calib), index_(index), sim_{cfg.qubit_cap, false, 1e-9} {}

    // Transformed copies of `circuit` that are executed in place of it.
    std::vector<Circuit> variants(const Circuit& circuit, std::uint64_t role, std::size_t scale_index) const {
        std::vector<Circuit> out;
        if (spec_.use_rc) {
            out = randomize_compile(circuit, cfg_.rc_duplicates,
                                    derive_seed(cfg_.master_seed, {role, index_, scale_index}), cfg_.durations);
        } else {
            out.push_back(circuit);
        }
        if (spec_.use_dd) {
            for (Circuit& c : out) c = insert_dd(c, cfg_.durations);
        }
        return out;
    }

    std::uint64_t shots_per_circuit() const { return spec_.use_rc ? cfg_.rc_shots_per_duplicate : cfg_.shots; }

    // Measured (and MEM-corrected when enabled) outcome distribution of one
    // repeat over the circuit set, with shots split evenly across it.
    std::vector<double> measure(const std::vector<Circuit>& circuits, std::uint64_t role, std::size_t scale_index,
                                int repeat) {
        const std::size_t dim = std::size_t{1} << kWidth;
        std::vector<double> probs(dim, 0.0);
        if (cfg_.exact) {
            for (const Circuit& c : circuits) {
                const auto& d = distribution(c);
                for (std::size_t i = 0; i < dim; ++i) probs[i] += d[i] / static_cast<double>(circuits.size());
            }
        } else {
            CountsMap counts(kWidth);
            for (std::size_t d = 0; d < circuits.size(); ++d) {
                std::mt19937_64 rng(derive_seed(cfg_.master_seed,
                                                {role, index_, scale_index, static_cast<std::uint64_t>(repeat), d}));
                counts.merge(sample_counts(distribution(circuits[d]), kWidth, shots_per_circuit(), rng));
            }
            probs = counts.frequencies();
        }
        if (calib_) probs = mem_apply(*calib_, probs);
        return probs;
    }

    ParameterResult run(const QaoaParams& params, const std::function<void(const std::string&)>& warn) {
        const Observable obs = maxcut_observable(kWidth);
        const Circuit base = build_qaoa_maxcut(params, cfg_.durations);
        ParameterResult pr;
        pr.params = params;
        pr.ideal = ideal_expectation(base, obs, cfg_.qubit_cap);
        const std::size_t n_scales = cfg_.scales.size();
        pr.samples.scales.assign(cfg_.scales.begin(), cfg_.scales.end());
        pr.samples.samples.assign(n_scales, std::vector<double>(static_cast<std::size_t>(cfg_.repeats), 0.0));

        for (std::size_t k = 0; k < n_scales; ++k) {
            const Circuit folded = fold(base, spec_.folding, cfg_.scales[k]);
            const std::vector<Circuit> main = variants(folded, tag("rc-main"), k);
            std::vector<Circuit> est;
            if (spec_.use_estimation) est = variants(derive_estimation_circuit(folded), tag("rc-estimation"), k);
            const std::uint64_t budget = static_cast<std::uint64_t>(cfg_.repeats) * shots_per_circuit();
            for (const Circuit& c : main) pr.ledger.record(c, budget);
            for (const Circuit& c : est) pr.ledger.record(c, budget);

            for (int r = 0; r < cfg_.repeats; ++r) {
                double value = expectation_from_distribution(measure(main, tag("shots-main"), k, r), obs);
                if (spec_.use_estimation) {
                    const auto est_probs = measure(est, tag("shots-estimation"), k, r);
                    pr.min_one_minus_p = std::min(pr.min_one_minus_p, est_probs[0]);
                    try {
                        value /= estimation_factor(est_probs, cfg_.estimation_floor).one_minus_p;
                    } catch (const EstimationFloorBreached& e) {
                        if (!pr.excluded && warn) {
                            warn(spec_.name() + ": parameter " + std::to_string(index_) + " excluded, " + e.what());
                        }
                        pr.excluded = true;
                        pr.reason = e.what();
                    }
                }
                pr.samples.samples[k][static_cast<std::size_t>(r)] = value;
            }
        }

        if (!pr.excluded) {
            const std::uint64_t name = tag(spec_.name());
            pr.linear = bootstrap_zero_noise(pr.samples, FitOrder::Linear, cfg_.n_boot,
                                             derive_seed(cfg_.master_seed, {tag("bootstrap"), name, index_, 1}));
            pr.quadratic = bootstrap_zero_noise(pr.samples, FitOrder::Quadratic, cfg_.n_boot,
                                                derive_seed(cfg_.master_seed, {tag("bootstrap"), name, index_, 2}));
        }
        return pr;
    }

   private:
    const std::vector<double>& distribution(const Circuit& c) {
        auto [it, fresh] = cache_.try_emplace(c.label());
        if (fresh) it->second = outcome_distribution(c, cfg_.noise, sim_);
        return it->second;
    }

    const PipelineSpec& spec_;
    const ExperimentConfig& cfg_;
    const CalibrationMatrix* calib_;
    std::size_t index_;
    SimOptions sim_;
    std::map<std::string, std::vector<double>> cache_;
};

}  // namespace

RunRecord run_pipeline(const PipelineSpec& spec, const ExperimentConfig& config, const RunOptions& options) {
    config.validate();
    RunRecord rec;
    rec.pipeline = spec.name();
    rec.spec = spec;
    rec.spec.fit = FitOrder::Linear;
    rec.config = config.to_json();
    rec.config_hash = config.hash();
    rec.seed = config.master_seed;
    if (options.timestamps) rec.started_at = utc_now();

    // One calibration per run, charged to every parameter's ledger.
    std::optional<CalibrationMatrix> calib;
    UsageLedger calib_ledger;
    if (spec.use_mem) {
        CalibrationOptions co;
        co.shots = config.calibration_shots;
        co.exact = config.exact;
        co.durations = config.durations;
        co.sim.qubit_cap = config.qubit_cap;
        calib = mem_calibrate(kWidth, config.noise, derive_seed(config.master_seed, {tag("mem-calibration")}), co,
                              &calib_ledger);
    }

    for (std::size_t i = 0; i < config.param_pairs.size(); ++i) {
        ParameterTask task(spec, config, calib ? &*calib : nullptr, i);
        ParameterResult pr = task.run(config.param_pairs[i], options.warn);
        pr.ledger.merge(calib_ledger);
        rec.parameters.push_back(std::move(pr));
    }
    if (options.timestamps) rec.finished_at = utc_now();
    return rec;
}

QualityScore pipeline_resource(const RunRecord& record) {
    if (record.parameters.empty()) throw std::invalid_argument("run record has no parameters");
    QualityScore q;
    for (const ParameterResult& p : record.parameters) {
        q.T += weighted_shots(p.ledger);
        q.S += entropy(p.ledger);
    }
    q.T /= static_cast<double>(record.parameters.size());
    q.S /= static_cast<double>(record.parameters.size());
    q.R = resource(q.T, q.S);
    return q;
}

Evaluation evaluate_pipeline(const RunRecord& record, FitOrder fit) {
    std::vector<double> ideals;
    for (const ParameterResult& p : record.parameters) ideals.push_back(p.ideal);
    return evaluate_pipeline(record, fit, ideals);
}

Evaluation evaluate_pipeline(const RunRecord& record, FitOrder fit, const std::vector<double>& ideal_values) {
    if (ideal_values.size() != record.parameters.size()) {
        throw std::invalid_argument("need one ideal value per parameter pair");
    }
    const ExperimentConfig cfg = record.experiment_config();
    Evaluation ev;
    ev.pipeline = record.pipeline;
    ev.fit = fit;
    std::vector<ExpectationTriple> triples;
    for (std::size_t i = 0; i < record.parameters.size(); ++i) {
        const ParameterResult& p = record.parameters[i];
        if (p.excluded) {
            ++ev.excluded;
            continue;
        }
        const ZneEstimate& e = p.estimate(fit);
        triples.push_back({ideal_values[i], {e.mu_lambda0, e.sigma_lambda0}, {e.mu_lambda1, e.sigma_lambda1}});
    }
    if (triples.empty()) throw DegenerateStatistics(record.pipeline + ": every parameter pair was excluded");

    const std::uint64_t name = tag(record.pipeline);
    const auto fit_code = static_cast<std::uint64_t>(fit);
    ev.population = sample_rem_population(triples, cfg.algorithm1_per_param,
                                          derive_seed(record.seed, {tag("algorithm1"), name, fit_code}));
    ev.test = one_sample_prop_test(ev.population.successes, ev.population.n(), 0.5);
    ev.score = pipeline_resource(record);
    ev.score.psr = psr(ev.population.successes, ev.population.n());
    ev.score.epsilon = median_rem_upper(ev.population.rem_values, cfg.n_boot,
                                        derive_seed(record.seed, {tag("median-rem"), name, fit_code}));
    ev.score.M = quality(ev.score.psr, ev.score.epsilon, ev.score.R);
    return ev;
}

TestReport compare_evaluations(const Evaluation& a, const Evaluation& b) {
    return two_sample_prop_test(a.population.successes, a.population.n(), b.population.successes, b.population.n());
}

TestReport compare_pipelines(const RunRecord& a, const RunRecord& b, FitOrder fit) {
    const ExperimentConfig ca = a.experiment_config();
    const ExperimentConfig cb = b.experiment_config();
    if (ca.param_pairs != cb.param_pairs) throw ConfigError("runs used different parameter pairs");
    if (ca.algorithm1_per_param != cb.algorithm1_per_param) throw ConfigError("runs used different per_param counts");
    const Evaluation ea = evaluate_pipeline(a, fit);
    const Evaluation eb = evaluate_pipeline(b, fit);
    if (ea.population.n() != eb.population.n()) {
        throw ConfigError("REM populations differ in size (excluded parameters: " + std::to_string(ea.excluded) +
                          " vs " + std::to_string(eb.excluded) + ")");
    }
    return compare_evaluations(ea, eb);
}

}  // namespace qemlab
