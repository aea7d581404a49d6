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

#include <cstdio>
#include <sstream>

#include "qemlab/runner.hpp"

namespace qemlab {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

ReportRow report_row(const Evaluation& ev) {
    ReportRow row;
    row.pipeline = ev.pipeline;
    row.fit = ev.fit;
    row.T = ev.score.T;
    row.S = ev.score.S;
    row.R = ev.score.R;
    row.rem_median_upper = ev.score.epsilon;
    row.psr = ev.score.psr;
    row.M = ev.score.M;
    row.significant = ev.test.reject;
    return row;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "pipeline,fit,T,S,R,REM_median_upper,PSR,M,significant\n";
    for (const ReportRow& r : rows) {
        out << r.pipeline << ',' << fit_name(r.fit) << ',' << num(r.T) << ',' << num(r.S) << ',' << num(r.R) << ','
            << num(r.rem_median_upper) << ',' << num(r.psr) << ',' << num(r.M) << ',' << (r.significant ? 1 : 0)
            << '\n';
    }
    return out.str();
}

nlohmann::json evaluation_to_json(const Evaluation& ev) {
    const TestReport& t = ev.test;
    return {{"pipeline", ev.pipeline},
            {"fit", std::string(fit_name(ev.fit))},
            {"T", ev.score.T},
            {"S", ev.score.S},
            {"R", ev.score.R},
            {"PSR", ev.score.psr},
            {"REM_median_upper", ev.score.epsilon},
            {"M", ev.score.M},
            {"successes", ev.population.successes},
            {"failures", ev.population.failures},
            {"excluded_parameters", ev.excluded},
            {"test",
             {{"z", t.z},
              {"p_hat", t.p_hat},
              {"p0", t.p0},
              {"alpha", t.alpha},
              {"critical", t.critical},
              {"reject", t.reject},
              {"ci_low_percent", t.ci_low},
              {"ci_high_percent", t.ci_high}}}};
}

}  // namespace qemlab
