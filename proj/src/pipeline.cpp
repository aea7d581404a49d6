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
#include <charconv>
#include <stdexcept>

#include "qemlab/pipeline.hpp"

namespace qemlab {

namespace {

int parse_index(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad pipeline index");
    return v;
}

// "P3" -> (3, false); "P3E" -> (3, true).
std::pair<int, bool> split_name(std::string_view name) {
    if (name.size() < 2 || name[0] != 'P') throw std::invalid_argument("pipeline name must look like P3 or P3E");
    bool est = name.back() == 'E';
    std::string_view digits = name.substr(1, name.size() - 1 - (est ? 1 : 0));
    const int k = parse_index(digits);
    if (k < 1 || k > 8) throw std::invalid_argument("pipeline index must be 1..8");
    return {k, est};
}

std::string make_name(int k, bool est) { return "P" + std::to_string(k) + (est ? "E" : ""); }

}  // namespace

std::string PipelineSpec::name() const {
    const int k = 1 + (use_mem ? 1 : 0) + (use_dd ? 2 : 0) + (use_rc ? 4 : 0);
    return make_name(k, use_estimation);
}

PipelineSpec PipelineSpec::from_name(std::string_view name, FoldingKind folding, FitOrder fit) {
    auto [k, est] = split_name(name);
    const int bits = k - 1;
    PipelineSpec spec;
    spec.use_estimation = est;
    spec.use_mem = bits & 1;
    spec.use_dd = bits & 2;
    spec.use_rc = bits & 4;
    spec.folding = folding;
    spec.fit = fit;
    return spec;
}

std::vector<PipelineSpec> all_pipelines(FoldingKind folding) {
    std::vector<PipelineSpec> out;
    for (bool est : {false, true}) {
        for (int k = 1; k <= 8; ++k) out.push_back(PipelineSpec::from_name(make_name(k, est), folding));
    }
    return out;
}

std::vector<std::string> parse_pipeline_list(std::string_view list) {
    std::vector<std::string> out;
    auto push = [&](std::string name) {
        PipelineSpec::from_name(name);  // validates
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
    };
    if (list == "all") {
        for (const auto& spec : all_pipelines()) push(spec.name());
        return out;
    }
    while (!list.empty()) {
        const auto comma = list.find(',');
        std::string_view item = list.substr(0, comma);
        if (auto dots = item.find(".."); dots != std::string_view::npos) {
            auto [a, ea] = split_name(item.substr(0, dots));
            auto [b, eb] = split_name(item.substr(dots + 2));
            if (ea != eb || a > b) throw std::invalid_argument("bad pipeline range '" + std::string(item) + "'");
            for (int k = a; k <= b; ++k) push(make_name(k, ea));
        } else if (!item.empty()) {
            push(std::string(item));
        }
        if (comma == std::string_view::npos) break;
        list = list.substr(comma + 1);
    }
    if (out.empty()) throw std::invalid_argument("empty pipeline list");
    return out;
}

}  // namespace qemlab
