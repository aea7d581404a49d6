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

#include "qemlab/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qemlab/seeds.hpp"

namespace qemlab {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 10> kGateNames{{
    {GateKind::H, "H"},
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::I, "I"},
    {GateKind::RZ, "RZ"},
    {GateKind::RX, "RX"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::MEASURE, "MEASURE"},
    {GateKind::DELAY, "DELAY"},
}};

constexpr std::string_view kLabelHeader = "qemlab-circuit/1";

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double parse_real(std::string_view s) {
    // std::from_chars for double is not available on every toolchain we target.
    std::string tmp(s);
    std::size_t used = 0;
    double v = std::stod(tmp, &used);
    if (used != tmp.size()) {
        throw std::invalid_argument("bad number '" + tmp + "'");
    }
    return v;
}

int parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad qubit index '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    for (const auto& [k, name] : kGateNames) {
        if (k == kind) return name;
    }
    throw std::logic_error("unknown gate kind");
}

GateKind parse_gate_kind(std::string_view name) {
    for (const auto& [k, n] : kGateNames) {
        if (n == name) return k;
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

double DurationTable::of(GateKind kind) const {
    switch (kind) {
        case GateKind::CNOT:
            return cnot_ns;
        case GateKind::MEASURE:
            return measure_ns;
        case GateKind::DELAY:
            throw std::invalid_argument("DELAY duration is carried by the gate");
        default:
            return single_qubit_ns;
    }
}

void DurationTable::validate() const {
    if (!(single_qubit_ns > 0) || !(cnot_ns > 0) || !(measure_ns > 0)) {
        throw std::invalid_argument("gate durations must be positive");
    }
}

Gate::Gate(GateKind kind, std::vector<int> qubits, double angle, double duration_ns)
    : kind_(kind), qubits_(std::move(qubits)), angle_(angle), duration_ns_(duration_ns) {
    const std::size_t arity = kind_ == GateKind::CNOT ? 2 : 1;
    if (qubits_.size() != arity) {
        throw std::invalid_argument(std::string(gate_kind_name(kind_)) + " takes " +
                                    std::to_string(arity) + " qubit(s)");
    }
    for (int q : qubits_) {
        if (q < 0) throw std::invalid_argument("negative qubit index");
    }
    if (arity == 2 && qubits_[0] == qubits_[1]) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    if (!std::isfinite(angle_)) throw std::invalid_argument("rotation angle must be finite");
    if (!is_rotation() && angle_ != 0.0) throw std::invalid_argument("only RZ/RX carry an angle");
    if (!std::isfinite(duration_ns_) || duration_ns_ < 0) {
        throw std::invalid_argument("gate duration must be finite and non-negative");
    }
    if (kind_ != GateKind::DELAY && duration_ns_ <= 0) {
        throw std::invalid_argument("gate duration must be positive");
    }
}

Gate Gate::single(GateKind kind, int qubit, const DurationTable& durations) {
    if (kind == GateKind::CNOT || kind == GateKind::DELAY || kind == GateKind::RZ || kind == GateKind::RX) {
        throw std::invalid_argument("Gate::single only builds fixed 1-qubit gates");
    }
    return Gate(kind, {qubit}, 0.0, durations.of(kind));
}

Gate Gate::rotation(GateKind kind, int qubit, double angle, const DurationTable& durations) {
    if (kind != GateKind::RZ && kind != GateKind::RX) {
        throw std::invalid_argument("Gate::rotation builds RZ or RX");
    }
    return Gate(kind, {qubit}, angle, durations.of(kind));
}

Gate Gate::cnot(int control, int target, const DurationTable& durations) {
    return Gate(GateKind::CNOT, {control, target}, 0.0, durations.cnot_ns);
}

Gate Gate::measure(int qubit, const DurationTable& durations) {
    return Gate(GateKind::MEASURE, {qubit}, 0.0, durations.measure_ns);
}

Gate Gate::delay(int qubit, double duration_ns) { return Gate(GateKind::DELAY, {qubit}, 0.0, duration_ns); }

Gate Gate::from_parts(GateKind kind, std::vector<int> qubits, double angle, double duration_ns) {
    return Gate(kind, std::move(qubits), angle, duration_ns);
}

bool Gate::is_single_qubit_unitary() const {
    switch (kind_) {
        case GateKind::CNOT:
        case GateKind::MEASURE:
        case GateKind::DELAY:
            return false;
        default:
            return true;
    }
}

Gate Gate::inverse() const {
    if (kind_ == GateKind::MEASURE) throw std::invalid_argument("MEASURE has no inverse");
    Gate g = *this;
    if (is_rotation()) g.angle_ = -angle_;
    return g;
}

Circuit::Circuit(int n_qubits, std::vector<Gate> gates) : n_qubits_(n_qubits), gates_(std::move(gates)) {
    if (n_qubits_ <= 0) throw std::invalid_argument("circuit needs at least one qubit");
    std::vector<bool> measured(n_qubits_, false);
    for (const Gate& g : gates_) {
        for (int q : g.qubits()) {
            if (q >= n_qubits_) {
                throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
            }
            if (measured[q]) {
                throw std::invalid_argument("gate after MEASURE on qubit " + std::to_string(q));
            }
        }
        if (g.kind() == GateKind::MEASURE) measured[g.qubits()[0]] = true;
    }
}

std::string Circuit::label() const {
    std::string out;
    out += kLabelHeader;
    out += " qubits=" + std::to_string(n_qubits_) + "\n";
    out += serialize_circuit(*this);
    return out;
}

std::string Circuit::id() const {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "c%016llx", static_cast<unsigned long long>(fnv1a64(label())));
    return buf;
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [&](const Gate& g) { return g.kind() == kind; }));
}

bool Circuit::has_measurements() const { return count(GateKind::MEASURE) > 0; }

std::vector<Gate> Circuit::unitary_part() const {
    std::vector<Gate> out;
    bool seen_measure = false;
    for (const Gate& g : gates_) {
        if (g.kind() == GateKind::MEASURE) {
            seen_measure = true;
        } else if (seen_measure) {
            throw std::invalid_argument("mid-circuit measurement");
        } else {
            out.push_back(g);
        }
    }
    return out;
}

std::vector<Gate> Circuit::measurement_part() const {
    std::vector<Gate> out;
    for (const Gate& g : gates_) {
        if (g.kind() == GateKind::MEASURE) out.push_back(g);
    }
    return out;
}

Circuit Circuit::with_gates_appended(std::span<const Gate> extra) const {
    std::vector<Gate> gates = gates_;
    gates.insert(gates.end(), extra.begin(), extra.end());
    return Circuit(n_qubits_, std::move(gates));
}

std::string serialize_gate(const Gate& gate) {
    std::string line(gate_kind_name(gate.kind()));
    line += ' ';
    auto qs = gate.qubits();
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) line += ',';
        line += std::to_string(qs[i]);
    }
    if (gate.is_rotation()) line += "@" + format_real(gate.angle());
    line += "#" + format_real(gate.duration_ns());
    return line;
}

std::string serialize_circuit(const Circuit& circuit) {
    std::string out;
    for (const Gate& g : circuit.gates()) {
        out += serialize_gate(g);
        out += '\n';
    }
    return out;
}

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n_qubits = -1;
    std::vector<Gate> gates;
    int max_qubit = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.starts_with(kLabelHeader)) {
            auto pos = line.find("qubits=");
            if (pos == std::string::npos) throw std::invalid_argument("header without qubit count");
            n_qubits = parse_int(std::string_view(line).substr(pos + 7));
            continue;
        }
        auto space = line.find(' ');
        if (space == std::string::npos) throw std::invalid_argument("malformed gate line '" + line + "'");
        GateKind kind = parse_gate_kind(std::string_view(line).substr(0, space));
        std::string_view rest = std::string_view(line).substr(space + 1);

        double duration = 0.0;
        bool has_duration = false;
        if (auto hash = rest.find('#'); hash != std::string_view::npos) {
            duration = parse_real(rest.substr(hash + 1));
            has_duration = true;
            rest = rest.substr(0, hash);
        }
        double angle = 0.0;
        if (auto at = rest.find('@'); at != std::string_view::npos) {
            angle = parse_real(rest.substr(at + 1));
            rest = rest.substr(0, at);
        }
        std::vector<int> qubits;
        while (!rest.empty()) {
            auto comma = rest.find(',');
            qubits.push_back(parse_int(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (!has_duration) {
            if (kind == GateKind::DELAY) throw std::invalid_argument("DELAY needs an explicit duration");
            duration = DurationTable{}.of(kind);
        }
        for (int q : qubits) max_qubit = std::max(max_qubit, q);
        gates.push_back(Gate::from_parts(kind, std::move(qubits), angle, duration));
    }
    if (n_qubits < 0) n_qubits = max_qubit + 1;
    return Circuit(n_qubits, std::move(gates));
}

Observable::Observable(int n_qubits, std::vector<ZTerm> terms) : n_qubits_(n_qubits), terms_(std::move(terms)) {
    if (n_qubits_ <= 0) throw std::invalid_argument("observable needs at least one qubit");
    std::set<std::vector<int>> seen;
    for (ZTerm& t : terms_) {
        std::sort(t.support.begin(), t.support.end());
        if (std::adjacent_find(t.support.begin(), t.support.end()) != t.support.end()) {
            throw std::invalid_argument("repeated qubit in observable support");
        }
        for (int q : t.support) {
            if (q < 0 || q >= n_qubits_) throw std::invalid_argument("observable support out of range");
        }
        if (!seen.insert(t.support).second) throw std::invalid_argument("duplicate observable support");
    }
}

double Observable::eigenvalue(std::uint64_t index) const {
    double total = 0.0;
    for (const ZTerm& t : terms_) {
        int parity = 0;
        for (int q : t.support) parity ^= static_cast<int>((index >> q) & 1u);
        total += parity ? -t.coefficient : t.coefficient;
    }
    return total;
}

double Observable::eigenvalue(std::string_view bits) const {
    if (static_cast<int>(bits.size()) != n_qubits_) throw std::invalid_argument("bitstring length mismatch");
    return eigenvalue(bits_to_index(bits));
}

std::string index_to_bits(std::uint64_t index, int n_qubits) {
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((index >> q) & 1u) bits[q] = '1';
    }
    return bits;
}

std::uint64_t bits_to_index(std::string_view bits) {
    if (bits.size() > 63) throw std::invalid_argument("bitstring too long");
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] == '1') {
            index |= std::uint64_t{1} << q;
        } else if (bits[q] != '0') {
            throw std::invalid_argument("bitstring must contain only 0 and 1");
        }
    }
    return index;
}

}  // namespace qemlab
