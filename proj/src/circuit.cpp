// Copyright 2026 The cliffc Authors
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

#include "cliffc/circuit.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "cliffc/errors.hpp"

namespace cliffc {

namespace {

constexpr std::array<std::string_view, 7> kGateNames = {"H", "P", "X", "Y", "Z", "CNOT", "CZ"};
constexpr std::array<std::string_view, 8> kSegmentNames = {"CX", "CZ", "P", "H", "H_all", "P_all", "PAULI", "F"};

}  // namespace

std::string_view gate_name(GateKind kind) {
    return kGateNames[static_cast<size_t>(kind)];
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (size_t k = 0; k < kGateNames.size(); k++) {
        if (kGateNames[k] == name) {
            return static_cast<GateKind>(k);
        }
    }
    return std::nullopt;
}

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind || q0 != other.q0) {
        return false;
    }
    return arity() == 1 || q1 == other.q1;
}

std::string Gate::str() const {
    std::string s(gate_name(kind));
    s += ' ';
    s += std::to_string(q0);
    if (arity() == 2) {
        s += ' ';
        s += std::to_string(q1);
    }
    return s;
}

std::string_view segment_name(SegmentTag tag) {
    return kSegmentNames[static_cast<size_t>(tag)];
}

std::optional<SegmentTag> segment_tag_from_name(std::string_view name) {
    for (size_t k = 0; k < kSegmentNames.size(); k++) {
        if (kSegmentNames[k] == name) {
            return static_cast<SegmentTag>(k);
        }
    }
    return std::nullopt;
}

bool segment_allows(SegmentTag tag, GateKind kind) {
    switch (tag) {
        case SegmentTag::CX:
            return kind == GateKind::CNOT;
        case SegmentTag::CZ:
            return kind == GateKind::CZ;
        case SegmentTag::P:
        case SegmentTag::P_all:
            return kind == GateKind::P;
        case SegmentTag::H:
        case SegmentTag::H_all:
            return kind == GateKind::H;
        case SegmentTag::PAULI:
            return is_pauli(kind);
        case SegmentTag::F:
            return !is_two_qubit(kind);
    }
    return false;
}

Circuit Circuit::from_gates(size_t num_qubits, std::vector<Gate> gates) {
    Circuit c(num_qubits);
    for (const Gate &g : gates) {
        c.check_gate(g);
    }
    c.gates_ = std::move(gates);
    return c;
}

Circuit Circuit::single_segment(size_t num_qubits, SegmentTag tag, std::span<const Gate> gates) {
    Circuit c(num_qubits);
    c.add_segment(tag, gates);
    return c;
}

std::span<const Gate> Circuit::segment_gates(size_t index) const {
    const Segment &s = segments_.at(index);
    return std::span<const Gate>(gates_).subspan(s.begin, s.size());
}

std::vector<SegmentTag> Circuit::segment_tags() const {
    std::vector<SegmentTag> tags;
    for (const Segment &s : segments_) {
        tags.push_back(s.tag);
    }
    return tags;
}

void Circuit::check_gate(const Gate &g) const {
    if (g.q0 >= n_ || (g.arity() == 2 && g.q1 >= n_)) {
        throw DimensionError("gate '" + g.str() + "' addresses a qubit outside 0.." + std::to_string(n_) + "-1");
    }
    if (g.arity() == 2 && g.q0 == g.q1) {
        throw std::invalid_argument("gate '" + g.str() + "' uses the same qubit twice");
    }
}

void Circuit::add_segment(SegmentTag tag, std::span<const Gate> gates) {
    if (segments_.empty() && !gates_.empty()) {
        throw std::invalid_argument("cannot add a segment to a circuit with untagged gates");
    }
    for (const Gate &g : gates) {
        check_gate(g);
        if (!segment_allows(tag, g.kind)) {
            throw std::invalid_argument("gate '" + g.str() + "' is not allowed in a " +
                                        std::string(segment_name(tag)) + " segment");
        }
    }
    if (tag == SegmentTag::H_all || tag == SegmentTag::P_all) {
        std::vector<bool> seen(n_, false);
        for (const Gate &g : gates) {
            if (seen[g.q0]) {
                throw std::invalid_argument(std::string(segment_name(tag)) + " segment hits a qubit twice");
            }
            seen[g.q0] = true;
        }
        if (gates.size() != n_) {
            throw std::invalid_argument(std::string(segment_name(tag)) + " segment must act on every qubit");
        }
    }
    size_t begin = gates_.size();
    gates_.insert(gates_.end(), gates.begin(), gates.end());
    segments_.push_back({tag, begin, gates_.size()});
}

void Circuit::append(const Gate &g) {
    if (!segments_.empty()) {
        throw std::invalid_argument("cannot append an untagged gate to a tagged circuit");
    }
    check_gate(g);
    gates_.push_back(g);
}

Circuit Circuit::retagged(SegmentTag tag) const {
    return single_segment(n_, tag, gates_);
}

bool Circuit::operator==(const Circuit &other) const {
    return n_ == other.n_ && gates_ == other.gates_ && segments_ == other.segments_;
}

GateCounts count(const Circuit &c) {
    GateCounts counts;
    std::vector<size_t> ready(c.num_qubits(), 0);
    for (const Gate &g : c.gates()) {
        counts.per_kind[g.kind]++;
        counts.total++;
        size_t layer;
        if (g.arity() == 2) {
            counts.two_qubit_total++;
            layer = std::max(ready[g.q0], ready[g.q1]) + 1;
            ready[g.q1] = layer;
        } else {
            layer = ready[g.q0] + 1;
        }
        ready[g.q0] = layer;
        counts.depth = std::max(counts.depth, layer);
    }
    return counts;
}

Circuit concat(const Circuit &a, const Circuit &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("concat: qubit counts differ");
    }
    if (a.empty() && !a.tagged()) {
        return b;
    }
    if (b.empty() && !b.tagged()) {
        return a;
    }
    if (a.tagged() != b.tagged()) {
        throw std::invalid_argument("concat: cannot mix tagged and untagged circuits");
    }
    Circuit out = a;
    if (!a.tagged()) {
        for (const Gate &g : b.gates()) {
            out.append(g);
        }
        return out;
    }
    for (size_t k = 0; k < b.segments().size(); k++) {
        out.add_segment(b.segments()[k].tag, b.segment_gates(k));
    }
    return out;
}

Circuit reverse_cnot_segment(const Circuit &c) {
    std::vector<Gate> reversed(c.gates().rbegin(), c.gates().rend());
    for (const Gate &g : reversed) {
        if (g.kind != GateKind::CNOT) {
            throw std::invalid_argument("reverse_cnot_segment: circuit contains '" + g.str() + "'");
        }
    }
    if (c.tagged()) {
        return Circuit::single_segment(c.num_qubits(), SegmentTag::CX, reversed);
    }
    return Circuit::from_gates(c.num_qubits(), std::move(reversed));
}

void write_circuit(std::ostream &out, const Circuit &c) {
    out << "n " << c.num_qubits() << '\n';
    if (!c.tagged()) {
        for (const Gate &g : c.gates()) {
            out << g.str() << '\n';
        }
        return;
    }
    for (size_t k = 0; k < c.segments().size(); k++) {
        out << "# segment " << segment_name(c.segments()[k].tag) << '\n';
        for (const Gate &g : c.segment_gates(k)) {
            out << g.str() << '\n';
        }
    }
}

Circuit read_circuit(std::istream &in) {
    std::string line;
    size_t lineno = 0;
    std::optional<Circuit> circuit;
    bool tagged = false;
    std::optional<SegmentTag> current_tag;
    std::vector<Gate> pending;
    auto flush = [&]() {
        if (current_tag) {
            circuit->add_segment(*current_tag, pending);
        }
        pending.clear();
    };
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream words(line);
        std::string head;
        if (!(words >> head)) {
            continue;
        }
        try {
            if (head[0] == '#') {
                std::string keyword;
                std::string tag_name;
                std::istringstream comment(line.substr(line.find('#') + 1));
                if ((comment >> keyword) && keyword == "segment") {
                    if (!circuit) {
                        throw ParseError("segment marker before header", lineno);
                    }
                    if (!(comment >> tag_name)) {
                        throw ParseError("segment marker without a tag", lineno);
                    }
                    auto tag = segment_tag_from_name(tag_name);
                    if (!tag) {
                        throw ParseError("unknown segment tag '" + tag_name + "'", lineno);
                    }
                    if (!tagged && !circuit->empty()) {
                        throw ParseError("gates before the first segment marker", lineno);
                    }
                    flush();
                    tagged = true;
                    current_tag = tag;
                }
                continue;
            }
            if (!circuit) {
                long long n = -1;
                std::string extra;
                if (head != "n" || !(words >> n) || n < 0 || (words >> extra)) {
                    throw ParseError("expected header 'n <count>'", lineno);
                }
                circuit.emplace(static_cast<size_t>(n));
                continue;
            }
            auto kind = gate_kind_from_name(head);
            if (!kind) {
                throw ParseError("unknown gate '" + head + "'", lineno);
            }
            Gate g{*kind, 0, 0};
            long long q0 = -1;
            long long q1 = -1;
            std::string extra;
            bool ok = static_cast<bool>(words >> q0) && q0 >= 0;
            if (ok && g.arity() == 2) {
                ok = static_cast<bool>(words >> q1) && q1 >= 0;
            }
            if (!ok || (words >> extra)) {
                throw ParseError("gate '" + head + "' expects " + std::to_string(g.arity()) + " qubit index(es)",
                                 lineno);
            }
            g.q0 = static_cast<uint32_t>(q0);
            g.q1 = g.arity() == 2 ? static_cast<uint32_t>(q1) : 0;
            if (tagged) {
                pending.push_back(g);
            } else {
                circuit->append(g);
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (!circuit) {
        throw ParseError("circuit: missing header");
    }
    try {
        flush();
    } catch (const std::exception &e) {
        throw ParseError(e.what(), lineno);
    }
    return *std::move(circuit);
}

void write_qasm(std::ostream &out, const Circuit &c) {
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.num_qubits() << "];\n";
    for (const Gate &g : c.gates()) {
        switch (g.kind) {
            case GateKind::H:
                out << "h q[" << g.q0 << "];\n";
                break;
            case GateKind::P:
                out << "s q[" << g.q0 << "];\n";
                break;
            case GateKind::X:
                out << "x q[" << g.q0 << "];\n";
                break;
            case GateKind::Y:
                out << "y q[" << g.q0 << "];\n";
                break;
            case GateKind::Z:
                out << "z q[" << g.q0 << "];\n";
                break;
            case GateKind::CNOT:
                out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
            case GateKind::CZ:
                out << "cz q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
        }
    }
}

}  // namespace cliffc
