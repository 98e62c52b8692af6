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

#ifndef CLIFFC_CIRCUIT_HPP
#define CLIFFC_CIRCUIT_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliffc {

enum class GateKind : uint8_t { H, P, X, Y, Z, CNOT, CZ };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

inline bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CNOT || kind == GateKind::CZ;
}
inline bool is_pauli(GateKind kind) {
    return kind == GateKind::X || kind == GateKind::Y || kind == GateKind::Z;
}

/// A gate on one or two qubits. For CNOT, q0 is the control and q1 the
/// target. q1 is unused by one-qubit gates.
struct Gate {
    GateKind kind;
    uint32_t q0;
    uint32_t q1 = 0;

    static Gate h(uint32_t q) {
        return {GateKind::H, q};
    }
    static Gate p(uint32_t q) {
        return {GateKind::P, q};
    }
    static Gate x(uint32_t q) {
        return {GateKind::X, q};
    }
    static Gate y(uint32_t q) {
        return {GateKind::Y, q};
    }
    static Gate z(uint32_t q) {
        return {GateKind::Z, q};
    }
    static Gate cnot(uint32_t control, uint32_t target) {
        return {GateKind::CNOT, control, target};
    }
    static Gate cz(uint32_t a, uint32_t b) {
        return {GateKind::CZ, a, b};
    }

    size_t arity() const {
        return is_two_qubit(kind) ? 2 : 1;
    }
    bool operator==(const Gate &other) const;
    std::string str() const;
};

/// Segment tags name the subcircuit kinds of a compiled Clifford.
enum class SegmentTag : uint8_t { CX, CZ, P, H, H_all, P_all, PAULI, F };

std::string_view segment_name(SegmentTag tag);
std::optional<SegmentTag> segment_tag_from_name(std::string_view name);
bool segment_allows(SegmentTag tag, GateKind kind);

struct Segment {
    SegmentTag tag;
    size_t begin;
    size_t end;

    size_t size() const {
        return end - begin;
    }
    bool operator==(const Segment &other) const = default;
};

/// An ordered gate list on a fixed number of qubits; gates[0] executes first.
///
/// A circuit is either untagged (no segments) or every gate belongs to
/// exactly one segment. Tagged circuits are built with add_segment, which
/// enforces the tag's gate-kind restriction.
class Circuit {
   public:
    explicit Circuit(size_t num_qubits = 0) : n_(num_qubits) {
    }

    /// Untagged circuit. Throws DimensionError on bad qubit indices.
    static Circuit from_gates(size_t num_qubits, std::vector<Gate> gates);
    /// Circuit made of one segment.
    static Circuit single_segment(size_t num_qubits, SegmentTag tag, std::span<const Gate> gates);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    const std::vector<Segment> &segments() const {
        return segments_;
    }
    bool tagged() const {
        return !segments_.empty();
    }
    bool empty() const {
        return gates_.empty();
    }
    std::span<const Gate> segment_gates(size_t index) const;
    std::vector<SegmentTag> segment_tags() const;

    /// Appends a tagged segment. Throws std::invalid_argument if a gate is
    /// not allowed under `tag`, or if this circuit has untagged gates.
    void add_segment(SegmentTag tag, std::span<const Gate> gates);
    /// Appends gates to an untagged circuit.
    void append(const Gate &g);

    /// Same gates, one segment carrying `tag`.
    Circuit retagged(SegmentTag tag) const;

    bool operator==(const Circuit &other) const;

   private:
    void check_gate(const Gate &g) const;

    size_t n_;
    std::vector<Gate> gates_;
    std::vector<Segment> segments_;
};

struct GateCounts {
    std::map<GateKind, size_t> per_kind;
    size_t total = 0;
    size_t two_qubit_total = 0;
    size_t depth = 0;

    size_t of(GateKind kind) const {
        auto it = per_kind.find(kind);
        return it == per_kind.end() ? 0 : it->second;
    }
};

/// Tallies plus ASAP depth with all-to-all connectivity.
GateCounts count(const Circuit &c);

/// a's gates then b's. Tagged segments are kept; mixing tagged and untagged
/// operands is allowed only when the untagged one is empty.
Circuit concat(const Circuit &a, const Circuit &b);

/// Inverse of a CNOT-only circuit (gates in reverse order). Throws
/// std::invalid_argument if a non-CNOT gate is present.
Circuit reverse_cnot_segment(const Circuit &c);

/// Native text format: "n <count>", one gate per line, segment boundaries as
/// "# segment <tag>". Writing then reading is exact.
void write_circuit(std::ostream &out, const Circuit &c);
Circuit read_circuit(std::istream &in);

/// OpenQASM 2 text using h/s/x/y/z/cx/cz.
void write_qasm(std::ostream &out, const Circuit &c);

}  // namespace cliffc

#endif
