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

#include "cliffc/state_prep.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "cliffc/errors.hpp"
#include "cliffc/synthesis.hpp"

namespace cliffc {

namespace {

bool bit_at(const PauliString &p, size_t col) {
    size_t n = p.size();
    return col < n ? p.x.get(col) : p.z.get(col - n);
}

/// Row k is (z_k | x_k), so row k times (rx | rz) is the symplectic product
/// of Pauli k with the Pauli (rx, rz).
F2Matrix twisted_rows(const std::vector<PauliString> &paulis, size_t n) {
    F2Matrix a(paulis.size(), 2 * n);
    for (size_t k = 0; k < paulis.size(); k++) {
        for (size_t q = 0; q < n; q++) {
            a.set(k, q, paulis[k].z.get(q));
            a.set(k, q + n, paulis[k].x.get(q));
        }
    }
    return a;
}

void append_pauli_gates(std::vector<Gate> &gates, const F2Vector &rx, const F2Vector &rz) {
    for (size_t q = 0; q < rx.size(); q++) {
        auto qq = static_cast<uint32_t>(q);
        if (rx.get(q) && rz.get(q)) {
            gates.push_back(Gate::y(qq));
        } else if (rx.get(q)) {
            gates.push_back(Gate::x(qq));
        } else if (rz.get(q)) {
            gates.push_back(Gate::z(qq));
        }
    }
}

/// Builds `head` followed by an F segment of `local` gates and whatever
/// Pauli layer makes the prepared signs match `target`.
Circuit finish_with_sign_fix(Circuit head, std::vector<Gate> local, const std::vector<PauliString> &target) {
    size_t n = head.num_qubits();
    Circuit trial = concat(head, Circuit::single_segment(n, SegmentTag::F, local));
    std::vector<PauliString> got = canonical_form(prepared_stabilizers(trial));
    if (got.size() != target.size()) {
        throw InternalError("prep_state: generator counts differ");
    }
    F2Matrix flips(target.size(), 1);
    for (size_t k = 0; k < target.size(); k++) {
        if (got[k].x != target[k].x || got[k].z != target[k].z) {
            throw InternalError("prep_state: prepared state has the wrong stabilizer group");
        }
        flips.set(k, 0, got[k].negative() != target[k].negative());
    }
    // A Pauli R applied last flips stabilizer h exactly when R anticommutes with h.
    auto r = solve(twisted_rows(target, n), flips);
    if (!r) {
        throw InternalError("prep_state: sign system has no solution");
    }
    F2Vector rx(n);
    F2Vector rz(n);
    for (size_t q = 0; q < n; q++) {
        rx.set(q, r->get(q, 0));
        rz.set(q, r->get(q + n, 0));
    }
    append_pauli_gates(local, rx, rz);
    return concat(head, Circuit::single_segment(n, SegmentTag::F, local));
}

void push_layer(std::vector<Gate> &dst, const Circuit &layer) {
    dst.insert(dst.end(), layer.gates().begin(), layer.gates().end());
}

}  // namespace

void StabilizerStateSpec::validate() const {
    if (generators.size() != n) {
        throw InvalidStabilizerSpecError("expected " + std::to_string(n) + " generators, got " +
                                         std::to_string(generators.size()));
    }
    for (size_t k = 0; k < n; k++) {
        if (generators[k].size() != n) {
            throw InvalidStabilizerSpecError("generator " + std::to_string(k) + " does not act on " +
                                             std::to_string(n) + " qubits");
        }
        if (!generators[k].is_hermitian()) {
            throw InvalidStabilizerSpecError("generator " + std::to_string(k) + " is not Hermitian");
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!generators[i].commutes_with(generators[j])) {
                throw NonCommutingError("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                        " anticommute");
            }
        }
    }
    if (rank(twisted_rows(generators, n)) != n) {
        throw DependentGeneratorsError("generators are not independent");
    }
}

StabilizerStateSpec read_stabilizer_spec(std::istream &in) {
    StabilizerStateSpec spec;
    std::string line;
    size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream words(line);
        std::string head;
        if (!(words >> head) || head[0] == '#') {
            continue;
        }
        std::string extra;
        if (!have_header) {
            long long n = -1;
            if (head != "n" || !(words >> n) || n < 0 || (words >> extra)) {
                throw ParseError("expected header 'n <count>'", lineno);
            }
            spec.n = static_cast<size_t>(n);
            have_header = true;
            continue;
        }
        if (words >> extra) {
            throw ParseError("one Pauli string per line", lineno);
        }
        try {
            PauliString p = PauliString::parse(head);
            if (p.size() != spec.n) {
                throw ParseError("Pauli string has " + std::to_string(p.size()) + " qubits, expected " +
                                 std::to_string(spec.n));
            }
            spec.generators.push_back(std::move(p));
        } catch (const ParseError &e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (!have_header) {
        throw ParseError("stabilizer spec: missing header");
    }
    if (spec.generators.size() != spec.n) {
        throw ParseError("stabilizer spec: expected " + std::to_string(spec.n) + " generators, got " +
                         std::to_string(spec.generators.size()));
    }
    return spec;
}

void write_stabilizer_spec(std::ostream &out, const StabilizerStateSpec &spec) {
    out << "n " << spec.n << '\n';
    for (const PauliString &g : spec.generators) {
        out << g.str() << '\n';
    }
}

std::vector<PauliString> canonical_form(std::vector<PauliString> rows) {
    if (rows.empty()) {
        return rows;
    }
    size_t n = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < 2 * n && r < rows.size(); col++) {
        size_t pivot = r;
        while (pivot < rows.size() && !bit_at(rows[pivot], col)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[r]);
        for (size_t k = 0; k < rows.size(); k++) {
            if (k != r && bit_at(rows[k], col)) {
                rows[k] = rows[k] * rows[r];
            }
        }
        r++;
    }
    return rows;
}

std::vector<PauliString> stabilizers_of(const Tableau &t) {
    size_t n = t.num_qubits();
    std::vector<PauliString> out;
    out.reserve(n);
    for (size_t j = n; j < 2 * n; j++) {
        out.push_back(t.generator(j));
    }
    return out;
}

std::vector<PauliString> prepared_stabilizers(const Circuit &c) {
    return stabilizers_of(simulate_circuit(c));
}

SymplecticRep complete_clifford(const StabilizerStateSpec &spec) {
    spec.validate();
    size_t n = spec.n;
    auto d = solve(twisted_rows(spec.generators, n), F2Matrix::identity(n));
    if (!d) {
        throw DependentGeneratorsError("generators are not independent");
    }
    // Column i of d pairs with generator i. Adding g_i to d_j clears <d_i, d_j>
    // without touching any other pairing.
    std::vector<PauliString> destab(n, PauliString(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t q = 0; q < n; q++) {
            destab[i].x.set(q, d->get(q, i));
            destab[i].z.set(q, d->get(q + n, i));
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!destab[i].commutes_with(destab[j])) {
                destab[j].x ^= spec.generators[i].x;
                destab[j].z ^= spec.generators[i].z;
            }
        }
    }
    F2Matrix s(2 * n, 2 * n);
    PhaseVector p(2 * n, 0);
    for (size_t i = 0; i < n; i++) {
        const PauliString &g = spec.generators[i];
        for (size_t q = 0; q < n; q++) {
            s.set(q, i, destab[i].x.get(q));
            s.set(q + n, i, destab[i].z.get(q));
            s.set(q, i + n, g.x.get(q));
            s.set(q + n, i + n, g.z.get(q));
        }
        p[i] = static_cast<uint8_t>((destab[i].x & destab[i].z).popcount() & 3);
        p[i + n] = g.xi;
    }
    return SymplecticRep(std::move(s), std::move(p));
}

PreparedState prep_state(const StabilizerStateSpec &spec, const CompileOptions &opts) {
    SymplecticRep rep = complete_clifford(spec);
    size_t n = spec.n;
    DecompositionParts parts = decompose(rep.s, opts.check_steps);
    OneCnotBlocks blocks = one_cnot_blocks(parts);
    std::vector<PauliString> target = canonical_form(spec.generators);
    F2Vector all = F2Vector::ones(n);

    // The leading CX, CZ and phase layers of a full compilation fix |0...0>,
    // so only the trailing segments are kept.
    PreparedState out;
    {
        Circuit head = synth_hadamard_layer(all, SegmentTag::H_all);
        head = concat(head, synth_cz(blocks.gamma2));
        std::vector<Gate> local;
        push_layer(local, synth_phase_layer(blocks.d2));
        push_layer(local, synth_hadamard_layer(blocks.hset));
        out.cz_form = finish_with_sign_fix(std::move(head), std::move(local), target);
    }
    {
        Circuit head = synth_hadamard_layer(all, SegmentTag::H_all);
        head = concat(head, synth_phase_layer(all, SegmentTag::P_all));
        head = concat(head, synth_cnot(parts.n_mat, opts));
        std::vector<Gate> local;
        push_layer(local, synth_phase_layer(parts.p1));
        push_layer(local, synth_hadamard_layer(parts.hset));
        out.cx_form = finish_with_sign_fix(std::move(head), std::move(local), target);
    }
    return out;
}

}  // namespace cliffc
