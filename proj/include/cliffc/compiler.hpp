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

#ifndef CLIFFC_COMPILER_HPP
#define CLIFFC_COMPILER_HPP

#include <optional>

#include "cliffc/circuit.hpp"
#include "cliffc/f2linalg.hpp"
#include "cliffc/symplectic.hpp"

namespace cliffc {

// Compiling a Clifford S reduces it to the identity with Hadamard, phase and
// CNOT layers applied on both sides, then reads the layers back as
//
//   nine form:      CX(L) P_all CX(M) P(p2) H_all P_all CX(N) P(p1) H(hset)
//   one-CNOT form:  CX    CZ    P     H_all CZ    P     H(hset)
//
// Both are listed in execution order and match S exactly; the phase vector is
// matched by prefixing a single layer of Pauli gates.

struct CompileOptions {
    /// Column-section width for PMH synthesis; 0 picks default_pmh_block(n).
    size_t pmh_block = 0;
    /// Plain Gaussian elimination instead of PMH for the CNOT segments.
    bool use_pmh = true;
    /// Verify the per-step invariants of the reduction.
    bool check_steps = true;
};

/// Running tally of reduction invariants that were checked (and held).
struct StepAudit {
    size_t symplectic_checks = 0;
    size_t block_checks = 0;
};

struct HadamardFix {
    F2Vector hset;
    F2Matrix s1;
};

/// Picks the qubits q to swap rows q and q+n on so that the upper-right
/// block of the result is invertible: rows of that block outside a maximal
/// independent row set are taken from the lower-right block instead.
HadamardFix hadamard_fix(const F2Matrix &s);

struct DecompositionParts {
    size_t n = 0;
    F2Vector hset;  ///< Hadamard layer applied first
    F2Matrix q;     ///< invertible upper-right block after the Hadamard layer
    F2Vector p1;
    F2Matrix n_mat;
    F2Vector p2;
    F2Matrix m_mat;
    /// The three right-hand CNOT circuits merged: l = m^-1 n^T q^-T.
    F2Matrix l_mat;
};

/// Runs the eleven-step reduction. With check_steps, every intermediate is
/// checked (symplectic, plus the block identities each step promises) and a
/// failure throws InternalError. Throws NotSymplecticError for bad input.
DecompositionParts decompose(const F2Matrix &s, bool check_steps = true, StepAudit *audit = nullptr);

Circuit build_nine_form(const DecompositionParts &parts, const CompileOptions &opts = {});

/// A phase layer followed by a CNOT circuit, rewritten as the CNOT circuit
/// followed by a CZ layer and a phase layer.
struct PCxRewrite {
    F2Matrix m_out;
    F2Matrix gamma;
    F2Vector d_out;
};
/// gamma + diag(d_out) = m^-T diag(p_diag) m^-1 and m_out = m.
PCxRewrite rewrite_p_cx(const F2Vector &p_diag, const F2Matrix &m);

/// CX(m) then H_all equals H_all then CX(m^-T).
F2Matrix commute_cx_hall(const F2Matrix &m);

/// Block data of the one-CNOT form CX(cx) CZ(gamma1) P(d1) H_all CZ(gamma2) P(d2) H(hset).
struct OneCnotBlocks {
    F2Matrix cx;
    F2Matrix gamma1;
    F2Vector d1;
    F2Matrix gamma2;
    F2Vector d2;
    F2Vector hset;
};
OneCnotBlocks one_cnot_blocks(const DecompositionParts &parts);

Circuit to_one_cnot_form(const Circuit &nine, const DecompositionParts &parts, const CompileOptions &opts = {});

/// A PAULI segment R such that R followed by `circuit` has phase vector
/// target_p. Throws std::invalid_argument if the circuit's symplectic is not
/// target_s, and InvalidPhaseVectorError if no Pauli layer can reach target_p.
Circuit pauli_fixup(const Circuit &circuit, const PhaseVector &target_p, const F2Matrix &target_s);

struct CompiledClifford {
    Circuit nine_form;
    Circuit one_cnot_form;
    /// Pauli prefix for one_cnot_form (empty if no phase target was given).
    Circuit pauli_layer;
    /// Pauli prefix for nine_form.
    Circuit nine_pauli_layer;
    DecompositionParts parts;
    GateCounts nine_counts;
    GateCounts one_cnot_counts;
    /// Phase vector of pauli_layer followed by one_cnot_form.
    PhaseVector achieved_p;

    Circuit fixed_one_cnot_form() const {
        return concat(pauli_layer, one_cnot_form);
    }
    Circuit fixed_nine_form() const {
        return concat(nine_pauli_layer, nine_form);
    }
};

/// Compiles S (and p, when given). Both forms are checked against the target
/// with the tableau simulator before returning.
CompiledClifford compile(const F2Matrix &s, const std::optional<PhaseVector> &p, const CompileOptions &opts = {},
                         StepAudit *audit = nullptr);

/// The CNOT synthesis selected by opts.
Circuit synth_cnot(const F2Matrix &m, const CompileOptions &opts);

}  // namespace cliffc

#endif
