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

#include "cliffc/compiler.hpp"

#include <string>

#include "cliffc/errors.hpp"
#include "cliffc/synthesis.hpp"
#include "cliffc/tableau.hpp"

namespace cliffc {

namespace {

std::optional<size_t> first_set_bit(const F2Vector &v) {
    auto words = v.words();
    for (size_t k = 0; k < words.size(); k++) {
        if (words[k]) {
            return k * kWordBits + static_cast<size_t>(std::countr_zero(words[k]));
        }
    }
    return std::nullopt;
}

/// [[k, 0], [0, k_inv_t]] where k_inv_t = k^-T is supplied by the caller.
F2Matrix cnot_block(const F2Matrix &k, const F2Matrix &k_inv_t) {
    size_t n = k.rows();
    return F2Matrix::from_blocks(k, F2Matrix(n, n), F2Matrix(n, n), k_inv_t);
}

class StepChecker {
   public:
    StepChecker(bool enabled, StepAudit *audit) : enabled_(enabled), audit_(audit) {
    }

    void symplectic(const F2Matrix &w, int step) {
        if (!enabled_) {
            return;
        }
        if (!is_symplectic(w)) {
            throw InternalError("decompose step " + std::to_string(step) + ": intermediate is not symplectic");
        }
        if (audit_) {
            audit_->symplectic_checks++;
        }
    }

    void holds(bool cond, int step, const char *what) {
        if (!enabled_) {
            return;
        }
        if (!cond) {
            throw InternalError("decompose step " + std::to_string(step) + ": expected " + what);
        }
        if (audit_) {
            audit_->block_checks++;
        }
    }

   private:
    bool enabled_;
    StepAudit *audit_;
};

}  // namespace

HadamardFix hadamard_fix(const F2Matrix &s) {
    size_t n = s.rows() / 2;
    F2Matrix b = s.block(0, n, n, n);
    // Greedy row basis of b, kept reduced so each vector clears at earlier pivots.
    std::vector<std::pair<size_t, F2Vector>> basis;
    F2Vector hset(n);
    for (size_t q = 0; q < n; q++) {
        F2Vector v = b.row_vector(q);
        for (const auto &[pivot, vec] : basis) {
            if (v.get(pivot)) {
                v ^= vec;
            }
        }
        if (auto pivot = first_set_bit(v)) {
            basis.emplace_back(*pivot, std::move(v));
        } else {
            hset.set(q, true);
        }
    }
    HadamardFix out{hset, s};
    for (size_t q = 0; q < n; q++) {
        if (hset.get(q)) {
            out.s1.swap_rows(q, q + n);
        }
    }
    if (!try_invert(out.s1.block(0, n, n, n))) {
        throw InternalError("hadamard_fix: upper-right block is still singular");
    }
    return out;
}

DecompositionParts decompose(const F2Matrix &s, bool check_steps, StepAudit *audit) {
    if (!s.is_square() || s.rows() % 2 != 0 || !is_symplectic(s)) {
        throw NotSymplecticError("decompose: input is not a symplectic matrix");
    }
    size_t n = s.rows() / 2;
    StepChecker check(check_steps, audit);
    const F2Matrix id = F2Matrix::identity(n);
    const F2Matrix zero(n, n);
    auto corner = [n](const F2Matrix &w, int row, int col) { return w.block(row * n, col * n, n, n); };

    DecompositionParts parts;
    parts.n = n;

    // 1. Hadamard layer from the left makes the upper-right block Q invertible.
    HadamardFix fix = hadamard_fix(s);
    parts.hset = fix.hset;
    F2Matrix w = std::move(fix.s1);
    check.symplectic(w, 1);
    parts.q = corner(w, 0, 1);
    F2Matrix q_inv = invert(parts.q);

    // 2. CX(Q^T) from the right: upper-right becomes I, lower-right D2 is symmetric.
    w = w * cnot_block(transpose(parts.q), q_inv);
    check.symplectic(w, 2);
    check.holds(corner(w, 0, 1) == id, 2, "upper-right block I");
    F2Matrix d2 = corner(w, 1, 1);
    check.holds(is_symmetric(d2), 2, "D2 symmetric");

    // 3. Phase layer from the left: D2 + diag(p1) = F F^T = N^-T N^-1.
    SymmetricFactor f1 = factor_symmetric(d2);
    parts.p1 = f1.b_diag;
    w = lower_unit_block(F2Matrix::diagonal(parts.p1)) * w;
    check.symplectic(w, 3);
    check.holds(corner(w, 1, 1) == f1.m * transpose(f1.m), 3, "lower-right block N^-T N^-1");
    F2Matrix n_inv = transpose(f1.m);
    parts.n_mat = invert(n_inv);

    // 4. CX(N^-1) from the left.
    w = cnot_block(n_inv, transpose(parts.n_mat)) * w;
    check.symplectic(w, 4);
    check.holds(corner(w, 0, 1) == n_inv && corner(w, 1, 1) == n_inv, 4, "right blocks N^-1");

    // 5. CX(N^-T) from the right.
    w = w * cnot_block(f1.m, parts.n_mat);
    check.symplectic(w, 5);
    check.holds(corner(w, 0, 1) == id && corner(w, 1, 1) == id, 5, "right blocks I");

    // 6. P_all from the left adds the upper blocks to the lower ones.
    w = lower_unit_block(id) * w;
    check.symplectic(w, 6);
    F2Matrix a6 = corner(w, 0, 0);
    check.holds(corner(w, 1, 1).is_zero(), 6, "lower-right block 0");
    check.holds(corner(w, 1, 0) == id, 6, "C6 = I");
    check.holds(is_symmetric(a6), 6, "A6 symmetric");

    // 7. H_all from the left swaps the upper and lower halves.
    for (size_t q = 0; q < n; q++) {
        w.swap_rows(q, q + n);
    }
    check.symplectic(w, 7);
    check.holds(w == F2Matrix::from_blocks(id, zero, a6, id), 7, "[[I, 0], [A6, I]]");

    // 8. Phase layer from the left: A6 + diag(p2) = M^-T M^-1.
    SymmetricFactor f2 = factor_symmetric(a6);
    parts.p2 = f2.b_diag;
    w = lower_unit_block(F2Matrix::diagonal(parts.p2)) * w;
    check.symplectic(w, 8);
    F2Matrix m_inv = transpose(f2.m);
    parts.m_mat = invert(m_inv);
    F2Matrix m_inv_t = f2.m;
    check.holds(corner(w, 1, 0) == m_inv_t * m_inv, 8, "lower-left block M^-T M^-1");

    // 9. CX(M) from the right.
    w = w * cnot_block(parts.m_mat, m_inv_t);
    check.symplectic(w, 9);
    check.holds(w == F2Matrix::from_blocks(parts.m_mat, zero, m_inv_t, m_inv_t), 9, "[[M, 0], [M^-T, M^-T]]");

    // 10. P_all from the right adds the right blocks to the left ones.
    w = w * lower_unit_block(id);
    check.symplectic(w, 10);
    check.holds(w == cnot_block(parts.m_mat, m_inv_t), 10, "[[M, 0], [0, M^-T]]");

    // 11. CX(M^-1) from the left.
    w = cnot_block(m_inv, transpose(parts.m_mat)) * w;
    check.symplectic(w, 11);
    if (!w.is_identity()) {
        throw InternalError("decompose step 11: reduction did not reach the identity");
    }

    // CX(M) - CX(N^-T) - CX(Q^T), in execution order, implements Q^T N^-T M = L^-1.
    parts.l_mat = m_inv * transpose(parts.n_mat) * transpose(q_inv);
    return parts;
}

Circuit synth_cnot(const F2Matrix &m, const CompileOptions &opts) {
    if (!opts.use_pmh) {
        return synth_cnot_gauss(m);
    }
    size_t block = opts.pmh_block ? opts.pmh_block : default_pmh_block(m.rows());
    return synth_cnot_pmh(m, block);
}

Circuit build_nine_form(const DecompositionParts &parts, const CompileOptions &opts) {
    size_t n = parts.n;
    F2Vector all = F2Vector::ones(n);
    Circuit c(n);
    c = concat(c, synth_cnot(parts.l_mat, opts));
    c = concat(c, synth_phase_layer(all, SegmentTag::P_all));
    c = concat(c, synth_cnot(parts.m_mat, opts));
    c = concat(c, synth_phase_layer(parts.p2));
    c = concat(c, synth_hadamard_layer(all, SegmentTag::H_all));
    c = concat(c, synth_phase_layer(all, SegmentTag::P_all));
    c = concat(c, synth_cnot(parts.n_mat, opts));
    c = concat(c, synth_phase_layer(parts.p1));
    c = concat(c, synth_hadamard_layer(parts.hset));
    return c;
}

PCxRewrite rewrite_p_cx(const F2Vector &p_diag, const F2Matrix &m) {
    if (p_diag.size() != m.rows()) {
        throw DimensionError("rewrite_p_cx: phase layer and matrix sizes differ");
    }
    F2Matrix m_inv = invert(m);
    F2Matrix b = transpose(m_inv) * F2Matrix::diagonal(p_diag) * m_inv;
    PCxRewrite out{m, b, b.diag()};
    for (size_t i = 0; i < b.rows(); i++) {
        out.gamma.set(i, i, false);
    }
    return out;
}

F2Matrix commute_cx_hall(const F2Matrix &m) {
    return inverse_transpose(m);
}

OneCnotBlocks one_cnot_blocks(const DecompositionParts &parts) {
    size_t n = parts.n;
    F2Vector all = F2Vector::ones(n);
    OneCnotBlocks out;
    out.hset = parts.hset;

    // P_all - CX(N)  ->  CX(N) - CZ - P, the new phase layer merging into P(p1).
    PCxRewrite tail = rewrite_p_cx(all, parts.n_mat);
    out.gamma2 = tail.gamma;
    out.d2 = tail.d_out ^ parts.p1;

    // H_all - CX(N)  ->  CX(N^-T) - H_all.
    F2Matrix moved = commute_cx_hall(parts.n_mat);

    // P(p2) - CX(N^-T)  ->  CX(N^-T) - CZ - P, then CX(M) - CX(N^-T) merge.
    PCxRewrite mid = rewrite_p_cx(parts.p2, moved);
    F2Matrix merged = moved * parts.m_mat;

    // P_all - CX(merged)  ->  CX(merged) - CZ - P, then CX(L) absorbs it.
    PCxRewrite head = rewrite_p_cx(all, merged);
    out.cx = merged * parts.l_mat;

    // Diagonal-type layers commute, so both CZ/P pairs combine.
    out.gamma1 = mid.gamma + head.gamma;
    out.d1 = mid.d_out ^ head.d_out;
    return out;
}

Circuit to_one_cnot_form(const Circuit &nine, const DecompositionParts &parts, const CompileOptions &opts) {
    if (nine.num_qubits() != parts.n) {
        throw DimensionError("to_one_cnot_form: nine form and parts disagree on qubit count");
    }
    size_t n = parts.n;
    OneCnotBlocks b = one_cnot_blocks(parts);
    Circuit c(n);
    c = concat(c, synth_cnot(b.cx, opts));
    c = concat(c, synth_cz(b.gamma1));
    c = concat(c, synth_phase_layer(b.d1));
    c = concat(c, synth_hadamard_layer(F2Vector::ones(n), SegmentTag::H_all));
    c = concat(c, synth_cz(b.gamma2));
    c = concat(c, synth_phase_layer(b.d2));
    c = concat(c, synth_hadamard_layer(b.hset));
    return c;
}

Circuit pauli_fixup(const Circuit &circuit, const PhaseVector &target_p, const F2Matrix &target_s) {
    size_t n = circuit.num_qubits();
    Tableau t = simulate_circuit(circuit);
    if (t.s() != target_s) {
        throw std::invalid_argument("pauli_fixup: circuit does not implement the target symplectic");
    }
    if (target_p.size() != 2 * n) {
        throw InvalidPhaseVectorError("pauli_fixup: phase vector must have " + std::to_string(2 * n) + " entries");
    }
    // A Pauli run first flips the sign of generator j's image iff it anticommutes with it:
    // X_q images need a Z on q, Z_q images need an X on q.
    F2Vector rx(n);
    F2Vector rz(n);
    for (size_t j = 0; j < 2 * n; j++) {
        int diff = (target_p[j] - t.xi(j) + 8) & 3;
        if (diff & 1) {
            throw InvalidPhaseVectorError("phase vector entry " + std::to_string(j) +
                                          " is not reachable for this symplectic matrix");
        }
        if (diff == 2) {
            (j < n ? rz : rx).set(j % n, true);
        }
    }
    std::vector<Gate> gates;
    for (size_t q = 0; q < n; q++) {
        auto qq = static_cast<uint32_t>(q);
        if (rx.get(q) && rz.get(q)) {
            gates.push_back(Gate::y(qq));
        } else if (rx.get(q)) {
            gates.push_back(Gate::x(qq));
        } else if (rz.get(q)) {
            gates.push_back(Gate::z(qq));
        }
    }
    return Circuit::single_segment(n, SegmentTag::PAULI, gates);
}

CompiledClifford compile(const F2Matrix &s, const std::optional<PhaseVector> &p, const CompileOptions &opts,
                         StepAudit *audit) {
    if (!s.is_square() || s.rows() % 2 != 0) {
        throw NotSymplecticError("compile: matrix must be square with even dimension");
    }
    if (!is_symplectic(s)) {
        throw NotSymplecticError("compile: matrix is not symplectic");
    }
    size_t n = s.rows() / 2;
    if (p) {
        if (p->size() != 2 * n) {
            throw InvalidPhaseVectorError("compile: phase vector must have " + std::to_string(2 * n) + " entries");
        }
        for (uint8_t v : *p) {
            if (v > 3) {
                throw InvalidPhaseVectorError("compile: phase vector entries must be in 0..3");
            }
        }
    }

    CompiledClifford out;
    out.parts = decompose(s, opts.check_steps, audit);
    out.nine_form = build_nine_form(out.parts, opts);
    out.one_cnot_form = to_one_cnot_form(out.nine_form, out.parts, opts);

    for (const Circuit *form : {&out.nine_form, &out.one_cnot_form}) {
        if (simulate_circuit(*form).s() != s) {
            throw InternalError("compile: synthesized circuit does not implement the target symplectic");
        }
    }

    if (p) {
        out.pauli_layer = pauli_fixup(out.one_cnot_form, *p, s);
        out.nine_pauli_layer = pauli_fixup(out.nine_form, *p, s);
    } else {
        out.pauli_layer = Circuit::single_segment(n, SegmentTag::PAULI, {});
        out.nine_pauli_layer = out.pauli_layer;
    }
    Tableau fixed = simulate_circuit(out.fixed_one_cnot_form());
    out.achieved_p = fixed.phases();
    if (p && (out.achieved_p != *p || simulate_circuit(out.fixed_nine_form()).phases() != *p)) {
        throw InternalError("compile: Pauli layer did not reach the target phase vector");
    }
    out.nine_counts = count(out.nine_form);
    out.one_cnot_counts = count(out.one_cnot_form);
    return out;
}

}  // namespace cliffc
