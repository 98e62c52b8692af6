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

#include "cliffc/symplectic.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "cliffc/errors.hpp"

namespace cliffc {

SymplecticRep::SymplecticRep(F2Matrix s_, PhaseVector p_) : s(std::move(s_)), p(std::move(p_)) {
    if (!s.is_square() || s.rows() % 2 != 0) {
        throw NotSymplecticError("symplectic matrix must be square with even dimension");
    }
    if (!is_symplectic(s)) {
        throw NotSymplecticError("matrix is not symplectic");
    }
    n = s.rows() / 2;
    if (p.size() != 2 * n) {
        throw InvalidPhaseVectorError("phase vector must have " + std::to_string(2 * n) + " entries");
    }
    for (uint8_t v : p) {
        if (v > 3) {
            throw InvalidPhaseVectorError("phase vector entries must be in 0..3");
        }
    }
}

SymplecticRep SymplecticRep::identity(size_t n) {
    SymplecticRep rep;
    rep.n = n;
    rep.s = F2Matrix::identity(2 * n);
    rep.p.assign(2 * n, 0);
    return rep;
}

BlockView blocks(const F2Matrix &s) {
    if (!s.is_square() || s.rows() % 2 != 0) {
        throw DimensionError("blocks: matrix must be square with even dimension");
    }
    size_t n = s.rows() / 2;
    return {s.block(0, 0, n, n), s.block(0, n, n, n), s.block(n, 0, n, n), s.block(n, n, n, n)};
}

namespace {

void check_qubits(const Gate &g, size_t n) {
    if (g.q0 >= n || (g.arity() == 2 && (g.q1 >= n || g.q1 == g.q0))) {
        throw DimensionError("gate '" + g.str() + "' is invalid on " + std::to_string(n) + " qubits");
    }
}

}  // namespace

SymplecticRep gate_rep(const Gate &g, size_t n) {
    check_qubits(g, n);
    SymplecticRep rep = SymplecticRep::identity(n);
    switch (g.kind) {
        case GateKind::H:
        case GateKind::P:
        case GateKind::CNOT:
            apply_left(rep.s, g);
            break;
        case GateKind::CZ:
            rep.s.set(g.q0 + n, g.q1, true);
            rep.s.set(g.q1 + n, g.q0, true);
            break;
        case GateKind::X:
            rep.p[g.q0 + n] = 2;
            break;
        case GateKind::Z:
            rep.p[g.q0] = 2;
            break;
        case GateKind::Y:
            rep.p[g.q0] = 2;
            rep.p[g.q0 + n] = 2;
            break;
    }
    if (g.kind == GateKind::P) {
        rep.p[g.q0] = 1;
    }
    return rep;
}

F2Matrix compose(const SymplecticRep &u2, const SymplecticRep &u1) {
    if (u2.n != u1.n) {
        throw DimensionError("compose: qubit counts differ");
    }
    return u2.s * u1.s;
}

void apply_left(F2Matrix &s, const Gate &g) {
    size_t n = s.rows() / 2;
    check_qubits(g, n);
    switch (g.kind) {
        case GateKind::H:
            s.swap_rows(g.q0, g.q0 + n);
            return;
        case GateKind::P:
            s.xor_row(g.q0 + n, g.q0);
            return;
        case GateKind::CNOT:
            s.xor_row(g.q1, g.q0);
            s.xor_row(g.q0 + n, g.q1 + n);
            return;
        default:
            throw std::invalid_argument("apply_left: unsupported gate '" + g.str() + "'");
    }
}

void apply_right(F2Matrix &s, const Gate &g) {
    size_t n = s.cols() / 2;
    check_qubits(g, n);
    switch (g.kind) {
        case GateKind::H:
            s.swap_cols(g.q0, g.q0 + n);
            return;
        case GateKind::P:
            s.xor_col(g.q0, g.q0 + n);
            return;
        case GateKind::CNOT:
            s.xor_col(g.q0, g.q1);
            s.xor_col(g.q1 + n, g.q0 + n);
            return;
        default:
            throw std::invalid_argument("apply_right: unsupported gate '" + g.str() + "'");
    }
}

SymplecticRep cnot_block_rep(const F2Matrix &m) {
    if (!m.is_square()) {
        throw DimensionError("cnot_block_rep: matrix is not square");
    }
    size_t n = m.rows();
    SymplecticRep rep;
    rep.n = n;
    rep.s = F2Matrix::from_blocks(m, F2Matrix(n, n), F2Matrix(n, n), inverse_transpose(m));
    rep.p.assign(2 * n, 0);
    return rep;
}

F2Matrix lower_unit_block(const F2Matrix &b) {
    size_t n = b.rows();
    return F2Matrix::from_blocks(F2Matrix::identity(n), F2Matrix(n, n), b, F2Matrix::identity(n));
}

SymplecticFile read_symplectic(std::istream &in) {
    SymplecticFile file{read_matrix(in), std::nullopt};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::vector<long long> digits;
        long long v;
        while (words >> v) {
            digits.push_back(v);
        }
        if (!words.eof()) {
            throw ParseError("phase vector: entries must be integers");
        }
        if (digits.empty()) {
            continue;
        }
        if (file.p) {
            throw ParseError("phase vector: unexpected extra line");
        }
        PhaseVector p;
        for (long long d : digits) {
            if (d < 0 || d > 3) {
                throw ParseError("phase vector: entries must be in 0..3");
            }
            p.push_back(static_cast<uint8_t>(d));
        }
        if (p.size() != file.s.rows()) {
            throw ParseError("phase vector: expected " + std::to_string(file.s.rows()) + " entries");
        }
        file.p = std::move(p);
    }
    return file;
}

void write_symplectic(std::ostream &out, const F2Matrix &s, const PhaseVector *p) {
    write_matrix(out, s);
    if (p) {
        for (size_t k = 0; k < p->size(); k++) {
            out << (k ? " " : "") << static_cast<int>((*p)[k]);
        }
        out << '\n';
    }
}

}  // namespace cliffc
