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

#include "cliffc/tableau.hpp"

#include <sstream>

#include "cliffc/errors.hpp"

namespace cliffc {

PauliString PauliString::parse(const std::string &text) {
    if (text.empty() || (text[0] != '+' && text[0] != '-')) {
        throw ParseError("Pauli string must start with '+' or '-'");
    }
    PauliString out(text.size() - 1);
    size_t ys = 0;
    for (size_t q = 0; q + 1 < text.size(); q++) {
        switch (text[q + 1]) {
            case 'I':
            case '_':
                break;
            case 'X':
                out.x.set(q, true);
                break;
            case 'Z':
                out.z.set(q, true);
                break;
            case 'Y':
                out.x.set(q, true);
                out.z.set(q, true);
                ys++;
                break;
            default:
                throw ParseError("Pauli string: unexpected character '" + std::string(1, text[q + 1]) + "'");
        }
    }
    // Y = i X Z.
    out.xi = static_cast<uint8_t>(((text[0] == '-' ? 2 : 0) + ys) & 3);
    return out;
}

std::string PauliString::str() const {
    if (!is_hermitian()) {
        throw std::invalid_argument("Pauli string is not Hermitian");
    }
    std::string s(1, negative() ? '-' : '+');
    for (size_t q = 0; q < size(); q++) {
        bool bx = x.get(q);
        bool bz = z.get(q);
        s += bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
    }
    return s;
}

PauliString operator*(const PauliString &a, const PauliString &b) {
    if (a.size() != b.size()) {
        throw DimensionError("Pauli product: sizes differ");
    }
    // X^x1 Z^z1 X^x2 Z^z2 = (-1)^(z1.x2) X^(x1+x2) Z^(z1+z2)
    PauliString out(a.size());
    out.x = a.x ^ b.x;
    out.z = a.z ^ b.z;
    out.xi = static_cast<uint8_t>((a.xi + b.xi + (a.z.dot(b.x) ? 2 : 0)) & 3);
    return out;
}

Tableau::Tableau(size_t n) : n_(n), s_(F2Matrix::identity(2 * n)), xi_lo_(2 * n), xi_hi_(2 * n) {
}

Tableau Tableau::from_rep(const SymplecticRep &rep) {
    Tableau t(rep.n);
    t.s_ = rep.s;
    for (size_t j = 0; j < 2 * rep.n; j++) {
        t.xi_lo_.set(j, rep.p[j] & 1);
        t.xi_hi_.set(j, rep.p[j] & 2);
    }
    return t;
}

uint8_t Tableau::xi(size_t generator) const {
    return static_cast<uint8_t>(xi_lo_.get(generator) | (xi_hi_.get(generator) << 1));
}

PhaseVector Tableau::phases() const {
    PhaseVector p(2 * n_);
    for (size_t j = 0; j < 2 * n_; j++) {
        p[j] = xi(j);
    }
    return p;
}

PauliString Tableau::generator(size_t j) const {
    PauliString out(n_);
    for (size_t q = 0; q < n_; q++) {
        out.x.set(q, s_.get(q, j));
        out.z.set(q, s_.get(q + n_, j));
    }
    out.xi = xi(j);
    return out;
}

void Tableau::add_to_phase_hi(std::span<const word_t> bits) {
    xor_words(xi_hi_.words(), bits);
}

// Phase rules, with each image written as i^xi X^x Z^z on the touched qubits:
//   H:    X^x Z^z -> Z^x X^z = (-1)^(xz) X^z Z^x
//   P:    X -> i X Z, Z -> Z          so xi += x and z ^= x
//   CNOT: stays in X-before-Z order   no phase
//   CZ:   X_a -> X_a Z_b, X_b -> Z_a X_b, reordering Z_b past X_b gives (-1)^(x_a x_b)
//   X, Y, Z: sign flips on anticommuting components
void Tableau::apply(const Gate &g) {
    size_t a = g.q0;
    size_t b = g.q1;
    if (a >= n_ || (g.arity() == 2 && (b >= n_ || a == b))) {
        throw DimensionError("gate '" + g.str() + "' is invalid on " + std::to_string(n_) + " qubits");
    }
    std::vector<word_t> tmp(s_.row(0).size());
    switch (g.kind) {
        case GateKind::H: {
            auto x = s_.row(a);
            auto z = s_.row(a + n_);
            for (size_t k = 0; k < tmp.size(); k++) {
                tmp[k] = x[k] & z[k];
            }
            add_to_phase_hi(tmp);
            s_.swap_rows(a, a + n_);
            break;
        }
        case GateKind::P: {
            auto x = s_.row(a);
            auto lo = xi_lo_.words();
            auto hi = xi_hi_.words();
            for (size_t k = 0; k < tmp.size(); k++) {
                hi[k] ^= lo[k] & x[k];
                lo[k] ^= x[k];
            }
            s_.xor_row(a + n_, a);
            break;
        }
        case GateKind::CNOT:
            s_.xor_row(b, a);
            s_.xor_row(a + n_, b + n_);
            break;
        case GateKind::CZ: {
            auto xa = s_.row(a);
            auto xb = s_.row(b);
            for (size_t k = 0; k < tmp.size(); k++) {
                tmp[k] = xa[k] & xb[k];
            }
            add_to_phase_hi(tmp);
            s_.xor_row(a + n_, b);
            s_.xor_row(b + n_, a);
            break;
        }
        case GateKind::X:
            add_to_phase_hi(s_.row(a + n_));
            break;
        case GateKind::Z:
            add_to_phase_hi(s_.row(a));
            break;
        case GateKind::Y:
            add_to_phase_hi(s_.row(a));
            add_to_phase_hi(s_.row(a + n_));
            break;
    }
}

void Tableau::apply(const Circuit &c) {
    if (c.num_qubits() != n_) {
        throw DimensionError("tableau and circuit qubit counts differ");
    }
    for (const Gate &g : c.gates()) {
        apply(g);
    }
}

bool Tableau::invariants_hold() const {
    if (!is_symplectic(s_)) {
        return false;
    }
    // Image parity: xi must be odd exactly when X^x Z^z has an odd number of Y-like positions.
    F2Vector overlap(2 * n_);
    for (size_t q = 0; q < n_; q++) {
        auto x = s_.row(q);
        auto z = s_.row(q + n_);
        auto o = overlap.words();
        for (size_t k = 0; k < o.size(); k++) {
            o[k] ^= x[k] & z[k];
        }
    }
    return overlap == xi_lo_;
}

Tableau simulate_circuit(const Circuit &c) {
    Tableau t(c.num_qubits());
    t.apply(c);
    return t;
}

SymplecticRep tableau_to_rep(const Tableau &t) {
    SymplecticRep rep;
    rep.n = t.num_qubits();
    rep.s = t.s();
    rep.p = t.phases();
    return rep;
}

std::optional<std::string> first_mismatch(const Tableau &t, const F2Matrix &s, const PhaseVector *p) {
    size_t n = t.num_qubits();
    if (s.rows() != 2 * n || s.cols() != 2 * n) {
        return "qubit count differs: circuit has " + std::to_string(n) + ", target has " +
               std::to_string(s.rows() / 2);
    }
    for (size_t j = 0; j < 2 * n; j++) {
        bool bits_differ = t.s().col_vector(j) != s.col_vector(j);
        bool phase_differs = p && t.xi(j) != (*p)[j];
        if (bits_differ || phase_differs) {
            std::ostringstream msg;
            msg << "image of " << (j < n ? "X" : "Z") << (j < n ? j : j - n) << " differs: expected "
                << s.col_vector(j).str();
            if (p) {
                msg << " xi=" << static_cast<int>((*p)[j]);
            }
            msg << ", got " << t.s().col_vector(j).str() << " xi=" << static_cast<int>(t.xi(j));
            return msg.str();
        }
    }
    return std::nullopt;
}

}  // namespace cliffc
