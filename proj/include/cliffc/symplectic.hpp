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

#ifndef CLIFFC_SYMPLECTIC_HPP
#define CLIFFC_SYMPLECTIC_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cliffc/circuit.hpp"
#include "cliffc/f2linalg.hpp"

namespace cliffc {

/// Phase vector entries, each in {0, 1, 2, 3}.
using PhaseVector = std::vector<uint8_t>;

/// Symplectic representation (S, p) of an n-qubit Clifford U.
///
/// Pauli operators are written i^xi X^v_0 Z^v_n (x) ... (x) X^v_{n-1} Z^v_{2n-1}.
/// Column j of `s` holds v for U P_j U^dagger, where P_j is X_j for j < n and
/// Z_{j-n} otherwise; p[j] holds the matching xi.
///
/// Circuits execute left to right: for C1 followed by C2,
/// S(C1-C2) = S(C2) * S(C1). A gate applied after U acts on the rows of S,
/// a gate applied before U acts on its columns.
struct SymplecticRep {
    size_t n = 0;
    F2Matrix s;
    PhaseVector p;

    SymplecticRep() = default;
    /// Throws NotSymplecticError unless `s` is symplectic, and
    /// InvalidPhaseVectorError unless p has 2n entries in 0..3.
    SymplecticRep(F2Matrix s, PhaseVector p);
    static SymplecticRep identity(size_t n);

    bool operator==(const SymplecticRep &other) const = default;
};

/// The four n x n corners of a 2n x 2n matrix.
struct BlockView {
    F2Matrix a, b, c, d;

    F2Matrix assemble() const {
        return F2Matrix::from_blocks(a, b, c, d);
    }
};

BlockView blocks(const F2Matrix &s);
inline BlockView blocks(const SymplecticRep &rep) {
    return blocks(rep.s);
}

/// The gate's symplectic embedded in the identity on n qubits. The phase
/// vector is zero except p = (1, 0) on the slots of a phase gate; Pauli
/// gates carry their sign flips.
SymplecticRep gate_rep(const Gate &g, size_t n);

/// S(U2 U1) = S(U2) S(U1). Phases are not composed here; use the tableau
/// simulator when they matter.
F2Matrix compose(const SymplecticRep &u2, const SymplecticRep &u1);

/// s <- S(g) s: g applied after the Clifford. Only H, P and CNOT are
/// accepted (std::invalid_argument otherwise).
void apply_left(F2Matrix &s, const Gate &g);
/// s <- s S(g): g applied before the Clifford.
void apply_right(F2Matrix &s, const Gate &g);
/// Updates rep.s only; rep.p is left untouched.
inline void apply_left(SymplecticRep &rep, const Gate &g) {
    apply_left(rep.s, g);
}
inline void apply_right(SymplecticRep &rep, const Gate &g) {
    apply_right(rep.s, g);
}

/// [[m, 0], [0, m^-T]], the symplectic of any CNOT circuit implementing m.
/// Throws SingularMatrixError.
SymplecticRep cnot_block_rep(const F2Matrix &m);

/// [[I, 0], [b, I]] for symmetric b: phase gates on the diagonal of b
/// and CZ gates on its off-diagonal entries.
F2Matrix lower_unit_block(const F2Matrix &b);

/// Symplectic file format: the matrix text format for s, optionally followed by
/// one line of 2n space-separated phase digits.
struct SymplecticFile {
    F2Matrix s;
    std::optional<PhaseVector> p;
};
SymplecticFile read_symplectic(std::istream &in);
void write_symplectic(std::ostream &out, const F2Matrix &s, const PhaseVector *p);

}  // namespace cliffc

#endif
