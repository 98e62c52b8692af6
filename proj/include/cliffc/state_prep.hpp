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

#ifndef CLIFFC_STATE_PREP_HPP
#define CLIFFC_STATE_PREP_HPP

#include <iosfwd>
#include <vector>

#include "cliffc/circuit.hpp"
#include "cliffc/compiler.hpp"
#include "cliffc/symplectic.hpp"
#include "cliffc/tableau.hpp"

namespace cliffc {

/// n commuting, independent, Hermitian Pauli generators of a stabilizer state.
struct StabilizerStateSpec {
    size_t n = 0;
    std::vector<PauliString> generators;

    /// Throws NonCommutingError, DependentGeneratorsError or
    /// InvalidStabilizerSpecError (wrong count, wrong length, non-Hermitian).
    void validate() const;
};

/// Format: "n <count>" then one signed Pauli string per line ("+XXI").
StabilizerStateSpec read_stabilizer_spec(std::istream &in);
void write_stabilizer_spec(std::ostream &out, const StabilizerStateSpec &spec);

/// Reduced row echelon form of the group (x bits before z bits, first pivot
/// row wins), with signs carried through the row products. Two generator
/// lists span the same signed group exactly when their forms are equal.
std::vector<PauliString> canonical_form(std::vector<PauliString> generators);

/// Stabilizer generators Z-images of a tableau, i.e. of the state U|0...0>.
std::vector<PauliString> stabilizers_of(const Tableau &t);

/// A Clifford U with U Z_j U^dagger = generators[j] (signs included).
/// Destabilizers are solved from <d_i, g_j> = delta_ij and then made to
/// commute with each other.
SymplecticRep complete_clifford(const StabilizerStateSpec &spec);

struct PreparedState {
    /// H_all - CZ - F
    Circuit cz_form;
    /// H_all - P_all - CX - F
    Circuit cx_form;
};

/// Circuits taking |0...0> to the state stabilized by spec, each with a single
/// two-qubit segment. The trailing one-qubit segment F ends in the Pauli
/// layer that fixes the generator signs.
PreparedState prep_state(const StabilizerStateSpec &spec, const CompileOptions &opts = {});

/// The stabilizer generators produced by running `c` on |0...0>.
std::vector<PauliString> prepared_stabilizers(const Circuit &c);

}  // namespace cliffc

#endif
