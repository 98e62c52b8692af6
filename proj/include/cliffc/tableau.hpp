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

#ifndef CLIFFC_TABLEAU_HPP
#define CLIFFC_TABLEAU_HPP

#include <optional>
#include <string>
#include <vector>

#include "cliffc/circuit.hpp"
#include "cliffc/f2linalg.hpp"
#include "cliffc/symplectic.hpp"

namespace cliffc {

/// i^xi X^x Z^z, tensored qubit by qubit.
struct PauliString {
    F2Vector x;
    F2Vector z;
    uint8_t xi = 0;

    PauliString() = default;
    explicit PauliString(size_t n) : x(n), z(n) {
    }

    size_t size() const {
        return x.size();
    }
    /// Parses "+XYZI" / "-ZZ" style Hermitian strings; the sign is required.
    static PauliString parse(const std::string &text);
    /// Inverse of parse. Throws std::invalid_argument for non-Hermitian phases.
    std::string str() const;

    bool is_hermitian() const {
        return (xi & 1) == ((x & z).popcount() & 1);
    }
    /// True when the Hermitian sign is -1.
    bool negative() const {
        return ((xi + 4 - ((x & z).popcount() & 3)) & 3) == 2;
    }
    bool commutes_with(const PauliString &other) const {
        return x.dot(other.z) == z.dot(other.x);
    }
    bool operator==(const PauliString &other) const = default;
};

PauliString operator*(const PauliString &a, const PauliString &b);

/// Signed images of the 2n Pauli generators under a Clifford.
///
/// The bit part is stored exactly as the symplectic matrix S (column j is
/// the image of generator j), so gate updates are row operations. The phase
/// exponents are stored as two bit planes, xi = lo + 2 hi (mod 4).
class Tableau {
   public:
    explicit Tableau(size_t n = 0);
    static Tableau from_rep(const SymplecticRep &rep);

    size_t num_qubits() const {
        return n_;
    }
    const F2Matrix &s() const {
        return s_;
    }
    uint8_t xi(size_t generator) const;
    PhaseVector phases() const;
    /// Image of generator j (X_j for j < n, Z_{j-n} otherwise).
    PauliString generator(size_t j) const;

    /// Conjugates every generator image by g.
    void apply(const Gate &g);
    void apply(const Circuit &c);

    /// Bit part symplectic and every image Hermitian.
    bool invariants_hold() const;

   private:
    void add_to_phase_hi(std::span<const word_t> bits);

    size_t n_;
    F2Matrix s_;
    F2Vector xi_lo_;
    F2Vector xi_hi_;
};

inline void simulate_gate(Tableau &t, const Gate &g) {
    t.apply(g);
}
Tableau simulate_circuit(const Circuit &c);
SymplecticRep tableau_to_rep(const Tableau &t);

/// Describes the first generator whose image differs from (s, p), or nullopt
/// when they match. A null `p` compares only the bit part.
std::optional<std::string> first_mismatch(const Tableau &t, const F2Matrix &s, const PhaseVector *p);

}  // namespace cliffc

#endif
