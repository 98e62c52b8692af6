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

#ifndef CLIFFC_SYNTHESIS_HPP
#define CLIFFC_SYNTHESIS_HPP

#include <cstddef>
#include <vector>

#include "cliffc/circuit.hpp"
#include "cliffc/f2linalg.hpp"

namespace cliffc {

// Every synthesized circuit is returned as a single tagged segment. A CNOT
// circuit "implements m" when its symplectic is [[m, 0], [0, m^-T]].

/// Column-by-column Gaussian elimination, lower triangle first, then the
/// transpose. At most n^2 + O(n) gates. Throws SingularMatrixError.
Circuit synth_cnot_gauss(const F2Matrix &m);

/// Patel-Markov-Hayes synthesis with column sections of width `block`.
/// Throws SingularMatrixError, or std::invalid_argument for block == 0.
Circuit synth_cnot_pmh(const F2Matrix &m, size_t block);

/// max(1, round(log2(n) / 2))
size_t default_pmh_block(size_t n);

/// One CZ(i, j) per nonzero entry i < j of a symmetric zero-diagonal gamma,
/// giving the symplectic [[I, 0], [gamma, I]].
Circuit synth_cz(const F2Matrix &gamma);

/// One P per set bit of d: [[I, 0], [diag(d), I]].
Circuit synth_phase_layer(const F2Vector &d, SegmentTag tag = SegmentTag::P);

/// One H per qubit with hset[q] set.
Circuit synth_hadamard_layer(const F2Vector &hset, SegmentTag tag = SegmentTag::H);

}  // namespace cliffc

#endif
