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

#ifndef CLIFFC_RANDOM_HPP
#define CLIFFC_RANDOM_HPP

#include <random>

#include "cliffc/circuit.hpp"
#include "cliffc/f2linalg.hpp"

namespace cliffc {

// Random instances for tests and benchmarks. Cliffords come from random
// circuits, which is not uniform over the Clifford group.

/// `num_gates` gates drawn from {H, P, CNOT} (CNOT only when n >= 2), followed
/// by a random Pauli layer. Zero gates gives the empty circuit.
Circuit random_clifford_circuit(size_t n, size_t num_gates, std::mt19937_64 &rng);

F2Matrix random_matrix(size_t rows, size_t cols, std::mt19937_64 &rng);
/// Rejection-sampled uniform invertible matrix.
F2Matrix random_invertible(size_t n, std::mt19937_64 &rng);
F2Matrix random_symmetric(size_t n, std::mt19937_64 &rng);

}  // namespace cliffc

#endif
