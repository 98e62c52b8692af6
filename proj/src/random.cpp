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

#include "cliffc/random.hpp"

namespace cliffc {

namespace {

// Raw engine output reduced mod bound.
uint32_t below(std::mt19937_64 &rng, uint64_t bound) {
    return static_cast<uint32_t>(rng() % bound);
}

}  // namespace

Circuit random_clifford_circuit(size_t n, size_t num_gates, std::mt19937_64 &rng) {
    Circuit c(n);
    if (n == 0 || num_gates == 0) {
        return c;
    }
    uint64_t kinds = n >= 2 ? 3 : 2;
    for (size_t k = 0; k < num_gates; k++) {
        switch (below(rng, kinds)) {
            case 0:
                c.append(Gate::h(below(rng, n)));
                break;
            case 1:
                c.append(Gate::p(below(rng, n)));
                break;
            default: {
                uint32_t a = below(rng, n);
                uint32_t b = below(rng, n - 1);
                if (b >= a) {
                    b++;
                }
                c.append(Gate::cnot(a, b));
            }
        }
    }
    for (uint32_t q = 0; q < n; q++) {
        switch (below(rng, 4)) {
            case 1:
                c.append(Gate::x(q));
                break;
            case 2:
                c.append(Gate::y(q));
                break;
            case 3:
                c.append(Gate::z(q));
                break;
            default:
                break;
        }
    }
    return c;
}

F2Matrix random_matrix(size_t rows, size_t cols, std::mt19937_64 &rng) {
    F2Matrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            if (rng() & 1) {
                m.set(r, c, true);
            }
        }
    }
    return m;
}

F2Matrix random_invertible(size_t n, std::mt19937_64 &rng) {
    while (true) {
        F2Matrix m = random_matrix(n, n, rng);
        if (rank(m) == n) {
            return m;
        }
    }
}

F2Matrix random_symmetric(size_t n, std::mt19937_64 &rng) {
    F2Matrix m(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = r; c < n; c++) {
            if (rng() & 1) {
                m.set(r, c, true);
                m.set(c, r, true);
            }
        }
    }
    return m;
}

}  // namespace cliffc
