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

#include "cliffc/synthesis.hpp"

#include <cmath>

#include "cliffc/errors.hpp"

namespace cliffc {

namespace {

/// row[dst] += row[src]
struct RowOp {
    uint32_t src;
    uint32_t dst;
};

void record(F2Matrix &w, std::vector<RowOp> &ops, size_t src, size_t dst) {
    w.xor_row(dst, src);
    ops.push_back({static_cast<uint32_t>(src), static_cast<uint32_t>(dst)});
}

/// Makes the diagonal entry of `col` one by adding the first lower row that
/// has the bit.
void fix_pivot(F2Matrix &w, std::vector<RowOp> &ops, size_t col) {
    size_t n = w.rows();
    if (w.get(col, col)) {
        return;
    }
    size_t r = col + 1;
    while (r < n && !w.get(r, col)) {
        r++;
    }
    if (r == n) {
        throw SingularMatrixError("CNOT synthesis: matrix is singular");
    }
    record(w, ops, r, col);
}

/// Clears column `col` below the diagonal.
void eliminate_column(F2Matrix &w, std::vector<RowOp> &ops, size_t col) {
    size_t n = w.rows();
    fix_pivot(w, ops, col);
    for (size_t r = col + 1; r < n; r++) {
        if (w.get(r, col)) {
            record(w, ops, col, r);
        }
    }
}

void lower_gauss(F2Matrix &w, std::vector<RowOp> &ops) {
    for (size_t col = 0; col < w.rows(); col++) {
        eliminate_column(w, ops, col);
    }
}

void lower_pmh(F2Matrix &w, std::vector<RowOp> &ops, size_t block) {
    size_t n = w.rows();
    std::vector<long long> first_with(size_t{1} << block);
    for (size_t start = 0; start < n; start += block) {
        size_t width = std::min(block, n - start);
        std::fill(first_with.begin(), first_with.end(), -1);
        fix_pivot(w, ops, start);
        // Rows sharing a section pattern collapse onto the first one.
        for (size_t r = start; r < n; r++) {
            size_t pattern = 0;
            for (size_t k = 0; k < width; k++) {
                pattern |= size_t{w.get(r, start + k)} << k;
            }
            if (pattern == 0) {
                continue;
            }
            if (first_with[pattern] < 0) {
                first_with[pattern] = static_cast<long long>(r);
            } else {
                record(w, ops, static_cast<size_t>(first_with[pattern]), r);
            }
        }
        for (size_t col = start; col < start + width; col++) {
            eliminate_column(w, ops, col);
        }
    }
}

template <typename LowerPass>
Circuit synth_by_two_passes(const F2Matrix &m, LowerPass lower) {
    if (!m.is_square()) {
        throw DimensionError("CNOT synthesis: matrix is not square");
    }
    size_t n = m.rows();
    F2Matrix w = m;
    std::vector<RowOp> first;
    lower(w, first);
    F2Matrix wt = transpose(w);
    std::vector<RowOp> second;
    lower(wt, second);
    if (!wt.is_identity()) {
        throw InternalError("CNOT synthesis: elimination did not reach the identity");
    }
    // m = R1^-1 (R2^T)^-1: the transposed second pass runs first, then the
    // first pass in reverse.
    std::vector<Gate> gates;
    gates.reserve(first.size() + second.size());
    for (const RowOp &op : second) {
        gates.push_back(Gate::cnot(op.dst, op.src));
    }
    for (auto it = first.rbegin(); it != first.rend(); ++it) {
        gates.push_back(Gate::cnot(it->src, it->dst));
    }
    return Circuit::single_segment(n, SegmentTag::CX, gates);
}

}  // namespace

Circuit synth_cnot_gauss(const F2Matrix &m) {
    return synth_by_two_passes(m, lower_gauss);
}

Circuit synth_cnot_pmh(const F2Matrix &m, size_t block) {
    if (block == 0) {
        throw std::invalid_argument("synth_cnot_pmh: block size must be at least 1");
    }
    if (block > 20) {
        throw std::invalid_argument("synth_cnot_pmh: block size too large");
    }
    return synth_by_two_passes(m, [block](F2Matrix &w, std::vector<RowOp> &ops) { lower_pmh(w, ops, block); });
}

size_t default_pmh_block(size_t n) {
    if (n < 2) {
        return 1;
    }
    auto k = static_cast<size_t>(std::lround(std::log2(static_cast<double>(n)) / 2.0));
    return std::max<size_t>(1, k);
}

Circuit synth_cz(const F2Matrix &gamma) {
    if (!is_symmetric(gamma)) {
        throw std::invalid_argument("synth_cz: matrix is not symmetric");
    }
    if (gamma.diag().any()) {
        throw std::invalid_argument("synth_cz: matrix has a nonzero diagonal");
    }
    size_t n = gamma.rows();
    std::vector<Gate> gates;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (gamma.get(i, j)) {
                gates.push_back(Gate::cz(static_cast<uint32_t>(i), static_cast<uint32_t>(j)));
            }
        }
    }
    return Circuit::single_segment(n, SegmentTag::CZ, gates);
}

Circuit synth_phase_layer(const F2Vector &d, SegmentTag tag) {
    std::vector<Gate> gates;
    for (size_t q = 0; q < d.size(); q++) {
        if (d.get(q)) {
            gates.push_back(Gate::p(static_cast<uint32_t>(q)));
        }
    }
    return Circuit::single_segment(d.size(), tag, gates);
}

Circuit synth_hadamard_layer(const F2Vector &hset, SegmentTag tag) {
    std::vector<Gate> gates;
    for (size_t q = 0; q < hset.size(); q++) {
        if (hset.get(q)) {
            gates.push_back(Gate::h(static_cast<uint32_t>(q)));
        }
    }
    return Circuit::single_segment(hset.size(), tag, gates);
}

}  // namespace cliffc
