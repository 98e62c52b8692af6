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

#ifndef CLIFFC_F2LINALG_HPP
#define CLIFFC_F2LINALG_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cliffc {

using word_t = uint64_t;
inline constexpr size_t kWordBits = 64;

inline constexpr size_t words_for(size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// XOR `src` into `dst` word by word. Both spans must have the same length.
inline void xor_words(std::span<word_t> dst, std::span<const word_t> src) {
    for (size_t k = 0; k < dst.size(); k++) {
        dst[k] ^= src[k];
    }
}

/// A packed vector over GF(2).
///
/// Bits past `size()` in the last word are kept zero so that word-level
/// comparisons and popcounts are exact.
class F2Vector {
   public:
    F2Vector() = default;
    explicit F2Vector(size_t len) : len_(len), words_(words_for(len), 0) {
    }

    static F2Vector ones(size_t len);
    static F2Vector from_string(const std::string &bits);

    size_t size() const {
        return len_;
    }

    bool get(size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
    }
    void set(size_t i, bool v) {
        word_t mask = word_t{1} << (i % kWordBits);
        if (v) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(size_t i) {
        words_[i / kWordBits] ^= word_t{1} << (i % kWordBits);
    }

    std::span<word_t> words() {
        return words_;
    }
    std::span<const word_t> words() const {
        return words_;
    }

    F2Vector &operator^=(const F2Vector &other);
    F2Vector &operator&=(const F2Vector &other);
    friend F2Vector operator^(F2Vector a, const F2Vector &b) {
        return a ^= b;
    }
    friend F2Vector operator&(F2Vector a, const F2Vector &b) {
        return a &= b;
    }
    bool operator==(const F2Vector &other) const = default;

    size_t popcount() const;
    bool any() const;
    /// Inner product over GF(2).
    bool dot(const F2Vector &other) const;

    std::string str() const;

   private:
    size_t len_ = 0;
    std::vector<word_t> words_;
};

std::ostream &operator<<(std::ostream &out, const F2Vector &v);

/// A dense row-major matrix over GF(2), one bit per entry.
///
/// Rows are padded to whole words; padding bits are always zero. Row
/// operations are word-wide XORs, column operations touch one bit per row.
class F2Matrix {
   public:
    F2Matrix() = default;
    F2Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), words_(rows * words_for(cols), 0) {
    }

    static F2Matrix identity(size_t n);
    static F2Matrix diagonal(const F2Vector &d);
    /// Parses rows of '0'/'1' characters, all of equal length.
    static F2Matrix from_rows(const std::vector<std::string> &rows);
    /// Assemble [[a, b], [c, d]]. All four blocks must be n x n.
    static F2Matrix from_blocks(const F2Matrix &a, const F2Matrix &b, const F2Matrix &c, const F2Matrix &d);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    bool get(size_t r, size_t c) const {
        return (words_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1;
    }
    void set(size_t r, size_t c, bool v) {
        word_t &w = words_[r * stride_ + c / kWordBits];
        word_t mask = word_t{1} << (c % kWordBits);
        w = v ? (w | mask) : (w & ~mask);
    }
    void flip(size_t r, size_t c) {
        words_[r * stride_ + c / kWordBits] ^= word_t{1} << (c % kWordBits);
    }

    std::span<word_t> row(size_t r) {
        return {words_.data() + r * stride_, stride_};
    }
    std::span<const word_t> row(size_t r) const {
        return {words_.data() + r * stride_, stride_};
    }
    F2Vector row_vector(size_t r) const;
    F2Vector col_vector(size_t c) const;
    void set_row(size_t r, const F2Vector &v);
    void set_col(size_t c, const F2Vector &v);

    /// row[dst] += row[src]
    void xor_row(size_t dst, size_t src) {
        xor_words(row(dst), row(src));
    }
    void swap_rows(size_t a, size_t b);
    /// col[dst] += col[src]
    void xor_col(size_t dst, size_t src);
    void swap_cols(size_t a, size_t b);

    /// Copy of the nr x nc submatrix with top-left corner (r0, c0).
    F2Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void set_block(size_t r0, size_t c0, const F2Matrix &b);

    F2Vector diag() const;
    bool is_zero() const;
    bool is_identity() const;

    bool operator==(const F2Matrix &other) const = default;

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<word_t> words_;
};

std::ostream &operator<<(std::ostream &out, const F2Matrix &m);

F2Matrix add(const F2Matrix &a, const F2Matrix &b);
F2Matrix mul(const F2Matrix &a, const F2Matrix &b);
F2Vector mul(const F2Matrix &a, const F2Vector &v);
inline F2Matrix operator+(const F2Matrix &a, const F2Matrix &b) {
    return add(a, b);
}
inline F2Matrix operator*(const F2Matrix &a, const F2Matrix &b) {
    return mul(a, b);
}
F2Matrix transpose(const F2Matrix &m);

/// Gauss-Jordan inverse; pivot is the first nonzero row at or below the
/// diagonal. Returns nullopt when `m` is singular.
std::optional<F2Matrix> try_invert(const F2Matrix &m);
/// Like try_invert but throws SingularMatrixError.
F2Matrix invert(const F2Matrix &m);
/// (m^-1)^T
F2Matrix inverse_transpose(const F2Matrix &m);

size_t rank(const F2Matrix &m);

/// Some x with a * x = b, free variables set to zero. nullopt if
/// inconsistent.
std::optional<F2Matrix> solve(const F2Matrix &a, const F2Matrix &b);

bool is_symmetric(const F2Matrix &m);

/// Witness for the symmetric-matrix factorization property: a + diag(b) = m * m^T
/// with m unit lower triangular (hence invertible).
struct SymmetricFactor {
    F2Vector b_diag;
    F2Matrix m;
};

/// Symmetric elimination over GF(2). At each pivot whose Schur-complement
/// diagonal entry is zero the corresponding diagonal entry of `a` is flipped,
/// which flips exactly that Schur entry. Throws std::invalid_argument if `a`
/// is not symmetric.
SymmetricFactor factor_symmetric(const F2Matrix &a);

/// s^T * Omega * s == Omega with Omega = [[0, I], [I, 0]]. Throws
/// DimensionError on non-square or odd-dimensional input.
bool is_symplectic(const F2Matrix &s);

/// Matrix text format: "rows cols" then one line of '0'/'1' per row.
void write_matrix(std::ostream &out, const F2Matrix &m);
F2Matrix read_matrix(std::istream &in);

}  // namespace cliffc

#endif
