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

#include "cliffc/f2linalg.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "cliffc/errors.hpp"

namespace cliffc {

namespace {

word_t tail_mask(size_t bits) {
    size_t r = bits % kWordBits;
    return r == 0 ? ~word_t{0} : (word_t{1} << r) - 1;
}

void require_same_shape(const F2Matrix &a, const F2Matrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
        throw DimensionError(msg.str());
    }
}

void require_square(const F2Matrix &m, const char *op) {
    if (!m.is_square()) {
        throw DimensionError(std::string(op) + ": matrix is not square");
    }
}

}  // namespace

F2Vector F2Vector::ones(size_t len) {
    F2Vector v(len);
    for (auto &w : v.words_) {
        w = ~word_t{0};
    }
    if (!v.words_.empty()) {
        v.words_.back() &= tail_mask(len);
    }
    return v;
}

F2Vector F2Vector::from_string(const std::string &bits) {
    F2Vector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw ParseError("expected '0' or '1', got '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

F2Vector &F2Vector::operator^=(const F2Vector &other) {
    if (len_ != other.len_) {
        throw DimensionError("F2Vector xor: length mismatch");
    }
    xor_words(words_, other.words_);
    return *this;
}

F2Vector &F2Vector::operator&=(const F2Vector &other) {
    if (len_ != other.len_) {
        throw DimensionError("F2Vector and: length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

size_t F2Vector::popcount() const {
    size_t total = 0;
    for (word_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool F2Vector::any() const {
    for (word_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool F2Vector::dot(const F2Vector &other) const {
    if (len_ != other.len_) {
        throw DimensionError("F2Vector dot: length mismatch");
    }
    word_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::string F2Vector::str() const {
    std::string s(len_, '0');
    for (size_t i = 0; i < len_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::ostream &operator<<(std::ostream &out, const F2Vector &v) {
    return out << v.str();
}

F2Matrix F2Matrix::identity(size_t n) {
    F2Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

F2Matrix F2Matrix::diagonal(const F2Vector &d) {
    F2Matrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); i++) {
        m.set(i, i, d.get(i));
    }
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::string> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    F2Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw DimensionError("from_rows: ragged rows");
        }
        m.set_row(r, F2Vector::from_string(rows[r]));
    }
    return m;
}

F2Matrix F2Matrix::from_blocks(const F2Matrix &a, const F2Matrix &b, const F2Matrix &c, const F2Matrix &d) {
    size_t n = a.rows();
    for (const F2Matrix *x : {&a, &b, &c, &d}) {
        if (x->rows() != n || x->cols() != n) {
            throw DimensionError("from_blocks: all blocks must be n x n");
        }
    }
    F2Matrix m(2 * n, 2 * n);
    m.set_block(0, 0, a);
    m.set_block(0, n, b);
    m.set_block(n, 0, c);
    m.set_block(n, n, d);
    return m;
}

F2Vector F2Matrix::row_vector(size_t r) const {
    F2Vector v(cols_);
    auto src = row(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

F2Vector F2Matrix::col_vector(size_t c) const {
    F2Vector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

void F2Matrix::set_row(size_t r, const F2Vector &v) {
    if (v.size() != cols_) {
        throw DimensionError("set_row: length mismatch");
    }
    std::copy(v.words().begin(), v.words().end(), row(r).begin());
}

void F2Matrix::set_col(size_t c, const F2Vector &v) {
    if (v.size() != rows_) {
        throw DimensionError("set_col: length mismatch");
    }
    for (size_t r = 0; r < rows_; r++) {
        set(r, c, v.get(r));
    }
}

void F2Matrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    auto ra = row(a);
    auto rb = row(b);
    std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

void F2Matrix::xor_col(size_t dst, size_t src) {
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, src)) {
            flip(r, dst);
        }
    }
}

void F2Matrix::swap_cols(size_t a, size_t b) {
    for (size_t r = 0; r < rows_; r++) {
        bool va = get(r, a);
        bool vb = get(r, b);
        if (va != vb) {
            flip(r, a);
            flip(r, b);
        }
    }
}

F2Matrix F2Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw DimensionError("block: out of range");
    }
    F2Matrix out(nr, nc);
    if (c0 % kWordBits == 0) {
        size_t first = c0 / kWordBits;
        for (size_t r = 0; r < nr; r++) {
            auto src = row(r0 + r);
            auto dst = out.row(r);
            for (size_t k = 0; k < dst.size(); k++) {
                dst[k] = src[first + k];
            }
            if (!dst.empty()) {
                dst.back() &= tail_mask(nc);
            }
        }
        return out;
    }
    for (size_t r = 0; r < nr; r++) {
        for (size_t c = 0; c < nc; c++) {
            if (get(r0 + r, c0 + c)) {
                out.set(r, c, true);
            }
        }
    }
    return out;
}

void F2Matrix::set_block(size_t r0, size_t c0, const F2Matrix &b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
        throw DimensionError("set_block: out of range");
    }
    for (size_t r = 0; r < b.rows(); r++) {
        for (size_t c = 0; c < b.cols(); c++) {
            set(r0 + r, c0 + c, b.get(r, c));
        }
    }
}

F2Vector F2Matrix::diag() const {
    size_t n = std::min(rows_, cols_);
    F2Vector d(n);
    for (size_t i = 0; i < n; i++) {
        d.set(i, get(i, i));
    }
    return d;
}

bool F2Matrix::is_zero() const {
    for (word_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool F2Matrix::is_identity() const {
    return is_square() && *this == identity(rows_);
}

std::string F2Matrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        s += row_vector(r).str();
        s += '\n';
    }
    return s;
}

std::ostream &operator<<(std::ostream &out, const F2Matrix &m) {
    return out << m.str();
}

F2Matrix add(const F2Matrix &a, const F2Matrix &b) {
    require_same_shape(a, b, "add");
    F2Matrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        xor_words(out.row(r), b.row(r));
    }
    return out;
}

F2Matrix mul(const F2Matrix &a, const F2Matrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mul: inner dimensions differ");
    }
    F2Matrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        auto ai = a.row(i);
        auto oi = out.row(i);
        for (size_t k = 0; k < ai.size(); k++) {
            word_t w = ai[k];
            while (w) {
                size_t bit = std::countr_zero(w);
                w &= w - 1;
                xor_words(oi, b.row(k * kWordBits + bit));
            }
        }
    }
    return out;
}

F2Vector mul(const F2Matrix &a, const F2Vector &v) {
    if (a.cols() != v.size()) {
        throw DimensionError("mul: vector length differs from column count");
    }
    F2Vector out(a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        word_t acc = 0;
        auto ai = a.row(i);
        auto vw = v.words();
        for (size_t k = 0; k < ai.size(); k++) {
            acc ^= ai[k] & vw[k];
        }
        out.set(i, std::popcount(acc) & 1);
    }
    return out;
}

F2Matrix transpose(const F2Matrix &m) {
    F2Matrix out(m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        auto row = m.row(r);
        for (size_t k = 0; k < row.size(); k++) {
            word_t w = row[k];
            while (w) {
                size_t bit = std::countr_zero(w);
                w &= w - 1;
                out.set(k * kWordBits + bit, r, true);
            }
        }
    }
    return out;
}

std::optional<F2Matrix> try_invert(const F2Matrix &m) {
    require_square(m, "invert");
    size_t n = m.rows();
    F2Matrix work = m;
    F2Matrix inv = F2Matrix::identity(n);
    for (size_t col = 0; col < n; col++) {
        size_t pivot = col;
        while (pivot < n && !work.get(pivot, col)) {
            pivot++;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        work.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
        for (size_t r = 0; r < n; r++) {
            if (r != col && work.get(r, col)) {
                work.xor_row(r, col);
                inv.xor_row(r, col);
            }
        }
    }
    return inv;
}

F2Matrix invert(const F2Matrix &m) {
    auto inv = try_invert(m);
    if (!inv) {
        throw SingularMatrixError("invert: matrix is singular");
    }
    return *std::move(inv);
}

F2Matrix inverse_transpose(const F2Matrix &m) {
    return transpose(invert(m));
}

size_t rank(const F2Matrix &m) {
    F2Matrix work = m;
    size_t r = 0;
    for (size_t col = 0; col < m.cols() && r < m.rows(); col++) {
        size_t pivot = r;
        while (pivot < m.rows() && !work.get(pivot, col)) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        work.swap_rows(pivot, r);
        for (size_t i = r + 1; i < m.rows(); i++) {
            if (work.get(i, col)) {
                work.xor_row(i, r);
            }
        }
        r++;
    }
    return r;
}

std::optional<F2Matrix> solve(const F2Matrix &a, const F2Matrix &b) {
    if (a.rows() != b.rows()) {
        throw DimensionError("solve: row counts differ");
    }
    size_t rows = a.rows();
    F2Matrix lhs = a;
    F2Matrix rhs = b;
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t col = 0; col < a.cols() && r < rows; col++) {
        size_t pivot = r;
        while (pivot < rows && !lhs.get(pivot, col)) {
            pivot++;
        }
        if (pivot == rows) {
            continue;
        }
        lhs.swap_rows(pivot, r);
        rhs.swap_rows(pivot, r);
        for (size_t i = 0; i < rows; i++) {
            if (i != r && lhs.get(i, col)) {
                lhs.xor_row(i, r);
                rhs.xor_row(i, r);
            }
        }
        pivot_cols.push_back(col);
        r++;
    }
    for (size_t i = r; i < rows; i++) {
        for (word_t w : rhs.row(i)) {
            if (w) {
                return std::nullopt;
            }
        }
    }
    F2Matrix x(a.cols(), b.cols());
    for (size_t i = 0; i < pivot_cols.size(); i++) {
        auto src = rhs.row(i);
        std::copy(src.begin(), src.end(), x.row(pivot_cols[i]).begin());
    }
    return x;
}

bool is_symmetric(const F2Matrix &m) {
    return m.is_square() && m == transpose(m);
}

SymmetricFactor factor_symmetric(const F2Matrix &a) {
    if (!is_symmetric(a)) {
        throw std::invalid_argument("factor_symmetric: input is not symmetric");
    }
    size_t n = a.rows();
    // Row-only elimination keeps the trailing block equal to the (symmetric)
    // Schur complement, so column k below the pivot is column k of the factor.
    F2Matrix schur = a;
    SymmetricFactor out{F2Vector(n), F2Matrix(n, n)};
    for (size_t k = 0; k < n; k++) {
        if (!schur.get(k, k)) {
            out.b_diag.set(k, true);
            schur.set(k, k, true);
        }
        for (size_t i = k; i < n; i++) {
            if (schur.get(i, k)) {
                out.m.set(i, k, true);
                if (i != k) {
                    schur.xor_row(i, k);
                }
            }
        }
    }
    return out;
}

bool is_symplectic(const F2Matrix &s) {
    if (!s.is_square() || s.rows() % 2 != 0) {
        throw DimensionError("is_symplectic: matrix must be square with even dimension");
    }
    size_t n = s.rows() / 2;
    F2Matrix a = s.block(0, 0, n, n);
    F2Matrix b = s.block(0, n, n, n);
    F2Matrix c = s.block(n, 0, n, n);
    F2Matrix d = s.block(n, n, n, n);
    F2Matrix at = transpose(a);
    F2Matrix bt = transpose(b);
    // Blocks of s^T Omega s: [[A^T C + C^T A, A^T D + C^T B], [., B^T D + D^T B]].
    F2Matrix atc = at * c;
    F2Matrix btd = bt * d;
    F2Matrix atd = at * d;
    F2Matrix btc = bt * c;
    return is_symmetric(atc) && is_symmetric(btd) && (atd + transpose(btc)).is_identity();
}

void write_matrix(std::ostream &out, const F2Matrix &m) {
    out << m.rows() << ' ' << m.cols() << '\n' << m.str();
}

F2Matrix read_matrix(std::istream &in) {
    std::string line;
    size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            lineno++;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (!line.empty()) {
                return true;
            }
        }
        return false;
    };
    if (!next_line()) {
        throw ParseError("matrix: missing header");
    }
    std::istringstream header(line);
    long long rows = -1;
    long long cols = -1;
    std::string extra;
    if (!(header >> rows >> cols) || rows < 0 || cols < 0 || (header >> extra)) {
        throw ParseError("matrix: header must be 'rows cols'", lineno);
    }
    F2Matrix m(static_cast<size_t>(rows), static_cast<size_t>(cols));
    for (long long r = 0; r < rows; r++) {
        if (!next_line()) {
            throw ParseError("matrix: expected " + std::to_string(rows) + " rows", lineno);
        }
        if (line.size() != static_cast<size_t>(cols)) {
            throw ParseError("matrix: row has " + std::to_string(line.size()) + " entries, expected " +
                                 std::to_string(cols),
                             lineno);
        }
        for (long long c = 0; c < cols; c++) {
            char ch = line[static_cast<size_t>(c)];
            if (ch == '1') {
                m.set(static_cast<size_t>(r), static_cast<size_t>(c), true);
            } else if (ch != '0') {
                throw ParseError("matrix: entries must be '0' or '1'", lineno);
            }
        }
    }
    return m;
}

}  // namespace cliffc
