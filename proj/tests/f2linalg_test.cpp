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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cliffc/errors.hpp"
#include "cliffc/random.hpp"

namespace cliffc {
namespace {

F2Matrix naive_mul(const F2Matrix &a, const F2Matrix &b) {
    F2Matrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < b.cols(); j++) {
            int acc = 0;
            for (size_t k = 0; k < a.cols(); k++) {
                acc += a.get(i, k) * b.get(k, j);
            }
            out.set(i, j, acc & 1);
        }
    }
    return out;
}

/// Every n x n matrix over GF(2), indexed by its bits.
F2Matrix matrix_from_bits(size_t n, uint64_t bits) {
    F2Matrix m(n, n);
    for (size_t k = 0; k < n * n; k++) {
        m.set(k / n, k % n, (bits >> k) & 1);
    }
    return m;
}

F2Matrix symmetric_from_bits(size_t n, uint64_t bits) {
    F2Matrix m(n, n);
    size_t k = 0;
    for (size_t r = 0; r < n; r++) {
        for (size_t c = r; c < n; c++, k++) {
            m.set(r, c, (bits >> k) & 1);
            m.set(c, r, (bits >> k) & 1);
        }
    }
    return m;
}

void expect_factor_holds(const F2Matrix &a) {
    SymmetricFactor f = factor_symmetric(a);
    EXPECT_EQ(a + F2Matrix::diagonal(f.b_diag), f.m * transpose(f.m)) << a;
    EXPECT_EQ(rank(f.m), a.rows()) << a;
}

TEST(F2Vector, Basics) {
    F2Vector v = F2Vector::from_string("10110");
    EXPECT_EQ(v.size(), 5u);
    EXPECT_EQ(v.popcount(), 3u);
    EXPECT_EQ(v.str(), "10110");
    EXPECT_TRUE(v.dot(F2Vector::from_string("10000")));
    EXPECT_FALSE(v.dot(F2Vector::from_string("10100")));
    F2Vector ones = F2Vector::ones(70);
    EXPECT_EQ(ones.popcount(), 70u);
    ones ^= F2Vector::ones(70);
    EXPECT_FALSE(ones.any());
}

TEST(F2Matrix, AddExamples) {
    F2Matrix i3 = F2Matrix::identity(3);
    EXPECT_TRUE((i3 + i3).is_zero());
    F2Matrix swap = F2Matrix::from_rows({"01", "10"});
    EXPECT_EQ(swap + F2Matrix::diagonal(F2Vector::from_string("10")), F2Matrix::from_rows({"11", "10"}));
}

TEST(F2Matrix, AddMatchesEntrywise) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; trial++) {
        F2Matrix a = random_matrix(5, 5, rng);
        F2Matrix b = random_matrix(5, 5, rng);
        F2Matrix c = a + b;
        for (size_t r = 0; r < 5; r++) {
            for (size_t k = 0; k < 5; k++) {
                EXPECT_EQ(c.get(r, k), a.get(r, k) != b.get(r, k));
            }
        }
    }
}

TEST(F2Matrix, MulExamples) {
    F2Matrix h = F2Matrix::from_rows({"01", "10"});
    F2Matrix p = F2Matrix::from_rows({"10", "11"});
    EXPECT_TRUE((h * h).is_identity());
    EXPECT_TRUE((p * p).is_identity());
}

TEST(F2Matrix, MulMatchesNaiveOracle) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 1000; trial++) {
        size_t r = 1 + rng() % 64;
        size_t k = 1 + rng() % 64;
        size_t c = 1 + rng() % 64;
        F2Matrix a = random_matrix(r, k, rng);
        F2Matrix b = random_matrix(k, c, rng);
        ASSERT_EQ(a * b, naive_mul(a, b)) << "trial " << trial;
    }
    F2Matrix a = random_matrix(8, 8, rng);
    F2Matrix b = random_matrix(8, 8, rng);
    EXPECT_EQ(a * b, naive_mul(a, b));
}

TEST(F2Matrix, MulIsAssociative) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; trial++) {
        F2Matrix a = random_matrix(20, 30, rng);
        F2Matrix b = random_matrix(30, 70, rng);
        F2Matrix c = random_matrix(70, 9, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(F2Matrix, MatrixVector) {
    std::mt19937_64 rng(14);
    F2Matrix a = random_matrix(40, 90, rng);
    F2Matrix v = random_matrix(90, 1, rng);
    EXPECT_EQ(mul(a, v.col_vector(0)), (a * v).col_vector(0));
}

TEST(F2Matrix, InvertExamples) {
    EXPECT_EQ(invert(F2Matrix::identity(4)), F2Matrix::identity(4));
    F2Matrix p = F2Matrix::from_rows({"10", "11"});
    EXPECT_EQ(invert(p), p);
    EXPECT_THROW(invert(F2Matrix::from_rows({"11", "11"})), SingularMatrixError);
    EXPECT_THROW(invert(F2Matrix(2, 3)), DimensionError);
}

TEST(F2Matrix, RankExamples) {
    EXPECT_EQ(rank(F2Matrix(3, 3)), 0u);
    EXPECT_EQ(rank(F2Matrix::identity(7)), 7u);
    EXPECT_EQ(rank(F2Matrix::from_rows({"11", "11"})), 1u);
}

TEST(F2Matrix, RankMatchesInvertibilityExhaustive) {
    for (size_t n = 1; n <= 3; n++) {
        size_t invertible = 0;
        for (uint64_t bits = 0; bits < (uint64_t{1} << (n * n)); bits++) {
            F2Matrix m = matrix_from_bits(n, bits);
            auto inv = try_invert(m);
            ASSERT_EQ(inv.has_value(), rank(m) == n) << m;
            if (inv) {
                invertible++;
                EXPECT_TRUE((m * *inv).is_identity());
                EXPECT_TRUE((*inv * m).is_identity());
            }
        }
        size_t expected[] = {0, 1, 6, 168};
        EXPECT_EQ(invertible, expected[n]);
    }
}

TEST(F2Matrix, RankMatchesInvertibilityRandom) {
    std::mt19937_64 rng(15);
    for (size_t n : {5, 17, 64, 65, 130, 256}) {
        for (int trial = 0; trial < 5; trial++) {
            F2Matrix m = random_matrix(n, n, rng);
            auto inv = try_invert(m);
            ASSERT_EQ(inv.has_value(), rank(m) == n);
            if (inv) {
                EXPECT_TRUE((m * *inv).is_identity());
            }
        }
        F2Matrix m = random_invertible(n, rng);
        EXPECT_TRUE((m * invert(m)).is_identity());
        EXPECT_EQ(inverse_transpose(m), transpose(invert(m)));
    }
}

TEST(F2Matrix, Transpose) {
    EXPECT_EQ(transpose(F2Matrix::identity(3)), F2Matrix::identity(3));
    EXPECT_EQ(transpose(F2Matrix::from_rows({"10", "11"})), F2Matrix::from_rows({"11", "01"}));
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 20; trial++) {
        F2Matrix m = random_matrix(1 + rng() % 100, 1 + rng() % 100, rng);
        EXPECT_EQ(transpose(transpose(m)), m);
        F2Matrix t = transpose(m);
        EXPECT_EQ(t.rows(), m.cols());
        EXPECT_EQ(t.get(0, t.cols() - 1), m.get(m.rows() - 1, 0));
    }
}

TEST(F2Matrix, IsSymmetric) {
    EXPECT_TRUE(is_symmetric(F2Matrix::identity(5)));
    EXPECT_FALSE(is_symmetric(F2Matrix::from_rows({"01", "00"})));
    std::mt19937_64 rng(17);
    EXPECT_TRUE(is_symmetric(random_symmetric(50, rng)));
}

TEST(F2Matrix, Solve) {
    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 30; trial++) {
        F2Matrix a = random_matrix(12, 20, rng);
        F2Matrix x = random_matrix(20, 3, rng);
        F2Matrix b = a * x;
        auto got = solve(a, b);
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(a * *got, b);
    }
    auto none = solve(F2Matrix::from_rows({"11", "11"}), F2Matrix::from_rows({"1", "0"}));
    EXPECT_FALSE(none.has_value());
}

TEST(F2Matrix, BlocksAndColumns) {
    F2Matrix a = F2Matrix::from_rows({"10", "01"});
    F2Matrix b = F2Matrix::from_rows({"11", "00"});
    F2Matrix c(2, 2);
    F2Matrix d = F2Matrix::from_rows({"01", "10"});
    F2Matrix s = F2Matrix::from_blocks(a, b, c, d);
    EXPECT_EQ(s.block(0, 2, 2, 2), b);
    EXPECT_EQ(s.block(2, 2, 2, 2), d);
    s.swap_cols(0, 3);
    EXPECT_EQ(s.col_vector(0).str(), "1010");
    s.xor_col(1, 0);
    EXPECT_EQ(s.col_vector(1).str(), "1110");
}

TEST(FactorSymmetric, Examples) {
    SymmetricFactor zero = factor_symmetric(F2Matrix(3, 3));
    EXPECT_EQ(zero.b_diag, F2Vector::ones(3));
    EXPECT_TRUE(zero.m.is_identity());
    expect_factor_holds(F2Matrix::from_rows({"01", "10"}));
    EXPECT_THROW(factor_symmetric(F2Matrix::from_rows({"01", "00"})), std::invalid_argument);
}

TEST(FactorSymmetric, ExhaustiveUpToFour) {
    for (size_t n = 1; n <= 4; n++) {
        size_t count = n * (n + 1) / 2;
        for (uint64_t bits = 0; bits < (uint64_t{1} << count); bits++) {
            expect_factor_holds(symmetric_from_bits(n, bits));
        }
    }
}

TEST(FactorSymmetric, Random) {
    std::mt19937_64 rng(19);
    for (size_t n : {16, 64, 100, 256}) {
        for (int trial = 0; trial < 4; trial++) {
            expect_factor_holds(random_symmetric(n, rng));
        }
    }
}

TEST(IsSymplectic, Examples) {
    EXPECT_TRUE(is_symplectic(F2Matrix::identity(4)));
    EXPECT_TRUE(is_symplectic(F2Matrix::from_rows({"01", "10"})));
    // Over GF(2) every 2x2 matrix of determinant 1 is symplectic.
    EXPECT_TRUE(is_symplectic(F2Matrix::from_rows({"11", "01"})));
    EXPECT_FALSE(is_symplectic(F2Matrix::from_rows({"11", "11"})));
    EXPECT_FALSE(is_symplectic(F2Matrix::from_rows({"11", "00"})));
    EXPECT_THROW(is_symplectic(F2Matrix(3, 3)), DimensionError);
}

TEST(IsSymplectic, MatchesOmegaIdentityExhaustive) {
    for (size_t n = 1; n <= 2; n++) {
        size_t dim = 2 * n;
        F2Matrix omega = F2Matrix::from_blocks(F2Matrix(n, n), F2Matrix::identity(n), F2Matrix::identity(n),
                                               F2Matrix(n, n));
        size_t found = 0;
        for (uint64_t bits = 0; bits < (uint64_t{1} << (dim * dim)); bits++) {
            F2Matrix s = matrix_from_bits(dim, bits);
            bool want = naive_mul(naive_mul(transpose(s), omega), s) == omega;
            ASSERT_EQ(is_symplectic(s), want) << s;
            found += want;
        }
        EXPECT_EQ(found, n == 1 ? 6u : 720u);
    }
}

TEST(MatrixText, RoundTrip) {
    std::mt19937_64 rng(20);
    F2Matrix m = random_matrix(7, 70, rng);
    std::stringstream io;
    write_matrix(io, m);
    EXPECT_EQ(read_matrix(io), m);
    std::istringstream bad("2 2\n10\n1x\n");
    EXPECT_THROW(read_matrix(bad), ParseError);
    std::istringstream short_row("2 2\n10\n1\n");
    EXPECT_THROW(read_matrix(short_row), ParseError);
}

}  // namespace
}  // namespace cliffc
