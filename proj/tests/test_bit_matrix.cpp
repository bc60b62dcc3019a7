// Copyright 2026 The cliffsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "cliffsynth/bit_matrix.hpp"

namespace cliffsynth {
namespace {

TEST(BitVector, SetGetFlipAcrossWordBoundary) {
  BitVector v(130);
  EXPECT_TRUE(v.none());
  v.set(0, true);
  v.set(64, true);
  v.flip(129);
  EXPECT_TRUE(v.get(0));
  EXPECT_TRUE(v.get(64));
  EXPECT_TRUE(v.get(129));
  EXPECT_FALSE(v.get(63));
  EXPECT_EQ(v.popcount(), 3u);
  EXPECT_EQ(v.words().size(), 3u);
  v.flip(64);
  EXPECT_EQ(v.popcount(), 2u);
}

TEST(BitVector, XorAndBounds) {
  BitVector a(10), b(10);
  a.set(1, true);
  b.set(1, true);
  b.set(7, true);
  a ^= b;
  EXPECT_FALSE(a.get(1));
  EXPECT_TRUE(a.get(7));
  EXPECT_THROW(a.get(10), std::out_of_range);
  BitVector c(11);
  EXPECT_THROW(a ^= c, std::invalid_argument);
}

TEST(BitMatrix, IdentityAndTranspose) {
  const BitMatrix id = BitMatrix::identity(70);
  for (std::size_t r = 0; r < 70; ++r) {
    for (std::size_t c = 0; c < 70; ++c) EXPECT_EQ(id.get(r, c), r == c);
  }
  EXPECT_EQ(id.transposed(), id);
}

TEST(BitMatrix, RowOperations) {
  BitMatrix m(3, 4);
  m.set(0, 0, true);
  m.set(0, 3, true);
  m.set(1, 3, true);
  m.xor_row_into(0, 1);
  EXPECT_TRUE(m.get(1, 0));
  EXPECT_FALSE(m.get(1, 3));
  m.swap_rows(1, 2);
  EXPECT_TRUE(m.row_range_zero(1, 0, 4));
  EXPECT_TRUE(m.get(2, 0));
  EXPECT_THROW(m.xor_row_into(2, 2), std::invalid_argument);
  EXPECT_THROW(m.get(3, 0), std::out_of_range);
  EXPECT_THROW(m.set(0, 4, true), std::out_of_range);
}

TEST(BitMatrix, ColumnOperations) {
  BitMatrix m(2, 3);
  m.set(0, 0, true);
  m.set(1, 2, true);
  m.xor_col_into(0, 2);
  EXPECT_TRUE(m.get(0, 2));
  EXPECT_TRUE(m.get(1, 2));
  m.swap_columns(0, 1);
  EXPECT_FALSE(m.get(0, 0));
  EXPECT_TRUE(m.get(0, 1));
}

TEST(BitMatrix, RowRangeZeroSpansWords) {
  BitMatrix m(1, 200);
  m.set(0, 150, true);
  EXPECT_TRUE(m.row_range_zero(0, 0, 150));
  EXPECT_FALSE(m.row_range_zero(0, 100, 151));
  EXPECT_TRUE(m.row_range_zero(0, 151, 200));
  EXPECT_TRUE(m.row_range_zero(0, 7, 7));
}

// Word-level operations against a naive bool grid.
TEST(BitMatrix, RandomOpsMatchNaiveModel) {
  std::mt19937 rng(5);
  const std::size_t rows = 9, cols = 131;
  BitMatrix m(rows, cols);
  std::vector<std::vector<bool>> ref(rows, std::vector<bool>(cols, false));
  std::uniform_int_distribution<std::size_t> rr(0, rows - 1), cc(0, cols - 1);
  for (int step = 0; step < 3000; ++step) {
    const int op = static_cast<int>(rng() % 5);
    if (op == 0) {
      const std::size_t r = rr(rng), c = cc(rng);
      m.flip(r, c);
      ref[r][c] = !ref[r][c];
    } else if (op == 1) {
      const std::size_t a = rr(rng), b = rr(rng);
      if (a == b) continue;
      m.xor_row_into(a, b);
      for (std::size_t c = 0; c < cols; ++c) ref[b][c] = ref[b][c] != ref[a][c];
    } else if (op == 2) {
      const std::size_t a = rr(rng), b = rr(rng);
      m.swap_rows(a, b);
      std::swap(ref[a], ref[b]);
    } else if (op == 3) {
      const std::size_t a = cc(rng), b = cc(rng);
      if (a == b) continue;
      m.xor_col_into(a, b);
      for (std::size_t r = 0; r < rows; ++r) ref[r][b] = ref[r][b] != ref[r][a];
    } else {
      const std::size_t a = cc(rng), b = cc(rng);
      m.swap_columns(a, b);
      for (std::size_t r = 0; r < rows; ++r) {
        const bool tmp = ref[r][a];
        ref[r][a] = ref[r][b];
        ref[r][b] = tmp;
      }
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) ASSERT_EQ(m.get(r, c), ref[r][c]) << r << "," << c;
  }
}

}  // namespace
}  // namespace cliffsynth
