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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cliffsynth {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-length vector over GF(2), packed into 64-bit words. Bits past
/// `size()` in the last word are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  std::size_t size() const { return length_; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  /// this ^= other. Lengths must match.
  BitVector& operator^=(const BitVector& other);

  std::size_t popcount() const;
  bool none() const;

  std::span<const Word> words() const { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void check(std::size_t i) const;

  std::size_t length_ = 0;
  std::vector<Word> words_;
};

/// Dense GF(2) matrix with row-major word-packed storage.
///
/// Row operations run in O(cols / 64); column operations touch one bit per
/// row. Every index is bounds-checked and throws `std::out_of_range`.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c);

  /// Row `dst` ^= row `src`. `src == dst` throws `std::invalid_argument`
  /// since it would clear the row.
  void xor_row_into(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);

  /// Column `dst` ^= column `src`. Same aliasing rule as `xor_row_into`.
  void xor_col_into(std::size_t src, std::size_t dst);
  void swap_columns(std::size_t a, std::size_t b);

  std::span<const Word> row_words(std::size_t r) const;
  std::span<Word> row_words(std::size_t r);

  /// True iff row `r` is zero in columns [begin, end).
  bool row_range_zero(std::size_t r, std::size_t begin, std::size_t end) const;

  BitMatrix transposed() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  void check_row(std::size_t r) const;
  void check_col(std::size_t c) const;
  Word* row_ptr(std::size_t r) { return data_.data() + r * stride_; }
  const Word* row_ptr(std::size_t r) const {
    return data_.data() + r * stride_;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace cliffsynth
