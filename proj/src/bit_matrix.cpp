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

#include "cliffsynth/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace cliffsynth {

namespace {

constexpr Word bit_mask(std::size_t i) { return Word{1} << (i % kWordBits); }

}  // namespace

BitVector::BitVector(std::size_t length)
    : length_(length), words_(words_for(length), 0) {}

void BitVector::check(std::size_t i) const {
  if (i >= length_) {
    throw std::out_of_range(
        "bit index " + std::to_string(i) + " out of range for length " +
        std::to_string(length_));
  }
}

bool BitVector::get(std::size_t i) const {
  check(i);
  return (words_[i / kWordBits] & bit_mask(i)) != 0;
}

void BitVector::set(std::size_t i, bool value) {
  check(i);
  if (value) {
    words_[i / kWordBits] |= bit_mask(i);
  } else {
    words_[i / kWordBits] &= ~bit_mask(i);
  }
}

void BitVector::flip(std::size_t i) {
  check(i);
  words_[i / kWordBits] ^= bit_mask(i);
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) {
    throw std::invalid_argument("BitVector length mismatch");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      stride_(words_for(cols)),
      data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::check_row(std::size_t r) const {
  if (r >= rows_) {
    throw std::out_of_range(
        "row " + std::to_string(r) + " out of range for " +
        std::to_string(rows_) + " rows");
  }
}

void BitMatrix::check_col(std::size_t c) const {
  if (c >= cols_) {
    throw std::out_of_range(
        "column " + std::to_string(c) + " out of range for " +
        std::to_string(cols_) + " columns");
  }
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  check_row(r);
  check_col(c);
  return (row_ptr(r)[c / kWordBits] & bit_mask(c)) != 0;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  check_row(r);
  check_col(c);
  Word& w = row_ptr(r)[c / kWordBits];
  if (value) {
    w |= bit_mask(c);
  } else {
    w &= ~bit_mask(c);
  }
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
  check_row(r);
  check_col(c);
  row_ptr(r)[c / kWordBits] ^= bit_mask(c);
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  check_row(src);
  check_row(dst);
  if (src == dst) {
    throw std::invalid_argument("xor_row_into: source and destination rows coincide");
  }
  const Word* s = row_ptr(src);
  Word* d = row_ptr(dst);
  for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  check_row(a);
  check_row(b);
  if (a == b) return;
  std::swap_ranges(row_ptr(a), row_ptr(a) + stride_, row_ptr(b));
}

void BitMatrix::xor_col_into(std::size_t src, std::size_t dst) {
  check_col(src);
  check_col(dst);
  if (src == dst) {
    throw std::invalid_argument("xor_col_into: source and destination columns coincide");
  }
  const std::size_t sw = src / kWordBits, dw = dst / kWordBits;
  const Word sm = bit_mask(src), dm = bit_mask(dst);
  for (std::size_t r = 0; r < rows_; ++r) {
    Word* row = row_ptr(r);
    if (row[sw] & sm) row[dw] ^= dm;
  }
}

void BitMatrix::swap_columns(std::size_t a, std::size_t b) {
  check_col(a);
  check_col(b);
  if (a == b) return;
  const std::size_t aw = a / kWordBits, bw = b / kWordBits;
  const Word am = bit_mask(a), bm = bit_mask(b);
  for (std::size_t r = 0; r < rows_; ++r) {
    Word* row = row_ptr(r);
    const bool va = (row[aw] & am) != 0;
    const bool vb = (row[bw] & bm) != 0;
    if (va != vb) {
      row[aw] ^= am;
      row[bw] ^= bm;
    }
  }
}

std::span<const Word> BitMatrix::row_words(std::size_t r) const {
  check_row(r);
  return {row_ptr(r), stride_};
}

std::span<Word> BitMatrix::row_words(std::size_t r) {
  check_row(r);
  return {row_ptr(r), stride_};
}

bool BitMatrix::row_range_zero(std::size_t r, std::size_t begin, std::size_t end) const {
  check_row(r);
  if (end > cols_ || begin > end) throw std::out_of_range("row_range_zero: bad column range");
  const Word* row = row_ptr(r);
  for (std::size_t c = begin; c < end; ++c) {
    if (row[c / kWordBits] & bit_mask(c)) return false;
  }
  return true;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

}  // namespace cliffsynth
