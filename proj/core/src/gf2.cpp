// Copyright 2026 The qcomb Authors
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

#include "qcomb/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qcomb {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

BitVector BitVector::unit(std::size_t size, std::size_t index) {
  BitVector v(size);
  v.set(index);
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVector::from_string: expected only '0' and '1'");
    }
  }
  return v;
}

bool BitVector::get(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("BitVector index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("BitVector index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::flip(std::size_t i) {
  if (i >= size_) throw std::out_of_range("BitVector index out of range");
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(copy);
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0 && rows[r][c] != 1) {
        throw std::invalid_argument("BitMatrix::from_rows: entries must be 0 or 1");
      }
      if (rows[r][c] == 1) m.set(r, c);
    }
  }
  return m;
}

void BitMatrix::check_row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("BitMatrix row index out of range");
}

void BitMatrix::check_col(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("BitMatrix column index out of range");
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  check_row(r);
  check_col(c);
  return (data_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1U;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  check_row(r);
  check_col(c);
  auto& word = data_[r * words_per_row_ + c / kWordBits];
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  word = value ? (word | mask) : (word & ~mask);
}

BitVector BitMatrix::row(std::size_t r) const {
  check_row(r);
  BitVector v(cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * words_per_row_), words_per_row_,
              v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& value) {
  check_row(r);
  if (value.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: length mismatch");
  std::copy(value.words().begin(), value.words().end(),
            data_.begin() + static_cast<std::ptrdiff_t>(r * words_per_row_));
}

std::span<const std::uint64_t> BitMatrix::row_words(std::size_t r) const {
  check_row(r);
  return {data_.data() + r * words_per_row_, words_per_row_};
}

void BitMatrix::row_add(std::size_t src, std::size_t dst) {
  check_row(src);
  check_row(dst);
  if (src == dst) throw std::invalid_argument("BitMatrix::row_add: src and dst must differ");
  const std::uint64_t* from = data_.data() + src * words_per_row_;
  std::uint64_t* to = data_.data() + dst * words_per_row_;
  for (std::size_t w = 0; w < words_per_row_; ++w) to[w] ^= from[w];
}

bool BitMatrix::row_is_unit(std::size_t r, std::size_t c) const {
  check_row(r);
  check_col(c);
  const auto words = row_words(r);
  for (std::size_t w = 0; w < words.size(); ++w) {
    const std::uint64_t expected = (w == c / kWordBits) ? (std::uint64_t{1} << (c % kWordBits)) : 0;
    if (words[w] != expected) return false;
  }
  return true;
}

std::size_t BitMatrix::column_weight(std::size_t c) const {
  check_col(c);
  std::size_t total = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    total += (data_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  return total;
}

std::string BitMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::size_t rank(const BitMatrix& m) {
  std::vector<BitVector> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVector v = m.row(r);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (v.get(pivots[b])) v ^= basis[b];
    }
    const std::size_t pivot = v.first_set();
    if (pivot == v.size()) continue;
    basis.push_back(std::move(v));
    pivots.push_back(pivot);
  }
  return basis.size();
}

bool is_invertible(const BitMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("is_invertible: matrix must be square");
  return rank(m) == m.rows();
}

std::optional<std::vector<std::size_t>> solve_xor_subset(std::span<const BitVector> rows,
                                                         const BitVector& target) {
  const std::size_t k = rows.size();
  for (const auto& r : rows) {
    if (r.size() != target.size()) throw std::invalid_argument("solve_xor_subset: length mismatch");
  }

  // Each basis vector carries the combination of input rows it was built from.
  struct Entry {
    BitVector value;
    BitVector combination;
    std::size_t pivot;
  };
  std::vector<Entry> basis;
  basis.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    BitVector value = rows[i];
    BitVector combination = BitVector::unit(k, i);
    for (const auto& e : basis) {
      if (value.get(e.pivot)) {
        value ^= e.value;
        combination ^= e.combination;
      }
    }
    const std::size_t pivot = value.first_set();
    if (pivot == value.size()) continue;
    basis.push_back({std::move(value), std::move(combination), pivot});
  }

  BitVector residual = target;
  BitVector used(k);
  for (const auto& e : basis) {
    if (residual.get(e.pivot)) {
      residual ^= e.value;
      used ^= e.combination;
    }
  }
  if (residual.any()) return std::nullopt;

  std::vector<std::size_t> subset;
  for (std::size_t i = 0; i < k; ++i) {
    if (used.get(i)) subset.push_back(i);
  }
  return subset;
}

}  // namespace qcomb
