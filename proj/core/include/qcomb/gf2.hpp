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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcomb {

/// Fixed-length vector over F2, packed 64 entries per word.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  static BitVector unit(std::size_t size, std::size_t index);
  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  std::size_t count() const noexcept;
  /// Index of the lowest set entry, or size() when the vector is zero.
  std::size_t first_set() const noexcept;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense matrix over F2 with bit-packed rows. Dimensions are fixed at
/// construction.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);

  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& value);
  std::span<const std::uint64_t> row_words(std::size_t r) const;

  /// R(src, dst): row dst becomes row dst XOR row src.
  void row_add(std::size_t src, std::size_t dst);

  /// True when row r is the unit vector with its single 1 in column c.
  bool row_is_unit(std::size_t r, std::size_t c) const;
  /// Number of rows with a 1 in column c.
  std::size_t column_weight(std::size_t c) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  std::string to_string() const;

 private:
  void check_row(std::size_t r) const;
  void check_col(std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Gauss-Jordan test for invertibility. Throws std::invalid_argument for a
/// non-square matrix.
bool is_invertible(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// Finds a subset of `rows` whose XOR equals `target`. Rows are taken as
/// pivots in index order, so the answer is deterministic. Returns the subset
/// as ascending indices, or nullopt when `target` is outside the span.
std::optional<std::vector<std::size_t>> solve_xor_subset(std::span<const BitVector> rows,
                                                         const BitVector& target);

}  // namespace qcomb
