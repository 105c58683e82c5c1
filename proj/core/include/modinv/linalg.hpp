// Copyright 2026 The modinv Authors
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
#include <initializer_list>
#include <span>
#include <vector>

#include "modinv/gf.hpp"

namespace modinv {

using FieldVector = std::vector<FieldElement>;

/// Dense row-major matrix over a finite field.
class GFMatrix {
 public:
  GFMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static GFMatrix identity(const FieldSpec& field, std::size_t n);
  /// Builds from integer rows (entries reduced mod p, prime subfield only).
  static GFMatrix from_rows(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<FieldElement> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> entries() const { return entries_; }

  /// Appends the rows of `other` (same column count).
  void append_rows(const GFMatrix& other);

  GFMatrix operator*(const GFMatrix& rhs) const;
  FieldVector operator*(std::span<const FieldElement> v) const;
  bool operator==(const GFMatrix& rhs) const;

  FieldElement determinant() const;
  bool is_invertible() const { return !determinant().is_zero(); }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

/// Brings A to reduced row echelon form in place. Pivot rows are chosen as
/// the first row with a nonzero entry in the pivot column. Returns the pivot
/// columns in order; rows past the rank are zero.
std::vector<std::size_t> rref(GFMatrix& A);

std::size_t rank(GFMatrix A);

/// Basis of {v : A v = 0}. One vector per free column f of rref(A), with
/// v_f = 1, zero on the other free columns, and the pivot entries solved.
std::vector<FieldVector> kernel_basis(const GFMatrix& A);

}  // namespace modinv
