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

#include "modinv/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace modinv {

GFMatrix::GFMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

GFMatrix GFMatrix::identity(const FieldSpec& field, std::size_t n) {
  GFMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

GFMatrix GFMatrix::from_rows(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  GFMatrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
    std::size_t j = 0;
    for (long long v : row) m.at(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

void GFMatrix::append_rows(const GFMatrix& other) {
  if (other.cols_ != cols_) throw std::invalid_argument("column count mismatch");
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  rows_ += other.rows_;
}

GFMatrix GFMatrix::operator*(const GFMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
  GFMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, rhs.at(k, j)));
    }
  return out;
}

FieldVector GFMatrix::operator*(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  FieldVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] = field_.add(out[i], field_.mul(at(i, j), v[j]));
  return out;
}

bool GFMatrix::operator==(const GFMatrix& rhs) const {
  return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

FieldElement GFMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  GFMatrix a = *this;
  FieldElement det = field_.one();
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = c;
    while (piv < rows_ && a.at(piv, c).is_zero()) ++piv;
    if (piv == rows_) return field_.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = field_.neg(det);
    }
    det = field_.mul(det, a.at(c, c));
    const FieldElement inv = field_.inv(a.at(c, c));
    for (std::size_t r = c + 1; r < rows_; ++r) {
      const FieldElement f = field_.mul(a.at(r, c), inv);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < cols_; ++j) a.at(r, j) = field_.sub(a.at(r, j), field_.mul(f, a.at(c, j)));
    }
  }
  return det;
}

namespace {

// row_dst -= factor * row_src over the columns [from, end).
void eliminate_prime(std::span<FieldElement> dst, std::span<const FieldElement> src, std::size_t from, std::uint32_t factor,
                     std::uint32_t p) {
  const std::uint64_t neg_factor = p - factor;
  for (std::size_t j = from; j < dst.size(); ++j) {
    const std::uint32_t s = src[j].code();
    if (s == 0) continue;
    dst[j] = FieldElement::from_code(static_cast<std::uint32_t>((dst[j].code() + neg_factor * s) % p));
  }
}

void eliminate_generic(std::span<FieldElement> dst, std::span<const FieldElement> src, std::size_t from, FieldElement factor,
                       const FieldSpec& F) {
  const FieldElement neg_factor = F.neg(factor);
  for (std::size_t j = from; j < dst.size(); ++j) {
    if (src[j].is_zero()) continue;
    dst[j] = F.add(dst[j], F.mul(neg_factor, src[j]));
  }
}

}  // namespace

std::vector<std::size_t> rref(GFMatrix& A) {
  const FieldSpec& F = A.field();
  const bool prime = F.is_prime_field();
  const std::uint32_t p = F.p();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;

  for (std::size_t c = 0; c < A.cols() && pivot_row < A.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < A.rows() && A.at(r, c).is_zero()) ++r;
    if (r == A.rows()) continue;
    if (r != pivot_row) {
      auto a = A.row(r), b = A.row(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    // normalize pivot row
    const FieldElement inv = F.inv(A.at(pivot_row, c));
    if (inv != F.one()) {
      auto row = A.row(pivot_row);
      for (std::size_t j = c; j < A.cols(); ++j) row[j] = F.mul(row[j], inv);
    }
    auto src = A.row(pivot_row);
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == pivot_row) continue;
      const FieldElement f = A.at(i, c);
      if (f.is_zero()) continue;
      auto dst = A.row(i);
      if (prime)
        eliminate_prime(dst, src, c, f.code(), p);
      else
        eliminate_generic(dst, src, c, f, F);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

std::size_t rank(GFMatrix A) { return rref(A).size(); }

std::vector<FieldVector> kernel_basis(const GFMatrix& A) {
  GFMatrix R = A;
  const auto pivots = rref(R);
  const FieldSpec& F = A.field();
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<FieldVector> basis;
  for (std::size_t f = 0; f < A.cols(); ++f) {
    if (is_pivot[f]) continue;
    FieldVector v(A.cols());
    v[f] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(R.at(r, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace modinv
