// Copyright 2026 The pathcell Authors
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
#include <map>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathcell/integer.hpp"

namespace pathcell {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> row(std::size_t r) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
  IntMatrix left;      // U
  IntMatrix diagonal;  // D
  IntMatrix right;     // V
  std::size_t rank = 0;
};

/// Pivot rule: smallest nonzero absolute value, ties broken row-major.
SmithForm smith_normal_form(const IntMatrix& a);

/// Row-major sparse integer matrix for large boundary operators.
class SparseIntMatrix {
 public:
  using Row = std::map<std::uint32_t, Integer>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  static SparseIntMatrix from_dense(const IntMatrix& a);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  /// Accumulates v into entry (r, c); zero sums are removed.
  void add(std::size_t r, std::size_t c, const Integer& v);
  const Row& row(std::size_t r) const { return rows_[r]; }
  IntMatrix to_dense() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

struct RankAndDivisors {
  std::size_t rank = 0;
  /// Nonzero elementary divisors in increasing divisibility order. Units are
  /// omitted when requested.
  std::vector<Integer> divisors;
};

/// Rank and elementary divisors without forming the transforms. Unit pivots
/// are eliminated sparsely first, the dense remainder goes through SNF.
RankAndDivisors rank_and_elementary_divisors(const IntMatrix& a, bool drop_units = true);
RankAndDivisors rank_and_elementary_divisors(const SparseIntMatrix& a, bool drop_units = true);

/// Column-style Hermite normal form of a full-column-rank matrix: lower
/// echelon, positive pivots, entries left of a pivot reduced into [0, pivot).
/// If `transform` is given it receives W with H = A * W.
IntMatrix hermite_normal_form(const IntMatrix& a, IntMatrix* transform = nullptr);

/// Columns form a saturated Z-basis of {x : A x = 0}, in Hermite normal form.
IntMatrix integer_kernel_basis(const IntMatrix& a);

/// Rank over Q.
std::size_t rational_rank(const IntMatrix& a);

/// Exact solver for B y = v where B has full column rank. Returns nullopt when
/// v is not in the integer span of the columns.
class LatticeSolver {
 public:
  LatticeSolver() = default;
  explicit LatticeSolver(const IntMatrix& basis);

  std::size_t dimension() const noexcept { return hermite_.rows(); }
  std::size_t rank() const noexcept { return hermite_.cols(); }
  std::optional<std::vector<Integer>> solve(std::span<const Integer> v) const;

 private:
  IntMatrix hermite_;
  IntMatrix transform_;
  std::vector<std::size_t> pivot_rows_;
};

/// Dense matrix over Q; only what the homology and cup machinery needs.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RationalMatrix(const IntMatrix& a);
  static RationalMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Rational> column(std::size_t c) const;
  RationalMatrix transpose() const;

  friend std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> x);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RationalMatrix& a);
/// Basis of the right null space.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);
/// Some solution of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b);
/// Indices of a maximal independent subset of columns, chosen greedily left to right.
std::vector<std::size_t> independent_columns(const RationalMatrix& a);
RationalMatrix inverse(const RationalMatrix& a);

std::vector<Rational> to_rational(std::span<const Integer> v);

}  // namespace pathcell
