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

#include "pathcell/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "pathcell/error.hpp"

namespace pathcell {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw invalid_argument("ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(src, c);
    if (s != 0) (*this)(dst, c) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, src);
    if (s != 0) (*this)(r, dst) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw invalid_argument("matrix product dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& y = b(k, j);
        if (y != 0) out(i, j) += x * y;
      }
    }
  return out;
}

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x) {
  if (a.cols_ != x.size()) throw invalid_argument("matrix-vector dimension mismatch");
  std::vector<Integer> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a(i, k) != 0 && x[k] != 0) out[i] += a(i, k) * x[k];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c);
    }
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

bool smallest_entry(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Integer& x = d(i, j);
      if (x == 0) continue;
      Integer ax = abs_value(x);
      if (!found || ax < best) {
        found = true;
        best = std::move(ax);
        pr = i;
        pc = j;
        if (best == 1) return true;
      }
    }
  return found;
}

// Reduces d in place to Smith form. u and v, when non-null, accumulate the
// row and column operations (u starts as I_m, v as I_n).
std::size_t smith_reduce(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  std::size_t t = 0;
  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if (u) u->swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    if (v) v->swap_cols(a, b);
  };
  for (; t < std::min(m, n); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!smallest_entry(d, t, pr, pc)) break;
    row_swap(t, pr);
    col_swap(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        if (q != 0) {
          d.add_row_multiple(i, t, -q);
          if (u) u->add_row_multiple(i, t, -q);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        if (q != 0) {
          d.add_col_multiple(j, t, -q);
          if (v) v->add_col_multiple(j, t, -q);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; make it the pivot.
        Integer best = abs_value(d(t, t));
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (d(i, t) != 0 && abs_value(d(i, t)) < best) {
            best = abs_value(d(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(t, j) != 0 && abs_value(d(t, j)) < best) {
            best = abs_value(d(t, j));
            bi = t;
            bj = j;
          }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            if (u) u->add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
  return t;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), 0};
  s.rank = smith_reduce(s.diagonal, &s.left, &s.right);
  return s;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& a) {
  SparseIntMatrix s(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0) s.rows_[r].emplace(static_cast<std::uint32_t>(c), a(r, c));
  return s;
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (v == 0) return;
  auto [it, inserted] = rows_[r].try_emplace(static_cast<std::uint32_t>(c), v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) rows_[r].erase(it);
  }
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix d(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) d(r, c) = v;
  return d;
}

RankAndDivisors rank_and_elementary_divisors(const IntMatrix& a, bool drop_units) {
  return rank_and_elementary_divisors(SparseIntMatrix::from_dense(a), drop_units);
}

RankAndDivisors rank_and_elementary_divisors(const SparseIntMatrix& a, bool drop_units) {
  struct Entry {
    std::uint32_t col;
    Integer val;
  };
  using Row = std::vector<Entry>;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Row> rows(m);
  std::vector<std::set<std::uint32_t>> col_rows(n);
  for (std::size_t r = 0; r < m; ++r)
    for (const auto& [c, v] : a.row(r)) {
      rows[r].push_back({c, v});
      col_rows[c].insert(static_cast<std::uint32_t>(r));
    }

  std::size_t units = 0;
  // Eliminate unit pivots; each one contributes a divisor 1 and removes a row
  // and a column without touching the rest of the invariants.
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (col_rows[c].empty()) continue;
      std::size_t best_row = m;
      std::size_t best_len = 0;
      for (std::uint32_t r : col_rows[c]) {
        const Row& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, std::size_t col) { return e.col < col; });
        if (abs_value(it->val) != 1) continue;
        if (best_row == m || row.size() < best_len) {
          best_row = r;
          best_len = row.size();
        }
      }
      if (best_row == m) continue;
      progress = true;
      ++units;
      const Row pivot = rows[best_row];
      const Integer& pv =
          std::lower_bound(pivot.begin(), pivot.end(), c,
                           [](const Entry& e, std::size_t col) { return e.col < col; })
              ->val;
      std::vector<std::uint32_t> targets(col_rows[c].begin(), col_rows[c].end());
      for (std::uint32_t r2 : targets) {
        if (r2 == best_row) continue;
        Row& row = rows[r2];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, std::size_t col) { return e.col < col; });
        Integer factor = it->val * pv;  // pv = +-1, so val / pv = val * pv
        Row merged;
        merged.reserve(row.size() + pivot.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
          if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
            merged.push_back(std::move(row[i++]));
          } else if (i == row.size() || pivot[j].col < row[i].col) {
            merged.push_back({pivot[j].col, -factor * pivot[j].val});
            col_rows[pivot[j].col].insert(r2);
            ++j;
          } else {
            Integer v = row[i].val - factor * pivot[j].val;
            if (v != 0) {
              merged.push_back({row[i].col, std::move(v)});
            } else {
              col_rows[row[i].col].erase(r2);
            }
            ++i;
            ++j;
          }
        }
        row = std::move(merged);
      }
      for (const Entry& e : pivot) col_rows[e.col].erase(static_cast<std::uint32_t>(best_row));
      rows[best_row].clear();
    }
  }

  std::vector<std::size_t> live_rows;
  std::vector<std::size_t> live_cols;
  for (std::size_t r = 0; r < m; ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  std::vector<std::size_t> col_pos(n, n);
  for (std::size_t c = 0; c < n; ++c)
    if (!col_rows[c].empty()) {
      col_pos[c] = live_cols.size();
      live_cols.push_back(c);
    }
  IntMatrix rest(live_rows.size(), live_cols.size());
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const Entry& e : rows[live_rows[i]]) rest(i, col_pos[e.col]) = e.val;
  const std::size_t rest_rank = smith_reduce(rest, nullptr, nullptr);

  RankAndDivisors out;
  out.rank = units + rest_rank;
  if (!drop_units) out.divisors.assign(units, Integer(1));
  for (std::size_t i = 0; i < rest_rank; ++i)
    if (!drop_units || rest(i, i) != 1) out.divisors.push_back(rest(i, i));
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& a, IntMatrix* transform) {
  IntMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  if (transform) *transform = IntMatrix::identity(n);
  std::size_t t = 0;
  for (std::size_t i = 0; i < m && t < n; ++i) {
    for (;;) {
      std::size_t best = n;
      Integer best_abs;
      for (std::size_t j = t; j < n; ++j)
        if (h(i, j) != 0 && (best == n || abs_value(h(i, j)) < best_abs)) {
          best = j;
          best_abs = abs_value(h(i, j));
        }
      if (best == n) break;
      h.swap_cols(t, best);
      if (transform) transform->swap_cols(t, best);
      bool done = true;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (h(i, j) == 0) continue;
        Integer q = h(i, j) / h(i, t);
        h.add_col_multiple(j, t, -q);
        if (transform) transform->add_col_multiple(j, t, -q);
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(i, t) == 0) continue;
    if (h(i, t) < 0) {
      h.negate_col(t);
      if (transform) transform->negate_col(t);
    }
    for (std::size_t j = 0; j < t; ++j) {
      Integer q = floor_div(h(i, j), h(i, t));
      if (q != 0) {
        h.add_col_multiple(j, t, -q);
        if (transform) transform->add_col_multiple(j, t, -q);
      }
    }
    ++t;
  }
  return h;
}

IntMatrix integer_kernel_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix v = IntMatrix::identity(n);
  const std::size_t r = smith_reduce(d, nullptr, &v);
  IntMatrix k(n, n - r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) k(i, j - r) = v(i, j);
  return hermite_normal_form(k);
}

std::size_t rational_rank(const IntMatrix& a) { return rank_and_elementary_divisors(a).rank; }

// ---------------------------------------------------------------------------
// Lattice solver

LatticeSolver::LatticeSolver(const IntMatrix& basis) {
  hermite_ = hermite_normal_form(basis, &transform_);
  for (std::size_t t = 0; t < hermite_.cols(); ++t) {
    std::size_t i = 0;
    while (i < hermite_.rows() && hermite_(i, t) == 0) ++i;
    if (i == hermite_.rows()) throw invalid_argument("LatticeSolver needs a full-column-rank basis");
    pivot_rows_.push_back(i);
  }
}

std::optional<std::vector<Integer>> LatticeSolver::solve(std::span<const Integer> v) const {
  if (v.size() != hermite_.rows()) throw invalid_argument("LatticeSolver: vector length mismatch");
  const std::size_t r = hermite_.cols();
  std::vector<Integer> z(r);
  for (std::size_t t = 0; t < r; ++t) {
    const std::size_t i = pivot_rows_[t];
    Integer s = v[i];
    for (std::size_t u = 0; u < t; ++u)
      if (hermite_(i, u) != 0) s -= hermite_(i, u) * z[u];
    if (s % hermite_(i, t) != 0) return std::nullopt;
    z[t] = s / hermite_(i, t);
  }
  if (hermite_ * std::span<const Integer>(z) != std::vector<Integer>(v.begin(), v.end()))
    return std::nullopt;
  return transform_ * std::span<const Integer>(z);
}

// ---------------------------------------------------------------------------
// Rational linear algebra

RationalMatrix::RationalMatrix(const IntMatrix& a) : rows_(a.rows()), cols_(a.cols()), data_(rows_ * cols_) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = Rational(a(r, c));
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols_ != x.size()) throw invalid_argument("matrix-vector dimension mismatch");
  std::vector<Rational> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a(i, k) != 0 && x[k] != 0) out[i] += a(i, k) * x[k];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw invalid_argument("matrix product dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns. Only the first
// `ncols` columns are used for pivoting (augmented systems pass fewer).
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (m(row, j) != 0) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return rref(m, m.cols()).size();
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
  RationalMatrix m = a;
  const auto pivots = rref(m, m.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw invalid_argument("solve: right-hand side length mismatch");
  RationalMatrix m(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    m(r, a.cols()) = b[r];
  }
  const auto pivots = rref(m, a.cols());
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    if (m(r, a.cols()) != 0) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m(i, a.cols());
  return x;
}

std::vector<std::size_t> independent_columns(const RationalMatrix& a) {
  RationalMatrix m = a;
  return rref(m, m.cols());
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix m(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    m(r, n + r) = 1;
  }
  if (rref(m, n).size() != n) throw domain_error("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = m(r, n + c);
  return inv;
}

std::vector<Rational> to_rational(std::span<const Integer> v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const Integer& x : v) out.emplace_back(x);
  return out;
}

}  // namespace pathcell
