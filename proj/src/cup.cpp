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

#include "pathcell/cup.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "pathcell/cw.hpp"
#include "pathcell/error.hpp"
#include "pathcell/homology.hpp"

namespace pathcell {

namespace {

using Sparse = std::map<PrimitivePath, Rational>;
using Entries = std::vector<std::tuple<std::size_t, std::size_t, Rational>>;

/// Decompositions of the boundaries of the degree-k basis elements
/// (rows: degree k-1 elements).
IntMatrix boundary_matrix(const MinimalBasis& basis, std::size_t k) {
  if (k == 0 || k >= basis.degree_count()) return IntMatrix(basis.rank(k == 0 ? 0 : k - 1), basis.rank(k));
  IntMatrix d(basis.rank(k - 1), basis.rank(k));
  for (std::size_t j = 0; j < basis.rank(k); ++j) {
    const auto y = basis.decompose(k - 1, boundary(basis.elements(k)[j].path));
    for (std::size_t i = 0; i < y.size(); ++i) d(i, j) = y[i];
  }
  return d;
}

PrimitivePath front(const PrimitivePath& p, std::size_t len) { return {p.begin(), p.begin() + static_cast<std::ptrdiff_t>(len + 1)}; }
PrimitivePath back(const PrimitivePath& p, std::size_t len) { return {p.end() - static_cast<std::ptrdiff_t>(len + 1), p.end()}; }

std::size_t rank_of(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
  if (rows == 0 || cols.empty()) return 0;
  return rank(RationalMatrix::from_columns(rows, cols));
}

std::string form_label(const MinimalBasis& basis, std::size_t p, std::size_t i) {
  return path_label(basis.digraph(), basis.elements(p)[i].path);
}

}  // namespace

struct CupEngine::Extended {
  struct Block {
    std::vector<PrimitivePath> paths;
    std::vector<std::size_t> members;
    RationalMatrix inverse;  // of [member coordinates | complement unit vectors]
  };
  std::map<std::pair<VertexId, VertexId>, Block> blocks;

  /// Omega coordinates of x (keyed by element index); returns whether the
  /// complement part is nonzero.
  bool coordinates(const Sparse& x, std::map<std::size_t, Rational>& out) const {
    bool residual = false;
    std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<std::size_t, Rational>>> parts;
    for (const auto& [p, c] : x) {
      if (c == 0) continue;
      auto it = blocks.find({p.front(), p.back()});
      if (it == blocks.end()) throw invariant_error("path outside the allowed paths");
      auto pos = std::lower_bound(it->second.paths.begin(), it->second.paths.end(), p);
      parts[it->first].emplace_back(static_cast<std::size_t>(pos - it->second.paths.begin()), c);
    }
    for (const auto& [key, entries] : parts) {
      const Block& b = blocks.at(key);
      const std::size_t n = b.paths.size();
      for (std::size_t r = 0; r < n; ++r) {
        Rational v = 0;
        for (const auto& [col, c] : entries) v += b.inverse(r, col) * c;
        if (v == 0) continue;
        if (r < b.members.size()) {
          out[b.members[r]] += v;
        } else {
          residual = true;
        }
      }
    }
    return residual;
  }
};

CupEngine::CupEngine(const MinimalBasis& basis) : basis_(basis) {}

const CupEngine::Extended& CupEngine::extended(std::size_t p, bool reverse) {
  auto& slot = extended_[{p, reverse}];
  if (slot) return *slot;
  slot = std::make_shared<Extended>();
  if (p >= basis_.degree_count()) return *slot;
  for (const auto& path : basis_.allowed(p)) slot->blocks[{path.front(), path.back()}].paths.push_back(path);
  const auto& elements = basis_.elements(p);
  for (std::size_t i = 0; i < elements.size(); ++i) slot->blocks.at({elements[i].start, elements[i].end}).members.push_back(i);
  for (auto& [key, b] : slot->blocks) {
    const std::size_t n = b.paths.size();
    std::vector<std::vector<Rational>> cols;
    for (std::size_t i : b.members) {
      std::vector<Rational> col(n);
      for (const auto& [path, c] : elements[i].path.terms())
        col[static_cast<std::size_t>(std::lower_bound(b.paths.begin(), b.paths.end(), path) - b.paths.begin())] = Rational(c);
      cols.push_back(std::move(col));
    }
    for (std::size_t t = 0; t < n && cols.size() < n; ++t) {
      const std::size_t idx = reverse ? n - 1 - t : t;
      std::vector<Rational> e(n);
      e[idx] = 1;
      cols.push_back(e);
      if (rank_of(n, cols) != cols.size()) cols.pop_back();
    }
    b.inverse = inverse(RationalMatrix::from_columns(n, cols));
  }
  return *slot;
}

const CupEngine::Table& CupEngine::build(std::size_t p, std::size_t q) {
  if (auto it = tables_.find({p, q}); it != tables_.end()) return it->second;
  Table t;
  const std::size_t n = p + q;
  auto reduce = [&](const PathVector& element, bool reverse, bool& residual) {
    const Extended& ep = extended(p, reverse);
    const Extended& eq = extended(q, reverse);
    std::map<PrimitivePath, Sparse> rows;
    for (const auto& [path, c] : element.terms()) rows[front(path, p)][back(path, q)] += Rational(c);
    // Bundle backs per front, decompose in Omega_q.
    std::map<std::size_t, Sparse> columns;
    for (const auto& [f, backs] : rows) {
      std::map<std::size_t, Rational> y;
      if (eq.coordinates(backs, y)) residual = true;
      for (const auto& [j, v] : y) columns[j][f] += v;
    }
    // Bundle fronts per Omega_q coordinate, decompose in Omega_p.
    Entries out;
    for (const auto& [j, fronts] : columns) {
      std::map<std::size_t, Rational> x;
      if (ep.coordinates(fronts, x)) residual = true;
      for (const auto& [i, v] : x)
        if (v != 0) out.emplace_back(i, j, v);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  if (n < basis_.degree_count()) {
    const auto& elements = basis_.elements(n);
    for (std::size_t r = 0; r < elements.size(); ++r) {
      bool residual = false;
      t.canonical.push_back(reduce(elements[r].path, false, residual));
      if (residual) {
        bool ignored = false;
        t.alternative.emplace(r, reduce(elements[r].path, true, ignored));
      }
    }
  }
  return tables_.emplace(std::make_pair(p, q), std::move(t)).first->second;
}

const std::vector<Entries>& CupEngine::table(std::size_t p, std::size_t q) { return build(p, q).canonical; }

std::size_t CupEngine::residual_count(std::size_t p, std::size_t q) { return build(p, q).alternative.size(); }

Form CupEngine::cup(const Form& alpha, const Form& beta) {
  const std::size_t p = alpha.degree, q = beta.degree;
  if (alpha.values.size() != basis_.rank(p) || beta.values.size() != basis_.rank(q))
    throw invalid_argument("form does not match the basis rank");
  const Table& t = build(p, q);
  Form out{p + q, std::vector<Rational>(basis_.rank(p + q))};
  auto evaluate = [&](const Entries& entries) {
    Rational v = 0;
    for (const auto& [i, j, c] : entries)
      if (alpha.values[i] != 0 && beta.values[j] != 0) v += c * alpha.values[i] * beta.values[j];
    return v;
  };
  for (std::size_t r = 0; r < t.canonical.size(); ++r) {
    out.values[r] = evaluate(t.canonical[r]);
    if (auto it = t.alternative.find(r); it != t.alternative.end()) {
      const Rational alt = evaluate(it->second);
      if (alt != out.values[r] && warned_.emplace(p, q, r).second)
        warnings_.push_back({p, q, path_label(basis_.digraph(), basis_.elements(p + q)[r].path), out.values[r], alt});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Form basis_form(const MinimalBasis& basis, std::size_t p, std::size_t i) {
  Form f{p, std::vector<Rational>(basis.rank(p))};
  f.values.at(i) = 1;
  return f;
}

Form unit_form(const MinimalBasis& basis) { return {0, std::vector<Rational>(basis.rank(0), Rational(1))}; }

namespace {

/// Transpose of the boundary `d` (from degree alpha.degree + 1) applied to alpha.
Form apply_coboundary(const IntMatrix& d, const Form& alpha) {
  Form out{alpha.degree + 1, std::vector<Rational>(d.cols())};
  for (std::size_t j = 0; j < d.cols(); ++j)
    for (std::size_t i = 0; i < d.rows(); ++i)
      if (d(i, j) != 0) out.values[j] += Rational(d(i, j)) * alpha.values.at(i);
  return out;
}

}  // namespace

Form coboundary(const MinimalBasis& basis, const Form& alpha) {
  return apply_coboundary(boundary_matrix(basis, alpha.degree + 1), alpha);
}

namespace {

bool is_zero_form(const Form& f) {
  return std::all_of(f.values.begin(), f.values.end(), [](const Rational& v) { return v == 0; });
}

Form combine(Form a, const Form& b, const Rational& s) {
  for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] += s * b.values[i];
  return a;
}

}  // namespace

CupIdentityReport check_cup_identities(CupEngine& engine) {
  CupIdentityReport r;
  const MinimalBasis& basis = engine.basis();
  const std::size_t count = basis.degree_count();
  std::vector<IntMatrix> d;
  for (std::size_t k = 0; k <= count; ++k) d.push_back(boundary_matrix(basis, k));
  const auto delta = [&](const Form& f) { return apply_coboundary(d.at(f.degree + 1), f); };
  for (std::size_t p = 0; p < count; ++p)
    for (std::size_t q = 0; p + q + 1 < count; ++q)
      for (std::size_t i = 0; i < basis.rank(p); ++i)
        for (std::size_t j = 0; j < basis.rank(q); ++j) {
          const Form a = basis_form(basis, p, i), b = basis_form(basis, q, j);
          const Form lhs = delta(engine.cup(a, b));
          const Form rhs = combine(engine.cup(delta(a), b), engine.cup(a, delta(b)), Rational(p % 2 == 0 ? 1 : -1));
          ++r.pairs_checked;
          if (lhs != rhs) {
            r.leibniz = false;
            r.failures.push_back("Leibniz fails for " + form_label(basis, p, i) + "* and " + form_label(basis, q, j) + "*");
          }
        }
  // Associativity is trilinear, so comparing the structure constants of
  // (a b) c and a (b c) covers every triple of basis forms at once.
  using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
  for (std::size_t p = 0; p < count; ++p)
    for (std::size_t q = 0; p + q < count; ++q)
      for (std::size_t s = 0; p + q + s < count; ++s) {
        r.triples_checked += basis.rank(p) * basis.rank(q) * basis.rank(s);
        const auto& pq = engine.table(p, q);
        const auto& pq_s = engine.table(p + q, s);
        const auto& qs = engine.table(q, s);
        const auto& p_qs = engine.table(p, q + s);
        for (std::size_t e = 0; e < basis.rank(p + q + s); ++e) {
          std::map<Triple, Rational> left, right;
          for (const auto& [m, k, c] : pq_s[e])
            for (const auto& [i, j, d] : pq[m]) left[{i, j, k}] += c * d;
          for (const auto& [i, m, c] : p_qs[e])
            for (const auto& [j, k, d] : qs[m]) right[{i, j, k}] += c * d;
          std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
          std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
          if (left == right) continue;
          r.associativity = false;
          // Report one triple where the two sides differ.
          auto differs = [&](const std::map<Triple, Rational>& a, const std::map<Triple, Rational>& b) {
            for (const auto& [t, v] : a)
              if (auto it = b.find(t); it == b.end() || it->second != v) return std::optional<Triple>(t);
            return std::optional<Triple>();
          };
          const Triple t = differs(left, right).value_or(differs(right, left).value_or(Triple{}));
          r.failures.push_back("associativity fails for " + form_label(basis, p, std::get<0>(t)) + "*, " +
                               form_label(basis, q, std::get<1>(t)) + "*, " + form_label(basis, s, std::get<2>(t)) +
                               "*");
        }
      }
  return r;
}

namespace {

/// Inclusion of Omega into the Delta chain complex, with the Delta boundaries.
struct DeltaContext {
  const MinimalBasis& basis;
  DeltaComplex delta;
  std::vector<std::map<PrimitivePath, std::size_t>> position;  // per degree
  std::vector<IntMatrix> inclusion;                            // n_delta(k) x n_k
  std::vector<IntMatrix> delta_boundary;                       // n_delta(k-1) x n_delta(k)

  explicit DeltaContext(const MinimalBasis& b) : basis(b), delta(subdivide_to_delta(b)) {
    const ChainComplex c = delta.chain_complex(b.digraph());
    const std::size_t count = std::max(c.degree_count(), b.degree_count());
    position.resize(count);
    for (std::size_t k = 0; k < delta.by_degree.size(); ++k)
      for (std::size_t j = 0; j < delta.by_degree[k].size(); ++j)
        position[k].emplace(delta.simplices[delta.by_degree[k][j]], j);
    for (std::size_t k = 0; k < count; ++k) {
      IntMatrix m(position[k].size(), b.rank(k));
      for (std::size_t j = 0; j < b.rank(k); ++j)
        for (const auto& [p, v] : b.elements(k)[j].path.terms()) m(position[k].at(p), j) = v;
      inclusion.push_back(std::move(m));
      delta_boundary.push_back(k < c.degree_count() ? c.boundaries[k].to_dense()
                                                    : IntMatrix(k == 0 ? 0 : position[k - 1].size(), 0));
    }
  }

  std::size_t simplices(std::size_t k) const { return k < position.size() ? position[k].size() : 0; }

  /// Delta cochain gamma with inclusion^* gamma = alpha, or a cocycle with
  /// inclusion^* gamma - alpha a coboundary when alpha is a cocycle.
  std::vector<Rational> lift(const Form& alpha) const {
    const std::size_t p = alpha.degree;
    const std::size_t ns = simplices(p);
    const bool cocycle = is_zero_form(coboundary(basis, alpha));
    const std::size_t eta = cocycle && p > 0 ? basis.rank(p - 1) : 0;
    const std::size_t up = cocycle ? simplices(p + 1) : 0;
    RationalMatrix a(up + basis.rank(p), ns + eta);
    std::vector<Rational> rhs(up + basis.rank(p));
    for (std::size_t t = 0; t < up; ++t)
      for (std::size_t s = 0; s < ns; ++s) a(t, s) = Rational(delta_boundary[p + 1](s, t));
    const IntMatrix d = boundary_matrix(basis, p);
    for (std::size_t j = 0; j < basis.rank(p); ++j) {
      for (std::size_t s = 0; s < ns; ++s) a(up + j, s) = Rational(inclusion[p](s, j));
      for (std::size_t i = 0; i < eta; ++i) a(up + j, ns + i) = Rational(-d(i, j));
      rhs[up + j] = alpha.values[j];
    }
    auto x = solve(a, rhs);
    if (!x) throw invariant_error("form does not lift to the subdivision");
    x->resize(ns);
    return *x;
  }
};

Form oracle_cup(const DeltaContext& ctx, const Form& alpha, const Form& beta) {
  const std::size_t p = alpha.degree, q = beta.degree, n = p + q;
  Form out{n, std::vector<Rational>(ctx.basis.rank(n))};
  if (out.values.empty()) return out;
  const auto g = ctx.lift(alpha);
  const auto h = ctx.lift(beta);
  std::vector<Rational> product(ctx.simplices(n));
  for (const auto& [s, idx] : ctx.position[n]) {
    const Rational& a = g[ctx.position[p].at(front(s, p))];
    if (a == 0) continue;
    product[idx] = a * h[ctx.position[q].at(back(s, q))];
  }
  for (std::size_t j = 0; j < out.values.size(); ++j)
    for (std::size_t s = 0; s < product.size(); ++s)
      if (ctx.inclusion[n](s, j) != 0) out.values[j] += Rational(ctx.inclusion[n](s, j)) * product[s];
  return out;
}

}  // namespace

Form cup_oracle_delta(const MinimalBasis& basis, const Form& alpha, const Form& beta) {
  const DeltaContext ctx(basis);
  return oracle_cup(ctx, alpha, beta);
}

std::vector<Form> cohomology_representatives(const MinimalBasis& basis, std::size_t p) {
  const std::size_t n = basis.rank(p);
  std::vector<Form> out;
  if (n == 0) return out;
  std::vector<std::vector<Rational>> cocycles;
  if (p + 1 < basis.degree_count() && basis.rank(p + 1) > 0) {
    cocycles = nullspace(RationalMatrix(boundary_matrix(basis, p + 1).transpose()));
  } else {
    for (std::size_t i = 0; i < n; ++i) cocycles.push_back(basis_form(basis, p, i).values);
  }
  std::vector<std::vector<Rational>> cols;
  if (p > 0) {
    const IntMatrix d = boundary_matrix(basis, p);
    for (std::size_t i = 0; i < d.rows(); ++i) cols.push_back(to_rational(d.row(i)));
  }
  const std::size_t b = cols.size();
  cols.insert(cols.end(), cocycles.begin(), cocycles.end());
  for (std::size_t j : independent_columns(RationalMatrix::from_columns(n, cols)))
    if (j >= b) out.push_back({p, cols[j]});
  return out;
}

bool cohomologous(const MinimalBasis& basis, const Form& x, const Form& y) {
  const std::size_t p = x.degree;
  const Form diff = combine(x, y, Rational(-1));
  if (is_zero_form(diff)) return true;
  if (p == 0) return false;
  const IntMatrix d = boundary_matrix(basis, p);
  std::vector<std::vector<Rational>> cols;
  for (std::size_t i = 0; i < d.rows(); ++i) cols.push_back(to_rational(d.row(i)));
  const std::size_t base = rank_of(basis.rank(p), cols);
  cols.push_back(diff.values);
  return rank_of(basis.rank(p), cols) == base;
}

CupOracleReport cup_cohomology_agreement(CupEngine& engine) {
  CupOracleReport r;
  const MinimalBasis& basis = engine.basis();
  const DeltaContext ctx(basis);
  const std::size_t count = basis.degree_count();
  std::vector<std::vector<Form>> reps(count);
  for (std::size_t p = 0; p < count; ++p) reps[p] = cohomology_representatives(basis, p);
  for (std::size_t p = 0; p < count; ++p)
    for (std::size_t q = 0; p + q < count; ++q)
      for (std::size_t i = 0; i < reps[p].size(); ++i)
        for (std::size_t j = 0; j < reps[q].size(); ++j) {
          ++r.pairs_checked;
          const Form x = engine.cup(reps[p][i], reps[q][j]);
          const std::string tag = "classes " + std::to_string(p) + "." + std::to_string(i) + " and " +
                                  std::to_string(q) + "." + std::to_string(j);
          if (!is_zero_form(coboundary(basis, x))) {
            r.agree = false;
            r.failures.push_back("cup of cocycles is not a cocycle for " + tag);
            continue;
          }
          if (!cohomologous(basis, x, oracle_cup(ctx, reps[p][i], reps[q][j]))) {
            r.agree = false;
            r.failures.push_back("cup and subdivision cup differ in cohomology for " + tag);
          }
        }
  return r;
}

}  // namespace pathcell
