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

#include "pathcell/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pathcell/error.hpp"
#include "parallel.hpp"

namespace pathcell {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Coefficients Coefficients::mod(std::uint32_t p) {
  if (!is_prime(p)) throw invalid_argument("coefficient modulus " + std::to_string(p) + " is not prime");
  return {Ring::mod_p, p};
}

std::string Coefficients::tag() const {
  switch (ring) {
    case Ring::integers: return "z";
    case Ring::rationals: return "q";
    case Ring::mod_p: return "zp";
  }
  return "z";
}

namespace {

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  SparseIntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [c, v] : a.row(r))
      for (const auto& [c2, w] : b.row(c)) out.add(r, c2, v * w);
  return out;
}

bool is_zero(const SparseIntMatrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!a.row(r).empty()) return false;
  return true;
}

/// ranks[k] = n_k; inv[k] = rank and non-unit divisors of the boundary out of
/// degree k (inv[0] is empty). Degrees without a stored boundary count as 0.
HomologyResult assemble(const std::vector<std::size_t>& ranks, const std::vector<RankAndDivisors>& inv,
                        Coefficients ring, std::optional<std::size_t> max_degree, bool cohomological) {
  HomologyResult out;
  out.coefficients = ring;
  std::size_t top = ranks.empty() ? 0 : ranks.size() - 1;
  if (max_degree) top = std::min(top, *max_degree);
  while (top > 0 && ranks[top] == 0) --top;
  auto rank_of = [&](std::size_t k) -> std::size_t {
    if (k == 0 || k >= inv.size()) return 0;
    if (ring.ring != Ring::mod_p) return inv[k].rank;
    std::size_t lost = 0;
    for (const auto& d : inv[k].divisors)
      if (d % ring.prime == 0) ++lost;
    return inv[k].rank - lost;
  };
  for (std::size_t k = 0; k <= top; ++k) {
    const std::size_t n = k < ranks.size() ? ranks[k] : 0;
    out.betti.push_back(n - rank_of(k) - rank_of(k + 1));
    std::vector<Integer> t;
    if (ring.ring == Ring::integers) {
      const std::size_t src = cohomological ? k : k + 1;
      if (src >= 1 && src < inv.size()) t = inv[src].divisors;
    }
    out.torsion.push_back(std::move(t));
  }
  return out;
}

std::vector<RankAndDivisors> boundary_invariants(const ChainComplex& c) {
  std::vector<RankAndDivisors> inv(c.degree_count());
  for (std::size_t k = 1; k < c.degree_count(); ++k) inv[k] = rank_and_elementary_divisors(c.boundaries[k]);
  return inv;
}

std::vector<std::size_t> chain_ranks(const ChainComplex& c) {
  std::vector<std::size_t> n;
  for (std::size_t k = 0; k < c.degree_count(); ++k) n.push_back(c.rank(k));
  return n;
}

/// Boundary images of the block bases of Omega_k in A_{k-1} coordinates.
struct AmbientBoundary {
  std::size_t omega_rank = 0;
  SparseIntMatrix boundary;
};

AmbientBoundary ambient_boundary(const Digraph& g, std::size_t k, const std::vector<PrimitivePath>& lower,
                                 unsigned threads) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::vector<std::pair<PrimitivePath, Integer>>>> per_start(n);
  detail::parallel_for(n, threads, [&](std::size_t s) {
    std::map<VertexId, std::vector<PrimitivePath>> by_end;
    for (auto& p : allowed_paths_from(g, k, static_cast<VertexId>(s))) by_end[p.back()].push_back(std::move(p));
    for (const auto& [e, paths] : by_end) {
      const IntMatrix basis = omega_block_basis(g, paths);
      for (std::size_t c = 0; c < basis.cols(); ++c) {
        std::vector<std::pair<PrimitivePath, Integer>> col;
        for (std::size_t r = 0; r < paths.size(); ++r)
          if (basis(r, c) != 0) col.emplace_back(paths[r], basis(r, c));
        per_start[s].push_back(std::move(col));
      }
    }
  });
  AmbientBoundary out;
  for (const auto& cols : per_start) out.omega_rank += cols.size();
  if (k == 0) return out;
  std::map<PrimitivePath, std::size_t> position;
  for (std::size_t i = 0; i < lower.size(); ++i) position.emplace(lower[i], i);
  // Rows index Omega_k elements, columns A_{k-1}: the transpose has the same
  // invariants and keeps rows short.
  out.boundary = SparseIntMatrix(out.omega_rank, lower.size());
  std::size_t col = 0;
  PrimitivePath face;
  for (const auto& cols : per_start)
    for (const auto& terms : cols) {
      for (const auto& [path, c] : terms)
        for (std::size_t j = 0; j < path.size(); ++j) {
          face.clear();
          for (std::size_t i = 0; i < path.size(); ++i)
            if (i != j) face.push_back(path[i]);
          auto it = position.find(face);
          if (it == position.end()) continue;  // non-allowed faces cancel inside Omega
          out.boundary.add(col, it->second, j % 2 == 0 ? c : Integer(-c));
        }
      ++col;
    }
  return out;
}

IntMatrix dense(const SparseIntMatrix& a) { return a.to_dense(); }

std::vector<std::vector<Rational>> cycle_basis(const ChainComplex& c, std::size_t k) {
  if (k == 0 || k >= c.boundaries.size()) {
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < c.rank(k); ++i) {
      std::vector<Rational> e(c.rank(k));
      e[i] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  return nullspace(RationalMatrix(dense(c.boundaries[k])));
}

/// Columns of the boundary into degree k (as rational vectors), or none.
std::vector<std::vector<Rational>> boundary_columns(const ChainComplex& c, std::size_t k) {
  std::vector<std::vector<Rational>> out;
  if (k + 1 >= c.degree_count()) return out;
  const IntMatrix d = dense(c.boundaries[k + 1]);
  for (std::size_t j = 0; j < d.cols(); ++j) {
    const auto col = d.column(j);
    out.push_back(to_rational(col));
  }
  return out;
}

std::vector<Rational> apply_matrix(const IntMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && v[c] != 0) out[r] += Rational(m(r, c)) * v[c];
  return out;
}

std::size_t column_rank(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty() || rows == 0) return 0;
  return rank(RationalMatrix::from_columns(rows, cols));
}

int permutation_sign(std::vector<VertexId> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) sign = -sign;
  return sign;
}

}  // namespace

// ---------------------------------------------------------------------------

void ChainComplex::verify() const {
  if (boundaries.size() != labels.size()) throw invariant_error("chain complex: boundary count mismatch");
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const std::size_t rows = k == 0 ? 0 : labels[k - 1].size();
    if (boundaries[k].rows() != rows || boundaries[k].cols() != labels[k].size())
      throw invariant_error("chain complex: boundary " + std::to_string(k) + " has the wrong shape");
  }
  for (std::size_t k = 2; k < labels.size(); ++k)
    if (!is_zero(multiply(boundaries[k - 1], boundaries[k])))
      throw invariant_error("chain complex: boundary squared is nonzero in degree " + std::to_string(k));
}

HomologyResult homology(const ChainComplex& c, Coefficients ring, std::optional<std::size_t> max_degree) {
  return assemble(chain_ranks(c), boundary_invariants(c), ring, max_degree, false);
}

HomologyResult cohomology(const ChainComplex& c, Coefficients ring, std::optional<std::size_t> max_degree) {
  return assemble(chain_ranks(c), boundary_invariants(c), ring, max_degree, true);
}

bool same_invariants(const HomologyResult& a, const HomologyResult& b) {
  if (a.coefficients != b.coefficients) return false;
  auto trimmed = [](const HomologyResult& r) {
    std::size_t n = r.betti.size();
    while (n > 0 && r.betti[n - 1] == 0 && r.torsion[n - 1].empty()) --n;
    return n;
  };
  const std::size_t n = trimmed(a);
  if (n != trimmed(b)) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (a.betti[k] != b.betti[k] || a.torsion[k] != b.torsion[k]) return false;
  return true;
}

ChainComplex path_chain_complex(const MinimalBasis& basis) {
  ChainComplex c;
  const Digraph& g = basis.digraph();
  for (std::size_t k = 0; k < basis.degree_count(); ++k) {
    std::vector<std::string> labels;
    for (const auto& e : basis.elements(k)) labels.push_back(path_label(g, e.path));
    SparseIntMatrix d(k == 0 ? 0 : basis.rank(k - 1), basis.rank(k));
    if (k > 0)
      for (std::size_t j = 0; j < basis.rank(k); ++j) {
        const auto y = basis.decompose(k - 1, boundary(basis.elements(k)[j].path));
        for (std::size_t i = 0; i < y.size(); ++i) d.add(i, j, y[i]);
      }
    c.labels.push_back(std::move(labels));
    c.boundaries.push_back(std::move(d));
  }
  c.verify();
  return c;
}

HomologyResult path_homology(const Digraph& g, std::size_t max_degree, Coefficients ring, unsigned threads) {
  std::vector<std::size_t> ranks;
  std::vector<RankAndDivisors> inv;
  std::vector<PrimitivePath> lower;
  for (std::size_t k = 0; k <= max_degree + 1; ++k) {
    std::vector<PrimitivePath> current = allowed_paths(g, k);
    if (k > 0 && current.empty()) break;
    AmbientBoundary b = ambient_boundary(g, k, lower, threads);
    ranks.push_back(b.omega_rank);
    inv.push_back(k == 0 ? RankAndDivisors{} : rank_and_elementary_divisors(b.boundary));
    lower = std::move(current);
  }
  return assemble(ranks, inv, ring, max_degree, false);
}

std::vector<std::size_t> omega_ranks(const Digraph& g, std::size_t max_degree) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    if (k > 0 && k >= g.vertex_count()) break;
    std::size_t r = 0;
    bool any = false;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      std::map<VertexId, std::vector<PrimitivePath>> by_end;
      for (auto& p : allowed_paths_from(g, k, s)) by_end[p.back()].push_back(std::move(p));
      for (const auto& [e, paths] : by_end) {
        any = true;
        r += omega_block_basis(g, paths).cols();
      }
    }
    if (k > 0 && !any) break;
    out.push_back(r);
  }
  return out;
}

CliqueComplex clique_chain_complex(const Graph& g, std::size_t max_clique_size) {
  CliqueComplex out;
  out.cliques = enumerate_cliques(g, max_clique_size);
  std::map<std::vector<VertexId>, std::size_t> position;  // index within its degree
  for (std::size_t i = 0; i < out.cliques.size(); ++i) {
    const std::size_t k = out.cliques[i].size() - 1;
    if (out.by_degree.size() <= k) out.by_degree.resize(k + 1);
    position.emplace(out.cliques[i], out.by_degree[k].size());
    out.by_degree[k].push_back(i);
  }
  if (out.by_degree.empty()) out.by_degree.resize(1);
  for (std::size_t k = 0; k < out.by_degree.size(); ++k) {
    std::vector<std::string> labels;
    SparseIntMatrix d(k == 0 ? 0 : out.by_degree[k - 1].size(), out.by_degree[k].size());
    for (std::size_t j = 0; j < out.by_degree[k].size(); ++j) {
      const auto& c = out.cliques[out.by_degree[k][j]];
      std::string label = "{";
      for (std::size_t i = 0; i < c.size(); ++i) label += (i ? "," : "") + g.name(c[i]);
      labels.push_back(label + "}");
      if (k == 0) continue;
      for (std::size_t del = 0; del < c.size(); ++del) {
        std::vector<VertexId> face;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (i != del) face.push_back(c[i]);
        d.add(position.at(face), j, del % 2 == 0 ? 1 : -1);
      }
    }
    out.complex.labels.push_back(std::move(labels));
    out.complex.boundaries.push_back(std::move(d));
  }
  out.complex.verify();
  return out;
}

void verify_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& f) {
  if (f.maps.size() != source.degree_count()) throw invariant_error("chain map: degree count mismatch");
  for (std::size_t k = 0; k < f.maps.size(); ++k)
    if (f.maps[k].rows() != target.rank(k) || f.maps[k].cols() != source.rank(k))
      throw invariant_error("chain map: wrong shape in degree " + std::to_string(k));
  for (std::size_t k = 1; k < f.maps.size(); ++k) {
    const IntMatrix ds = dense(source.boundaries[k]);
    IntMatrix lhs(target.rank(k - 1), source.rank(k));
    if (k < target.degree_count()) lhs = dense(target.boundaries[k]) * f.maps[k];
    if (lhs != f.maps[k - 1] * ds)
      throw invariant_error("map does not commute with the boundary in degree " + std::to_string(k));
  }
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap out;
  for (std::size_t k = 0; k < std::min(g.maps.size(), f.maps.size()); ++k) out.maps.push_back(g.maps[k] * f.maps[k]);
  return out;
}

ChainMap induced_map(const DigraphMorphism& f, const MinimalBasis& source, const MinimalBasis& target,
                     bool experimental_broad) {
  if (f.mode == MorphismMode::broad && !experimental_broad)
    throw invalid_argument("induced maps of broad morphisms are experimental; enable them explicitly");
  const MorphismReport report = check_morphism(f);
  if (!report.valid) throw invalid_argument("not a digraph morphism: " + report.violation);
  if (!(source.digraph() == f.source) || !(target.digraph() == f.target))
    throw invalid_argument("bases do not belong to the morphism's digraphs");
  ChainMap out;
  for (std::size_t k = 0; k < source.degree_count(); ++k) {
    IntMatrix m(target.rank(k), source.rank(k));
    for (std::size_t j = 0; j < source.rank(k); ++j) {
      const PathVector image = push_forward(source.elements(k)[j].path, f.vertex_map);
      if (image.is_zero()) continue;
      const auto y = target.try_decompose(k, image);
      if (!y) {
        const std::string what = "image " + path_label(f.target, image) + " of " +
                                 path_label(f.source, source.elements(k)[j].path) +
                                 " is not boundary-invariant in the target";
        // Narrow morphisms always preserve Omega; broad ones need not.
        if (f.mode == MorphismMode::broad) throw domain_error(what);
        throw invariant_error(what);
      }
      for (std::size_t i = 0; i < y->size(); ++i) m(i, j) = (*y)[i];
    }
    out.maps.push_back(std::move(m));
  }
  try {
    verify_chain_map(path_chain_complex(source), path_chain_complex(target), out);
  } catch (const Error& e) {
    // A broad map can send a path onto one with a repeated vertex, which is
    // dropped while some of its faces survive.
    if (f.mode == MorphismMode::broad) throw domain_error(e.what());
    throw;
  }
  return out;
}

bool maps_agree_on_homology_q(const ChainComplex& source, const ChainComplex& target, const ChainMap& f,
                              const ChainMap& g) {
  for (std::size_t k = 0; k < source.degree_count(); ++k) {
    if (k >= f.maps.size() || k >= g.maps.size()) break;
    IntMatrix diff = f.maps[k];
    for (std::size_t r = 0; r < diff.rows(); ++r)
      for (std::size_t c = 0; c < diff.cols(); ++c) diff(r, c) -= g.maps[k](r, c);
    if (diff.is_zero()) continue;
    auto boundaries = boundary_columns(target, k);
    const std::size_t n = target.rank(k);
    const std::size_t base = column_rank(n, boundaries);
    for (const auto& z : cycle_basis(source, k)) boundaries.push_back(apply_matrix(diff, z));
    if (column_rank(n, boundaries) != base) return false;
  }
  return true;
}

LefschetzReport lefschetz(const ChainComplex& c, const ChainMap& f) {
  LefschetzReport out;
  Integer hopf = 0;
  for (std::size_t k = 0; k < c.degree_count(); ++k) {
    const IntMatrix& m = f.maps.at(k);
    Integer tr = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
    out.chain_traces.push_back(tr);
    hopf += k % 2 == 0 ? tr : Integer(-tr);

    // Basis of Z_k: a basis of B_k followed by homology representatives.
    const std::size_t n = c.rank(k);
    std::vector<std::vector<Rational>> cols = boundary_columns(c, k);
    std::vector<std::vector<Rational>> basis;
    for (std::size_t j : independent_columns(RationalMatrix::from_columns(n, cols))) basis.push_back(cols[j]);
    const std::size_t b = basis.size();
    std::vector<std::vector<Rational>> with_cycles = basis;
    const auto cycles = cycle_basis(c, k);
    with_cycles.insert(with_cycles.end(), cycles.begin(), cycles.end());
    std::vector<std::vector<Rational>> reps;
    if (n > 0)
      for (std::size_t j : independent_columns(RationalMatrix::from_columns(n, with_cycles)))
        if (j >= b) reps.push_back(with_cycles[j]);
    basis.insert(basis.end(), reps.begin(), reps.end());
    Rational trace = 0;
    if (!reps.empty()) {
      const RationalMatrix w = RationalMatrix::from_columns(n, basis);
      for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto image = apply_matrix(m, reps[i]);
        const auto x = solve(w, image);
        if (!x) throw invariant_error("image of a cycle is not a cycle");
        trace += (*x)[b + i];
      }
    }
    out.homology_traces.push_back(trace);
    out.number += k % 2 == 0 ? trace : Rational(-trace);
  }
  if (Rational(hopf) != out.number) throw invariant_error("Hopf trace formula fails");
  return out;
}

LefschetzReport lefschetz_number(const DigraphMorphism& f, bool experimental_broad) {
  if (!(f.source == f.target)) throw invalid_argument("Lefschetz number needs an endomorphism");
  const std::size_t top = f.source.vertex_count() == 0 ? 0 : f.source.vertex_count() - 1;
  const MinimalBasis basis = minimal_basis(f.source, top);
  const ChainMap m = induced_map(f, basis, basis, experimental_broad);
  return lefschetz(path_chain_complex(basis), m);
}

bool is_graph_automorphism(const Graph& g, std::span<const VertexId> map) {
  const std::size_t n = g.vertex_count();
  if (map.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (VertexId v : map) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (const auto& [u, v] : g.edges())
    if (!g.has_edge(map[u], map[v])) return false;
  return true;
}

std::vector<std::vector<VertexId>> graph_automorphisms(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> map(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      out.push_back(map);
      return;
    }
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || g.neighbors(w).size() != g.neighbors(v).size()) continue;
      bool ok = true;
      for (VertexId u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == g.has_edge(map[u], w);
      if (!ok) continue;
      used[w] = true;
      map[v] = w;
      self(self, v + 1);
      used[w] = false;
    }
  };
  rec(rec, 0);
  return out;
}

LefschetzReport lefschetz_number(const Graph& g, std::span<const VertexId> automorphism) {
  if (!is_graph_automorphism(g, automorphism)) throw invalid_argument("map is not a graph automorphism");
  const CliqueComplex cc = clique_chain_complex(g);
  std::map<std::vector<VertexId>, std::size_t> position;
  for (const auto& deg : cc.by_degree)
    for (std::size_t j = 0; j < deg.size(); ++j) position.emplace(cc.cliques[deg[j]], j);
  ChainMap f;
  for (const auto& deg : cc.by_degree) {
    IntMatrix m(deg.size(), deg.size());
    for (std::size_t j = 0; j < deg.size(); ++j) {
      std::vector<VertexId> image;
      for (VertexId v : cc.cliques[deg[j]]) image.push_back(automorphism[v]);
      const int sign = permutation_sign(image);
      std::sort(image.begin(), image.end());
      m(position.at(image), j) = sign;
    }
    f.maps.push_back(std::move(m));
  }
  verify_chain_map(cc.complex, cc.complex, f);
  return lefschetz(cc.complex, f);
}

std::optional<std::vector<VertexId>> fixed_simplex_search(const Graph& g, std::span<const VertexId> automorphism) {
  if (!is_graph_automorphism(g, automorphism)) throw invalid_argument("map is not a graph automorphism");
  for (const auto& c : enumerate_cliques(g)) {
    std::vector<VertexId> image;
    for (VertexId v : c) image.push_back(automorphism[v]);
    std::sort(image.begin(), image.end());
    if (image == c) return c;
  }
  return std::nullopt;
}

std::optional<VertexId> fixed_vertex_search(const DigraphMorphism& f) {
  for (VertexId v = 0; v < f.vertex_map.size(); ++v)
    if (f.vertex_map[v] == v) return v;
  return std::nullopt;
}

namespace {

PathVector cross_raw(const PathVector& p, const PathVector& q, const ProductDigraph& product) {
  PathVector out;
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) {
      const Integer c = ca * cb;
      PrimitivePath cur{product.at(a[0], b[0])};
      auto rec = [&](auto&& self, std::size_t i, std::size_t j, std::size_t inversions) -> void {
        if (i + 1 == a.size() && j + 1 == b.size()) {
          out.add(cur, inversions % 2 == 0 ? c : Integer(-c));
          return;
        }
        if (i + 1 < a.size()) {  // step in the left factor; counts earlier right-factor steps
          cur.push_back(product.at(a[i + 1], b[j]));
          self(self, i + 1, j, inversions + j);
          cur.pop_back();
        }
        if (j + 1 < b.size()) {
          cur.push_back(product.at(a[i], b[j + 1]));
          self(self, i, j + 1, inversions);
          cur.pop_back();
        }
      };
      rec(rec, 0, 0, 0);
    }
  return out;
}

}  // namespace

PathVector cross_product(const PathVector& p, const PathVector& q, const ProductDigraph& product) {
  const PathVector out = cross_raw(p, q, product);
  if (p.is_zero() || q.is_zero()) return out;
  const PathVector lhs = boundary(out);
  PathVector rhs = cross_raw(boundary(p), q, product);
  PathVector right = cross_raw(p, boundary(q), product);
  if (*p.degree() % 2 == 1) right *= Integer(-1);
  rhs += right;
  if (lhs != rhs) throw invariant_error("cross product violates the Leibniz rule");
  return out;
}

KunnethReport kunneth_check(const Digraph& g, const Digraph& h, std::optional<std::size_t> max_degree,
                            bool check_cross) {
  KunnethReport out;
  const auto full = [](const Digraph& d) {
    return path_homology(d, d.vertex_count() == 0 ? 0 : d.vertex_count() - 1, Coefficients::rationals()).betti;
  };
  out.betti_left = full(g);
  out.betti_right = full(h);
  const ProductDigraph product = indexed_product(g, h);
  const std::size_t pn = product.graph.vertex_count();
  out.max_degree = max_degree.value_or(pn == 0 ? 0 : pn - 1);
  out.betti_product =
      path_homology(product.graph, out.max_degree, Coefficients::rationals()).betti;
  out.convolution.assign(out.betti_left.size() + out.betti_right.size() - 1, 0);
  for (std::size_t i = 0; i < out.betti_left.size(); ++i)
    for (std::size_t j = 0; j < out.betti_right.size(); ++j)
      out.convolution[i + j] += out.betti_left[i] * out.betti_right[j];
  std::vector<std::size_t> a = out.betti_product, b = out.convolution;
  const std::size_t n = out.max_degree + 1;
  a.resize(std::max(a.size(), n), 0);
  b.resize(std::max(b.size(), n), 0);
  a.resize(n);
  const bool beyond_zero = std::all_of(b.begin() + static_cast<std::ptrdiff_t>(n), b.end(),
                                       [](std::size_t x) { return x == 0; });
  b.resize(n);
  out.betti_match = beyond_zero && a == b;

  if (check_cross) {
    const MinimalBasis bg = minimal_basis(g, g.vertex_count());
    const MinimalBasis bh = minimal_basis(h, h.vertex_count());
    bool ok = true;
    for (std::size_t k = 0; k <= out.max_degree && ok; ++k) {
      std::vector<PathVector> crosses;
      for (std::size_t i = 0; i <= k; ++i) {
        if (i >= bg.degree_count() || k - i >= bh.degree_count()) continue;
        for (const auto& x : bg.elements(i))
          for (const auto& y : bh.elements(k - i)) crosses.push_back(cross_product(x.path, y.path, product));
      }
      if (crosses.empty()) continue;
      std::map<PrimitivePath, std::size_t> rows;
      for (const auto& c : crosses) {
        if (!in_omega(product.graph, c)) ok = false;
        for (const auto& [p, v] : c.terms()) rows.try_emplace(p, rows.size());
      }
      SparseIntMatrix m(crosses.size(), rows.size());
      for (std::size_t j = 0; j < crosses.size(); ++j)
        for (const auto& [p, v] : crosses[j].terms()) m.add(j, rows.at(p), v);
      if (rank_and_elementary_divisors(m).rank != crosses.size()) ok = false;
    }
    out.cross_independent = ok;
  }
  return out;
}

}  // namespace pathcell
