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

#include "pathcell/minimal.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "pathcell/error.hpp"
#include "parallel.hpp"

namespace pathcell {

namespace {

using ForbiddenSet = std::vector<VertexId>;  // sorted

struct BlockResult {
  std::vector<PrimitivePath> paths;  // allowed s->e paths avoiding the forbidden set
  std::vector<PathVector> lattice;   // Z-basis of the block
  std::vector<PathVector> minimal;   // normalized, canonical order
  std::vector<PathVector> basis;
};

/// Row-reduced rational vectors for greedy independence tests. Rows are kept
/// reduced against earlier pivots, so one sequential sweep reduces a vector.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t n) : n_(n) {}

  bool add(std::vector<Rational> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const Rational f = v[pivot];
      for (std::size_t i = 0; i < n_; ++i)
        if (row[i] != 0) v[i] -= f * row[i];
    }
    std::size_t p = 0;
    while (p < n_ && v[p] == 0) ++p;
    if (p == n_) return false;
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    rows_.emplace_back(p, std::move(v));
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

std::vector<Integer> coordinates(const std::vector<PrimitivePath>& paths, const PathVector& p) {
  std::vector<Integer> out(paths.size());
  for (const auto& [path, c] : p.terms()) {
    auto it = std::lower_bound(paths.begin(), paths.end(), path);
    if (it == paths.end() || *it != path) throw invariant_error("path term outside its block");
    out[static_cast<std::size_t>(it - paths.begin())] = c;
  }
  return out;
}

IntMatrix coordinate_block(const std::vector<PrimitivePath>& paths, const std::vector<PathVector>& elements) {
  std::vector<std::vector<Integer>> cols;
  cols.reserve(elements.size());
  for (const auto& e : elements) cols.push_back(coordinates(paths, e));
  return IntMatrix::from_columns(paths.size(), cols);
}

/// All minimal (+-1, conformally minimal) elements of the block lattice, by
/// sign-pattern search with iterative deepening on support size.
std::vector<PathVector> minimal_elements(const Digraph& g, const std::vector<PrimitivePath>& paths,
                                         const std::vector<PathVector>& lattice) {
  std::vector<PathVector> out;
  std::set<PrimitivePath> support;
  for (const auto& v : lattice)
    for (const auto& [p, c] : v.terms()) support.insert(p);
  const std::vector<PrimitivePath> cand(support.begin(), support.end());
  const std::size_t m = cand.size();

  std::map<PrimitivePath, std::size_t> face_index;
  std::vector<std::vector<std::pair<std::size_t, int>>> path_faces(m);
  for (std::size_t j = 0; j < m; ++j)
    for (auto& f : non_allowed_faces(g, cand[j])) {
      auto [it, inserted] = face_index.try_emplace(std::move(f.path), face_index.size());
      path_faces[j].emplace_back(it->second, f.sign);
    }

  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> face_owner(face_index.size(), m);
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& [f, s] : path_faces[j]) {
      if (face_owner[f] == m) {
        face_owner[f] = j;
      } else {
        parent[find(j)] = find(face_owner[f]);
      }
    }
  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t j = 0; j < m; ++j) {
    if (path_faces[j].empty()) {
      out.emplace_back(cand[j], 1);
    } else {
      components[find(j)].push_back(j);
    }
  }

  for (const auto& [root, members] : components) {
    const std::size_t n = members.size();
    std::map<std::size_t, std::size_t> local;
    std::vector<std::vector<std::pair<std::size_t, int>>> faces_of(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [f, s] : path_faces[members[i]]) {
        auto [it, inserted] = local.try_emplace(f, local.size());
        faces_of[i].emplace_back(it->second, s);
      }
    const std::size_t nf = local.size();
    std::vector<std::size_t> closes_at(nf, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [f, s] : faces_of[i]) closes_at[f] = std::max(closes_at[f], i);
    std::vector<std::vector<std::size_t>> closing(n);
    for (std::size_t f = 0; f < nf; ++f) closing[closes_at[f]].push_back(f);

    std::vector<int> face_sum(nf, 0);
    std::vector<int> sign(n, 0);
    // Found minimal elements: per position the (element, sign) entries, plus
    // counters of conformal agreement with +y and -y.
    std::vector<std::vector<std::pair<std::size_t, int>>> found_at(n);
    std::vector<std::size_t> found_size;
    std::vector<std::size_t> agree_pos, agree_neg;
    std::vector<std::vector<int>> level_found;

    std::size_t target = 0;
    std::size_t chosen = 0;
    auto closed_ok = [&](std::size_t i) {
      for (std::size_t f : closing[i])
        if (face_sum[f] != 0) return false;
      return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (chosen == target) {
        for (std::size_t f = 0; f < nf; ++f)
          if (face_sum[f] != 0) return;
        level_found.push_back(sign);
        return;
      }
      if (n - i < target - chosen) return;
      // sign 0
      if (closed_ok(i)) self(self, i + 1);
      for (int s : {1, -1}) {
        if (chosen == 0 && s < 0) break;
        sign[i] = s;
        ++chosen;
        for (const auto& [f, fs] : faces_of[i]) face_sum[f] += s * fs;
        bool contained = false;
        for (const auto& [y, ys] : found_at[i]) {
          auto& cnt = ys == s ? agree_pos[y] : agree_neg[y];
          if (++cnt == found_size[y]) contained = true;
        }
        if (!contained && closed_ok(i)) self(self, i + 1);
        for (const auto& [y, ys] : found_at[i]) --(ys == s ? agree_pos[y] : agree_neg[y]);
        for (const auto& [f, fs] : faces_of[i]) face_sum[f] -= s * fs;
        --chosen;
        sign[i] = 0;
      }
    };
    for (target = 2; target <= n; ++target) {
      level_found.clear();
      rec(rec, 0);
      for (const auto& x : level_found) {
        const std::size_t id = found_size.size();
        found_size.push_back(target);
        agree_pos.push_back(0);
        agree_neg.push_back(0);
        PathVector v;
        for (std::size_t i = 0; i < n; ++i)
          if (x[i] != 0) {
            found_at[i].emplace_back(id, x[i]);
            v.add(cand[members[i]], x[i]);
          }
        out.push_back(std::move(v));
      }
    }
  }
  (void)paths;
  std::sort(out.begin(), out.end());
  return out;
}

/// Every allowed s->e k-path inside the support subgraph of a minimal P must
/// be one of its terms.
void check_maximal_path_closure(const Digraph& g, const PathVector& p) {
  const Subgraph sub = support_subgraph(g, p);
  const std::size_t k = *p.degree();
  const PrimitivePath& first = p.terms().begin()->first;
  auto local = [&](VertexId v) {
    return static_cast<VertexId>(std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), v) -
                                 sub.to_parent.begin());
  };
  for (const auto& q : allowed_paths_from(sub.graph, k, local(first.front()))) {
    if (q.back() != local(first.back())) continue;
    PrimitivePath lifted;
    for (VertexId v : q) lifted.push_back(sub.to_parent[v]);
    if (p.coefficient(lifted) == 0)
      throw invariant_error("minimal path " + path_label(g, p) + " misses the maximal path " +
                            path_label(g, lifted) + " of its support");
  }
}

std::vector<PathVector> greedy_basis(const std::vector<PrimitivePath>& paths, const std::vector<PathVector>& minimal,
                                     std::size_t rank, bool reverse) {
  std::vector<PathVector> basis;
  IncrementalEchelon echelon(paths.size());
  auto consider = [&](const PathVector& v) {
    if (basis.size() == rank) return;
    auto coords = coordinates(paths, v);
    std::vector<Rational> q(coords.begin(), coords.end());
    if (echelon.add(std::move(q))) basis.push_back(v);
  };
  if (reverse) {
    for (auto it = minimal.rbegin(); it != minimal.rend(); ++it) consider(*it);
  } else {
    for (const auto& v : minimal) consider(v);
  }
  return basis;
}

PathVector append_vertex(const PathVector& p, VertexId v) {
  PathVector out;
  for (const auto& [path, c] : p.terms()) {
    PrimitivePath longer = path;
    longer.push_back(v);
    out.add(longer, c);
  }
  return out;
}

/// Memoized block computation. A block (k, s, e, F) is Omega_k of the
/// subgraph without F restricted to s->e paths. For k >= 2 it is assembled
/// from the (k-1)-bases of the blocks (s, w) over in-neighbours w of e, with e
/// added to the forbidden set; the truncated combinations must cancel every
/// face q.e with q's last vertex not adjacent to e.
class BlockEnumerator {
 public:
  BlockEnumerator(const Digraph& g, bool reverse) : g_(g), reverse_(reverse) {}

  const BlockResult& block(std::size_t k, VertexId s, VertexId e, const ForbiddenSet& forbidden,
                           const std::vector<PrimitivePath>* given = nullptr) {
    auto key = std::make_tuple(k, s, e, forbidden);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BlockResult r;
    if (given) {
      r.paths = *given;
    } else if (k == 0) {
      if (s == e) r.paths.push_back({s});
    } else {
      std::vector<bool> mask(g_.vertex_count(), false);
      for (VertexId v : forbidden) mask[v] = true;
      for (auto& p : allowed_paths_from(g_, k, s, mask))
        if (p.back() == e) r.paths.push_back(std::move(p));
    }
    if (k <= 1) {
      for (const auto& p : r.paths) r.lattice.emplace_back(p, 1);
      r.minimal = r.lattice;
      r.basis = r.lattice;
    } else if (!r.paths.empty()) {
      r.lattice = recursive_lattice(k, s, e, forbidden);
      r.minimal = minimal_elements(g_, r.paths, r.lattice);
      for (const auto& p : r.minimal) check_maximal_path_closure(g_, p);
      r.basis = greedy_basis(r.paths, r.minimal, r.lattice.size(), reverse_);
      verify(r);
    }
    return memo_.emplace(std::move(key), std::move(r)).first->second;
  }

 private:
  std::vector<PathVector> recursive_lattice(std::size_t k, VertexId s, VertexId e, const ForbiddenSet& forbidden) {
    ForbiddenSet inner = forbidden;
    inner.insert(std::lower_bound(inner.begin(), inner.end(), e), e);
    std::vector<const PathVector*> unknowns;
    for (VertexId w : g_.in_neighbors(e)) {
      if (w == s || std::binary_search(forbidden.begin(), forbidden.end(), w)) continue;
      for (const auto& b : block(k - 1, s, w, inner).basis) unknowns.push_back(&b);
    }
    std::map<PrimitivePath, std::size_t> rows;
    std::vector<std::vector<std::pair<std::size_t, Integer>>> entries(unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      for (const auto& [path, c] : unknowns[u]->terms()) {
        const VertexId v = path[path.size() - 2];
        if (g_.has_edge(v, e)) continue;
        PrimitivePath q(path.begin(), path.end() - 1);
        auto [it, inserted] = rows.try_emplace(std::move(q), rows.size());
        entries[u].emplace_back(it->second, c);
      }
    std::vector<PathVector> out;
    if (rows.empty()) {
      for (const auto* b : unknowns) out.push_back(append_vertex(*b, e));
      return out;
    }
    IntMatrix c(rows.size(), unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      for (const auto& [r, x] : entries[u]) c(r, u) += x;
    const IntMatrix kernel = integer_kernel_basis(c);
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
      PathVector v;
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (kernel(u, j) != 0) v += kernel(u, j) * append_vertex(*unknowns[u], e);
      out.push_back(std::move(v));
    }
    return out;
  }

  void verify(const BlockResult& r) const {
    if (r.basis.size() != r.lattice.size())
      throw invariant_error("minimal paths span rank " + std::to_string(r.basis.size()) + " of block rank " +
                            std::to_string(r.lattice.size()) + " at " + path_label(g_, r.paths.front()));
    if (r.basis.empty()) return;
    const auto rd = rank_and_elementary_divisors(coordinate_block(r.paths, r.basis));
    if (rd.rank != r.basis.size() || !rd.divisors.empty())
      throw invariant_error("minimal paths are not an integral basis of the block at " +
                            path_label(g_, r.paths.front()));
  }

  const Digraph& g_;
  bool reverse_;
  std::map<std::tuple<std::size_t, VertexId, VertexId, ForbiddenSet>, BlockResult> memo_;
};

struct StartResult {
  std::vector<std::pair<VertexId, std::vector<PathVector>>> blocks;  // by end vertex
};

StartResult run_start(const Digraph& g, std::size_t k, VertexId s, bool reverse) {
  StartResult out;
  BlockEnumerator enumerator(g, reverse);
  std::map<VertexId, std::vector<PrimitivePath>> by_end;
  for (auto& p : allowed_paths_from(g, k, s)) by_end[p.back()].push_back(std::move(p));
  for (const auto& [e, paths] : by_end) {
    const BlockResult& r = enumerator.block(k, s, e, {}, &paths);
    const std::size_t direct = omega_block_basis(g, paths).cols();
    if (direct != r.lattice.size())
      throw invariant_error("recursive block rank " + std::to_string(r.lattice.size()) + " differs from kernel rank " +
                            std::to_string(direct) + " at " + path_label(g, paths.front()));
    if (!r.basis.empty()) out.blocks.emplace_back(e, r.basis);
  }
  return out;
}

void check_element_shape(const Digraph& g, std::size_t k, const PathVector& p) {
  if (p.is_zero() || p.degree() != k) throw invariant_error("basis element of wrong degree: " + path_label(g, p));
  for (const auto& [path, c] : p.terms())
    if (c != 1 && c != -1) throw invariant_error("basis element with coefficient beyond +-1: " + path_label(g, p));
  if (p.start_vertices().size() != 1 || p.end_vertices().size() != 1)
    throw invariant_error("basis element without unique endpoints: " + path_label(g, p));
  if (!in_omega(g, p)) throw invariant_error("basis element is not boundary-invariant: " + path_label(g, p));
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_minimal(const Digraph& g, const PathVector& p) {
  if (!in_omega(g, p)) throw domain_error("is_minimal needs a boundary-invariant path: " + path_label(g, p));
  if (p.is_zero()) return false;
  std::vector<PrimitivePath> terms;
  std::vector<Integer> coef;
  Integer budget = 1;
  for (const auto& [path, c] : p.terms()) {
    terms.push_back(path);
    coef.push_back(c);
    budget *= abs_value(c) + 1;
  }
  if (budget > Integer(1) << 24) throw invalid_argument("path too wide for the exhaustive minimality check");

  std::map<PrimitivePath, std::size_t> face_index;
  std::vector<std::vector<std::pair<std::size_t, int>>> faces(terms.size());
  for (std::size_t j = 0; j < terms.size(); ++j)
    for (auto& f : non_allowed_faces(g, terms[j])) {
      auto [it, inserted] = face_index.try_emplace(std::move(f.path), face_index.size());
      faces[j].emplace_back(it->second, f.sign);
    }
  std::vector<Integer> sum(face_index.size());
  std::vector<Integer> d(terms.size());
  // Candidates d with d_j between 0 and c_j. d = 0 and d = c are excluded:
  // the zero path would make every path non-minimal.
  auto rec = [&](auto&& self, std::size_t j) -> bool {
    if (j == terms.size()) {
      bool zero = true, full = true;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] != 0) zero = false;
        if (d[i] != coef[i]) full = false;
      }
      if (zero || full) return false;
      return std::all_of(sum.begin(), sum.end(), [](const Integer& x) { return x == 0; });
    }
    const Integer step = coef[j] > 0 ? 1 : -1;
    for (Integer x = 0;; x += step) {
      d[j] = x;
      for (const auto& [f, s] : faces[j]) sum[f] += x * s;
      const bool hit = self(self, j + 1);
      for (const auto& [f, s] : faces[j]) sum[f] -= x * s;
      if (hit) return true;
      if (x == coef[j]) break;
    }
    d[j] = 0;
    return false;
  };
  return !rec(rec, 0);
}

std::vector<PathVector> minimal_paths_between(const Digraph& g, std::size_t k, VertexId s, VertexId e) {
  if (s >= g.vertex_count() || e >= g.vertex_count()) throw invalid_argument("vertex out of range");
  if (k == 0) return s == e ? std::vector<PathVector>{PathVector({s}, 1)} : std::vector<PathVector>{};
  if (s == e) return {};
  BlockEnumerator enumerator(g, false);
  return enumerator.block(k, s, e, {}).minimal;
}

MinimalBasis minimal_basis(const Digraph& g, std::size_t max_k, const MinimalBasisOptions& options) {
  MinimalBasis out;
  out.graph_ = g;
  const std::size_t n = g.vertex_count();
  for (std::size_t k = 0; k <= max_k; ++k) {
    std::vector<BasisElement> elements;
    if (k == 0) {
      for (VertexId v = 0; v < n; ++v) elements.push_back({PathVector({v}, 1), v, v});
    } else {
      if (k >= n) break;
      std::vector<StartResult> per_start(n);
      detail::parallel_for(n, options.threads, [&](std::size_t s) {
        per_start[s] = run_start(g, k, static_cast<VertexId>(s), options.reverse_order);
      });
      for (VertexId s = 0; s < n; ++s)
        for (const auto& [e, basis] : per_start[s].blocks)
          for (const auto& b : basis) elements.push_back({b, s, e});
    }
    auto degree = MinimalBasis::index_degree(g, k, std::move(elements));
    if (k > 0 && degree.allowed.empty()) break;
    out.degrees_.push_back(std::move(degree));
  }
  return out;
}

MinimalBasis::Degree MinimalBasis::index_degree(const Digraph& g, std::size_t k, std::vector<BasisElement> elements) {
  Degree d;
  d.allowed = allowed_paths(g, k);
  d.elements = std::move(elements);
  std::map<std::pair<VertexId, VertexId>, std::vector<PrimitivePath>> by_pair;
  for (const auto& p : d.allowed) by_pair[{p.front(), p.back()}].push_back(p);
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    const auto key = std::make_pair(d.elements[i].start, d.elements[i].end);
    auto [it, inserted] = d.block_index.try_emplace(key, d.blocks.size());
    if (inserted) {
      Block b;
      b.start = key.first;
      b.end = key.second;
      b.paths = by_pair[key];
      d.blocks.push_back(std::move(b));
    }
    d.blocks[it->second].members.push_back(i);
  }
  for (auto& b : d.blocks) {
    std::vector<PathVector> members;
    for (std::size_t i : b.members) members.push_back(d.elements[i].path);
    b.solver = LatticeSolver(coordinate_block(b.paths, members));
  }
  return d;
}

MinimalBasis MinimalBasis::from_elements(const Digraph& g, const std::vector<std::vector<PathVector>>& per_degree) {
  MinimalBasis out;
  out.graph_ = g;
  for (std::size_t k = 0; k < per_degree.size(); ++k) {
    std::vector<BasisElement> elements;
    for (const auto& p : per_degree[k]) {
      check_element_shape(g, k, p);
      if (!is_minimal(g, p)) throw invariant_error("basis element is not minimal: " + path_label(g, p));
      const PrimitivePath& first = p.terms().begin()->first;
      elements.push_back({p, first.front(), first.back()});
    }
    Degree d = index_degree(g, k, std::move(elements));
    for (const auto& b : d.blocks) {
      std::vector<PathVector> members;
      for (std::size_t i : b.members) members.push_back(d.elements[i].path);
      const auto rd = rank_and_elementary_divisors(coordinate_block(b.paths, members));
      if (rd.rank != members.size() || !rd.divisors.empty() ||
          omega_block_basis(g, b.paths).cols() != members.size())
        throw invariant_error("elements do not form an integral basis of degree " + std::to_string(k));
    }
    if (omega(g, k).rank() != d.elements.size())
      throw invariant_error("elements do not span Omega in degree " + std::to_string(k));
    out.degrees_.push_back(std::move(d));
  }
  return out;
}

IntMatrix MinimalBasis::coordinate_matrix(std::size_t k) const {
  const Degree& d = degrees_.at(k);
  std::map<PrimitivePath, std::size_t> position;
  for (std::size_t i = 0; i < d.allowed.size(); ++i) position.emplace(d.allowed[i], i);
  IntMatrix m(d.allowed.size(), d.elements.size());
  for (std::size_t j = 0; j < d.elements.size(); ++j)
    for (const auto& [p, c] : d.elements[j].path.terms()) m(position.at(p), j) = c;
  return m;
}

std::optional<std::vector<Integer>> MinimalBasis::try_decompose(std::size_t k, const PathVector& p) const {
  std::vector<Integer> out(rank(k));
  if (p.is_zero()) return out;
  if (p.degree() != k || k >= degrees_.size()) return std::nullopt;
  const Degree& d = degrees_[k];
  std::map<std::pair<VertexId, VertexId>, PathVector> parts;
  for (const auto& [path, c] : p.terms()) parts[{path.front(), path.back()}].add(path, c);
  for (const auto& [key, part] : parts) {
    auto it = d.block_index.find(key);
    if (it == d.block_index.end()) return std::nullopt;
    const Block& b = d.blocks[it->second];
    std::vector<Integer> v(b.paths.size());
    for (const auto& [path, c] : part.terms()) {
      auto pos = std::lower_bound(b.paths.begin(), b.paths.end(), path);
      if (pos == b.paths.end() || *pos != path) return std::nullopt;
      v[static_cast<std::size_t>(pos - b.paths.begin())] = c;
    }
    auto y = b.solver.solve(v);
    if (!y) return std::nullopt;
    for (std::size_t i = 0; i < b.members.size(); ++i) out[b.members[i]] = (*y)[i];
  }
  return out;
}

std::vector<Integer> MinimalBasis::decompose(std::size_t k, const PathVector& p) const {
  auto y = try_decompose(k, p);
  if (!y) throw invariant_error("path lies outside the span of the degree-" + std::to_string(k) + " basis");
  return *y;
}

}  // namespace pathcell
