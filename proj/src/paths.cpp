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

#include "pathcell/paths.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pathcell/error.hpp"

namespace pathcell {

PathVector::PathVector(PrimitivePath p, Integer c) {
  if (c != 0) terms_.emplace(std::move(p), std::move(c));
}

PathVector::PathVector(std::initializer_list<std::pair<PrimitivePath, long long>> terms) {
  for (const auto& [p, c] : terms) add(p, Integer(c));
}

void PathVector::add(const PrimitivePath& p, const Integer& c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.size() != p.size())
    throw invalid_argument("path vector terms must share one length");
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::size_t> PathVector::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.size() - 1;
}

Integer PathVector::width() const {
  Integer w = 0;
  for (const auto& [p, c] : terms_) w += abs_value(c);
  return w;
}

Integer PathVector::coefficient(const PrimitivePath& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::set<VertexId> PathVector::start_vertices() const {
  std::set<VertexId> out;
  for (const auto& [p, c] : terms_) out.insert(p.front());
  return out;
}

std::set<VertexId> PathVector::end_vertices() const {
  std::set<VertexId> out;
  for (const auto& [p, c] : terms_) out.insert(p.back());
  return out;
}

PathVector PathVector::normalized() const {
  if (!terms_.empty() && terms_.begin()->second < 0) return -*this;
  return *this;
}

PathVector& PathVector::operator+=(const PathVector& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

PathVector& PathVector::operator-=(const PathVector& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

PathVector& PathVector::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [p, x] : terms_) x *= c;
  }
  return *this;
}

std::strong_ordering operator<=>(const PathVector& a, const PathVector& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (ia->second != ib->second) return ia->second < ib->second ? std::strong_ordering::less
                                                                 : std::strong_ordering::greater;
  }
  if (ia == a.terms_.end() && ib == b.terms_.end()) return std::strong_ordering::equal;
  return ia == a.terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------

bool is_regular(const PrimitivePath& p) {
  std::vector<VertexId> s = p;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool is_allowed(const Digraph& g, const PrimitivePath& p) {
  for (VertexId v : p)
    if (v >= g.vertex_count()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

PathVector boundary(const PathVector& p) {
  PathVector out;
  for (const auto& [path, c] : p.terms()) {
    if (path.size() < 2) continue;
    for (std::size_t j = 0; j < path.size(); ++j) {
      PrimitivePath face;
      face.reserve(path.size() - 1);
      for (std::size_t i = 0; i < path.size(); ++i)
        if (i != j) face.push_back(path[i]);
      out.add(face, j % 2 == 0 ? c : Integer(-c));
    }
  }
  return out;
}

std::vector<PrimitivePath> allowed_paths_from(const Digraph& g, std::size_t k, VertexId start,
                                              const std::vector<bool>& forbidden) {
  std::vector<PrimitivePath> out;
  if (k >= g.vertex_count()) return out;
  if (!forbidden.empty() && forbidden[start]) return out;
  std::vector<bool> on_path(g.vertex_count(), false);
  PrimitivePath cur{start};
  on_path[start] = true;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == k + 1) {
      out.push_back(cur);
      return;
    }
    for (VertexId w : g.out_neighbors(cur.back())) {
      if (on_path[w] || (!forbidden.empty() && forbidden[w])) continue;
      on_path[w] = true;
      cur.push_back(w);
      self(self);
      cur.pop_back();
      on_path[w] = false;
    }
  };
  rec(rec);
  return out;
}

std::vector<PrimitivePath> allowed_paths(const Digraph& g, std::size_t k) {
  std::vector<PrimitivePath> out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    auto part = allowed_paths_from(g, k, s);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Face> non_allowed_faces(const Digraph& g, const PrimitivePath& p) {
  std::vector<Face> out;
  for (std::size_t j = 1; j + 1 < p.size(); ++j) {
    if (g.has_edge(p[j - 1], p[j + 1])) continue;
    PrimitivePath face;
    face.reserve(p.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i != j) face.push_back(p[i]);
    out.push_back({std::move(face), j % 2 == 0 ? 1 : -1});
  }
  return out;
}

bool in_omega(const Digraph& g, const PathVector& p) {
  for (const auto& [path, c] : p.terms())
    if (!is_regular(path) || !is_allowed(g, path)) return false;
  const PathVector faces = boundary(p);
  for (const auto& [face, c] : faces.terms())
    if (!is_allowed(g, face)) return false;
  return true;
}

PathVector OmegaModule::element(std::size_t j) const {
  PathVector out;
  for (std::size_t i = 0; i < allowed.size(); ++i)
    if (basis(i, j) != 0) out.add(allowed[i], basis(i, j));
  return out;
}

IntMatrix omega_block_basis(const Digraph& g, const std::vector<PrimitivePath>& paths) {
  const std::size_t m = paths.size();
  std::map<PrimitivePath, std::size_t> face_index;
  std::vector<std::vector<std::pair<std::size_t, int>>> path_faces(m);
  for (std::size_t j = 0; j < m; ++j)
    for (auto& f : non_allowed_faces(g, paths[j])) {
      auto [it, inserted] = face_index.try_emplace(std::move(f.path), face_index.size());
      path_faces[j].emplace_back(it->second, f.sign);
    }
  if (face_index.empty()) return IntMatrix::identity(m);

  // Union-find over paths that share a non-allowed face.
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

  std::vector<std::vector<Integer>> columns;
  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t j = 0; j < m; ++j) {
    if (path_faces[j].empty()) {
      std::vector<Integer> e(m);
      e[j] = 1;
      columns.push_back(std::move(e));
    } else {
      components[find(j)].push_back(j);
    }
  }
  for (const auto& [root, members] : components) {
    std::map<std::size_t, std::size_t> local_face;
    for (std::size_t j : members)
      for (const auto& [f, s] : path_faces[j]) local_face.try_emplace(f, local_face.size());
    IntMatrix constraints(local_face.size(), members.size());
    for (std::size_t c = 0; c < members.size(); ++c)
      for (const auto& [f, s] : path_faces[members[c]]) constraints(local_face[f], c) += s;
    const IntMatrix kernel = integer_kernel_basis(constraints);
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
      std::vector<Integer> col(m);
      for (std::size_t r = 0; r < members.size(); ++r) col[members[r]] = kernel(r, c);
      columns.push_back(std::move(col));
    }
  }
  if (columns.empty()) return IntMatrix(m, 0);
  return hermite_normal_form(IntMatrix::from_columns(m, columns));
}

OmegaModule omega(const Digraph& g, std::size_t k) {
  OmegaModule out;
  out.degree = k;
  out.allowed = allowed_paths(g, k);
  std::map<PrimitivePath, std::size_t> position;
  for (std::size_t i = 0; i < out.allowed.size(); ++i) position.emplace(out.allowed[i], i);

  std::vector<std::vector<Integer>> columns;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    std::map<VertexId, std::vector<PrimitivePath>> by_end;
    for (auto& p : allowed_paths_from(g, k, s)) by_end[p.back()].push_back(std::move(p));
    for (const auto& [e, paths] : by_end) {
      const IntMatrix block = omega_block_basis(g, paths);
      for (std::size_t c = 0; c < block.cols(); ++c) {
        std::vector<Integer> col(out.allowed.size());
        for (std::size_t r = 0; r < paths.size(); ++r) col[position.at(paths[r])] = block(r, c);
        columns.push_back(std::move(col));
      }
    }
  }
  out.basis = IntMatrix::from_columns(out.allowed.size(), columns);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Subgraph build_subgraph(const Digraph& g, const std::set<VertexId>& vertices, const std::set<Edge>& edges) {
  std::vector<std::string> names;
  for (VertexId v : vertices) names.push_back(g.name(v));
  std::vector<std::pair<std::string, std::string>> named;
  for (const auto& [u, v] : edges) named.emplace_back(g.name(u), g.name(v));
  Subgraph out{Digraph(names, named), {vertices.begin(), vertices.end()}};
  return out;
}

void collect_support(const Digraph& g, const PathVector& p, std::set<VertexId>& vertices,
                     std::set<Edge>& edges) {
  for (const auto& [path, c] : p.terms()) {
    if (!is_allowed(g, path))
      throw domain_error("path " + path_label(g, path) + " is not allowed in the digraph");
    vertices.insert(path.begin(), path.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace(path[i], path[i + 1]);
  }
}

}  // namespace

Subgraph support_subgraph(const Digraph& g, const PathVector& p) {
  std::set<VertexId> vertices;
  std::set<Edge> edges;
  collect_support(g, p, vertices, edges);
  return build_subgraph(g, vertices, edges);
}

Subgraph invariance_subgraph(const Digraph& g, const PathVector& p) {
  if (!in_omega(g, p)) throw domain_error("path is not boundary-invariant: " + path_label(g, p));
  std::set<VertexId> vertices;
  std::set<Edge> edges;
  collect_support(g, p, vertices, edges);
  collect_support(g, boundary(p), vertices, edges);
  return build_subgraph(g, vertices, edges);
}

PathVector push_forward(const PathVector& p, std::span<const VertexId> vertex_map) {
  PathVector out;
  for (const auto& [path, c] : p.terms()) {
    PrimitivePath image;
    image.reserve(path.size());
    for (VertexId v : path) image.push_back(vertex_map[v]);
    if (is_regular(image)) out.add(image, c);
  }
  return out;
}

std::string path_label(const Digraph& g, const PrimitivePath& p) {
  bool short_names = true;
  for (VertexId v : p)
    if (g.name(v).size() != 1) short_names = false;
  std::string out;
  if (short_names) {
    for (VertexId v : p) out += g.name(v);
    return out;
  }
  out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += g.name(p[i]);
  }
  return out + ")";
}

std::string path_label(const Digraph& g, const PathVector& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [path, c] : p.terms()) {
    const Integer mag = abs_value(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag << '*';
    os << path_label(g, path);
    first = false;
  }
  return os.str();
}

}  // namespace pathcell
