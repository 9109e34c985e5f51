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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pathcell/digraph.hpp"
#include "pathcell/integer.hpp"
#include "pathcell/matrix.hpp"

namespace pathcell {

/// Vertex sequence i0 i1 ... ik; a k-path has k + 1 vertices.
using PrimitivePath = std::vector<VertexId>;

/// Formal integer combination of primitive paths of one common length, terms
/// kept in lexicographic order of their vertex sequences. Zero coefficients
/// are never stored.
class PathVector {
 public:
  using Terms = std::map<PrimitivePath, Integer>;

  PathVector() = default;
  explicit PathVector(PrimitivePath p, Integer c = 1);
  PathVector(std::initializer_list<std::pair<PrimitivePath, long long>> terms);

  void add(const PrimitivePath& p, const Integer& c);
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Path length k of the terms; nullopt for the zero vector.
  std::optional<std::size_t> degree() const;
  /// Sum of absolute coefficients.
  Integer width() const;
  Integer coefficient(const PrimitivePath& p) const;
  std::set<VertexId> start_vertices() const;
  std::set<VertexId> end_vertices() const;
  /// Sign-normalized copy: the lexicographically least term has coefficient > 0.
  PathVector normalized() const;

  PathVector& operator+=(const PathVector& o);
  PathVector& operator-=(const PathVector& o);
  PathVector& operator*=(const Integer& c);
  friend PathVector operator+(PathVector a, const PathVector& b) { return a += b; }
  friend PathVector operator-(PathVector a, const PathVector& b) { return a -= b; }
  friend PathVector operator-(PathVector a) { return a *= Integer(-1); }
  friend PathVector operator*(const Integer& c, PathVector a) { return a *= c; }
  friend bool operator==(const PathVector&, const PathVector&) = default;
  /// Canonical order: lexicographic on the (path, coefficient) term list.
  friend std::strong_ordering operator<=>(const PathVector& a, const PathVector& b);

 private:
  Terms terms_;
};

bool is_regular(const PrimitivePath& p);
/// Every consecutive pair is an edge (regularity is checked separately).
bool is_allowed(const Digraph& g, const PrimitivePath& p);

/// Alternating vertex deletion, extended linearly; faces need not be allowed.
PathVector boundary(const PathVector& p);

/// Regular allowed k-paths in canonical (lexicographic) order.
std::vector<PrimitivePath> allowed_paths(const Digraph& g, std::size_t k);
/// Regular allowed k-paths starting at `start`, in canonical order. Vertices
/// flagged in `forbidden` (if non-empty) are never visited.
std::vector<PrimitivePath> allowed_paths_from(const Digraph& g, std::size_t k, VertexId start,
                                              const std::vector<bool>& forbidden = {});

struct Face {
  PrimitivePath path;
  int sign = 1;  // (-1)^j for the deleted position j
};

/// Interior faces (delete i_j, 0 < j < k) that are not allowed. The end faces
/// of an allowed path are always allowed.
std::vector<Face> non_allowed_faces(const Digraph& g, const PrimitivePath& p);

/// P is a combination of regular allowed paths whose boundary is allowed.
bool in_omega(const Digraph& g, const PathVector& p);

/// Omega_k as a saturated sublattice of Z^{A_k}.
struct OmegaModule {
  std::size_t degree = 0;
  std::vector<PrimitivePath> allowed;  // A_k, canonical order
  IntMatrix basis;                     // |A_k| x rank; columns are a Z-basis of Omega_k

  std::size_t rank() const noexcept { return basis.cols(); }
  PathVector element(std::size_t j) const;
};

/// Omega_k computed block by block over (start, end) pairs: interior
/// deletions keep both endpoints, so the constraint matrix is block diagonal.
OmegaModule omega(const Digraph& g, std::size_t k);

/// Saturated Z-basis of the Omega_k elements built from the given paths,
/// which must share start and end vertex. Columns index into `paths`.
IntMatrix omega_block_basis(const Digraph& g, const std::vector<PrimitivePath>& paths);

/// A subgraph with the id of each of its vertices in the parent digraph.
struct Subgraph {
  Digraph graph;
  std::vector<VertexId> to_parent;
};

/// Union of the vertices and edges traversed by the terms of P.
Subgraph support_subgraph(const Digraph& g, const PathVector& p);
/// Smallest subgraph in which P is a boundary-invariant path: the support of
/// P together with the support of its boundary.
Subgraph invariance_subgraph(const Digraph& g, const PathVector& p);

/// Applies a vertex map term by term; terms whose image repeats a vertex
/// become zero.
PathVector push_forward(const PathVector& p, std::span<const VertexId> vertex_map);

std::string path_label(const Digraph& g, const PrimitivePath& p);
std::string path_label(const Digraph& g, const PathVector& p);

}  // namespace pathcell
