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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pathcell/digraph.hpp"
#include "pathcell/matrix.hpp"
#include "pathcell/paths.hpp"

namespace pathcell {

struct BasisElement {
  PathVector path;
  VertexId start = 0;
  VertexId end = 0;
};

struct MinimalBasisOptions {
  /// Worker threads for the per-start-vertex enumeration. Results do not
  /// depend on this value.
  unsigned threads = 1;
  /// Run the greedy selection from the far end of the canonical order. Gives
  /// a second valid basis whenever a block has more minimal paths than rank.
  bool reverse_order = false;
};

/// Per-degree integral basis of Omega consisting of minimal paths.
///
/// Elements of degree k are grouped in (start, end) blocks; Omega_k splits as
/// the direct sum of these blocks, so decomposition is solved block by block.
class MinimalBasis {
 public:
  MinimalBasis() = default;

  /// Validates and indexes explicitly given elements (degree 0 first). Throws
  /// an invariant error unless every element is a minimal +-1 path with one
  /// start and one end vertex and each degree forms a Z-basis of Omega_k.
  static MinimalBasis from_elements(const Digraph& g, const std::vector<std::vector<PathVector>>& per_degree);

  const Digraph& digraph() const noexcept { return graph_; }
  /// Number of degrees stored (0 .. degree_count() - 1).
  std::size_t degree_count() const noexcept { return degrees_.size(); }
  std::size_t rank(std::size_t k) const { return k < degrees_.size() ? degrees_[k].elements.size() : 0; }
  const std::vector<BasisElement>& elements(std::size_t k) const { return degrees_.at(k).elements; }
  /// A_k in canonical order.
  const std::vector<PrimitivePath>& allowed(std::size_t k) const { return degrees_.at(k).allowed; }
  /// |A_k| x rank_k matrix of basis coordinates.
  IntMatrix coordinate_matrix(std::size_t k) const;

  /// Coordinates of a degree-k path in the basis; nullopt if P is not in the
  /// integer span.
  std::optional<std::vector<Integer>> try_decompose(std::size_t k, const PathVector& p) const;
  /// As try_decompose, but a path outside the span is an invariant failure.
  std::vector<Integer> decompose(std::size_t k, const PathVector& p) const;

 private:
  struct Block {
    VertexId start = 0;
    VertexId end = 0;
    std::vector<PrimitivePath> paths;  // allowed start->end paths, canonical order
    std::vector<std::size_t> members;  // element indices in this block
    LatticeSolver solver;
  };
  struct Degree {
    std::vector<BasisElement> elements;
    std::vector<PrimitivePath> allowed;
    std::vector<Block> blocks;
    std::map<std::pair<VertexId, VertexId>, std::size_t> block_index;
  };

  static Degree index_degree(const Digraph& g, std::size_t k, std::vector<BasisElement> elements);

  Digraph graph_;
  std::vector<Degree> degrees_;

  friend MinimalBasis minimal_basis(const Digraph& g, std::size_t max_k, const MinimalBasisOptions& options);
};

/// Definitional minimality: no nonzero P' != P, coefficient-wise dominated by
/// P with the same signs, lies in Omega. Throws a domain error if P is not in
/// Omega.
bool is_minimal(const Digraph& g, const PathVector& p);

/// All minimal elements of Omega_k whose terms run from s to e, normalized
/// (least term positive) and in canonical order.
std::vector<PathVector> minimal_paths_between(const Digraph& g, std::size_t k, VertexId s, VertexId e);

/// Integral bases of Omega_0 .. Omega_max_k made of minimal paths. Degrees
/// past the last nonempty A_k are dropped.
MinimalBasis minimal_basis(const Digraph& g, std::size_t max_k, const MinimalBasisOptions& options = {});

}  // namespace pathcell
