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

// Brute-force reference implementations used by the test suites. Nothing in
// here calls into the engine's linear algebra or path code; only the Digraph
// adjacency queries are shared.

#include <cstddef>
#include <vector>

#include "pathcell/digraph.hpp"
#include "pathcell/integer.hpp"

namespace oracle {

using pathcell::Integer;
using pathcell::Rational;
using Dense = std::vector<std::vector<Integer>>;  // row-major

/// Diagonal of the Smith normal form (nonzero entries, ascending by
/// divisibility), by repeated smallest-pivot elimination.
std::vector<Integer> smith_diagonal(Dense a);

/// Rank over Q by fraction-free Gaussian elimination.
std::size_t rank_q(const Dense& a);

/// Columns spanning the integer kernel of a (cols x nullity), by unimodular
/// column reduction.
Dense integer_kernel(const Dense& a, std::size_t cols);

struct PathHomology {
  std::vector<std::size_t> allowed;      // |A_k|, k = 0..top
  std::vector<std::size_t> omega_ranks;  // rank Omega_k, k = 0..top
  std::vector<std::size_t> betti;        // over Z, degrees 0..D
  std::vector<std::vector<Integer>> torsion;
  std::vector<std::size_t> betti_q;
};

/// Path homology with paths of pairwise distinct vertices. Degrees run to
/// max_degree, truncated after the last nonzero Omega.
PathHomology path_homology(const pathcell::Digraph& g, std::size_t max_degree);

/// Homology of an explicit chain complex given by dense boundary matrices
/// (boundaries[k] maps degree k to k-1; boundaries[0] has zero rows).
void complex_homology(const std::vector<std::size_t>& ranks, const std::vector<Dense>& boundaries,
                      std::vector<std::size_t>& betti, std::vector<std::vector<Integer>>& torsion);

using Term = std::pair<std::vector<pathcell::VertexId>, int>;

/// Minimal elements of Omega_k supported on s -> e paths, by enumerating all
/// {-1,0,1} coefficient vectors. Each is normalized so its lexicographically
/// first term is +1; the list is sorted.
std::vector<std::vector<Term>> minimal_paths_brute(const pathcell::Digraph& g, std::size_t k,
                                                   pathcell::VertexId s, pathcell::VertexId e);

/// Betti numbers of the clique complex of a graph over Q.
std::vector<std::size_t> clique_betti(const pathcell::Graph& g);

}  // namespace oracle
