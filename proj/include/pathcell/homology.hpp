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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathcell/digraph.hpp"
#include "pathcell/matrix.hpp"
#include "pathcell/minimal.hpp"
#include "pathcell/paths.hpp"

namespace pathcell {

enum class Ring { integers, rationals, mod_p };

struct Coefficients {
  Ring ring = Ring::integers;
  std::uint32_t prime = 0;  // only for mod_p

  static Coefficients integers() { return {Ring::integers, 0}; }
  static Coefficients rationals() { return {Ring::rationals, 0}; }
  /// Throws invalid_argument unless p is prime.
  static Coefficients mod(std::uint32_t p);
  /// "z", "q" or "zp".
  std::string tag() const;
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

bool is_prime(std::uint64_t n);

/// Free chain complex with boundaries[k] : Z^{n_k} -> Z^{n_{k-1}};
/// boundaries[0] is the 0 x n_0 matrix.
struct ChainComplex {
  std::vector<std::vector<std::string>> labels;
  std::vector<SparseIntMatrix> boundaries;

  std::size_t degree_count() const noexcept { return labels.size(); }
  std::size_t rank(std::size_t k) const { return k < labels.size() ? labels[k].size() : 0; }
  /// Throws an invariant error unless shapes agree and each composite
  /// boundary vanishes.
  void verify() const;
};

struct HomologyResult {
  Coefficients coefficients;
  std::vector<std::size_t> betti;
  /// Non-unit elementary divisors per degree; always empty over fields.
  std::vector<std::vector<Integer>> torsion;

  friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

/// Betti numbers and torsion in degrees 0 .. D, where D is the highest degree
/// <= max_degree with a nonzero chain group (degree 0 is always reported).
/// Degrees past the last stored boundary are treated as having zero boundary.
HomologyResult homology(const ChainComplex& c, Coefficients ring,
                        std::optional<std::size_t> max_degree = std::nullopt);
/// Cohomology of the dual complex. Over Z the torsion in degree k comes from
/// the boundary into degree k - 1.
HomologyResult cohomology(const ChainComplex& c, Coefficients ring,
                          std::optional<std::size_t> max_degree = std::nullopt);

/// True when two results agree after dropping trailing all-zero degrees.
bool same_invariants(const HomologyResult& a, const HomologyResult& b);

/// Chain complex of Omega in the given minimal basis; boundaries come from
/// decomposing the boundary of each basis element.
ChainComplex path_chain_complex(const MinimalBasis& basis);

/// Path homology in degrees 0 .. max_degree without building a minimal basis.
/// Omega is taken block by block as a saturated kernel, and boundary ranks
/// and divisors are read in A_{k-1} coordinates (Omega_{k-1} is a direct
/// summand there, so the invariants agree).
HomologyResult path_homology(const Digraph& g, std::size_t max_degree, Coefficients ring, unsigned threads = 1);
/// Ranks of Omega_0 .. Omega_max_degree (stops after the last nonempty A_k).
std::vector<std::size_t> omega_ranks(const Digraph& g, std::size_t max_degree);

/// Simplicial chain complex of the clique complex; simplices are cliques in
/// (size, lexicographic) order.
struct CliqueComplex {
  std::vector<std::vector<VertexId>> cliques;
  std::vector<std::vector<std::size_t>> by_degree;  // indices into cliques
  ChainComplex complex;
};
CliqueComplex clique_chain_complex(const Graph& g, std::size_t max_clique_size = SIZE_MAX);

/// maps[k] is the target_k x source_k matrix.
struct ChainMap {
  std::vector<IntMatrix> maps;
};

/// Throws an invariant error unless f commutes with the boundaries.
void verify_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& f);
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Matrix of Omega(f) in the given bases. Narrow maps always induce chain
/// maps. Broad maps are experimental and rejected unless enabled: terms whose
/// image repeats a vertex become zero, and an image outside Omega is a domain
/// error. A failure to commute with boundaries is an invariant error.
ChainMap induced_map(const DigraphMorphism& f, const MinimalBasis& source, const MinimalBasis& target,
                     bool experimental_broad = false);

/// f and g induce the same maps on homology with rational coefficients (and
/// hence on rational cohomology, its dual).
bool maps_agree_on_homology_q(const ChainComplex& source, const ChainComplex& target, const ChainMap& f,
                              const ChainMap& g);

struct LefschetzReport {
  Rational number;
  std::vector<Rational> homology_traces;  // trace on H_k(Q), equal to the trace on H^k(Q)
  std::vector<Integer> chain_traces;      // trace on the chain group of degree k
};

/// Lefschetz number of an endomorphism of a complex. The alternating chain
/// trace sum must equal the number (Hopf trace formula); a mismatch is an
/// invariant error.
LefschetzReport lefschetz(const ChainComplex& c, const ChainMap& f);
/// Path theory: f is a digraph endomorphism (broad maps follow induced_map).
LefschetzReport lefschetz_number(const DigraphMorphism& f, bool experimental_broad = false);
/// Clique theory: `automorphism` must be a graph automorphism.
LefschetzReport lefschetz_number(const Graph& g, std::span<const VertexId> automorphism);

/// Smallest clique mapped onto itself (as a set), in (size, lexicographic) order.
std::optional<std::vector<VertexId>> fixed_simplex_search(const Graph& g, std::span<const VertexId> automorphism);
/// Least vertex with f(v) = v.
std::optional<VertexId> fixed_vertex_search(const DigraphMorphism& f);

bool is_graph_automorphism(const Graph& g, std::span<const VertexId> map);
/// All automorphisms in lexicographic order of the image vector.
std::vector<std::vector<VertexId>> graph_automorphisms(const Graph& g);

/// Shuffle cross product in G□H. For primitive p (length r) and q (length s)
/// the terms are the staircase paths from (p0, q0) to (pr, qs), each signed by
/// (-1)^(number of (q-step, p-step) pairs in that order). The Leibniz rule
/// d(P x Q) = dP x Q + (-1)^|P| P x dQ is checked on every call.
PathVector cross_product(const PathVector& p, const PathVector& q, const ProductDigraph& product);

struct KunnethReport {
  std::vector<std::size_t> betti_left;
  std::vector<std::size_t> betti_right;
  std::vector<std::size_t> betti_product;
  std::vector<std::size_t> convolution;
  std::size_t max_degree = 0;
  bool betti_match = false;
  /// Cross products of factor basis elements lie in Omega of the product and
  /// are linearly independent there; unset when the check was skipped.
  std::optional<bool> cross_independent;
};

/// Compares rational Betti numbers of G□H with the convolution of the
/// factors' Betti numbers in degrees 0 .. max_degree (default: one past the
/// top degree of the convolution).
KunnethReport kunneth_check(const Digraph& g, const Digraph& h, std::optional<std::size_t> max_degree = std::nullopt,
                            bool check_cross = true);

}  // namespace pathcell
