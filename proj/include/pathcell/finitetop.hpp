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
#include <string>
#include <utility>
#include <vector>

#include "pathcell/digraph.hpp"
#include "pathcell/homology.hpp"
#include "pathcell/minimal.hpp"

namespace pathcell {

/// Sorted list of point indices.
using PointSet = std::vector<std::size_t>;

/// Finite topological space given by the minimal open set of each point,
/// together with the cochain differential used for its flasque resolution:
/// (df)(x) = sum over faces (y, c) of x of c * f(y).
struct FiniteSpace {
  std::vector<std::string> labels;
  std::vector<std::size_t> grades;
  std::vector<PointSet> min_open;  // contains the point itself
  std::vector<std::vector<std::pair<std::size_t, Integer>>> faces;

  std::size_t size() const noexcept { return labels.size(); }
  bool is_open(const PointSet& u) const;
  /// Smallest open set containing the given points.
  PointSet open_hull(const PointSet& points) const;
  PointSet all_points() const;
};

/// Throws an invariant error unless every min_open contains its point, the
/// specialization preorder is transitive, and faces of x lie in min_open(x).
void verify_space(const FiniteSpace& s);

/// Points are all cliques (in (size, lexicographic) order, grade = size - 1).
/// min_open(x) = cliques inside the intersection of the maximal cliques
/// containing x; the construction checks that this intersection is complete
/// and equals the intersection of the unit balls containing x.
FiniteSpace clique_space(const Graph& g);
/// Unit ball of v: cliques inside the closed neighbourhood of v. One per
/// vertex, in vertex order.
std::vector<PointSet> unit_balls(const Graph& g, const FiniteSpace& clique_space);

/// Points are the basis elements of all degrees, in basis order. U_P is the
/// closure of {P} under "Q has a nonzero coefficient in the decomposition of
/// some element of Omega(G_P)", where G_P is the invariance subgraph of P and
/// Omega(G_P) is spanned degree by degree by its kernel basis.
FiniteSpace path_space(const MinimalBasis& basis);

/// Every intersection of two minimal open sets is the union of the minimal
/// open sets of its points.
bool basis_of_topology_check(const FiniteSpace& s);

/// Cohomology of the cochain complex of functions on the points of the open
/// set U. Throws a domain error if U is not open.
HomologyResult flasque_resolution_cohomology(const FiniteSpace& s, const PointSet& u, Coefficients ring);
HomologyResult flasque_resolution_cohomology(const FiniteSpace& s, Coefficients ring);

/// Connected components of U under the symmetrized specialization relation.
std::size_t components(const FiniteSpace& s, const PointSet& u);

PointSet intersect(const PointSet& a, const PointSet& b);

/// Throws a domain error unless every member is open and the union covers
/// the space.
void validate_cover(const FiniteSpace& s, const std::vector<PointSet>& cover);

/// Cech cohomology of the constant sheaf: sections over U are functions on
/// the components of U, cochains live on strictly increasing index tuples
/// with nonempty intersection.
HomologyResult cech_cohomology(const FiniteSpace& s, const std::vector<PointSet>& cover, Coefficients ring);

struct GoodCoverReport {
  bool good = true;
  std::vector<std::vector<std::size_t>> failing;  // index tuples with nonzero higher cohomology
  HomologyResult cech;
  HomologyResult sheaf;
  /// Only set for good covers.
  std::optional<bool> cech_matches_sheaf;
};

GoodCoverReport verify_good_cover(const FiniteSpace& s, const std::vector<PointSet>& cover);

struct PoincareEntry {
  std::string label;
  std::size_t degree = 0;
  HomologyResult homology;  // integer path homology of G_P
  bool passed = false;
};

struct PoincareReport {
  bool passed = true;
  std::vector<PoincareEntry> entries;
};

/// For every basis element P of degree >= 1, G_P must have the integer path
/// homology of a point.
PoincareReport poincare_check(const MinimalBasis& basis);

}  // namespace pathcell
