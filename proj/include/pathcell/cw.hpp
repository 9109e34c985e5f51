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
#include <string>
#include <utility>
#include <vector>

#include "pathcell/homology.hpp"
#include "pathcell/minimal.hpp"

namespace pathcell {

struct CWCell {
  std::size_t id = 0;
  std::size_t dim = 0;
  std::string label;
  PathVector path;
};

/// One cell per basis element; cell ids run through the degrees in basis
/// order.
struct CWComplexData {
  std::vector<CWCell> cells;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> boundary;  // per cell: (cell id, coefficient)

  /// Cellular chain complex; equal to path_chain_complex of the basis.
  ChainComplex chain_complex() const;
};

/// Throws an invariant error on a boundary coefficient other than +-1 or on a
/// nonzero boundary of a boundary.
CWComplexData build_cw(const MinimalBasis& basis);

struct SphereCheckReport {
  std::size_t cell = 0;
  std::size_t dim = 0;
  std::vector<std::size_t> closure;  // cell ids of the boundary closure
  HomologyResult closure_homology;
  bool passed = false;
};

/// Homology of the subcomplex generated by the boundary cells of `cell`
/// (closed under taking boundaries) must be that of a (dim-1)-sphere.
SphereCheckReport cell_boundary_sphere_check(const CWComplexData& cw, std::size_t cell);

/// Semi-simplicial complex on ordered vertex sequences; faces are obtained by
/// deleting one vertex.
struct DeltaComplex {
  std::vector<PrimitivePath> simplices;  // (dimension, lexicographic) order
  std::vector<std::vector<std::size_t>> by_degree;

  std::vector<PrimitivePath> maximal_simplices() const;
  ChainComplex chain_complex(const Digraph& g) const;
};

/// Every primitive term of every basis element together with all of its
/// vertex-deletion subsequences.
DeltaComplex subdivide_to_delta(const MinimalBasis& basis);

struct DeltaCheckReport {
  HomologyResult path;
  HomologyResult delta;
  bool equal = false;
};

/// Integer homology of the subdivision against path homology.
DeltaCheckReport delta_vs_path_check(const MinimalBasis& basis);

}  // namespace pathcell
