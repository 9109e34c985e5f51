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

#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "pathcell/corpus.hpp"
#include "pathcell/cw.hpp"
#include "pathcell/error.hpp"

using namespace pathcell;

TEST_CASE("cells of the diamond") {
  const MinimalBasis b = minimal_basis(parse_digraph(test::kDiamond), 3);
  const CWComplexData cw = build_cw(b);
  std::vector<std::size_t> per_dim(3);
  for (const CWCell& c : cw.cells) ++per_dim.at(c.dim);
  CHECK(per_dim == std::vector<std::size_t>{4, 4, 1});
  for (std::size_t i = 0; i < cw.cells.size(); ++i) CHECK(cw.cells[i].id == i);
  const CWCell& top = cw.cells.back();
  CHECK(top.dim == 2);
  CHECK(cw.boundary[top.id].size() == 4);
  for (const CWCell& c : cw.cells)
    if (c.dim == 0) CHECK(cw.boundary[c.id].empty());
}

TEST_CASE("cellular chains equal path chains") {
  for (const Digraph& g : digraph_corpus(4)) {
    const MinimalBasis b = minimal_basis(g, g.vertex_count() - 1);
    const ChainComplex a = build_cw(b).chain_complex();
    const ChainComplex p = path_chain_complex(b);
    // The cellular complex stops at the top nonempty degree.
    CHECK(a.degree_count() <= p.degree_count());
    for (std::size_t k = a.degree_count(); k < p.degree_count(); ++k) CHECK(p.rank(k) == 0);
    for (std::size_t k = 0; k < a.degree_count(); ++k) {
      CHECK(a.rank(k) == p.rank(k));
      CHECK(a.boundaries[k].to_dense() == p.boundaries[k].to_dense());
    }
  }
}

TEST_CASE("cell boundaries are homology spheres") {
  for (const char* text : {test::kDiamond, test::kTriangle, test::kAltSquare, test::kCycle3}) {
    const CWComplexData cw = build_cw(minimal_basis(parse_digraph(text), 3));
    for (const CWCell& c : cw.cells) {
      if (c.dim == 0) continue;
      const SphereCheckReport r = cell_boundary_sphere_check(cw, c.id);
      CHECK(r.passed);
      CHECK(r.dim == c.dim);
      // Reduced homology of S^{d-1}: one extra class in degree 0 for d = 1.
      std::vector<std::size_t> expected(c.dim, 0);
      expected[0] += 1;
      expected[c.dim - 1] += 1;
      CHECK(r.closure_homology.betti == expected);
    }
  }
}

TEST_CASE("a vertex is not a sphere boundary") {
  const CWComplexData cw = build_cw(minimal_basis(parse_digraph(test::kInterval), 1));
  CHECK(cw.cells[0].dim == 0);
  CHECK_THROWS_AS(cell_boundary_sphere_check(cw, 0), Error);
}

TEST_CASE("delta subdivision") {
  SUBCASE("diamond splits into two triangles") {
    const DeltaComplex d = subdivide_to_delta(minimal_basis(parse_digraph(test::kDiamond), 3));
    CHECK(d.maximal_simplices().size() == 2);
    for (const auto& s : d.maximal_simplices()) CHECK(s.size() == 3);
  }
  SUBCASE("triangle stays a triangle") {
    const Digraph t = parse_digraph(test::kTriangle);
    const DeltaComplex d = subdivide_to_delta(minimal_basis(t, 3));
    REQUIRE(d.maximal_simplices().size() == 1);
    CHECK(d.maximal_simplices()[0] == test::path(t, "abc"));
  }
  SUBCASE("homology agrees with path homology") {
    for (const Digraph& g : digraph_corpus(4)) {
      const DeltaCheckReport r = delta_vs_path_check(minimal_basis(g, g.vertex_count() - 1));
      CHECK(r.equal);
      CHECK(same_invariants(r.path, r.delta));
    }
    for (std::size_t n = 3; n <= 6; ++n) CHECK(delta_vs_path_check(minimal_basis(directed_cycle(n), n)).equal);
  }
}
