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

#include "pathcell/cw.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pathcell/error.hpp"

namespace pathcell {

ChainComplex CWComplexData::chain_complex() const {
  ChainComplex c;
  std::vector<std::size_t> local(cells.size());
  for (const auto& cell : cells) {
    if (c.labels.size() <= cell.dim) c.labels.resize(cell.dim + 1);
    local[cell.id] = c.labels[cell.dim].size();
    c.labels[cell.dim].push_back(cell.label);
  }
  if (c.labels.empty()) c.labels.resize(1);
  for (std::size_t k = 0; k < c.labels.size(); ++k)
    c.boundaries.emplace_back(k == 0 ? 0 : c.labels[k - 1].size(), c.labels[k].size());
  for (const auto& cell : cells)
    for (const auto& [face, coef] : boundary[cell.id]) c.boundaries[cell.dim].add(local[face], local[cell.id], coef);
  return c;
}

CWComplexData build_cw(const MinimalBasis& basis) {
  CWComplexData cw;
  const Digraph& g = basis.digraph();
  std::vector<std::size_t> first(basis.degree_count() + 1, 0);
  for (std::size_t k = 0; k < basis.degree_count(); ++k) {
    first[k] = cw.cells.size();
    for (const auto& e : basis.elements(k))
      cw.cells.push_back({cw.cells.size(), k, path_label(g, e.path), e.path});
  }
  cw.boundary.resize(cw.cells.size());
  for (auto& cell : cw.cells) {
    if (cell.dim == 0) continue;
    const auto y = basis.decompose(cell.dim - 1, boundary(cell.path));
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == 0) continue;
      if (y[i] != 1 && y[i] != -1)
        throw invariant_error("cell " + cell.label + " has boundary coefficient " + y[i].str() + " on " +
                              cw.cells[first[cell.dim - 1] + i].label);
      cw.boundary[cell.id].emplace_back(first[cell.dim - 1] + i, y[i]);
    }
  }
  cw.chain_complex().verify();
  return cw;
}

SphereCheckReport cell_boundary_sphere_check(const CWComplexData& cw, std::size_t cell) {
  SphereCheckReport r;
  r.cell = cell;
  r.dim = cw.cells.at(cell).dim;
  if (r.dim == 0) throw invalid_argument("sphere check needs a cell of dimension >= 1");
  std::set<std::size_t> closure;
  std::vector<std::size_t> stack;
  for (const auto& [face, c] : cw.boundary[cell]) stack.push_back(face);
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    if (!closure.insert(x).second) continue;
    for (const auto& [face, c] : cw.boundary[x]) stack.push_back(face);
  }
  r.closure.assign(closure.begin(), closure.end());

  CWComplexData sub;
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t id : r.closure) {
    renumber[id] = sub.cells.size();
    CWCell c = cw.cells[id];
    c.id = sub.cells.size();
    sub.cells.push_back(std::move(c));
  }
  for (std::size_t id : r.closure) {
    std::vector<std::pair<std::size_t, Integer>> b;
    for (const auto& [face, c] : cw.boundary[id]) b.emplace_back(renumber.at(face), c);
    sub.boundary.push_back(std::move(b));
  }
  r.closure_homology = homology(sub.chain_complex(), Coefficients::integers());

  HomologyResult sphere;
  sphere.coefficients = Coefficients::integers();
  if (r.dim == 1) {
    sphere.betti = {2};
  } else {
    sphere.betti.assign(r.dim, 0);
    sphere.betti.front() = 1;
    sphere.betti.back() = 1;
  }
  sphere.torsion.assign(sphere.betti.size(), {});
  r.passed = same_invariants(r.closure_homology, sphere);
  return r;
}

std::vector<PrimitivePath> DeltaComplex::maximal_simplices() const {
  std::set<PrimitivePath> faces;
  for (const auto& s : simplices)
    for (std::size_t j = 0; s.size() > 1 && j < s.size(); ++j) {
      PrimitivePath f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
      faces.insert(std::move(f));
    }
  std::vector<PrimitivePath> out;
  for (const auto& s : simplices)
    if (!faces.count(s)) out.push_back(s);
  return out;
}

ChainComplex DeltaComplex::chain_complex(const Digraph& g) const {
  ChainComplex c;
  std::map<PrimitivePath, std::size_t> position;
  for (const auto& deg : by_degree)
    for (std::size_t j = 0; j < deg.size(); ++j) position.emplace(simplices[deg[j]], j);
  for (std::size_t k = 0; k < std::max<std::size_t>(by_degree.size(), 1); ++k) {
    const std::size_t n = k < by_degree.size() ? by_degree[k].size() : 0;
    std::vector<std::string> labels;
    SparseIntMatrix d(k == 0 ? 0 : by_degree[k - 1].size(), n);
    for (std::size_t j = 0; j < n; ++j) {
      const PrimitivePath& s = simplices[by_degree[k][j]];
      labels.push_back(path_label(g, s));
      for (std::size_t del = 0; k > 0 && del < s.size(); ++del) {
        PrimitivePath f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(del));
        d.add(position.at(f), j, del % 2 == 0 ? 1 : -1);
      }
    }
    c.labels.push_back(std::move(labels));
    c.boundaries.push_back(std::move(d));
  }
  c.verify();
  return c;
}

DeltaComplex subdivide_to_delta(const MinimalBasis& basis) {
  std::set<PrimitivePath> all;
  std::vector<PrimitivePath> stack;
  for (std::size_t k = 0; k < basis.degree_count(); ++k)
    for (const auto& e : basis.elements(k))
      for (const auto& [p, c] : e.path.terms()) stack.push_back(p);
  while (!stack.empty()) {
    PrimitivePath s = std::move(stack.back());
    stack.pop_back();
    if (all.count(s)) continue;
    for (std::size_t j = 0; s.size() > 1 && j < s.size(); ++j) {
      PrimitivePath f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
      stack.push_back(std::move(f));
    }
    all.insert(std::move(s));
  }
  DeltaComplex dc;
  dc.simplices.assign(all.begin(), all.end());
  std::stable_sort(dc.simplices.begin(), dc.simplices.end(),
                   [](const PrimitivePath& a, const PrimitivePath& b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i < dc.simplices.size(); ++i) {
    const std::size_t k = dc.simplices[i].size() - 1;
    if (dc.by_degree.size() <= k) dc.by_degree.resize(k + 1);
    dc.by_degree[k].push_back(i);
  }
  return dc;
}

DeltaCheckReport delta_vs_path_check(const MinimalBasis& basis) {
  DeltaCheckReport r;
  r.path = homology(path_chain_complex(basis), Coefficients::integers());
  r.delta = homology(subdivide_to_delta(basis).chain_complex(basis.digraph()), Coefficients::integers());
  r.equal = same_invariants(r.path, r.delta);
  return r;
}

}  // namespace pathcell
