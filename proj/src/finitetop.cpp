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

#include "pathcell/finitetop.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pathcell/error.hpp"

namespace pathcell {

namespace {

bool subset_of(const std::vector<VertexId>& small, const std::vector<VertexId>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Component index (0-based, ordered by least point) of each point of U.
std::vector<std::size_t> component_labels(const FiniteSpace& s, const PointSet& u, std::size_t& count) {
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < u.size(); ++i) local.emplace(u[i], i);
  std::vector<std::size_t> parent(u.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t y : s.min_open[u[i]]) {
      auto it = local.find(y);
      if (it == local.end()) continue;
      const std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::size_t> root_label;
  std::vector<std::size_t> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto [it, inserted] = root_label.try_emplace(find(i), root_label.size());
    out[i] = it->second;
  }
  count = root_label.size();
  return out;
}

}  // namespace

bool FiniteSpace::is_open(const PointSet& u) const {
  for (std::size_t x : u)
    for (std::size_t y : min_open.at(x))
      if (!std::binary_search(u.begin(), u.end(), y)) return false;
  return true;
}

PointSet FiniteSpace::open_hull(const PointSet& points) const {
  std::set<std::size_t> out;
  for (std::size_t x : points) out.insert(min_open.at(x).begin(), min_open.at(x).end());
  return {out.begin(), out.end()};
}

PointSet FiniteSpace::all_points() const {
  PointSet all(size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

void verify_space(const FiniteSpace& s) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    const PointSet& u = s.min_open[x];
    if (!std::binary_search(u.begin(), u.end(), x))
      throw invariant_error("minimal open set of " + s.labels[x] + " misses the point");
    for (std::size_t y : u)
      if (!std::includes(u.begin(), u.end(), s.min_open[y].begin(), s.min_open[y].end()))
        throw invariant_error("specialization is not transitive at " + s.labels[x] + " -> " + s.labels[y]);
    for (const auto& [y, c] : s.faces[x])
      if (!std::binary_search(u.begin(), u.end(), y) || s.grades[y] + 1 != s.grades[x])
        throw invariant_error("face " + s.labels[y] + " of " + s.labels[x] + " is not in its minimal open set");
  }
}

PointSet intersect(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FiniteSpace clique_space(const Graph& g) {
  FiniteSpace s;
  const auto cliques = enumerate_cliques(g);
  const auto maximal = maximal_cliques(g);
  std::map<std::vector<VertexId>, std::size_t> index;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    index.emplace(cliques[i], i);
    std::string label = "{";
    for (std::size_t j = 0; j < cliques[i].size(); ++j) label += (j ? "," : "") + g.name(cliques[i][j]);
    s.labels.push_back(label + "}");
    s.grades.push_back(cliques[i].size() - 1);
  }
  s.faces.resize(cliques.size());
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const auto& x = cliques[i];
    std::vector<VertexId> meet;
    bool first = true;
    for (const auto& m : maximal) {
      if (!subset_of(x, m)) continue;
      if (first) {
        meet = m;
        first = false;
      } else {
        std::vector<VertexId> t;
        std::set_intersection(meet.begin(), meet.end(), m.begin(), m.end(), std::back_inserter(t));
        meet = std::move(t);
      }
    }
    for (std::size_t a = 0; a < meet.size(); ++a)
      for (std::size_t b = a + 1; b < meet.size(); ++b)
        if (!g.has_edge(meet[a], meet[b]))
          throw invariant_error("intersection of maximal cliques containing " + s.labels[i] + " is not complete");
    PointSet open;
    for (std::size_t j = 0; j < cliques.size(); ++j)
      if (subset_of(cliques[j], meet)) open.push_back(j);
    s.min_open.push_back(std::move(open));
    for (std::size_t del = 0; x.size() > 1 && del < x.size(); ++del) {
      std::vector<VertexId> f = x;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(del));
      s.faces[i].emplace_back(index.at(f), del % 2 == 0 ? 1 : -1);
    }
  }
  // The minimal open set must also be the intersection of the unit balls
  // containing the point.
  const auto balls = unit_balls(g, s);
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    std::optional<PointSet> meet;
    for (const auto& b : balls) {
      if (!std::binary_search(b.begin(), b.end(), i)) continue;
      meet = meet ? intersect(*meet, b) : b;
    }
    if (!meet || *meet != s.min_open[i])
      throw invariant_error("unit balls do not cut out the minimal open set of " + s.labels[i]);
  }
  verify_space(s);
  return s;
}

std::vector<PointSet> unit_balls(const Graph& g, const FiniteSpace& space) {
  // Clique labels are not parsed back; cliques are re-enumerated in the same order.
  const auto cliques = enumerate_cliques(g);
  if (cliques.size() != space.size()) throw invalid_argument("space is not the clique space of this graph");
  std::vector<PointSet> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> ball = g.neighbors(v);
    ball.push_back(v);
    std::sort(ball.begin(), ball.end());
    PointSet b;
    for (std::size_t j = 0; j < cliques.size(); ++j)
      if (subset_of(cliques[j], ball)) b.push_back(j);
    out.push_back(std::move(b));
  }
  return out;
}

FiniteSpace path_space(const MinimalBasis& basis) {
  FiniteSpace s;
  const Digraph& g = basis.digraph();
  std::vector<std::size_t> offset;
  for (std::size_t k = 0; k < basis.degree_count(); ++k) {
    offset.push_back(s.size());
    for (const auto& e : basis.elements(k)) {
      s.labels.push_back(path_label(g, e.path));
      s.grades.push_back(k);
    }
  }
  const std::size_t n = s.size();
  s.faces.resize(n);
  std::vector<std::set<std::size_t>> summands(n);
  for (std::size_t k = 0; k < basis.degree_count(); ++k)
    for (std::size_t j = 0; j < basis.rank(k); ++j) {
      const std::size_t x = offset[k] + j;
      const PathVector& p = basis.elements(k)[j].path;
      if (k > 0) {
        const auto y = basis.decompose(k - 1, boundary(p));
        for (std::size_t i = 0; i < y.size(); ++i)
          if (y[i] != 0) s.faces[x].emplace_back(offset[k - 1] + i, y[i]);
      }
      const Subgraph sub = invariance_subgraph(g, p);
      for (std::size_t d = 0; d < sub.graph.vertex_count() && d < basis.degree_count(); ++d) {
        const OmegaModule om = omega(sub.graph, d);
        for (std::size_t c = 0; c < om.rank(); ++c) {
          const PathVector lifted = push_forward(om.element(c), sub.to_parent);
          const auto y = basis.decompose(d, lifted);
          for (std::size_t i = 0; i < y.size(); ++i)
            if (y[i] != 0) summands[x].insert(offset[d] + i);
        }
      }
      summands[x].insert(x);
    }
  for (std::size_t x = 0; x < n; ++x) {
    std::set<std::size_t> seen{x};
    std::vector<std::size_t> stack{x};
    while (!stack.empty()) {
      const std::size_t y = stack.back();
      stack.pop_back();
      for (std::size_t z : summands[y])
        if (seen.insert(z).second) stack.push_back(z);
    }
    s.min_open.emplace_back(seen.begin(), seen.end());
  }
  verify_space(s);
  return s;
}

bool basis_of_topology_check(const FiniteSpace& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const PointSet meet = intersect(s.min_open[a], s.min_open[b]);
      if (s.open_hull(meet) != meet) return false;
    }
  return true;
}

HomologyResult flasque_resolution_cohomology(const FiniteSpace& s, const PointSet& u, Coefficients ring) {
  if (!std::is_sorted(u.begin(), u.end()) || !s.is_open(u)) throw domain_error("point set is not open");
  ChainComplex c;
  std::map<std::size_t, std::size_t> local;
  for (std::size_t x : u) {
    const std::size_t k = s.grades[x];
    if (c.labels.size() <= k) c.labels.resize(k + 1);
    local[x] = c.labels[k].size();
    c.labels[k].push_back(s.labels[x]);
  }
  if (c.labels.empty()) c.labels.resize(1);
  for (std::size_t k = 0; k < c.labels.size(); ++k)
    c.boundaries.emplace_back(k == 0 ? 0 : c.labels[k - 1].size(), c.labels[k].size());
  for (std::size_t x : u)
    for (const auto& [y, coef] : s.faces[x]) c.boundaries[s.grades[x]].add(local.at(y), local.at(x), coef);
  c.verify();
  return cohomology(c, ring);
}

HomologyResult flasque_resolution_cohomology(const FiniteSpace& s, Coefficients ring) {
  return flasque_resolution_cohomology(s, s.all_points(), ring);
}

std::size_t components(const FiniteSpace& s, const PointSet& u) {
  if (!s.is_open(u)) throw domain_error("point set is not open");
  std::size_t count = 0;
  component_labels(s, u, count);
  return count;
}

void validate_cover(const FiniteSpace& s, const std::vector<PointSet>& cover) {
  std::vector<bool> covered(s.size(), false);
  for (const auto& u : cover) {
    if (!std::is_sorted(u.begin(), u.end()) || !s.is_open(u)) throw domain_error("cover member is not open");
    for (std::size_t x : u) covered[x] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw domain_error("cover does not cover the space");
}

namespace {

struct Nerve {
  std::vector<std::vector<std::vector<std::size_t>>> tuples;  // by degree
  std::vector<std::vector<PointSet>> sets;
};

Nerve build_nerve(const std::vector<PointSet>& cover) {
  Nerve n;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from, const PointSet& meet) -> void {
    for (std::size_t i = from; i < cover.size(); ++i) {
      PointSet next = cur.empty() ? cover[i] : intersect(meet, cover[i]);
      if (next.empty()) continue;
      cur.push_back(i);
      const std::size_t k = cur.size() - 1;
      if (n.tuples.size() <= k) {
        n.tuples.resize(k + 1);
        n.sets.resize(k + 1);
      }
      n.tuples[k].push_back(cur);
      n.sets[k].push_back(next);
      self(self, i + 1, next);
      cur.pop_back();
    }
  };
  rec(rec, 0, {});
  // Lexicographic order within each degree.
  for (std::size_t k = 0; k < n.tuples.size(); ++k) {
    std::vector<std::size_t> order(n.tuples[k].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return n.tuples[k][a] < n.tuples[k][b]; });
    std::vector<std::vector<std::size_t>> t;
    std::vector<PointSet> s;
    for (std::size_t i : order) {
      t.push_back(n.tuples[k][i]);
      s.push_back(n.sets[k][i]);
    }
    n.tuples[k] = std::move(t);
    n.sets[k] = std::move(s);
  }
  return n;
}

}  // namespace

HomologyResult cech_cohomology(const FiniteSpace& s, const std::vector<PointSet>& cover, Coefficients ring) {
  validate_cover(s, cover);
  const Nerve nerve = build_nerve(cover);
  ChainComplex c;
  std::vector<std::vector<std::size_t>> first;            // per degree, per tuple: first column
  std::vector<std::vector<std::vector<std::size_t>>> lab;  // per degree, per tuple: component of each point
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> where(nerve.tuples.size());
  for (std::size_t k = 0; k < nerve.tuples.size(); ++k) {
    std::vector<std::string> labels;
    first.emplace_back();
    lab.emplace_back();
    for (std::size_t t = 0; t < nerve.tuples[k].size(); ++t) {
      std::size_t count = 0;
      lab[k].push_back(component_labels(s, nerve.sets[k][t], count));
      first[k].push_back(labels.size());
      where[k].emplace(nerve.tuples[k][t], t);
      std::string name;
      for (std::size_t i : nerve.tuples[k][t]) name += (name.empty() ? "" : ",") + std::to_string(i);
      for (std::size_t comp = 0; comp < count; ++comp) labels.push_back("U" + name + "#" + std::to_string(comp));
    }
    c.labels.push_back(std::move(labels));
  }
  if (c.labels.empty()) c.labels.resize(1);
  for (std::size_t k = 0; k < c.labels.size(); ++k)
    c.boundaries.emplace_back(k == 0 ? 0 : c.labels[k - 1].size(), c.labels[k].size());
  for (std::size_t k = 1; k < nerve.tuples.size(); ++k)
    for (std::size_t t = 0; t < nerve.tuples[k].size(); ++t) {
      const auto& tuple = nerve.tuples[k][t];
      const PointSet& small = nerve.sets[k][t];
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        std::vector<std::size_t> face = tuple;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        const std::size_t ft = where[k - 1].at(face);
        const PointSet& big = nerve.sets[k - 1][ft];
        // Each component of the smaller set lies in one component of the larger.
        std::map<std::size_t, std::size_t> seen;
        for (std::size_t i = 0; i < small.size(); ++i) {
          const std::size_t comp = lab[k][t][i];
          if (seen.count(comp)) continue;
          const std::size_t pos = static_cast<std::size_t>(std::lower_bound(big.begin(), big.end(), small[i]) - big.begin());
          seen.emplace(comp, lab[k - 1][ft][pos]);
        }
        for (const auto& [comp, bigcomp] : seen)
          c.boundaries[k].add(first[k - 1][ft] + bigcomp, first[k][t] + comp, j % 2 == 0 ? 1 : -1);
      }
    }
  c.verify();
  return cohomology(c, ring);
}

GoodCoverReport verify_good_cover(const FiniteSpace& s, const std::vector<PointSet>& cover) {
  validate_cover(s, cover);
  GoodCoverReport r;
  const Nerve nerve = build_nerve(cover);
  for (std::size_t k = 0; k < nerve.tuples.size(); ++k)
    for (std::size_t t = 0; t < nerve.tuples[k].size(); ++t) {
      const HomologyResult h = flasque_resolution_cohomology(s, nerve.sets[k][t], Coefficients::integers());
      bool ok = true;
      for (std::size_t d = 0; d < h.betti.size(); ++d)
        if ((d > 0 && h.betti[d] != 0) || !h.torsion[d].empty()) ok = false;
      if (!ok) {
        r.good = false;
        r.failing.push_back(nerve.tuples[k][t]);
      }
    }
  r.cech = cech_cohomology(s, cover, Coefficients::integers());
  r.sheaf = flasque_resolution_cohomology(s, Coefficients::integers());
  if (r.good) r.cech_matches_sheaf = same_invariants(r.cech, r.sheaf);
  return r;
}

PoincareReport poincare_check(const MinimalBasis& basis) {
  PoincareReport r;
  const Digraph& g = basis.digraph();
  for (std::size_t k = 1; k < basis.degree_count(); ++k)
    for (const auto& e : basis.elements(k)) {
      PoincareEntry entry;
      entry.label = path_label(g, e.path);
      entry.degree = k;
      const Subgraph sub = invariance_subgraph(g, e.path);
      entry.homology = path_homology(sub.graph, sub.graph.vertex_count(), Coefficients::integers());
      entry.passed = entry.homology.betti.front() == 1;
      for (std::size_t d = 0; d < entry.homology.betti.size(); ++d)
        if ((d > 0 && entry.homology.betti[d] != 0) || !entry.homology.torsion[d].empty()) entry.passed = false;
      if (!entry.passed) r.passed = false;
      r.entries.push_back(std::move(entry));
    }
  return r;
}

}  // namespace pathcell
