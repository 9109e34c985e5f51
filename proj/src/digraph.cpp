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

#include "pathcell/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "pathcell/error.hpp"

namespace pathcell {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

VertexId lookup(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name)
    throw invalid_argument("unknown vertex '" + std::string(name) + "'");
  return static_cast<VertexId>(it - names.begin());
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_name(const std::string& s) {
  return !s.empty() && s != "->" && s != "--" && s != "vertex";
}

struct EdgeList {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

EdgeList parse_edge_list(std::string_view text, std::string_view arrow, bool directed) {
  EdgeList out;
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() == 2 && tokens[0] == "vertex") {
      if (!valid_name(tokens[1])) throw ParseError(line_no, "invalid vertex name '" + tokens[1] + "'");
      out.vertices.push_back(tokens[1]);
    } else if (tokens.size() == 3 && tokens[1] == arrow) {
      const std::string& u = tokens[0];
      const std::string& v = tokens[2];
      if (!valid_name(u) || !valid_name(v)) throw ParseError(line_no, "invalid vertex name");
      if (u == v) throw ParseError(line_no, "self-loop on '" + u + "'");
      std::pair<std::string, std::string> key = directed ? std::make_pair(u, v) : std::make_pair(std::min(u, v), std::max(u, v));
      if (!seen.insert(key).second)
        throw ParseError(line_no, "duplicate edge " + u + " " + std::string(arrow) + " " + v);
      out.vertices.push_back(u);
      out.vertices.push_back(v);
      out.edges.emplace_back(u, v);
    } else {
      throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
    }
    if (end == text.size()) break;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Digraph::Digraph(std::vector<std::string> vertices,
                 const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(sorted_unique(std::move(vertices))) {
  out_.resize(names_.size());
  in_.resize(names_.size());
  for (const auto& [su, sv] : edges) {
    const VertexId u = lookup(names_, su);
    const VertexId v = lookup(names_, sv);
    if (u == v) throw invalid_argument("self-loop on '" + su + "'");
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw invalid_argument("duplicate edge");
  for (const auto& [u, v] : edges_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& l : in_) std::sort(l.begin(), l.end());
}

std::optional<VertexId> Digraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId Digraph::index(std::string_view name) const { return lookup(names_, name); }

bool Digraph::has_edge(VertexId u, VertexId v) const {
  const auto& l = out_[u];
  return std::binary_search(l.begin(), l.end(), v);
}

std::optional<std::size_t> Digraph::edge_index(VertexId u, VertexId v) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string Digraph::to_text() const {
  std::ostringstream os;
  std::vector<bool> touched(names_.size(), false);
  for (const auto& [u, v] : edges_) touched[u] = touched[v] = true;
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (!touched[v]) os << "vertex " << names_[v] << '\n';
  for (const auto& [u, v] : edges_) os << names_[u] << " -> " << names_[v] << '\n';
  return os.str();
}

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(sorted_unique(std::move(vertices))) {
  adj_.resize(names_.size());
  for (const auto& [su, sv] : edges) {
    VertexId u = lookup(names_, su);
    VertexId v = lookup(names_, sv);
    if (u == v) throw invalid_argument("self-loop on '" + su + "'");
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw invalid_argument("duplicate edge");
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& l : adj_) std::sort(l.begin(), l.end());
}

VertexId Graph::index(std::string_view name) const { return lookup(names_, name); }

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& l = adj_[u];
  return std::binary_search(l.begin(), l.end(), v);
}

std::string Graph::to_text() const {
  std::ostringstream os;
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (adj_[v].empty()) os << "vertex " << names_[v] << '\n';
  for (const auto& [u, v] : edges_) os << names_[u] << " -- " << names_[v] << '\n';
  return os.str();
}

Digraph parse_digraph(std::string_view text) {
  auto list = parse_edge_list(text, "->", true);
  return Digraph(std::move(list.vertices), list.edges);
}

Graph parse_graph(std::string_view text) {
  auto list = parse_edge_list(text, "--", false);
  return Graph(std::move(list.vertices), list.edges);
}

// ---------------------------------------------------------------------------

ProductDigraph indexed_product(const Digraph& g, const Digraph& h) {
  const std::size_t ng = g.vertex_count();
  const std::size_t nh = h.vertex_count();
  auto pair_name = [&](VertexId x, VertexId y) { return "(" + g.name(x) + "," + h.name(y) + ")"; };
  std::vector<std::string> names;
  names.reserve(ng * nh);
  for (VertexId x = 0; x < ng; ++x)
    for (VertexId y = 0; y < nh; ++y) names.push_back(pair_name(x, y));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [x, x2] : g.edges())
    for (VertexId y = 0; y < nh; ++y) edges.emplace_back(pair_name(x, y), pair_name(x2, y));
  for (VertexId x = 0; x < ng; ++x)
    for (const auto& [y, y2] : h.edges()) edges.emplace_back(pair_name(x, y), pair_name(x, y2));
  ProductDigraph out;
  out.graph = Digraph(names, edges);
  out.right_size = nh;
  out.index.resize(ng * nh);
  for (VertexId x = 0; x < ng; ++x)
    for (VertexId y = 0; y < nh; ++y) out.index[x * nh + y] = out.graph.index(pair_name(x, y));
  return out;
}

Digraph cartesian_product(const Digraph& g, const Digraph& h) { return indexed_product(g, h).graph; }

// ---------------------------------------------------------------------------

MorphismReport check_morphism(const DigraphMorphism& f) {
  const auto& map = f.vertex_map;
  if (map.size() != f.source.vertex_count())
    return {false, "vertex map has " + std::to_string(map.size()) + " entries, source has " +
                       std::to_string(f.source.vertex_count()) + " vertices"};
  for (std::size_t v = 0; v < map.size(); ++v)
    if (map[v] >= f.target.vertex_count())
      return {false, "image of '" + f.source.name(static_cast<VertexId>(v)) + "' is not a target vertex"};
  if (f.mode == MorphismMode::narrow) {
    std::vector<int> owner(f.target.vertex_count(), -1);
    for (std::size_t v = 0; v < map.size(); ++v) {
      if (owner[map[v]] >= 0)
        return {false, "not injective: '" + f.source.name(static_cast<VertexId>(owner[map[v]])) + "' and '" +
                           f.source.name(static_cast<VertexId>(v)) + "' map to '" + f.target.name(map[v]) + "'"};
      owner[map[v]] = static_cast<int>(v);
    }
  }
  for (const auto& [u, v] : f.source.edges()) {
    const VertexId fu = map[u];
    const VertexId fv = map[v];
    if (fu == fv && f.mode == MorphismMode::broad) continue;
    if (fu == fv || !f.target.has_edge(fu, fv))
      return {false, "edge " + f.source.name(u) + " -> " + f.source.name(v) + " maps to " +
                         f.target.name(fu) + " -> " + f.target.name(fv) + ", which is not an edge"};
  }
  return {};
}

namespace {

void require_compatible(const DigraphMorphism& f, const DigraphMorphism& g) {
  if (!(f.source == g.source) || !(f.target == g.target))
    throw invalid_argument("homotopy needs maps with the same source and target");
  for (const auto* m : {&f, &g}) {
    DigraphMorphism broad{m->source, m->target, m->vertex_map, MorphismMode::broad};
    auto report = check_morphism(broad);
    if (!report.valid) throw invalid_argument("not a digraph map: " + report.violation);
  }
}

bool step_valid(const DigraphMorphism& f, const DigraphMorphism& g) {
  for (bool forward : {true, false}) {
    Digraph interval({"0", "1"}, {forward ? std::make_pair(std::string("0"), std::string("1"))
                                           : std::make_pair(std::string("1"), std::string("0"))});
    ProductDigraph cyl = indexed_product(f.source, interval);
    std::vector<VertexId> map(cyl.graph.vertex_count());
    for (VertexId v = 0; v < f.source.vertex_count(); ++v) {
      map[cyl.at(v, 0)] = f.vertex_map[v];
      map[cyl.at(v, 1)] = g.vertex_map[v];
    }
    if (check_morphism({cyl.graph, f.target, std::move(map), MorphismMode::broad}).valid) return true;
  }
  return false;
}

}  // namespace

bool one_step_homotopic(const DigraphMorphism& f, const DigraphMorphism& g) {
  require_compatible(f, g);
  return step_valid(f, g);
}

bool homotopic(const DigraphMorphism& f, const DigraphMorphism& g, std::size_t vertex_bound) {
  require_compatible(f, g);
  if (f.source.vertex_count() > vertex_bound || f.target.vertex_count() > vertex_bound)
    throw invalid_argument("homotopy search is limited to digraphs with at most " +
                           std::to_string(vertex_bound) + " vertices");
  if (f.vertex_map == g.vertex_map) return true;
  const auto maps = enumerate_morphisms(f.source, f.target, MorphismMode::broad);
  std::map<std::vector<VertexId>, bool> visited;
  for (const auto& m : maps) visited[m] = false;
  std::deque<std::vector<VertexId>> queue{f.vertex_map};
  visited[f.vertex_map] = true;
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    DigraphMorphism a{f.source, f.target, cur, MorphismMode::broad};
    for (auto& [m, seen] : visited) {
      if (seen) continue;
      if (step_valid(a, {f.source, f.target, m, MorphismMode::broad})) {
        if (m == g.vertex_map) return true;
        seen = true;
        queue.push_back(m);
      }
    }
  }
  return false;
}

std::vector<std::vector<VertexId>> enumerate_morphisms(const Digraph& source, const Digraph& target,
                                                       MorphismMode mode) {
  const std::size_t n = source.vertex_count();
  const std::size_t m = target.vertex_count();
  std::vector<std::vector<VertexId>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (m == 0) return out;
  std::vector<VertexId> map(n);
  std::vector<bool> used(m, false);
  auto consistent = [&](VertexId v) {
    // Edges between v and already-assigned vertices (ids < v).
    for (VertexId w : source.out_neighbors(v))
      if (w < v) {
        if (map[v] == map[w] ? mode == MorphismMode::narrow : !target.has_edge(map[v], map[w])) return false;
      }
    for (VertexId w : source.in_neighbors(v))
      if (w < v) {
        if (map[w] == map[v] ? mode == MorphismMode::narrow : !target.has_edge(map[w], map[v])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, VertexId v) -> void {
    if (v == n) {
      out.push_back(map);
      return;
    }
    for (VertexId t = 0; t < m; ++t) {
      if (mode == MorphismMode::narrow && used[t]) continue;
      map[v] = t;
      if (!consistent(v)) continue;
      used[t] = true;
      self(self, v + 1);
      used[t] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<VertexId>> enumerate_cliques(const Graph& g, std::size_t max_size) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> cur;
  auto extend = [&](auto&& self, VertexId from) -> void {
    out.push_back(cur);
    if (cur.size() == max_size) return;
    for (VertexId v = from; v < g.vertex_count(); ++v) {
      if (!std::all_of(cur.begin(), cur.end(), [&](VertexId u) { return g.has_edge(u, v); })) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  if (max_size == 0) return out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    cur = {v};
    extend(extend, v + 1);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::vector<VertexId>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  for (auto& c : enumerate_cliques(g)) {
    bool maximal = true;
    for (VertexId v = 0; v < g.vertex_count() && maximal; ++v) {
      if (std::find(c.begin(), c.end(), v) != c.end()) continue;
      if (std::all_of(c.begin(), c.end(), [&](VertexId u) { return g.has_edge(u, v); })) maximal = false;
    }
    if (maximal) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pathcell
