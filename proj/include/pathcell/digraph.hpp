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
#include <string_view>
#include <utility>
#include <vector>

namespace pathcell {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Finite simple digraph. Vertices are opaque names kept in lexicographic
/// order; a vertex's id is its rank in that order, so every enumeration that
/// walks ids is canonical.
class Digraph {
 public:
  Digraph() = default;
  /// Validates: endpoints declared, no self-loops, no duplicate edges.
  Digraph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId index(std::string_view name) const;

  bool has_edge(VertexId u, VertexId v) const;
  const std::vector<VertexId>& out_neighbors(VertexId v) const { return out_[v]; }
  const std::vector<VertexId>& in_neighbors(VertexId v) const { return in_[v]; }
  /// Edges sorted lexicographically by (source, target) id.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::optional<std::size_t> edge_index(VertexId u, VertexId v) const;

  /// Serializes in the edge-list format accepted by parse_digraph.
  std::string to_text() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<Edge> edges_;
};

/// Finite simple undirected graph; edges stored as (u, v) with u < v.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  VertexId index(std::string_view name) const;
  bool has_edge(VertexId u, VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::string to_text() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Edge> edges_;
};

/// All cliques (complete subgraphs, including single vertices) with at most
/// `max_size` vertices, each sorted, in (size, lexicographic) order.
std::vector<std::vector<VertexId>> enumerate_cliques(const Graph& g, std::size_t max_size = SIZE_MAX);
/// Inclusion-maximal cliques in lexicographic order.
std::vector<std::vector<VertexId>> maximal_cliques(const Graph& g);

/// Edge-list document: `# comment`, `u -> v`, `vertex u`. Throws ParseError.
Digraph parse_digraph(std::string_view text);
/// Same grammar with `u -- v` edges.
Graph parse_graph(std::string_view text);

/// Cartesian (box) product G□H with vertex names "(x,y)".
Digraph cartesian_product(const Digraph& g, const Digraph& h);

/// The product together with the id of each (g, h) pair.
struct ProductDigraph {
  Digraph graph;
  std::size_t right_size = 0;
  std::vector<VertexId> index;  // index[g * right_size + h]

  VertexId at(VertexId g, VertexId h) const { return index[g * right_size + h]; }
};
ProductDigraph indexed_product(const Digraph& g, const Digraph& h);

enum class MorphismMode { narrow, broad };

/// Vertex map between digraphs; narrow = injective and edge-preserving,
/// broad = each edge goes to an edge or collapses to a vertex. The digraphs
/// are borrowed and must outlive the morphism.
struct DigraphMorphism {
  const Digraph& source;
  const Digraph& target;
  std::vector<VertexId> vertex_map;
  MorphismMode mode = MorphismMode::narrow;
};

struct MorphismReport {
  bool valid = true;
  std::string violation;  // first violation found, empty when valid
};

MorphismReport check_morphism(const DigraphMorphism& f);

/// One elementary homotopy step: the map on G□I given by f on the 0-slice and
/// g on the 1-slice is a broad map, for I = (0 -> 1) or I = (1 -> 0).
bool one_step_homotopic(const DigraphMorphism& f, const DigraphMorphism& g);

/// Transitive closure of one_step_homotopic over all broad maps. Only for
/// small digraphs; throws invalid_argument above `vertex_bound`.
bool homotopic(const DigraphMorphism& f, const DigraphMorphism& g, std::size_t vertex_bound = 8);

/// All vertex maps source -> target valid in the given mode, in
/// lexicographic order of the image vector.
std::vector<std::vector<VertexId>> enumerate_morphisms(const Digraph& source, const Digraph& target,
                                                       MorphismMode mode);

}  // namespace pathcell
