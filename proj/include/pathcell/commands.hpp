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
#include <string_view>
#include <vector>

#include "pathcell/serialize.hpp"

namespace pathcell {

struct CommandOptions {
  std::optional<std::size_t> max_dim;  // default: vertex count - 1
  Coefficients coefficients = Coefficients::integers();
  unsigned threads = 1;
};

/// Each command returns the JSON document printed by the matching CLI
/// subcommand. Commands that check a property carry a top-level "ok" field.
Json omega_command(const Digraph& g, const CommandOptions& o);
Json basis_command(const Digraph& g, const CommandOptions& o);
Json homology_command(const Digraph& g, const CommandOptions& o);
Json cohomology_command(const Digraph& g, const CommandOptions& o);
Json cup_command(const Digraph& g, const CommandOptions& o);
Json cw_export_command(const Digraph& g, const CommandOptions& o);
Json subdivide_command(const Digraph& g, const CommandOptions& o);
Json sphere_check_command(const Digraph& g, const CommandOptions& o);
Json poincare_check_command(const Digraph& g, const CommandOptions& o);
Json clique_command(const Graph& g, const CommandOptions& o);
Json cech_command(const Graph& g, const CommandOptions& o);
/// `map` lists images as "u:v" pairs separated by commas or whitespace;
/// every vertex must appear exactly once.
Json lefschetz_command(const Digraph& g, std::string_view map, bool broad, const CommandOptions& o);
Json lefschetz_command(const Graph& g, std::string_view map, const CommandOptions& o);
Json kunneth_command(const Digraph& g, const Digraph& h, const CommandOptions& o);
/// With both maps given, checks that pair; otherwise enumerates all broad
/// maps g -> h and checks every one-step-homotopic pair whose induced maps
/// are defined.
Json homotopy_check_command(const Digraph& g, const Digraph& h, std::optional<std::string_view> f_map,
                            std::optional<std::string_view> g_map, const CommandOptions& o);
Json bench_command(const std::string& family, const std::vector<std::size_t>& sizes, std::size_t k);
/// Exhaustive when sample == 0, otherwise `sample` seeded random digraphs.
/// Graph corpora are always exhaustive.
Json corpus_command(bool graphs, std::size_t max_vertices, std::size_t sample, std::uint64_t seed);

std::vector<VertexId> parse_vertex_map(const std::vector<std::string>& source,
                                       const std::vector<std::string>& target, std::string_view text);

}  // namespace pathcell
