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
#include <vector>

#include "pathcell/digraph.hpp"

namespace pathcell {

/// All digraphs on exactly n vertices up to isomorphism (n <= 6), vertices
/// named a, b, c, ... Each class is represented by its adjacency mask that is
/// least among all relabelings; classes come in increasing mask order.
std::vector<Digraph> all_digraphs(std::size_t n);
/// all_digraphs(1) .. all_digraphs(max_vertices), concatenated.
std::vector<Digraph> digraph_corpus(std::size_t max_vertices);

/// Same for simple undirected graphs (n <= 7).
std::vector<Graph> all_graphs(std::size_t n);
std::vector<Graph> graph_corpus(std::size_t max_vertices);

/// Seeded sample: vertex count uniform in [1, max_vertices], each ordered
/// pair an edge with probability 1/2. Reproducible for a given seed.
std::vector<Digraph> random_digraphs(std::size_t count, std::size_t max_vertices, std::uint64_t seed);

/// v0 -> v1 -> ... -> v(n-1); names are zero-padded so id order is path order.
Digraph directed_path(std::size_t n);
Digraph directed_cycle(std::size_t n);
/// Directed path plus the back edges v(i+2) -> v(i) for even i.
Digraph dicycle_chain(std::size_t n);

struct BenchReport {
  std::string family;
  std::size_t degree = 0;
  std::vector<std::size_t> sizes;
  std::vector<double> seconds;  // per minimal_basis call
  std::optional<double> slope;  // least-squares slope of log time against log size
};

/// Times minimal_basis(family(n), k) for each size. Each timing is the best
/// of three runs, each run repeated until it takes at least `min_seconds`.
BenchReport bench_quadratic(const std::string& family, const std::vector<std::size_t>& sizes, std::size_t k,
                            double min_seconds = 0.05);

/// Least-squares slope of log y against log x; nullopt for fewer than two
/// points.
std::optional<double> log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace pathcell
