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

#include "pathcell/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "pathcell/error.hpp"

namespace pathcell {

namespace {

std::string letter(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

/// Pairs (i, j) indexed by bit position, and for each permutation the bit
/// position each pair moves to.
struct PairTables {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::size_t>> moved;
};

PairTables make_tables(std::size_t n, bool directed) {
  PairTables t;
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = directed ? 0 : i + 1; j < n; ++j) {
      if (i == j) continue;
      index[i][j] = t.pairs.size();
      if (!directed) index[j][i] = t.pairs.size();
      t.pairs.emplace_back(i, j);
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> m;
    for (const auto& [i, j] : t.pairs) m.push_back(index[perm[i]][perm[j]]);
    t.moved.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

/// Masks that are least in their relabeling orbit, in increasing order.
std::vector<std::uint64_t> canonical_masks(std::size_t n, bool directed) {
  const PairTables t = make_tables(n, directed);
  const std::size_t bits = t.pairs.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    bool least = true;
    for (std::size_t p = 1; p < t.moved.size() && least; ++p) {
      std::uint64_t image = 0;
      for (std::size_t b = 0; b < bits; ++b)
        if (mask >> b & 1) image |= std::uint64_t{1} << t.moved[p][b];
      if (image < mask) least = false;
    }
    if (least) out.push_back(mask);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> mask_edges(std::size_t n, std::uint64_t mask, bool directed) {
  const PairTables t = make_tables(n, directed);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t b = 0; b < t.pairs.size(); ++b)
    if (mask >> b & 1) edges.emplace_back(letter(t.pairs[b].first), letter(t.pairs[b].second));
  return edges;
}

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(letter(i));
  return v;
}

std::vector<std::string> padded_names(std::size_t n) {
  const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    v.push_back("v" + std::string(width - s.size(), '0') + s);
  }
  return v;
}

}  // namespace

std::vector<Digraph> all_digraphs(std::size_t n) {
  if (n > 6) throw invalid_argument("exhaustive digraph enumeration is limited to 6 vertices");
  std::vector<Digraph> out;
  for (std::uint64_t mask : canonical_masks(n, true)) out.emplace_back(letters(n), mask_edges(n, mask, true));
  return out;
}

std::vector<Digraph> digraph_corpus(std::size_t max_vertices) {
  std::vector<Digraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    auto part = all_digraphs(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Graph> all_graphs(std::size_t n) {
  if (n > 7) throw invalid_argument("exhaustive graph enumeration is limited to 7 vertices");
  std::vector<Graph> out;
  for (std::uint64_t mask : canonical_masks(n, false)) out.emplace_back(letters(n), mask_edges(n, mask, false));
  return out;
}

std::vector<Graph> graph_corpus(std::size_t max_vertices) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    auto part = all_graphs(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Digraph> random_digraphs(std::size_t count, std::size_t max_vertices, std::uint64_t seed) {
  if (max_vertices == 0 || max_vertices > 26) throw invalid_argument("random digraphs need 1..26 vertices");
  std::mt19937_64 rng(seed);
  std::vector<Digraph> out;
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t n = 1 + rng() % max_vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && (rng() >> 63)) edges.emplace_back(letter(i), letter(j));
    out.emplace_back(letters(n), edges);
  }
  return out;
}

Digraph directed_path(std::size_t n) {
  const auto names = padded_names(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(names[i], names[i + 1]);
  return Digraph(names, edges);
}

Digraph directed_cycle(std::size_t n) {
  if (n < 2) throw invalid_argument("a directed cycle needs at least 2 vertices");
  const auto names = padded_names(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  return Digraph(names, edges);
}

Digraph dicycle_chain(std::size_t n) {
  const auto names = padded_names(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(names[i], names[i + 1]);
  for (std::size_t i = 0; i + 2 < n; i += 2) edges.emplace_back(names[i + 2], names[i]);
  return Digraph(names, edges);
}

std::optional<double> log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

}  // namespace pathcell
