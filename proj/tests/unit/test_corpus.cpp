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

#include <cmath>
#include <set>

#include "pathcell/corpus.hpp"
#include "pathcell/error.hpp"

using namespace pathcell;

TEST_CASE("digraph counts up to isomorphism") {
  const std::vector<std::size_t> expected{1, 3, 16, 218};
  for (std::size_t n = 1; n <= 4; ++n) CHECK(all_digraphs(n).size() == expected[n - 1]);
  CHECK(digraph_corpus(3).size() == 20);
  CHECK_THROWS_AS(all_digraphs(7), Error);
}

TEST_CASE("the five-vertex digraph count") {
  CHECK(all_digraphs(5).size() == 9608);
}

TEST_CASE("graph counts up to isomorphism") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(all_graphs(n).size() == expected[n - 1]);
}

TEST_CASE("corpus members are pairwise distinct and canonical") {
  const auto four = all_digraphs(4);
  std::set<std::string> texts;
  for (const Digraph& g : four) {
    CHECK(g.vertex_count() == 4);
    CHECK(g.names() == std::vector<std::string>{"a", "b", "c", "d"});
    texts.insert(g.to_text());
  }
  CHECK(texts.size() == four.size());
  CHECK(all_digraphs(4) == four);
}

TEST_CASE("random digraphs are reproducible") {
  const auto a = random_digraphs(30, 8, 42);
  const auto b = random_digraphs(30, 8, 42);
  const auto c = random_digraphs(30, 8, 43);
  CHECK(a == b);
  CHECK(a != c);
  for (const Digraph& g : a) {
    CHECK(g.vertex_count() >= 1);
    CHECK(g.vertex_count() <= 8);
  }
  CHECK_THROWS_AS(random_digraphs(1, 27, 0), Error);
}

TEST_CASE("named families") {
  const Digraph p = directed_path(4);
  CHECK(p.vertex_count() == 4);
  CHECK(p.edge_count() == 3);
  CHECK(p.name(0) == "v0");
  CHECK(directed_path(12).name(3) == "v03");
  const Digraph c = directed_cycle(5);
  CHECK(c.edge_count() == 5);
  CHECK(c.has_edge(4, 0));
  // Triangles v0 v1 v2, v2 v3 v4 glued at v2.
  const Digraph d = dicycle_chain(5);
  CHECK(d.edge_count() == 6);
  CHECK(d.has_edge(2, 0));
  CHECK(d.has_edge(4, 2));
}

TEST_CASE("log-log slope") {
  const std::vector<double> x{10, 20, 40, 80};
  std::vector<double> y;
  for (double v : x) y.push_back(3 * v * v);
  REQUIRE(log_log_slope(x, y).has_value());
  CHECK(*log_log_slope(x, y) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK_FALSE(log_log_slope({10}, {1}).has_value());
}

TEST_CASE("quadratic benchmark on short paths") {
  const BenchReport r = bench_quadratic("dipath", {20, 40, 80}, 2, 0.01);
  CHECK(r.family == "dipath");
  CHECK(r.sizes.size() == 3);
  CHECK(r.seconds.size() == 3);
  REQUIRE(r.slope.has_value());
  CHECK(*r.slope < 2.5);
  CHECK_THROWS_AS(bench_quadratic("nonsense", {10}, 2), Error);
}
