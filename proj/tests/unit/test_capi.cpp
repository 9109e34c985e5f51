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

#include <json.hpp>
#include <string>
#include <thread>

#include "pathcell/pathcell.h"

using nlohmann::json;

namespace {

/// Owns a digraph handle for one test.
struct Dg {
  pathcell_digraph* p = nullptr;
  explicit Dg(const char* text) { REQUIRE(pathcell_digraph_parse(text, &p) == PATHCELL_OK); }
  ~Dg() { pathcell_digraph_free(p); }
};

struct Ug {
  pathcell_graph* p = nullptr;
  explicit Ug(const char* text) { REQUIRE(pathcell_graph_parse(text, &p) == PATHCELL_OK); }
  ~Ug() { pathcell_graph_free(p); }
};

/// Takes ownership of a returned string and parses it.
json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  pathcell_string_free(s);
  return j;
}

const char* kDiamond = "a -> b\na -> c\nb -> d\nc -> d\n";
const char* kCycle3 = "a -> b\nb -> c\nc -> a\n";

}  // namespace

TEST_CASE("handles and parsing") {
  CHECK(std::string(pathcell_version()) == "0.1.0");
  Dg d(kDiamond);
  CHECK(pathcell_digraph_vertex_count(d.p) == 4);
  CHECK(pathcell_digraph_edge_count(d.p) == 4);
  char* text = nullptr;
  REQUIRE(pathcell_digraph_text(d.p, &text) == PATHCELL_OK);
  Dg again(text);
  pathcell_string_free(text);
  CHECK(pathcell_digraph_edge_count(again.p) == 4);

  pathcell_digraph* bad = nullptr;
  CHECK(pathcell_digraph_parse("a => b\n", &bad) == PATHCELL_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(pathcell_last_error()).find("line 1") != std::string::npos);
  CHECK(pathcell_digraph_parse("a -> a\n", &bad) != PATHCELL_OK);
  CHECK(pathcell_digraph_parse(nullptr, &bad) == PATHCELL_ERR_INVALID_ARGUMENT);
  CHECK(pathcell_digraph_load("/nonexistent/x.dg", &bad) == PATHCELL_ERR_INVALID_ARGUMENT);

  pathcell_digraph* loaded = nullptr;
  REQUIRE(pathcell_digraph_load(PATHCELL_TEST_DATA "/diamond.dg", &loaded) == PATHCELL_OK);
  CHECK(pathcell_digraph_vertex_count(loaded) == 4);
  pathcell_digraph_free(loaded);
  pathcell_digraph_free(nullptr);

  Ug c4("1 -- 2\n2 -- 3\n3 -- 4\n4 -- 1\n");
  CHECK(pathcell_graph_vertex_count(c4.p) == 4);
}

TEST_CASE("products") {
  Dg i("a -> b\n");
  pathcell_digraph* sq = nullptr;
  REQUIRE(pathcell_digraph_product(i.p, i.p, &sq) == PATHCELL_OK);
  CHECK(pathcell_digraph_vertex_count(sq) == 4);
  CHECK(pathcell_digraph_edge_count(sq) == 4);
  pathcell_digraph_free(sq);
}

TEST_CASE("homology documents") {
  Dg d(kDiamond);
  char* out = nullptr;
  REQUIRE(pathcell_homology_json(d.p, nullptr, &out) == PATHCELL_OK);
  json j = take(out);
  CHECK(j["betti"] == json::array({1, 0, 0}));
  CHECK(j["coefficients"] == "z");

  pathcell_options o;
  pathcell_options_init(&o);
  o.coefficients = 'p';
  o.prime = 3;
  o.has_max_dim = 1;
  o.max_dim = 1;
  Dg c3(kCycle3);
  REQUIRE(pathcell_homology_json(c3.p, &o, &out) == PATHCELL_OK);
  j = take(out);
  CHECK(j["betti"] == json::array({1, 1}));
  CHECK(j["p"] == 3);

  o.prime = 4;
  CHECK(pathcell_homology_json(c3.p, &o, &out) == PATHCELL_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  o.coefficients = 'x';
  CHECK(pathcell_homology_json(c3.p, &o, &out) == PATHCELL_ERR_INVALID_ARGUMENT);
  CHECK(pathcell_homology_json(nullptr, nullptr, &out) == PATHCELL_ERR_INVALID_ARGUMENT);
  CHECK(pathcell_homology_json(c3.p, nullptr, nullptr) == PATHCELL_ERR_INVALID_ARGUMENT);

  REQUIRE(pathcell_cohomology_json(c3.p, nullptr, &out) == PATHCELL_OK);
  CHECK(take(out)["betti"] == json::array({1, 1}));
  REQUIRE(pathcell_omega_json(d.p, nullptr, &out) == PATHCELL_OK);
  CHECK(take(out)["omega_ranks"] == json::array({4, 4, 1}));
}

TEST_CASE("every digraph command reports ok on the diamond") {
  Dg d(kDiamond);
  using Fn = pathcell_status (*)(const pathcell_digraph*, const pathcell_options*, char**);
  for (Fn fn : {pathcell_basis_json, pathcell_cup_json, pathcell_cw_export_json, pathcell_subdivide_json,
                pathcell_sphere_check_json, pathcell_poincare_check_json}) {
    char* out = nullptr;
    CHECK(fn(d.p, nullptr, &out) == PATHCELL_OK);
    const json j = take(out);
    if (j.contains("ok")) CHECK(j["ok"] == true);
  }
}

TEST_CASE("graph commands") {
  Ug c5("1 -- 2\n2 -- 3\n3 -- 4\n4 -- 5\n5 -- 1\n");
  char* out = nullptr;
  REQUIRE(pathcell_clique_json(c5.p, nullptr, &out) == PATHCELL_OK);
  json j = take(out);
  CHECK(j["agree"] == true);
  CHECK(j["sheaf_cohomology"]["betti"] == json::array({1, 1}));
  REQUIRE(pathcell_cech_json(c5.p, nullptr, &out) == PATHCELL_OK);
  j = take(out);
  CHECK(j["good"] == true);

  Ug k3("1 -- 2\n2 -- 3\n1 -- 3\n");
  REQUIRE(pathcell_lefschetz_graph_json(k3.p, "1:2,2:3,3:1", nullptr, &out) == PATHCELL_OK);
  CHECK(take(out)["number"] == "1");
  CHECK(pathcell_lefschetz_graph_json(k3.p, "1:2,2:2,3:1", nullptr, &out) == PATHCELL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("maps") {
  Dg c3(kCycle3);
  char* out = nullptr;
  REQUIRE(pathcell_lefschetz_json(c3.p, "a:b,b:c,c:a", 0, nullptr, &out) == PATHCELL_OK);
  CHECK(take(out)["number"] == "0");
  CHECK(pathcell_lefschetz_json(c3.p, "a:b,b:a,c:c", 0, nullptr, &out) == PATHCELL_ERR_INVALID_ARGUMENT);
  CHECK(pathcell_lefschetz_json(c3.p, "a:q", 0, nullptr, &out) == PATHCELL_ERR_INVALID_ARGUMENT);

  Dg i("a -> b\n");
  Dg d(kDiamond);
  REQUIRE(pathcell_homotopy_check_json(i.p, d.p, "a:a,b:b", "a:b,b:b", nullptr, &out) == PATHCELL_OK);
  json j = take(out);
  CHECK(j["one_step_homotopic"] == true);
  CHECK(j["induced_agree"] == true);
  REQUIRE(pathcell_homotopy_check_json(i.p, d.p, nullptr, nullptr, nullptr, &out) == PATHCELL_OK);
  j = take(out);
  CHECK(j["violations"].empty());
  CHECK(pathcell_homotopy_check_json(i.p, d.p, "a:a,b:b", nullptr, nullptr, &out) == PATHCELL_ERR_INVALID_ARGUMENT);

  pathcell_options o;
  pathcell_options_init(&o);
  o.has_max_dim = 1;
  o.max_dim = 3;
  REQUIRE(pathcell_kunneth_json(c3.p, c3.p, &o, &out) == PATHCELL_OK);
  j = take(out);
  CHECK(j["betti_product"] == json::array({1, 2, 1}));
  CHECK(j["ok"] == true);
}

TEST_CASE("bench and corpus") {
  char* out = nullptr;
  const size_t sizes[] = {10, 20};
  REQUIRE(pathcell_bench_json("dipath", sizes, 2, 2, &out) == PATHCELL_OK);
  json j = take(out);
  CHECK(j["sizes"] == json::array({10, 20}));
  CHECK(pathcell_bench_json("nope", sizes, 2, 2, &out) == PATHCELL_ERR_INVALID_ARGUMENT);
  REQUIRE(pathcell_corpus_json(0, 3, 0, 0, &out) == PATHCELL_OK);
  CHECK(take(out)["count"] == 20);
  REQUIRE(pathcell_corpus_json(1, 4, 0, 0, &out) == PATHCELL_OK);
  CHECK(take(out)["count"] == 18);
  REQUIRE(pathcell_corpus_json(0, 6, 5, 9, &out) == PATHCELL_OK);
  CHECK(take(out)["count"] == 5);
}

TEST_CASE("errors are per thread") {
  pathcell_digraph* bad = nullptr;
  REQUIRE(pathcell_digraph_parse("a => b\n", &bad) != PATHCELL_OK);
  const std::string here = pathcell_last_error();
  std::string there;
  std::thread t([&] {
    pathcell_digraph* g = nullptr;
    (void)pathcell_digraph_load("/nonexistent/x.dg", &g);
    there = pathcell_last_error();
  });
  t.join();
  CHECK(std::string(pathcell_last_error()) == here);
  CHECK(there != here);
}
