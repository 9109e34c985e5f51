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

#include "pathcell/pathcell.h"

#include <cstring>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "pathcell/commands.hpp"
#include "pathcell/error.hpp"

struct pathcell_digraph {
  pathcell::Digraph graph;
};

struct pathcell_graph {
  pathcell::Graph graph;
};

namespace {

thread_local std::string last_error;

pathcell_status fail(pathcell_status status, const std::string& what) {
  last_error = what;
  return status;
}

pathcell_status guarded(const std::function<pathcell_status()>& body) {
  try {
    last_error.clear();
    return body();
  } catch (const pathcell::Error& e) {
    switch (e.kind()) {
      case pathcell::ErrorKind::parse:
        return fail(PATHCELL_ERR_PARSE, e.what());
      case pathcell::ErrorKind::invalid_argument:
        return fail(PATHCELL_ERR_INVALID_ARGUMENT, e.what());
      case pathcell::ErrorKind::domain:
        return fail(PATHCELL_ERR_DOMAIN, e.what());
      case pathcell::ErrorKind::invariant:
        return fail(PATHCELL_ERR_INVARIANT, e.what());
    }
    return fail(PATHCELL_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(PATHCELL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PATHCELL_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pathcell::CommandOptions convert(const pathcell_options* o) {
  pathcell::CommandOptions c;
  if (!o) return c;
  if (o->has_max_dim) c.max_dim = o->max_dim;
  switch (o->coefficients) {
    case 'z':
      break;
    case 'q':
      c.coefficients = pathcell::Coefficients::rationals();
      break;
    case 'p':
      c.coefficients = pathcell::Coefficients::mod(o->prime);
      break;
    default:
      throw pathcell::invalid_argument(std::string("unknown coefficient code '") + o->coefficients + "'");
  }
  c.threads = o->threads == 0 ? 1 : o->threads;
  return c;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pathcell::invalid_argument(std::string("cannot read '") + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Runs a command producing JSON; a document with "ok": false is returned
/// together with PATHCELL_CHECK_FAILED.
pathcell_status emit(char** out, const std::function<pathcell::Json()>& command) {
  if (!out) return fail(PATHCELL_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    const pathcell::Json j = command();
    *out = copy_string(j.dump());
    if (j.is_object() && j.contains("ok") && j["ok"].is_boolean() && !j["ok"].get<bool>()) {
      last_error = "a checked property fails; see the report";
      return PATHCELL_CHECK_FAILED;
    }
    return PATHCELL_OK;
  });
}

template <typename T>
pathcell_status need(const T* p, const char* what) {
  if (!p) return fail(PATHCELL_ERR_INVALID_ARGUMENT, std::string("null ") + what);
  return PATHCELL_OK;
}

}  // namespace

extern "C" {

const char* pathcell_version(void) { return "0.1.0"; }

const char* pathcell_last_error(void) { return last_error.c_str(); }

void pathcell_options_init(pathcell_options* options) {
  if (!options) return;
  options->has_max_dim = 0;
  options->max_dim = 0;
  options->coefficients = 'z';
  options->prime = 0;
  options->threads = 1;
}

void pathcell_string_free(char* s) { delete[] s; }

pathcell_status pathcell_digraph_parse(const char* text, pathcell_digraph** out) {
  if (!text || !out) return fail(PATHCELL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pathcell_digraph{pathcell::parse_digraph(text)};
    return PATHCELL_OK;
  });
}

pathcell_status pathcell_digraph_load(const char* path, pathcell_digraph** out) {
  if (!path || !out) return fail(PATHCELL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pathcell_digraph{pathcell::parse_digraph(read_file(path))};
    return PATHCELL_OK;
  });
}

void pathcell_digraph_free(pathcell_digraph* g) { delete g; }

size_t pathcell_digraph_vertex_count(const pathcell_digraph* g) { return g ? g->graph.vertex_count() : 0; }

size_t pathcell_digraph_edge_count(const pathcell_digraph* g) { return g ? g->graph.edge_count() : 0; }

pathcell_status pathcell_digraph_product(const pathcell_digraph* g, const pathcell_digraph* h,
                                         pathcell_digraph** out) {
  if (!g || !h || !out) return fail(PATHCELL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pathcell_digraph{pathcell::cartesian_product(g->graph, h->graph)};
    return PATHCELL_OK;
  });
}

pathcell_status pathcell_digraph_text(const pathcell_digraph* g, char** out) {
  if (!g || !out) return fail(PATHCELL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(g->graph.to_text());
    return PATHCELL_OK;
  });
}

pathcell_status pathcell_graph_parse(const char* text, pathcell_graph** out) {
  if (!text || !out) return fail(PATHCELL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pathcell_graph{pathcell::parse_graph(text)};
    return PATHCELL_OK;
  });
}

pathcell_status pathcell_graph_load(const char* path, pathcell_graph** out) {
  if (!path || !out) return fail(PATHCELL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pathcell_graph{pathcell::parse_graph(read_file(path))};
    return PATHCELL_OK;
  });
}

void pathcell_graph_free(pathcell_graph* g) { delete g; }

size_t pathcell_graph_vertex_count(const pathcell_graph* g) { return g ? g->graph.vertex_count() : 0; }

#define PATHCELL_DIGRAPH_COMMAND(name, fn)                                                   \
  pathcell_status name(const pathcell_digraph* g, const pathcell_options* options, char** out) { \
    if (auto s = need(g, "digraph"); s != PATHCELL_OK) return s;                             \
    return emit(out, [&] { return pathcell::fn(g->graph, convert(options)); });              \
  }

PATHCELL_DIGRAPH_COMMAND(pathcell_omega_json, omega_command)
PATHCELL_DIGRAPH_COMMAND(pathcell_basis_json, basis_command)
PATHCELL_DIGRAPH_COMMAND(pathcell_homology_json, homology_command)
PATHCELL_DIGRAPH_COMMAND(pathcell_cohomology_json, cohomology_command)
PATHCELL_DIGRAPH_COMMAND(pathcell_cup_json, cup_command)
PATHCELL_DIGRAPH_COMMAND(pathcell_cw_export_json, cw_export_command)
PATHCELL_DIGRAPH_COMMAND(pathcell_subdivide_json, subdivide_command)
PATHCELL_DIGRAPH_COMMAND(pathcell_sphere_check_json, sphere_check_command)
PATHCELL_DIGRAPH_COMMAND(pathcell_poincare_check_json, poincare_check_command)

#undef PATHCELL_DIGRAPH_COMMAND

pathcell_status pathcell_clique_json(const pathcell_graph* g, const pathcell_options* options, char** out) {
  if (auto s = need(g, "graph"); s != PATHCELL_OK) return s;
  return emit(out, [&] { return pathcell::clique_command(g->graph, convert(options)); });
}

pathcell_status pathcell_cech_json(const pathcell_graph* g, const pathcell_options* options, char** out) {
  if (auto s = need(g, "graph"); s != PATHCELL_OK) return s;
  return emit(out, [&] { return pathcell::cech_command(g->graph, convert(options)); });
}

pathcell_status pathcell_lefschetz_json(const pathcell_digraph* g, const char* map, int broad,
                                        const pathcell_options* options, char** out) {
  if (auto s = need(g, "digraph"); s != PATHCELL_OK) return s;
  if (auto s = need(map, "map"); s != PATHCELL_OK) return s;
  return emit(out, [&] { return pathcell::lefschetz_command(g->graph, map, broad != 0, convert(options)); });
}

pathcell_status pathcell_lefschetz_graph_json(const pathcell_graph* g, const char* map,
                                              const pathcell_options* options, char** out) {
  if (auto s = need(g, "graph"); s != PATHCELL_OK) return s;
  if (auto s = need(map, "map"); s != PATHCELL_OK) return s;
  return emit(out, [&] { return pathcell::lefschetz_command(g->graph, map, convert(options)); });
}

pathcell_status pathcell_kunneth_json(const pathcell_digraph* g, const pathcell_digraph* h,
                                      const pathcell_options* options, char** out) {
  if (!g || !h) return fail(PATHCELL_ERR_INVALID_ARGUMENT, "null digraph");
  return emit(out, [&] { return pathcell::kunneth_command(g->graph, h->graph, convert(options)); });
}

pathcell_status pathcell_homotopy_check_json(const pathcell_digraph* g, const pathcell_digraph* h, const char* f_map,
                                             const char* g_map, const pathcell_options* options, char** out) {
  if (!g || !h) return fail(PATHCELL_ERR_INVALID_ARGUMENT, "null digraph");
  std::optional<std::string_view> f, k;
  if (f_map) f = f_map;
  if (g_map) k = g_map;
  return emit(out, [&] { return pathcell::homotopy_check_command(g->graph, h->graph, f, k, convert(options)); });
}

pathcell_status pathcell_bench_json(const char* family, const size_t* sizes, size_t size_count, size_t k,
                                    char** out) {
  if (!family || (!sizes && size_count > 0)) return fail(PATHCELL_ERR_INVALID_ARGUMENT, "null argument");
  const std::vector<std::size_t> v(sizes, sizes + size_count);
  return emit(out, [&] { return pathcell::bench_command(family, v, k); });
}

pathcell_status pathcell_corpus_json(int graphs, size_t max_vertices, size_t sample, uint64_t seed, char** out) {
  return emit(out, [&] { return pathcell::corpus_command(graphs != 0, max_vertices, sample, seed); });
}

}  // extern "C"
