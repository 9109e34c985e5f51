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

// Command-line front end. Talks to the engine only through the C API and
// prints the JSON it returns, either verbatim or as an indented outline.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pathcell/pathcell.h"

namespace {

struct Settings {
  std::optional<unsigned> max_dim;
  std::string coeff = "z";
  unsigned prime = 0;
  std::optional<unsigned> threads;
  bool json = false;
};

struct DigraphHandle {
  pathcell_digraph* p = nullptr;
  ~DigraphHandle() { pathcell_digraph_free(p); }
};

struct GraphHandle {
  pathcell_graph* p = nullptr;
  ~GraphHandle() { pathcell_graph_free(p); }
};

/// Thrown after an error has been reported; carries the exit status.
struct Exit {
  int code;
};

int exit_code(pathcell_status s) {
  switch (s) {
    case PATHCELL_OK:
      return 0;
    case PATHCELL_ERR_PARSE:
    case PATHCELL_ERR_INVALID_ARGUMENT:
    case PATHCELL_ERR_DOMAIN:
      return 1;
    default:
      return 2;
  }
}

void check(pathcell_status s) {
  if (s == PATHCELL_OK) return;
  std::cerr << "error: " << pathcell_last_error() << "\n";
  throw Exit{exit_code(s)};
}

unsigned resolve_threads(const Settings& s) {
  if (s.threads) return *s.threads;
  if (const char* env = std::getenv("PATHCELL_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "error: PATHCELL_THREADS must be a positive integer\n";
    throw Exit{1};
  }
  return 1;
}

pathcell_options options(const Settings& s) {
  pathcell_options o;
  pathcell_options_init(&o);
  if (s.max_dim) {
    o.has_max_dim = 1;
    o.max_dim = *s.max_dim;
  }
  if (s.coeff == "z") {
    o.coefficients = 'z';
  } else if (s.coeff == "q") {
    o.coefficients = 'q';
  } else {
    if (s.prime == 0) {
      std::cerr << "error: --coeff zp needs --prime\n";
      throw Exit{1};
    }
    o.coefficients = 'p';
    o.prime = s.prime;
  }
  o.threads = resolve_threads(s);
  return o;
}

void print_outline(const nlohmann::json& j, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar_array = [](const nlohmann::json& a) {
    for (const auto& x : a)
      if (x.is_structured() && !(x.is_array() && x.size() <= 8 && std::all_of(x.begin(), x.end(), [](const auto& y) {
                                   return !y.is_structured();
                                 })))
        return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (!value.is_structured() || (value.is_array() && scalar_array(value))) {
        os << pad << key << ": " << value.dump() << "\n";
      } else {
        os << pad << key << ":\n";
        print_outline(value, indent + 1, os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object()) {
        os << pad << "-\n";
        print_outline(value, indent + 1, os);
      } else {
        os << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

/// Prints the document and turns a failed check into exit status 2. `out` is
/// taken by reference so it is read after the call that fills it.
void finish(pathcell_status s, char* const& out, const Settings& settings) {
  std::unique_ptr<char, void (*)(char*)> owned(out, pathcell_string_free);
  if (s != PATHCELL_OK && s != PATHCELL_CHECK_FAILED) check(s);
  if (settings.json) {
    std::cout << out << "\n";
  } else {
    print_outline(nlohmann::json::parse(out), 0, std::cout);
  }
  if (s == PATHCELL_CHECK_FAILED) {
    std::cerr << "check failed: " << pathcell_last_error() << "\n";
    throw Exit{2};
  }
}

void load(const std::string& path, DigraphHandle& h) { check(pathcell_digraph_load(path.c_str(), &h.p)); }
void load(const std::string& path, GraphHandle& h) { check(pathcell_graph_load(path.c_str(), &h.p)); }

bool is_graph_file(const std::string& path) { return path.size() >= 3 && path.compare(path.size() - 3, 3, ".ug") == 0; }

void add_common(CLI::App* cmd, Settings& s, bool coefficients) {
  cmd->add_option("--max-dim", s.max_dim, "Highest degree to compute");
  if (coefficients) {
    cmd->add_option("--coeff", s.coeff, "Coefficient ring")->check(CLI::IsMember({"z", "q", "zp"}));
    cmd->add_option("--prime", s.prime, "Prime for --coeff zp");
  }
  cmd->add_option("--threads", s.threads, "Worker threads (overrides PATHCELL_THREADS)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--json", s.json, "Print JSON instead of an outline");
}

using DigraphCommand = pathcell_status (*)(const pathcell_digraph*, const pathcell_options*, char**);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path homology of finite digraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pathcell_version()));

  Settings settings;
  std::string input, second, map, f_map, g_map, family = "dipath";
  bool broad = false, graphs = false;
  std::vector<std::size_t> sizes{50, 100, 200, 400};
  std::size_t k = 2, max_vertices = 5, sample = 0;
  std::uint64_t seed = 0;

  struct Simple {
    const char* name;
    const char* help;
    DigraphCommand fn;
    bool coefficients;
  };
  const std::vector<Simple> simple = {
      {"omega", "Ranks of the invariant path modules", pathcell_omega_json, false},
      {"basis", "Integral basis of minimal paths", pathcell_basis_json, false},
      {"homology", "Path homology", pathcell_homology_json, true},
      {"cohomology", "Path cohomology", pathcell_cohomology_json, true},
      {"cup", "Cup product tables and identity checks", pathcell_cup_json, false},
      {"cw-export", "CW complex of the minimal-path basis", pathcell_cw_export_json, false},
      {"subdivide", "Delta-complex subdivision and its homology", pathcell_subdivide_json, false},
      {"sphere-check", "Check that every cell boundary is a homology sphere", pathcell_sphere_check_json, false},
      {"poincare-check", "Check acyclicity of each basis path's digraph", pathcell_poincare_check_json, false},
  };
  std::vector<std::pair<CLI::App*, DigraphCommand>> simple_cmds;
  for (const auto& s : simple) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    cmd->add_option("digraph", input, "Digraph file (.dg)")->required();
    add_common(cmd, settings, s.coefficients);
    simple_cmds.emplace_back(cmd, s.fn);
  }

  CLI::App* clique = app.add_subcommand("clique", "Clique space, minimal opens and sheaf cohomology");
  clique->add_option("graph", input, "Graph file (.ug)")->required();
  add_common(clique, settings, true);

  CLI::App* cech = app.add_subcommand("cech", "Cech cohomology of the unit-ball cover");
  cech->add_option("graph", input, "Graph file (.ug)")->required();
  add_common(cech, settings, true);

  CLI::App* lefschetz = app.add_subcommand("lefschetz", "Lefschetz number of an endomorphism");
  lefschetz->add_option("input", input, "Digraph (.dg) or graph (.ug) file")->required();
  lefschetz->add_option("--map", map, "Vertex map as u:v pairs, comma separated")->required();
  lefschetz->add_flag("--broad", broad, "Allow broad digraph maps (experimental)");
  add_common(lefschetz, settings, false);

  CLI::App* kunneth = app.add_subcommand("kunneth", "Compare product homology with the Betti convolution");
  kunneth->add_option("left", input, "Digraph file")->required();
  kunneth->add_option("right", second, "Digraph file")->required();
  add_common(kunneth, settings, false);

  CLI::App* homotopy = app.add_subcommand("homotopy-check", "Induced maps of homotopic digraph maps");
  homotopy->add_option("source", input, "Digraph file")->required();
  homotopy->add_option("target", second, "Digraph file")->required();
  homotopy->add_option("--f", f_map, "First map as u:v pairs");
  homotopy->add_option("--g", g_map, "Second map as u:v pairs");
  add_common(homotopy, settings, false);

  CLI::App* bench = app.add_subcommand("bench", "Time the basis computation on a family of digraphs");
  bench->add_option("--family", family, "dipath or dicycle-chain")
      ->check(CLI::IsMember({"dipath", "dicycle-chain"}));
  bench->add_option("--sizes", sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--k", k, "Degree");
  bench->add_flag("--json", settings.json, "Print JSON instead of an outline");

  CLI::App* corpus = app.add_subcommand("corpus", "All small digraphs up to isomorphism, or a random sample");
  corpus->add_option("--max-vertices", max_vertices, "Vertex bound");
  corpus->add_option("--sample", sample, "Random sample size (0: exhaustive)");
  corpus->add_option("--seed", seed, "Seed for --sample");
  corpus->add_flag("--graphs", graphs, "Undirected graphs instead of digraphs");
  corpus->add_flag("--json", settings.json, "Print JSON instead of an outline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    char* out = nullptr;
    for (const auto& [cmd, fn] : simple_cmds) {
      if (!cmd->parsed()) continue;
      DigraphHandle g;
      load(input, g);
      const pathcell_options o = options(settings);
      finish(fn(g.p, &o, &out), out, settings);
      return 0;
    }
    if (clique->parsed() || cech->parsed()) {
      GraphHandle g;
      load(input, g);
      const pathcell_options o = options(settings);
      finish(clique->parsed() ? pathcell_clique_json(g.p, &o, &out) : pathcell_cech_json(g.p, &o, &out), out,
             settings);
    } else if (lefschetz->parsed()) {
      const pathcell_options o = options(settings);
      if (is_graph_file(input)) {
        GraphHandle g;
        load(input, g);
        finish(pathcell_lefschetz_graph_json(g.p, map.c_str(), &o, &out), out, settings);
      } else {
        DigraphHandle g;
        load(input, g);
        finish(pathcell_lefschetz_json(g.p, map.c_str(), broad ? 1 : 0, &o, &out), out, settings);
      }
    } else if (kunneth->parsed() || homotopy->parsed()) {
      DigraphHandle g, h;
      load(input, g);
      load(second, h);
      const pathcell_options o = options(settings);
      if (kunneth->parsed()) {
        finish(pathcell_kunneth_json(g.p, h.p, &o, &out), out, settings);
      } else {
        const bool given = homotopy->count("--f") > 0;
        if (given != (homotopy->count("--g") > 0)) {
          std::cerr << "error: give both --f and --g, or neither\n";
          return 1;
        }
        finish(pathcell_homotopy_check_json(g.p, h.p, given ? f_map.c_str() : nullptr,
                                            given ? g_map.c_str() : nullptr, &o, &out),
               out, settings);
      }
    } else if (bench->parsed()) {
      finish(pathcell_bench_json(family.c_str(), sizes.data(), sizes.size(), k, &out), out, settings);
    } else if (corpus->parsed()) {
      finish(pathcell_corpus_json(graphs ? 1 : 0, max_vertices, sample, seed, &out), out, settings);
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
