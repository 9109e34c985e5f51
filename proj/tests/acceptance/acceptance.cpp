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

// Acceptance harness: one PASS/FAIL line per criterion.
//
// Thresholds are pinned below. All comparisons are exact except the measured
// runtimes and the benchmark slope.

#include <sys/wait.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "oracle.hpp"
#include "pathcell/corpus.hpp"
#include "pathcell/cup.hpp"
#include "pathcell/cw.hpp"
#include "pathcell/error.hpp"
#include "pathcell/finitetop.hpp"
#include "pathcell/homology.hpp"

using namespace pathcell;

namespace {

constexpr std::size_t kCorpusVertices = 5;
constexpr double kOracleSeconds = 600;
constexpr std::size_t kPairVertices = 4;
constexpr std::size_t kLefschetzGraphVertices = 6;
constexpr std::size_t kTopologyGraphVertices = 6;
const std::vector<std::size_t> kBenchSizes{50, 100, 200, 400};
constexpr std::size_t kBenchDegree = 2;
constexpr double kMaxSlope = 2.5;
constexpr double kBenchSeconds = 300;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;  // first few, printed under the line

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct Context {
  std::string cli;
  std::string data;
  std::vector<Digraph> corpus;  // up to kCorpusVertices
  std::vector<Digraph> pairs;   // up to kPairVertices
};

template <typename T>
std::vector<T> padded(std::vector<T> v, std::size_t n) {
  v.resize(std::max(v.size(), n), T{});
  return v;
}

std::size_t top_degree(const Digraph& g) { return g.vertex_count() == 0 ? 0 : g.vertex_count() - 1; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

Outcome oracle_equivalence(const Context& ctx) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const Digraph& g : ctx.corpus) {
    const std::size_t top = top_degree(g);
    const auto ref = oracle::path_homology(g, top);
    const auto ranks = omega_ranks(g, top);
    const auto h = path_homology(g, top, Coefficients::integers());
    const std::size_t n = std::max({ranks.size(), ref.omega_ranks.size(), h.betti.size(), ref.betti.size()});
    const bool ok = padded(ranks, n) == padded(ref.omega_ranks, n) && padded(h.betti, n) == padded(ref.betti, n) &&
                    padded(h.torsion, n) == padded(ref.torsion, n);
    if (!ok) o.fail(g.to_text());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s > kOracleSeconds) o.fail("runtime " + std::to_string(s) + "s exceeds the limit");
  o.detail = std::to_string(ctx.corpus.size()) + " digraphs, " + std::to_string(static_cast<int>(s)) + "s";
  return o;
}

Outcome structure_lemmas(const Context& ctx) {
  Outcome o;
  std::size_t elements = 0;
  for (const Digraph& g : ctx.corpus) {
    const MinimalBasis b = minimal_basis(g, top_degree(g));
    for (std::size_t k = 0; k < b.degree_count(); ++k) {
      for (const BasisElement& e : b.elements(k)) {
        ++elements;
        for (const auto& [path, c] : e.path.terms())
          if (c != 1 && c != -1) o.fail("coefficient " + c.str() + " in " + path_label(g, e.path));
        const auto starts = e.path.start_vertices(), ends = e.path.end_vertices();
        if (starts != std::set<VertexId>{e.start} || ends != std::set<VertexId>{e.end})
          o.fail("start/end not unique in " + path_label(g, e.path));
      }
      const IntMatrix m = b.coordinate_matrix(k);
      if (m.cols() == 0) continue;
      const RankAndDivisors rd = rank_and_elementary_divisors(m, false);
      const bool unimodular =
          rd.rank == m.cols() && std::all_of(rd.divisors.begin(), rd.divisors.end(), [](const Integer& d) {
            return d == 1 || d == -1;
          });
      if (!unimodular) o.fail("basis is not saturated in degree " + std::to_string(k) + " of\n" + g.to_text());
    }
  }
  o.detail = std::to_string(elements) + " basis elements";
  return o;
}

Outcome sphere_checks(const Context& ctx) {
  Outcome o;
  std::size_t digraphs = 0, cells = 0;
  for (const Digraph& g : ctx.corpus) {
    const MinimalBasis b = minimal_basis(g, top_degree(g));
    bool high = false;
    for (std::size_t k = 2; k < b.degree_count(); ++k) high = high || b.rank(k) > 0;
    if (!high) continue;
    ++digraphs;
    const CWComplexData cw = build_cw(b);
    for (const CWCell& c : cw.cells) {
      if (c.dim == 0) continue;
      ++cells;
      if (!cell_boundary_sphere_check(cw, c.id).passed) o.fail(c.label + " in\n" + g.to_text());
    }
  }
  o.detail = std::to_string(cells) + " cells in " + std::to_string(digraphs) + " digraphs";
  return o;
}

std::vector<std::pair<std::string, Digraph>> named_examples() {
  const Digraph interval = parse_digraph("a -> b\n");
  const Digraph c3 = directed_cycle(3);
  std::vector<std::pair<std::string, Digraph>> out{
      {"diamond", parse_digraph("a -> b\na -> c\nb -> d\nc -> d\n")},
      {"T", parse_digraph("a -> b\nb -> c\na -> c\n")},
      {"alternating square", parse_digraph("a -> b\nc -> b\nc -> d\na -> d\n")},
  };
  for (std::size_t n = 3; n <= 6; ++n) out.emplace_back("C" + std::to_string(n), directed_cycle(n));
  out.emplace_back("I x I", cartesian_product(interval, interval));
  out.emplace_back("C3 x C3", cartesian_product(c3, c3));
  return out;
}

Outcome subdivision(const Context& ctx) {
  Outcome o;
  std::size_t checked = 0;
  for (const Digraph& g : ctx.corpus) {
    ++checked;
    if (!delta_vs_path_check(minimal_basis(g, top_degree(g))).equal) o.fail(g.to_text());
  }
  for (const auto& [name, g] : named_examples()) {
    ++checked;
    // Product digraphs carry no homology above degree 2 here; bound the basis accordingly.
    const std::size_t top = std::min<std::size_t>(top_degree(g), 4);
    if (!delta_vs_path_check(minimal_basis(g, top)).equal) o.fail(name);
  }
  o.detail = std::to_string(checked) + " digraphs including " + std::to_string(named_examples().size()) + " named";
  return o;
}

Outcome cup_products(const Context& ctx) {
  Outcome o;
  std::size_t digraphs = 0, pairs = 0, triples = 0, classes = 0;
  for (const Digraph& g : ctx.corpus) {
    const MinimalBasis b = minimal_basis(g, top_degree(g));
    if (b.degree_count() < 3 || b.rank(2) == 0) continue;
    ++digraphs;
    CupEngine engine(b);
    const CupIdentityReport r = check_cup_identities(engine);
    pairs += r.pairs_checked;
    triples += r.triples_checked;
    if (!r.leibniz || !r.associativity) o.fail((r.failures.empty() ? "" : r.failures.front()) + " in\n" + g.to_text());
    const CupOracleReport q = cup_cohomology_agreement(engine);
    classes += q.pairs_checked;
    if (!q.agree) o.fail((q.failures.empty() ? "" : q.failures.front()) + " in\n" + g.to_text());
  }
  o.detail = std::to_string(digraphs) + " digraphs, " + std::to_string(pairs) + " pairs, " + std::to_string(triples) +
             " triples, " + std::to_string(classes) + " class pairs";
  return o;
}

/// Highest degree with nonzero rational homology.
std::size_t homology_top(const Digraph& g) {
  const auto b = path_homology(g, top_degree(g), Coefficients::rationals()).betti;
  std::size_t t = 0;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[k] != 0) t = k;
  return t;
}

Outcome kunneth(const Context& ctx) {
  Outcome o;
  // Degrees up to top(G) + top(H) + 1: every degree where the convolution can be
  // nonzero, plus one beyond it.
  std::vector<std::size_t> top;
  for (const Digraph& g : ctx.pairs) top.push_back(homology_top(g));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < ctx.pairs.size(); ++i)
    for (std::size_t j = i; j < ctx.pairs.size(); ++j) {
      ++pairs;
      const KunnethReport r = kunneth_check(ctx.pairs[i], ctx.pairs[j], top[i] + top[j] + 1, false);
      if (!r.betti_match)
        o.fail("product " + join(r.betti_product) + " vs convolution " + join(r.convolution) + " for\n" +
               ctx.pairs[i].to_text() + "and\n" + ctx.pairs[j].to_text());
    }
  const Digraph c3 = directed_cycle(3);
  const KunnethReport r = kunneth_check(c3, c3, 3, true);
  const std::vector<std::size_t> expected{1, 2, 1};
  if (padded(r.betti_product, 4) != padded(expected, 4) || padded(r.convolution, 4) != padded(expected, 4) ||
      r.cross_independent != true)
    o.fail("C3 x C3 gives " + join(r.betti_product) + " and convolution " + join(r.convolution));
  o.detail = std::to_string(pairs) + " unordered pairs; C3 x C3 = " + join(r.betti_product);
  return o;
}

/// Incremental row echelon form over Q, used to reduce vectors modulo a span.
class Reducer {
 public:
  explicit Reducer(std::size_t n) : n_(n) {}

  void add(std::vector<Rational> v) {
    reduce_in_place(v);
    const auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) return;
    const std::size_t p = static_cast<std::size_t>(it - v.begin());
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    for (auto& row : rows_)
      if (row[p] != 0) {
        const Rational f = row[p];
        for (std::size_t i = 0; i < n_; ++i) row[i] -= f * v[i];
      }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
  }

  std::vector<Rational> reduce(std::vector<Rational> v) const {
    reduce_in_place(v);
    return v;
  }

 private:
  void reduce_in_place(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t i = 0; i < n_; ++i) v[i] -= f * rows_[r][i];
    }
  }

  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

struct HomotopyData {
  MinimalBasis basis;
  ChainComplex complex;
  std::vector<std::vector<std::vector<Rational>>> cycles;  // per degree, spanning Z_k
  std::vector<Reducer> boundaries;                         // per degree, B_k
};

HomotopyData homotopy_data(const Digraph& g, std::size_t degrees) {
  HomotopyData d{minimal_basis(g, degrees), {}, {}, {}};
  d.complex = path_chain_complex(d.basis);
  for (std::size_t k = 0; k + 1 < degrees + 1 && k < d.complex.degree_count(); ++k) {
    const std::size_t n = d.complex.rank(k);
    Reducer red(n);
    if (k + 1 < d.complex.degree_count()) {
      const IntMatrix m = d.complex.boundaries[k + 1].to_dense();
      for (std::size_t c = 0; c < m.cols(); ++c) red.add(to_rational(m.column(c)));
    }
    d.boundaries.push_back(std::move(red));
    if (k == 0) {
      std::vector<std::vector<Rational>> all;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> e(n);
        e[i] = 1;
        all.push_back(std::move(e));
      }
      d.cycles.push_back(std::move(all));
    } else {
      d.cycles.push_back(nullspace(RationalMatrix(d.complex.boundaries[k].to_dense())));
    }
  }
  return d;
}

bool has_digon(const Digraph& g) {
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v) && g.has_edge(v, u)) return true;
  return false;
}

Outcome homotopy_invariance(const Context& ctx) {
  Outcome o;
  // Source degrees below 4 cover every nonzero chain group on 4 vertices; the
  // target needs one more degree for its boundaries.
  const std::size_t degrees = kPairVertices;
  std::vector<HomotopyData> data;
  for (const Digraph& g : ctx.pairs) data.push_back(homotopy_data(g, degrees));
  std::size_t one_step = 0, compared = 0, skipped = 0, failed_pairs = 0, digon_free = 0;
  for (std::size_t s = 0; s < ctx.pairs.size(); ++s)
    for (std::size_t t = 0; t < ctx.pairs.size(); ++t) {
      const Digraph& g = ctx.pairs[s];
      const Digraph& h = ctx.pairs[t];
      const auto maps = enumerate_morphisms(g, h, MorphismMode::broad);
      // Signature of each map: images of the cycle spanning set reduced modulo
      // target boundaries. Two maps agree on H_* iff their signatures match.
      std::vector<std::optional<std::vector<std::vector<Rational>>>> signature;
      for (const auto& m : maps) {
        std::optional<ChainMap> f;
        try {
          f = induced_map({g, h, m, MorphismMode::broad}, data[s].basis, data[t].basis, true);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::domain) throw;
        }
        if (!f) {
          signature.emplace_back();
          continue;
        }
        std::vector<std::vector<Rational>> sig;
        for (std::size_t k = 0; k < data[s].cycles.size() && k < f->maps.size(); ++k) {
          if (k >= data[t].boundaries.size()) break;
          const RationalMatrix fk(f->maps[k]);
          for (const auto& z : data[s].cycles[k]) sig.push_back(data[t].boundaries[k].reduce(fk * z));
        }
        signature.push_back(std::move(sig));
      }
      bool differs = false;
      for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j) {
          if (!one_step_homotopic({g, h, maps[i], MorphismMode::broad}, {g, h, maps[j], MorphismMode::broad}))
            continue;
          ++one_step;
          if (!signature[i] || !signature[j]) {
            ++skipped;
            continue;
          }
          ++compared;
          differs = differs || *signature[i] != *signature[j];
        }
      if (!differs) continue;
      ++failed_pairs;
      if (!has_digon(h)) ++digon_free;
      o.fail("maps differ on homology:\n" + g.to_text() + "to\n" + h.to_text());
    }
  o.detail = std::to_string(one_step) + " one-step pairs, " + std::to_string(compared) + " compared, " +
             std::to_string(skipped) + " skipped (no induced chain map)";
  if (failed_pairs > 0)
    o.detail += "; " + std::to_string(failed_pairs) + " digraph pairs differ, " + std::to_string(digon_free) +
                " with a digon-free target";
  return o;
}

std::vector<PointSet> maximal_clique_cover(const Graph& g, const FiniteSpace& s) {
  const auto cliques = enumerate_cliques(g);
  std::vector<PointSet> cover;
  for (const auto& m : maximal_cliques(g)) {
    const auto it = std::find(cliques.begin(), cliques.end(), m);
    cover.push_back(s.min_open[static_cast<std::size_t>(it - cliques.begin())]);
  }
  return cover;
}

Outcome finite_topology(const Context& ctx) {
  Outcome o;
  std::size_t graphs = 0, covers = 0, good = 0, spaces = 0, entries = 0;
  for (const Graph& g : graph_corpus(kTopologyGraphVertices)) {
    ++graphs;
    const FiniteSpace s = clique_space(g);
    const auto sheaf = flasque_resolution_cohomology(s, Coefficients::rationals());
    const auto clique = oracle::clique_betti(g);
    const std::size_t n = std::max(sheaf.betti.size(), clique.size());
    if (padded(sheaf.betti, n) != padded(clique, n)) o.fail("clique space cohomology differs for\n" + g.to_text());
    for (const auto& cover : {unit_balls(g, s), maximal_clique_cover(g, s)}) {
      ++covers;
      const GoodCoverReport r = verify_good_cover(s, cover);
      if (!r.good) continue;
      ++good;
      if (r.cech_matches_sheaf != true) o.fail("Cech cohomology of a good cover differs for\n" + g.to_text());
    }
  }
  for (const Digraph& g : ctx.corpus) {
    const MinimalBasis b = minimal_basis(g, g.vertex_count());
    ++spaces;
    const auto sheaf = flasque_resolution_cohomology(path_space(b), Coefficients::rationals());
    const auto direct = cohomology(path_chain_complex(b), Coefficients::rationals());
    const std::size_t n = std::max(sheaf.betti.size(), direct.betti.size());
    if (padded(sheaf.betti, n) != padded(direct.betti, n)) o.fail("global sections differ for\n" + g.to_text());
    const PoincareReport p = poincare_check(b);
    entries += p.entries.size();
    if (!p.passed) o.fail("poincare check fails for\n" + g.to_text());
  }
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(good) + "/" + std::to_string(covers) +
             " good covers, " + std::to_string(spaces) + " path spaces, " + std::to_string(entries) +
             " poincare entries";
  return o;
}

Outcome fixed_points(const Context& ctx) {
  Outcome o;
  std::size_t automorphisms = 0, nonzero = 0, endomorphisms = 0;
  for (const Graph& g : graph_corpus(kLefschetzGraphVertices))
    for (const auto& f : graph_automorphisms(g)) {
      ++automorphisms;
      const LefschetzReport r = lefschetz_number(g, f);
      if (r.number == 0) continue;
      ++nonzero;
      if (!fixed_simplex_search(g, f)) o.fail("no fixed clique for a map with nonzero number on\n" + g.to_text());
    }
  for (const Digraph& g : ctx.corpus)
    for (const auto& m : enumerate_morphisms(g, g, MorphismMode::narrow)) {
      const DigraphMorphism f{g, g, m};
      if (fixed_vertex_search(f)) continue;
      ++endomorphisms;
      for (const auto& t : lefschetz_number(f).chain_traces)
        if (t != 0) o.fail("nonzero chain trace for a fixed-vertex-free map on\n" + g.to_text());
    }
  o.detail = std::to_string(automorphisms) + " automorphisms (" + std::to_string(nonzero) + " with nonzero number), " +
             std::to_string(endomorphisms) + " fixed-vertex-free endomorphisms";
  return o;
}

Outcome complexity(const Context&) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const BenchReport r = bench_quadratic("dipath", kBenchSizes, kBenchDegree);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!r.slope || *r.slope > kMaxSlope) o.fail("slope above " + std::to_string(kMaxSlope));
  if (s > kBenchSeconds) o.fail("runtime " + std::to_string(s) + "s exceeds the limit");
  std::ostringstream os;
  os << "slope " << (r.slope ? *r.slope : -1.0) << " (limit " << kMaxSlope << "), " << static_cast<int>(s) << "s";
  o.detail = os.str();
  return o;
}

struct Captured {
  int code = -1;
  std::string out;
};

Captured run(const std::string& command) {
  const std::string file = "/tmp/pathcell_acceptance_" + std::to_string(::getpid()) + ".out";
  const int status = std::system((command + " >" + file + " 2>/dev/null").c_str());
  std::ifstream in(file, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  std::remove(file.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, os.str()};
}

Outcome determinism(const Context& ctx) {
  Outcome o;
  const auto d = [&](const char* f) { return "'" + ctx.data + "/" + f + "'"; };
  // bench reports wall-clock times and is left out.
  const std::vector<std::string> commands{
      "omega " + d("octahedron.dg"),
      "basis " + d("octahedron.dg"),
      "homology " + d("octahedron.dg"),
      "homology --coeff zp --prime 3 " + d("alternating_square.dg"),
      "cohomology " + d("diamond.dg"),
      "cup " + d("octahedron.dg"),
      "cw-export " + d("octahedron.dg"),
      "subdivide " + d("octahedron.dg"),
      "sphere-check " + d("octahedron.dg"),
      "poincare-check " + d("octahedron.dg"),
      "clique " + d("cycle5.ug"),
      "cech " + d("cycle5.ug"),
      "lefschetz --map a:b,b:c,c:a " + d("cycle3.dg"),
      "lefschetz --map 1:2,2:3,3:1 " + d("k3.ug"),
      "kunneth --max-dim 3 " + d("cycle3.dg") + " " + d("cycle3.dg"),
      "homotopy-check " + d("interval.dg") + " " + d("diamond.dg"),
      "corpus --max-vertices 3",
  };
  for (const std::string& c : commands) {
    const std::string base = "'" + ctx.cli + "' " + c.substr(0, c.find(' ')) + " --json" + c.substr(c.find(' '));
    const Captured one = run("PATHCELL_THREADS=1 " + base);
    const Captured four = run("PATHCELL_THREADS=4 " + base);
    if (one.code != four.code || one.out != four.out || one.out.empty()) o.fail(c);
  }
  o.detail = std::to_string(commands.size()) + " subcommands, threads 1 vs 4";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  Context ctx;
  std::vector<int> only;
  app.add_option("--cli", ctx.cli, "Path to the pathcell executable")->required();
  app.add_option("--data", ctx.data, "Directory with sample inputs")->required();
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome(const Context&)>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"structure lemmas", structure_lemmas},
      {"sphere checks", sphere_checks},
      {"subdivision", subdivision},
      {"cup product", cup_products},
      {"kunneth", kunneth},
      {"homotopy invariance", homotopy_invariance},
      {"finite topology", finite_topology},
      {"lefschetz", fixed_points},
      {"complexity", complexity},
      {"determinism", determinism},
  };
  ctx.corpus = digraph_corpus(kCorpusVertices);
  ctx.pairs = digraph_corpus(kPairVertices);

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(ctx);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), o.detail.c_str(),
                s);
    for (const auto& f : o.failures) {
      std::istringstream lines(f);
      for (std::string line; std::getline(lines, line);) std::printf("       %s\n", line.c_str());
    }
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
