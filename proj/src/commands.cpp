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

#include "pathcell/commands.hpp"

#include <cctype>
#include <map>

#include "pathcell/corpus.hpp"
#include "pathcell/error.hpp"

namespace pathcell {

namespace {

std::size_t default_max_dim(std::size_t vertices, const CommandOptions& o) {
  if (o.max_dim) return *o.max_dim;
  return vertices == 0 ? 0 : vertices - 1;
}

MinimalBasis basis_for(const Digraph& g, std::size_t max_k, const CommandOptions& o) {
  MinimalBasisOptions mo;
  mo.threads = o.threads;
  return minimal_basis(g, max_k, mo);
}

std::string map_text(const Digraph& g, const Digraph& h, const std::vector<VertexId>& m) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (v) out += ',';
    out += g.name(static_cast<VertexId>(v)) + ":" + h.name(m[v]);
  }
  return out;
}

std::optional<ChainMap> try_induced(const DigraphMorphism& f, const MinimalBasis& source, const MinimalBasis& target) {
  try {
    return induced_map(f, source, target, true);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::domain) return std::nullopt;
    throw;
  }
}

}  // namespace

std::vector<VertexId> parse_vertex_map(const std::vector<std::string>& source,
                                       const std::vector<std::string>& target, std::string_view text) {
  std::map<std::string, VertexId> src, tgt;
  for (std::size_t i = 0; i < source.size(); ++i) src.emplace(source[i], static_cast<VertexId>(i));
  for (std::size_t i = 0; i < target.size(); ++i) tgt.emplace(target[i], static_cast<VertexId>(i));
  std::vector<std::optional<VertexId>> image(source.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos])))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ',' && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view item = text.substr(pos, end - pos);
    pos = end;
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw invalid_argument("map entry '" + std::string(item) + "' lacks ':'");
    const std::string u(item.substr(0, colon)), v(item.substr(colon + 1));
    const auto su = src.find(u);
    if (su == src.end()) throw invalid_argument("map names unknown source vertex '" + u + "'");
    const auto tv = tgt.find(v);
    if (tv == tgt.end()) throw invalid_argument("map names unknown target vertex '" + v + "'");
    if (image[su->second]) throw invalid_argument("vertex '" + u + "' is mapped twice");
    image[su->second] = tv->second;
  }
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (!image[i]) throw invalid_argument("map leaves vertex '" + source[i] + "' unassigned");
    out.push_back(*image[i]);
  }
  return out;
}

Json omega_command(const Digraph& g, const CommandOptions& o) {
  const MinimalBasis b = basis_for(g, default_max_dim(g.vertex_count(), o), o);
  std::vector<std::size_t> ranks, allowed;
  for (std::size_t k = 0; k < b.degree_count(); ++k) {
    ranks.push_back(b.rank(k));
    allowed.push_back(b.allowed(k).size());
  }
  return {{"omega_ranks", ranks}, {"allowed_counts", allowed}};
}

Json basis_command(const Digraph& g, const CommandOptions& o) {
  return to_json(basis_for(g, default_max_dim(g.vertex_count(), o), o));
}

Json homology_command(const Digraph& g, const CommandOptions& o) {
  return to_json(path_homology(g, default_max_dim(g.vertex_count(), o), o.coefficients, o.threads));
}

Json cohomology_command(const Digraph& g, const CommandOptions& o) {
  const std::size_t d = default_max_dim(g.vertex_count(), o);
  return to_json(cohomology(path_chain_complex(basis_for(g, d + 1, o)), o.coefficients, d));
}

Json cup_command(const Digraph& g, const CommandOptions& o) {
  const MinimalBasis b = basis_for(g, default_max_dim(g.vertex_count(), o), o);
  CupEngine engine(b);
  const CupIdentityReport identities = check_cup_identities(engine);
  const CupOracleReport oracle = cup_cohomology_agreement(engine);
  Json products = Json::array();
  for (std::size_t p = 0; p < b.degree_count(); ++p)
    for (std::size_t q = 0; p + q < b.degree_count(); ++q) {
      const auto& table = engine.table(p, q);
      for (std::size_t r = 0; r < table.size(); ++r) {
        if (table[r].empty()) continue;
        Json terms = Json::array();
        for (const auto& [i, j, c] : table[r])
          terms.push_back({path_label(g, b.elements(p)[i].path), path_label(g, b.elements(q)[j].path),
                           rational_to_json(c)});
        products.push_back({{"p", p},
                            {"q", q},
                            {"element", path_label(g, b.elements(p + q)[r].path)},
                            {"terms", std::move(terms)}});
      }
    }
  Json warnings = Json::array();
  for (const auto& w : engine.warnings())
    warnings.push_back({{"p", w.p},
                        {"q", w.q},
                        {"element", w.element},
                        {"value", rational_to_json(w.value)},
                        {"alternative", rational_to_json(w.alternative)}});
  return {{"identities", to_json(identities)},
          {"oracle", to_json(oracle)},
          {"products", std::move(products)},
          {"warnings", std::move(warnings)},
          {"ok", identities.leibniz && identities.associativity && oracle.agree}};
}

Json cw_export_command(const Digraph& g, const CommandOptions& o) {
  return to_json(build_cw(basis_for(g, default_max_dim(g.vertex_count(), o), o)));
}

Json subdivide_command(const Digraph& g, const CommandOptions& o) {
  const MinimalBasis b = basis_for(g, default_max_dim(g.vertex_count(), o), o);
  const DeltaCheckReport check = delta_vs_path_check(b);
  return {{"maximal_simplices", to_json(subdivide_to_delta(b), g)},
          {"path", to_json(check.path)},
          {"delta", to_json(check.delta)},
          {"ok", check.equal}};
}

Json sphere_check_command(const Digraph& g, const CommandOptions& o) {
  const CWComplexData cw = build_cw(basis_for(g, default_max_dim(g.vertex_count(), o), o));
  Json cells = Json::array();
  bool ok = true;
  for (const auto& c : cw.cells) {
    if (c.dim == 0) continue;
    const SphereCheckReport r = cell_boundary_sphere_check(cw, c.id);
    ok = ok && r.passed;
    cells.push_back(to_json(r, cw));
  }
  return {{"cells", std::move(cells)}, {"ok", ok}};
}

Json poincare_check_command(const Digraph& g, const CommandOptions& o) {
  const PoincareReport r = poincare_check(basis_for(g, default_max_dim(g.vertex_count(), o), o));
  Json j = to_json(r);
  j["ok"] = r.passed;
  return j;
}

Json clique_command(const Graph& g, const CommandOptions& o) {
  const FiniteSpace s = clique_space(g);
  const HomologyResult sheaf = flasque_resolution_cohomology(s, o.coefficients);
  const HomologyResult clique = cohomology(clique_chain_complex(g).complex, o.coefficients);
  const bool agree = same_invariants(sheaf, clique);
  const bool basis_ok = basis_of_topology_check(s);
  return {{"space", to_json(s)},
          {"sheaf_cohomology", to_json(sheaf)},
          {"clique_cohomology", to_json(clique)},
          {"agree", agree},
          {"basis_of_topology", basis_ok},
          {"ok", agree && basis_ok}};
}

Json cech_command(const Graph& g, const CommandOptions& o) {
  const FiniteSpace s = clique_space(g);
  const std::vector<PointSet> cover = unit_balls(g, s);
  Json balls = Json::array();
  for (std::size_t v = 0; v < cover.size(); ++v)
    balls.push_back({{"vertex", g.name(static_cast<VertexId>(v))}, {"points", cover[v]}});
  const GoodCoverReport r = verify_good_cover(s, cover);
  Json j = to_json(r);
  j["cover"] = std::move(balls);
  j["cech_requested"] = to_json(cech_cohomology(s, cover, o.coefficients));
  j["ok"] = r.cech_matches_sheaf.value_or(true);
  return j;
}

Json lefschetz_command(const Digraph& g, std::string_view map, bool broad, const CommandOptions&) {
  const DigraphMorphism f{g, g, parse_vertex_map(g.names(), g.names(), map),
                          broad ? MorphismMode::broad : MorphismMode::narrow};
  const MorphismReport valid = check_morphism(f);
  if (!valid.valid) throw invalid_argument("not a digraph morphism: " + valid.violation);
  const LefschetzReport r = lefschetz_number(f, broad);
  const auto fixed = fixed_vertex_search(f);
  bool traces_zero = true;
  for (const auto& t : r.chain_traces)
    if (t != 0) traces_zero = false;
  Json j = to_json(r);
  j["theory"] = "path";
  j["fixed_vertex"] = fixed ? Json(g.name(*fixed)) : Json(nullptr);
  j["ok"] = fixed.has_value() || traces_zero;
  return j;
}

Json lefschetz_command(const Graph& g, std::string_view map, const CommandOptions&) {
  const std::vector<VertexId> f = parse_vertex_map(g.names(), g.names(), map);
  if (!is_graph_automorphism(g, f)) throw invalid_argument("map is not a graph automorphism");
  const LefschetzReport r = lefschetz_number(g, f);
  const auto fixed = fixed_simplex_search(g, f);
  Json simplex = nullptr;
  if (fixed) {
    simplex = Json::array();
    for (VertexId v : *fixed) simplex.push_back(g.name(v));
  }
  Json j = to_json(r);
  j["theory"] = "clique";
  j["fixed_simplex"] = std::move(simplex);
  j["ok"] = r.number == 0 || fixed.has_value();
  return j;
}

Json kunneth_command(const Digraph& g, const Digraph& h, const CommandOptions& o) {
  const KunnethReport r = kunneth_check(g, h, o.max_dim);
  Json j = to_json(r);
  j["ok"] = r.betti_match && r.cross_independent.value_or(true);
  return j;
}

Json homotopy_check_command(const Digraph& g, const Digraph& h, std::optional<std::string_view> f_map,
                            std::optional<std::string_view> g_map, const CommandOptions& o) {
  if (f_map.has_value() != g_map.has_value()) throw invalid_argument("give both maps or neither");
  const std::size_t top = std::max(g.vertex_count(), h.vertex_count());
  const MinimalBasis source = basis_for(g, top, o);
  const MinimalBasis target = basis_for(h, top, o);
  const ChainComplex cs = path_chain_complex(source), ct = path_chain_complex(target);
  if (f_map) {
    const DigraphMorphism f{g, h, parse_vertex_map(g.names(), h.names(), *f_map), MorphismMode::broad};
    const DigraphMorphism k{g, h, parse_vertex_map(g.names(), h.names(), *g_map), MorphismMode::broad};
    for (const auto* m : {&f, &k}) {
      const MorphismReport valid = check_morphism(*m);
      if (!valid.valid) throw invalid_argument("not a digraph morphism: " + valid.violation);
    }
    const bool one_step = one_step_homotopic(f, k);
    Json hom = nullptr;
    if (top <= 8) hom = homotopic(f, k);
    const auto mf = try_induced(f, source, target), mk = try_induced(k, source, target);
    Json agree = nullptr;
    if (mf && mk) agree = maps_agree_on_homology_q(cs, ct, *mf, *mk);
    const bool related = one_step || (hom.is_boolean() && hom.get<bool>());
    return {{"one_step_homotopic", one_step},
            {"homotopic", std::move(hom)},
            {"induced_agree", agree},
            {"ok", !related || !agree.is_boolean() || agree.get<bool>()}};
  }
  const auto maps = enumerate_morphisms(g, h, MorphismMode::broad);
  std::vector<std::optional<ChainMap>> induced;
  for (const auto& m : maps) induced.push_back(try_induced({g, h, m, MorphismMode::broad}, source, target));
  std::size_t pairs = 0, compared = 0, skipped = 0;
  Json violations = Json::array();
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      const DigraphMorphism a{g, h, maps[i], MorphismMode::broad}, b{g, h, maps[j], MorphismMode::broad};
      if (!one_step_homotopic(a, b)) continue;
      ++pairs;
      if (!induced[i] || !induced[j]) {
        ++skipped;
        continue;
      }
      ++compared;
      if (!maps_agree_on_homology_q(cs, ct, *induced[i], *induced[j]))
        violations.push_back({{"f", map_text(g, h, maps[i])}, {"g", map_text(g, h, maps[j])}});
    }
  const bool ok = violations.empty();
  return {{"maps", maps.size()},     {"one_step_pairs", pairs},         {"compared", compared},
          {"skipped", skipped},      {"violations", std::move(violations)}, {"ok", ok}};
}

Json bench_command(const std::string& family, const std::vector<std::size_t>& sizes, std::size_t k) {
  const BenchReport r = bench_quadratic(family, sizes, k);
  return {{"family", r.family},
          {"k", r.degree},
          {"sizes", r.sizes},
          {"seconds", r.seconds},
          {"slope", r.slope ? Json(*r.slope) : Json(nullptr)}};
}

Json corpus_command(bool graphs, std::size_t max_vertices, std::size_t sample, std::uint64_t seed) {
  Json items = Json::array();
  if (graphs) {
    for (const auto& g : graph_corpus(max_vertices)) items.push_back(to_json(g));
    return {{"kind", "graph"}, {"count", items.size()}, {"items", std::move(items)}};
  }
  if (sample == 0) {
    for (const auto& g : digraph_corpus(max_vertices)) items.push_back(to_json(g));
    return {{"kind", "digraph"}, {"count", items.size()}, {"items", std::move(items)}};
  }
  for (const auto& g : random_digraphs(sample, max_vertices, seed)) items.push_back(to_json(g));
  return {{"kind", "digraph"}, {"seed", seed}, {"count", items.size()}, {"items", std::move(items)}};
}

}  // namespace pathcell
