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

#include "pathcell/serialize.hpp"

#include <limits>
#include <map>

#include "pathcell/error.hpp"

namespace pathcell {

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw invalid_argument("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw invalid_argument("expected a rational, got " + j.dump());
  const std::string s = j.get<std::string>();
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    const Integer d(s.substr(slash + 1));
    if (d == 0) throw invalid_argument("zero denominator in " + s);
    return Rational(Integer(s.substr(0, slash)), d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw invalid_argument("malformed rational '" + s + "'");
  }
}

Json to_json(const HomologyResult& r) {
  Json torsion = Json::array();
  for (const auto& t : r.torsion) {
    Json row = Json::array();
    for (const auto& d : t) row.push_back(integer_to_json(d));
    torsion.push_back(std::move(row));
  }
  Json j = {{"betti", r.betti}, {"torsion", std::move(torsion)}, {"coefficients", r.coefficients.tag()}};
  if (r.coefficients.ring == Ring::mod_p) j["p"] = r.coefficients.prime;
  return j;
}

HomologyResult homology_from_json(const Json& j) {
  try {
    HomologyResult r;
    const std::string tag = j.at("coefficients").get<std::string>();
    if (tag == "z") {
      r.coefficients = Coefficients::integers();
    } else if (tag == "q") {
      r.coefficients = Coefficients::rationals();
    } else if (tag == "zp") {
      r.coefficients = Coefficients::mod(j.at("p").get<std::uint32_t>());
    } else {
      throw invalid_argument("unknown coefficients '" + tag + "'");
    }
    r.betti = j.at("betti").get<std::vector<std::size_t>>();
    for (const auto& row : j.at("torsion")) {
      std::vector<Integer> t;
      for (const auto& d : row) t.push_back(integer_from_json(d));
      r.torsion.push_back(std::move(t));
    }
    if (r.torsion.size() != r.betti.size()) throw invalid_argument("betti and torsion lengths differ");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_argument(std::string("malformed homology JSON: ") + e.what());
  }
}

Json to_json(const Digraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return {{"vertices", g.names()}, {"edges", std::move(edges)}};
}

Digraph digraph_from_json(const Json& j) {
  try {
    return Digraph(j.at("vertices").get<std::vector<std::string>>(),
                   j.at("edges").get<std::vector<std::pair<std::string, std::string>>>());
  } catch (const nlohmann::json::exception& e) {
    throw invalid_argument(std::string("malformed digraph JSON: ") + e.what());
  }
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return {{"vertices", g.names()}, {"edges", std::move(edges)}};
}

Json to_json(const Digraph& g, const PathVector& p) {
  Json terms = Json::array();
  for (const auto& [path, c] : p.terms()) {
    Json names = Json::array();
    for (VertexId v : path) names.push_back(g.name(v));
    terms.push_back({{"path", std::move(names)}, {"coeff", integer_to_json(c)}});
  }
  return {{"label", path_label(g, p)}, {"terms", std::move(terms)}};
}

PathVector path_vector_from_json(const Digraph& g, const Json& j) {
  try {
    PathVector p;
    for (const auto& t : j.at("terms")) {
      PrimitivePath path;
      for (const auto& name : t.at("path")) path.push_back(g.index(name.get<std::string>()));
      p.add(path, integer_from_json(t.at("coeff")));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_argument(std::string("malformed path JSON: ") + e.what());
  }
}

Json to_json(const MinimalBasis& basis) {
  const Digraph& g = basis.digraph();
  Json degrees = Json::array();
  for (std::size_t k = 0; k < basis.degree_count(); ++k) {
    Json elements = Json::array();
    for (const auto& e : basis.elements(k)) {
      Json el = to_json(g, e.path);
      el["start"] = g.name(e.start);
      el["end"] = g.name(e.end);
      elements.push_back(std::move(el));
    }
    degrees.push_back({{"degree", k},
                       {"rank", basis.rank(k)},
                       {"allowed", basis.allowed(k).size()},
                       {"elements", std::move(elements)}});
  }
  return {{"degrees", std::move(degrees)}};
}

Json to_json(const CWComplexData& cw) {
  Json cells = Json::array();
  Json boundary = Json::object();
  for (const auto& c : cw.cells) {
    cells.push_back({{"id", c.id}, {"dim", c.dim}, {"label", c.label}});
    if (cw.boundary[c.id].empty()) continue;
    Json terms = Json::array();
    for (const auto& [id, coeff] : cw.boundary[c.id]) terms.push_back({id, integer_to_json(coeff)});
    boundary[std::to_string(c.id)] = std::move(terms);
  }
  return {{"cells", std::move(cells)}, {"boundary", std::move(boundary)}};
}

CWComplexData cw_from_json(const Json& j) {
  try {
    CWComplexData cw;
    for (const auto& c : j.at("cells")) {
      CWCell cell;
      cell.id = c.at("id").get<std::size_t>();
      cell.dim = c.at("dim").get<std::size_t>();
      cell.label = c.at("label").get<std::string>();
      if (cell.id != cw.cells.size()) throw invalid_argument("cell ids must be 0, 1, 2, ... in order");
      cw.cells.push_back(std::move(cell));
    }
    cw.boundary.resize(cw.cells.size());
    for (const auto& [key, terms] : j.at("boundary").items()) {
      const std::size_t id = std::stoul(key);
      if (id >= cw.cells.size()) throw invalid_argument("boundary of unknown cell " + key);
      for (const auto& t : terms) {
        const std::size_t face = t.at(0).get<std::size_t>();
        if (face >= cw.cells.size()) throw invalid_argument("boundary names unknown cell");
        cw.boundary[id].emplace_back(face, integer_from_json(t.at(1)));
      }
    }
    return cw;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_argument(std::string("malformed CW JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw invalid_argument(std::string("malformed CW JSON: ") + e.what());
  }
}

Json to_json(const DeltaComplex& d, const Digraph& g) {
  Json out = Json::array();
  for (const auto& s : d.maximal_simplices()) {
    Json names = Json::array();
    for (VertexId v : s) names.push_back(g.name(v));
    out.push_back(std::move(names));
  }
  return out;
}

Json to_json(const FiniteSpace& s) {
  Json points = Json::array();
  for (std::size_t x = 0; x < s.size(); ++x)
    points.push_back({{"id", x}, {"label", s.labels[x]}, {"grade", s.grades[x]}, {"min_open", s.min_open[x]}});
  return {{"points", std::move(points)}};
}

Json to_json(const Form& f, const MinimalBasis& basis) {
  if (f.values.size() != basis.rank(f.degree)) throw invalid_argument("form does not match the basis rank");
  Json values = Json::object();
  for (std::size_t i = 0; i < f.values.size(); ++i)
    values[path_label(basis.digraph(), basis.elements(f.degree)[i].path)] = rational_to_json(f.values[i]);
  return {{"degree", f.degree}, {"values", std::move(values)}};
}

Form form_from_json(const Json& j, const MinimalBasis& basis) {
  try {
    Form f;
    f.degree = j.at("degree").get<std::size_t>();
    if (f.degree >= basis.degree_count()) throw invalid_argument("form degree exceeds the basis");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < basis.rank(f.degree); ++i)
      index.emplace(path_label(basis.digraph(), basis.elements(f.degree)[i].path), i);
    f.values.assign(basis.rank(f.degree), Rational(0));
    for (const auto& [label, value] : j.at("values").items()) {
      const auto it = index.find(label);
      if (it == index.end()) throw invalid_argument("form names unknown basis element '" + label + "'");
      f.values[it->second] = rational_from_json(value);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_argument(std::string("malformed form JSON: ") + e.what());
  }
}

Json to_json(const SphereCheckReport& r, const CWComplexData& cw) {
  return {{"id", r.cell},
          {"dim", r.dim},
          {"label", cw.cells.at(r.cell).label},
          {"closure", r.closure},
          {"closure_homology", to_json(r.closure_homology)},
          {"passed", r.passed}};
}

Json to_json(const KunnethReport& r) {
  Json j = {{"betti_left", r.betti_left},       {"betti_right", r.betti_right},
            {"betti_product", r.betti_product}, {"convolution", r.convolution},
            {"max_degree", r.max_degree},       {"betti_match", r.betti_match}};
  j["cross_independent"] = r.cross_independent ? Json(*r.cross_independent) : Json(nullptr);
  return j;
}

Json to_json(const LefschetzReport& r) {
  Json traces = Json::array();
  for (const auto& t : r.homology_traces) traces.push_back(rational_to_json(t));
  Json chain = Json::array();
  for (const auto& t : r.chain_traces) chain.push_back(integer_to_json(t));
  return {{"number", rational_to_json(r.number)}, {"homology_traces", std::move(traces)},
          {"chain_traces", std::move(chain)}};
}

Json to_json(const GoodCoverReport& r) {
  Json j = {{"good", r.good}, {"failing", r.failing}, {"cech", to_json(r.cech)}, {"sheaf", to_json(r.sheaf)}};
  j["cech_matches_sheaf"] = r.cech_matches_sheaf ? Json(*r.cech_matches_sheaf) : Json(nullptr);
  return j;
}

Json to_json(const PoincareReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(
        {{"label", e.label}, {"degree", e.degree}, {"homology", to_json(e.homology)}, {"passed", e.passed}});
  return {{"passed", r.passed}, {"entries", std::move(entries)}};
}

Json to_json(const CupIdentityReport& r) {
  return {{"leibniz", r.leibniz},
          {"associativity", r.associativity},
          {"pairs_checked", r.pairs_checked},
          {"triples_checked", r.triples_checked},
          {"failures", r.failures}};
}

Json to_json(const CupOracleReport& r) {
  return {{"agree", r.agree}, {"pairs_checked", r.pairs_checked}, {"failures", r.failures}};
}

}  // namespace pathcell
