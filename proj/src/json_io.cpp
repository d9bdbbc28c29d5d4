/*
   Copyright 2026 The meadows authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "meadows/json_io.hpp"

#include <fstream>

#include "meadows/ring_spec.hpp"

namespace meadows {

using nlohmann::json;

json ideal_to_json(const Ideal& i) {
  json j;
  j["ring"] = i.ring()->descriptor();
  j["members"] = i.members();
  j["generators"] = i.generators();
  return j;
}

json ideals_to_json(const RingPtr& r, const std::vector<Ideal>& ideals) {
  json j;
  j["schema"] = 1;
  j["ring"] = r->descriptor();
  j["count"] = ideals.size();
  json list = json::array();
  const auto maximal = maximal_ideals(r);
  for (const auto& i : ideals) {
    json entry = ideal_to_json(i);
    entry["label"] = i.label();
    entry["maximal"] = std::find(maximal.begin(), maximal.end(), i) != maximal.end();
    list.push_back(std::move(entry));
  }
  j["ideals"] = std::move(list);
  return j;
}

json meadow_to_json(const Meadow& m) {
  json j;
  j["schema"] = 1;
  j["carrier_size"] = m.carrier_size();
  j["vertex_count"] = m.vertex_count();
  j["is_common"] = m.is_common();

  json lattice;
  lattice["top"] = m.lattice().top();
  lattice["bottom"] = m.lattice().bottom();
  json hasse = json::array();
  for (const auto& [lo, hi] : m.lattice().hasse_edges())
    hasse.push_back(json::array({lo, hi}));
  lattice["hasse"] = std::move(hasse);
  j["lattice"] = std::move(lattice);

  json vertices = json::array();
  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    json entry;
    entry["id"] = v;
    entry["label"] = m.vertex_label(v);
    entry["ring"] = m.fiber_ring(v)->descriptor();
    entry["order"] = m.fiber_ring(v)->order();
    vertices.push_back(std::move(entry));
  }
  j["vertices"] = std::move(vertices);

  json transitions = json::array();
  for (const auto& [lo, hi] : m.lattice().hasse_edges()) {
    json entry;
    entry["lower"] = lo;
    entry["upper"] = hi;
    entry["map"] = m.directed_lattice().transition(lo, hi).map();
    transitions.push_back(std::move(entry));
  }
  j["transitions"] = std::move(transitions);

  if (m.ring_provenance())
    j["base_ring"] = m.ring_provenance()->base_ring->descriptor();
  if (!m.is_common()) {
    const auto& w = *m.non_common_witness();
    json witness;
    witness["element"] = m.fiber_ring(w.vertex)->element_name(w.index);
    witness["vertex"] = w.vertex;
    witness["maximal_vertices"] = w.maximal_vertices;
    j["non_common_witness"] = std::move(witness);
  }
  return j;
}

json axiom_report_to_json(const AxiomReport& r) {
  json j;
  j["schema"] = 1;
  j["all_passed"] = r.all_passed;
  j["sampled"] = r.sampled;
  if (r.sampled) j["seed"] = r.seed;
  json results = json::array();
  for (const auto& res : r.results) {
    json entry;
    entry["axiom"] = res.axiom;
    entry["statement"] = res.statement;
    entry["passed"] = res.passed;
    entry["cases"] = res.cases;
    if (!res.passed) entry["counterexample"] = res.counterexample;
    results.push_back(std::move(entry));
  }
  j["results"] = std::move(results);
  return j;
}

json decomposition_to_json(const Decomposition& d) {
  json j;
  j["schema"] = 1;
  j["ring"] = d.meadow->ring_provenance()->base_ring->descriptor();
  j["primitive_idempotents"] = d.idempotents;
  j["factor_count"] = d.factors.size();
  json factors = json::array();
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    json entry;
    entry["descriptor"] = d.factor_rings[i]->descriptor();
    entry["name"] = d.factor_rings[i]->name();
    entry["order"] = d.factor_rings[i]->order();
    entry["carrier_size"] = d.factors[i]->carrier_size();
    entry["vertex_count"] = d.factors[i]->vertex_count();
    entry["local"] = d.factors[i]->is_local();
    factors.push_back(std::move(entry));
  }
  j["factors"] = std::move(factors);
  j["isomorphism_verified"] = d.iso_report.all_passed;
  return j;
}

DirectedLattice directed_lattice_from_json(const json& doc, std::size_t cap) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw ParseError("custom lattice needs 'vertices' and 'edges'");

  std::vector<RingPtr> rings;
  for (const auto& v : doc.at("vertices")) {
    if (!v.contains("ring") || !v.at("ring").is_string())
      throw ParseError("each vertex needs a 'ring' spec string");
    rings.push_back(parse_ring_spec(v.at("ring").get<std::string>(), cap));
  }
  const std::size_t n = rings.size();
  if (n == 0) throw ParseError("custom lattice has no vertices");

  struct RawEdge {
    Vertex lower, upper;
    std::optional<std::vector<Index>> map;
  };
  std::vector<RawEdge> raw;
  for (const auto& e : doc.at("edges")) {
    RawEdge edge;
    edge.lower = e.at("lower").get<Vertex>();
    edge.upper = e.at("upper").get<Vertex>();
    if (edge.lower >= n || edge.upper >= n)
      throw ParseError("edge names an unknown vertex");
    if (e.contains("map")) edge.map = e.at("map").get<std::vector<Index>>();
    raw.push_back(std::move(edge));
  }

  // order = reflexive-transitive closure of the edges
  std::vector<bool> leq(n * n, false);
  for (Vertex v = 0; v < n; ++v) leq[v * n + v] = true;
  for (const auto& e : raw) leq[e.lower * n + e.upper] = true;
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        if (leq[i * n + k] && leq[k * n + j]) leq[i * n + j] = true;

  FiniteLattice lattice = FiniteLattice::from_leq(
      n, [&](Vertex a, Vertex b) { return leq[a * n + b]; });

  const auto covers = lattice.hasse_edges();
  for (const auto& e : raw) {
    const bool is_cover =
        std::find(covers.begin(), covers.end(),
                  std::make_pair(e.lower, e.upper)) != covers.end();
    if (!is_cover)
      throw ParseError("edge (" + std::to_string(e.lower) + ", " +
                       std::to_string(e.upper) +
                       ") is not a covering pair of the generated order");
  }

  std::vector<EdgeHom> edges;
  for (const auto& e : raw) edges.push_back({e.lower, e.upper, e.map});
  return DirectedLattice::build(std::move(lattice), std::move(rings), edges);
}

DirectedLattice load_directed_lattice(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lattice file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return directed_lattice_from_json(doc, cap);
}

}  // namespace meadows
