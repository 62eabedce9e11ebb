#include "rootpoly/json_io.hpp"

#include <fstream>

namespace rootpoly {

using nlohmann::json;

Digraph digraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("digraph json needs \"vertices\" and \"edges\"");
  int n = j.at("vertices").get<int>();
  std::vector<std::pair<int, int>> arcs;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("each edge must be a [tail, head] pair");
    arcs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Digraph(n, arcs);
}

Digraph digraph_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return digraph_from_json(j);
}

json digraph_to_json(const Digraph& d) {
  json edges = json::array();
  for (const Edge& e : d.edges()) edges.push_back({e.tail, e.head});
  return {{"vertices", d.vertex_count()}, {"edges", edges}};
}

json polynomial_to_json(const Polynomial& p) {
  json c = json::array();
  for (Int x : p.coeffs) c.push_back(x);
  if (c.empty()) c.push_back(0);
  return c;
}

json report_to_json(const Digraph& d, const MonotonicityReport& rep) {
  json edges = json::array();
  for (const EdgeReport& er : rep.edges) {
    json e = {{"id", er.id},
              {"loop", er.loop},
              {"delete", polynomial_to_json(er.deletion_hstar)},
              {"delete_le", er.deletion_le},
              {"delete_eq", er.deletion_eq},
              {"delete_predicate", er.deletion_predicate},
              {"delete_predicate_agrees", er.deletion_agrees}};
    if (!er.loop) {
      e["contract"] = polynomial_to_json(*er.contraction_hstar);
      e["contract_le"] = er.contraction_le;
      e["contract_eq"] = er.contraction_eq;
      e["contract_predicate"] = er.contraction_predicate;
      e["contract_predicate_agrees"] = er.contraction_agrees;
    }
    edges.push_back(std::move(e));
  }
  return {{"graph", digraph_to_json(d)}, {"hstar", polynomial_to_json(rep.hstar)}, {"edges", edges}};
}

json polytope_to_json(const LatticePolytope& p) {
  json gens = json::array();
  for (const IntVec& g : p.generators()) gens.push_back(g);
  json facets = json::array();
  if (p.dimension() > 0) {
    for (const Halfspace& hs : p.facets())
      facets.push_back({{"normal", hs.normal}, {"bound", hs.bound}, {"origin", hs.through_origin}});
  }
  return {{"generators", gens}, {"facets", facets}};
}

}  // namespace rootpoly
