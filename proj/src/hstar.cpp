#include "rootpoly/hstar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rootpoly {

Polynomial hstar_via_dissection(const Digraph& d, const EdgeOrdering& pi) {
  if (!d.weakly_connected()) throw std::invalid_argument("hstar: disconnected input");
  if (!pi.is_bijection_on(d)) throw std::invalid_argument("hstar: ordering is not a bijection");
  Digraph r = d.reduced();
  if (r.edge_count() == 0) return Polynomial::constant(1);  // single vertex
  EdgeOrdering pr = pi.restricted_to(r.edge_ids());
  ScaledWeights w = weights_from_ordering(pr);
  std::vector<Int> h(r.vertex_count(), 0);
  for (const SpanningTree& t : dissecting_tree_set(r, w))
    h[semi_passive_count(r, t, pr)] += 1;
  return Polynomial::from_coeffs(std::move(h));
}

Polynomial hstar(const Digraph& d) { return hstar_via_dissection(d, EdgeOrdering::identity(d)); }

namespace {

Digraph component_subgraph(const Digraph& d, const std::vector<int>& vertices) {
  std::map<int, int> vmap;
  for (int v : vertices) vmap[v] = (int)vmap.size();
  std::vector<std::pair<int, int>> arcs;
  for (const Edge& e : d.edges())
    if (vmap.count(e.tail) && vmap.count(e.head)) arcs.emplace_back(vmap[e.tail], vmap[e.head]);
  return Digraph((int)vertices.size(), arcs);
}

}  // namespace

Polynomial hstar_components(const Digraph& d) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& comp : d.weak_components()) p = p * hstar(component_subgraph(d, comp));
  return p;
}

Polynomial hstar_oracle(const Digraph& d) {
  LatticePolytope p = polytope_of(d);
  return hstar_from_counts(ehrhart_counts(p, p.dimension()), p.dimension());
}

bool deletion_equality_predicate(const Digraph& d, EdgeId e) {
  if (!d.weakly_connected()) throw std::invalid_argument("predicate: disconnected input");
  const Edge& edge = d.edge(e);
  return edge.is_loop() || d.is_bridge(e) || d.has_parallel(e);
}

bool contraction_equality_predicate(const Digraph& d, EdgeId e) {
  if (!d.weakly_connected()) throw std::invalid_argument("predicate: disconnected input");
  if (d.edge(e).is_loop()) throw std::invalid_argument("predicate: loop edge");
  LatticePolytope p = polytope_of(d);
  IntVec x = d.incidence_vector(e);
  if (p.dimension() == 0) return true;
  for (const Halfspace& hs : p.facets()) {
    if (hs.through_origin) continue;
    if (dot(hs.normal, x) != hs.bound) return false;
  }
  return true;
}

bool MonotonicityReport::all_le() const {
  for (const EdgeReport& er : edges)
    if (!er.deletion_le || (!er.loop && !er.contraction_le)) return false;
  return true;
}

bool MonotonicityReport::all_agree() const {
  for (const EdgeReport& er : edges)
    if (!er.deletion_agrees || (!er.loop && !er.contraction_agrees)) return false;
  return true;
}

MonotonicityReport monotonicity_report(const Digraph& d) {
  if (!d.weakly_connected()) throw std::invalid_argument("monotonicity_report: disconnected input");
  MonotonicityReport rep;
  rep.hstar = hstar(d);
  for (const Edge& e : d.edges()) {
    EdgeReport er;
    er.id = e.id;
    er.loop = e.is_loop();
    Digraph del = d.deleted(e.id);
    er.deletion_hstar = del.weakly_connected() ? hstar(del) : hstar_components(del);
    er.deletion_le = coefficientwise_leq(er.deletion_hstar, rep.hstar);
    er.deletion_eq = (er.deletion_hstar == rep.hstar);
    er.deletion_predicate = deletion_equality_predicate(d, e.id);
    er.deletion_agrees = (er.deletion_predicate == er.deletion_eq);
    if (!er.loop) {
      er.contraction_hstar = hstar(d.contracted(e.id).graph);
      er.contraction_le = coefficientwise_leq(*er.contraction_hstar, rep.hstar);
      er.contraction_eq = (*er.contraction_hstar == rep.hstar);
      er.contraction_predicate = contraction_equality_predicate(d, e.id);
      er.contraction_agrees = (er.contraction_predicate == er.contraction_eq);
    }
    rep.edges.push_back(std::move(er));
  }
  return rep;
}

bool UndirectedGraph::connected() const {
  if (vertex_count == 0) return false;
  std::vector<std::vector<int>> adj(vertex_count);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vertex_count;
}

Digraph subdivide_and_orient(const UndirectedGraph& g) {
  std::vector<std::pair<int, int>> arcs;
  int n = g.vertex_count;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    int mid = n + (int)i;
    arcs.emplace_back(u, mid);
    arcs.emplace_back(v, mid);
  }
  return Digraph(n + (int)g.edges.size(), arcs);
}

namespace {

struct UKey {
  int n;
  std::vector<std::pair<int, int>> edges;  // normalized u <= v, sorted
  bool operator<(const UKey& o) const { return std::tie(n, edges) < std::tie(o.n, o.edges); }
};

UKey ukey(const UndirectedGraph& g) {
  UKey k;
  k.n = g.vertex_count;
  for (auto [u, v] : g.edges) k.edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(k.edges.begin(), k.edges.end());
  return k;
}

UndirectedGraph udelete(const UndirectedGraph& g, size_t i) {
  UndirectedGraph h{g.vertex_count, g.edges};
  h.edges.erase(h.edges.begin() + i);
  return h;
}

UndirectedGraph ucontract(const UndirectedGraph& g, size_t i) {
  auto [u, v] = g.edges[i];
  int a = std::min(u, v), b = std::max(u, v);
  UndirectedGraph h;
  h.vertex_count = g.vertex_count - 1;
  auto remap = [&](int x) { return x == b ? a : (x > b ? x - 1 : x); };
  for (size_t j = 0; j < g.edges.size(); ++j) {
    if (j == i) continue;
    h.edges.emplace_back(remap(g.edges[j].first), remap(g.edges[j].second));
  }
  return h;
}

bool is_ubridge(const UndirectedGraph& g, size_t i) {
  UndirectedGraph h = udelete(g, i);
  return !h.connected();
}

Polynomial tutte_rec(const UndirectedGraph& g, std::map<UKey, Polynomial>& memo) {
  if (g.edges.empty()) return Polynomial::constant(1);
  UKey key = ukey(g);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  auto [u, v] = g.edges[0];
  Polynomial result;
  if (u == v) {
    result = tutte_rec(udelete(g, 0), memo);  // loop, factor T(x,1)|_{y=1} = 1
  } else if (is_ubridge(g, 0)) {
    result = Polynomial::from_coeffs({0, 1}) * tutte_rec(ucontract(g, 0), memo);
  } else {
    result = tutte_rec(udelete(g, 0), memo) + tutte_rec(ucontract(g, 0), memo);
  }
  memo[key] = result;
  return result;
}

}  // namespace

Polynomial tutte_x1(const UndirectedGraph& g) {
  if (!g.connected()) throw std::invalid_argument("tutte_x1: disconnected input");
  std::map<UKey, Polynomial> memo;
  return tutte_rec(g, memo);
}

}  // namespace rootpoly
