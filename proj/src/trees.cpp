#include "rootpoly/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace rootpoly {

namespace {

EdgeId smallest_nonloop_edge(const Digraph& d) {
  EdgeId best = -1;
  for (const Edge& e : d.edges())
    if (!e.is_loop() && (best < 0 || e.id < best)) best = e.id;
  return best;
}

void enumerate_trees(const Digraph& d, std::vector<SpanningTree>& out) {
  if (d.vertex_count() == 1) {
    out.push_back({});
    return;
  }
  EdgeId e = smallest_nonloop_edge(d);
  if (e < 0) throw structural_error("spanning_trees: disconnected recursion state");
  // Trees containing e come from the contraction, the rest from the deletion.
  std::vector<SpanningTree> with_e;
  enumerate_trees(d.contracted(e).graph, with_e);
  for (auto& t : with_e) {
    t.push_back(e);
    out.push_back(std::move(t));
  }
  if (!d.is_bridge(e)) enumerate_trees(d.deleted(e), out);
}

}  // namespace

std::vector<SpanningTree> spanning_trees(const Digraph& d) {
  if (!d.weakly_connected()) throw std::invalid_argument("spanning_trees: disconnected input");
  std::vector<SpanningTree> out;
  enumerate_trees(d, out);
  for (auto& t : out) std::sort(t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_spanning_tree(const Digraph& d, const SpanningTree& t) {
  if ((int)t.size() != d.vertex_count() - 1) return false;
  // Union-find acyclicity + coverage check on the underlying undirected graph.
  std::vector<int> parent(d.vertex_count());
  for (int i = 0; i < d.vertex_count(); ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeId id : t) {
    if (!d.has_edge(id)) return false;
    const Edge& e = d.edge(id);
    if (e.is_loop()) return false;
    int a = find(e.tail), b = find(e.head);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

EdgeOrdering EdgeOrdering::identity(const Digraph& d) {
  std::vector<EdgeId> ids = d.edge_ids();
  std::sort(ids.begin(), ids.end());
  return from_rank_order(ids);
}

EdgeOrdering EdgeOrdering::from_rank_order(const std::vector<EdgeId>& ids_in_rank_order) {
  EdgeOrdering pi;
  pi.by_rank_ = ids_in_rank_order;
  for (size_t i = 0; i < ids_in_rank_order.size(); ++i) {
    EdgeId id = ids_in_rank_order[i];
    if (!pi.rank_of_.emplace(id, (int)i + 1).second)
      throw std::invalid_argument("ordering repeats edge id " + std::to_string(id));
  }
  return pi;
}

int EdgeOrdering::rank(EdgeId id) const {
  auto it = rank_of_.find(id);
  if (it == rank_of_.end()) throw std::invalid_argument("ordering has no edge id " + std::to_string(id));
  return it->second;
}

bool EdgeOrdering::contains(EdgeId id) const { return rank_of_.count(id) != 0; }

EdgeOrdering EdgeOrdering::restricted_to(const std::vector<EdgeId>& subset) const {
  std::vector<EdgeId> kept;
  std::set<EdgeId> want(subset.begin(), subset.end());
  for (EdgeId id : by_rank_)
    if (want.count(id)) kept.push_back(id);
  if (kept.size() != want.size())
    throw std::invalid_argument("restriction subset not contained in ordering");
  return from_rank_order(kept);
}

EdgeId EdgeOrdering::minimum(const std::vector<EdgeId>& ids) const {
  if (ids.empty()) throw std::invalid_argument("minimum of empty edge set");
  EdgeId best = ids[0];
  for (EdgeId id : ids)
    if (rank(id) < rank(best)) best = id;
  return best;
}

bool EdgeOrdering::is_bijection_on(const Digraph& d) const {
  if (size() != d.edge_count()) return false;
  for (const Edge& e : d.edges())
    if (!contains(e.id)) return false;
  return true;
}

bool FundamentalCut::is_parallel(EdgeId id) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i] == id) return parallel[i] != 0;
  throw std::invalid_argument("edge not in fundamental cut");
}

FundamentalCut fundamental_cut(const Digraph& d, const SpanningTree& t, EdgeId e) {
  if (std::find(t.begin(), t.end(), e) == t.end())
    throw std::invalid_argument("fundamental_cut: edge not in tree");
  const Edge& te = d.edge(e);
  // Components of T - e.
  std::vector<int> comp(d.vertex_count(), -1);
  std::vector<std::vector<int>> adj(d.vertex_count());
  for (EdgeId id : t) {
    if (id == e) continue;
    const Edge& f = d.edge(id);
    adj[f.tail].push_back(f.head);
    adj[f.head].push_back(f.tail);
  }
  auto flood = [&](int start, int label) {
    std::vector<int> stack{start};
    comp[start] = label;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = label;
          stack.push_back(w);
        }
    }
  };
  flood(te.head, 0);
  if (comp[te.tail] >= 0) throw structural_error("fundamental_cut: input is not a spanning tree");
  flood(te.tail, 1);

  FundamentalCut cut;
  cut.tree_edge = e;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (comp[v] == 0)
      cut.head_shore.push_back(v);
    else
      cut.tail_shore.push_back(v);
  }
  std::vector<std::pair<EdgeId, char>> crossing;
  for (const Edge& f : d.edges()) {
    if (f.is_loop()) continue;
    if (comp[f.tail] == comp[f.head]) continue;
    crossing.emplace_back(f.id, comp[f.head] == 0 ? 1 : 0);
  }
  std::sort(crossing.begin(), crossing.end());
  for (auto& [id, par] : crossing) {
    cut.edges.push_back(id);
    cut.parallel.push_back(par);
  }
  return cut;
}

bool FundamentalCycle::is_parallel(EdgeId id) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i] == id) return parallel[i] != 0;
  throw std::invalid_argument("edge not in fundamental cycle");
}

std::vector<EdgeId> FundamentalCycle::parallel_arc() const {
  std::vector<EdgeId> arc;
  for (size_t i = 0; i < edges.size(); ++i)
    if (parallel[i]) arc.push_back(edges[i]);
  return arc;
}

std::vector<EdgeId> FundamentalCycle::opposite_arc() const {
  std::vector<EdgeId> arc;
  for (size_t i = 0; i < edges.size(); ++i)
    if (!parallel[i]) arc.push_back(edges[i]);
  return arc;
}

FundamentalCycle fundamental_cycle(const Digraph& d, const SpanningTree& t, EdgeId f) {
  if (std::find(t.begin(), t.end(), f) != t.end())
    throw std::invalid_argument("fundamental_cycle: edge is in the tree");
  const Edge& fe = d.edge(f);
  if (fe.is_loop()) throw std::invalid_argument("fundamental_cycle: loop edge");

  // Tree path from head(f) back to tail(f).
  std::vector<std::vector<std::pair<int, EdgeId>>> adj(d.vertex_count());
  for (EdgeId id : t) {
    const Edge& e = d.edge(id);
    adj[e.tail].emplace_back(e.head, id);
    adj[e.head].emplace_back(e.tail, id);
  }
  std::vector<EdgeId> via_edge(d.vertex_count(), -1);
  std::vector<int> via_vertex(d.vertex_count(), -1);
  std::vector<char> seen(d.vertex_count(), 0);
  std::vector<int> stack{fe.head};
  seen[fe.head] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, id] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      via_edge[w] = id;
      via_vertex[w] = v;
      stack.push_back(w);
    }
  }
  if (!seen[fe.tail]) throw structural_error("fundamental_cycle: tree does not span");

  // Walking head(f) -> tail(f), an edge traversed tail-to-head points in f's
  // cyclic direction.
  std::vector<std::pair<EdgeId, char>> entries{{f, 1}};
  for (int v = fe.tail; v != fe.head; v = via_vertex[v]) {
    EdgeId id = via_edge[v];
    const Edge& e = d.edge(id);
    char par = (e.head == v) ? 1 : 0;  // arrived at v along e's own direction
    entries.emplace_back(id, par);
  }
  std::sort(entries.begin(), entries.end());
  FundamentalCycle cyc;
  cyc.nontree_edge = f;
  for (auto& [id, par] : entries) {
    cyc.edges.push_back(id);
    cyc.parallel.push_back(par);
  }
  return cyc;
}

int semi_passive_count(const Digraph& d, const SpanningTree& t, const EdgeOrdering& pi) {
  if (!pi.is_bijection_on(d)) throw std::invalid_argument("ordering is not a bijection on the edges");
  int passive = 0;
  for (EdgeId e : t) {
    FundamentalCut cut = fundamental_cut(d, t, e);
    if (!cut.is_parallel(pi.minimum(cut.edges))) ++passive;
  }
  return passive;
}

int semi_active_count(const Digraph& d, const SpanningTree& t, const EdgeOrdering& pi) {
  return (int)t.size() - semi_passive_count(d, t, pi);
}

}  // namespace rootpoly
