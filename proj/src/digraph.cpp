#include "rootpoly/digraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace rootpoly {

Digraph::Digraph(int vertex_count, const std::vector<std::pair<int, int>>& arcs) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  vertex_count_ = vertex_count;
  edges_.reserve(arcs.size());
  for (size_t i = 0; i < arcs.size(); ++i) {
    auto [t, h] = arcs[i];
    if (t < 0 || t >= vertex_count || h < 0 || h >= vertex_count)
      throw std::invalid_argument("edge " + std::to_string(i) + " endpoint out of range");
    edges_.push_back({t, h, (EdgeId)i});
  }
}

Digraph Digraph::from_edges(int vertex_count, std::vector<Edge> edges) {
  Digraph d;
  d.vertex_count_ = vertex_count;
  d.edges_ = std::move(edges);
  return d;
}

const Edge& Digraph::edge(EdgeId id) const {
  for (const Edge& e : edges_)
    if (e.id == id) return e;
  throw std::invalid_argument("unknown edge id " + std::to_string(id));
}

bool Digraph::has_edge(EdgeId id) const {
  for (const Edge& e : edges_)
    if (e.id == id) return true;
  return false;
}

std::vector<EdgeId> Digraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return ids;
}

Digraph Digraph::deleted(EdgeId id) const {
  edge(id);  // existence check
  std::vector<Edge> kept;
  kept.reserve(edges_.size() - 1);
  for (const Edge& e : edges_)
    if (e.id != id) kept.push_back(e);
  return from_edges(vertex_count_, std::move(kept));
}

Contraction Digraph::contracted(EdgeId id) const {
  const Edge& e = edge(id);
  if (e.is_loop()) throw std::invalid_argument("cannot contract loop edge " + std::to_string(id));
  int a = std::min(e.tail, e.head);
  int b = std::max(e.tail, e.head);
  std::vector<int> vmap(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v) vmap[v] = (v == b) ? a : (v > b ? v - 1 : v);
  std::vector<Edge> kept;
  kept.reserve(edges_.size() - 1);
  for (const Edge& f : edges_) {
    if (f.id == id) continue;
    kept.push_back({vmap[f.tail], vmap[f.head], f.id});
  }
  return {from_edges(vertex_count_ - 1, std::move(kept)), std::move(vmap)};
}

Digraph Digraph::reduced() const {
  std::map<std::pair<int, int>, EdgeId> representative;
  for (const Edge& e : edges_) {
    if (e.is_loop()) continue;
    auto key = std::make_pair(e.tail, e.head);
    auto it = representative.find(key);
    if (it == representative.end() || e.id < it->second) representative[key] = e.id;
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (e.is_loop()) continue;
    if (representative[{e.tail, e.head}] == e.id) kept.push_back(e);
  }
  return from_edges(vertex_count_, std::move(kept));
}

std::vector<std::vector<int>> Digraph::weak_components() const {
  std::vector<int> comp(vertex_count_, -1);
  std::vector<std::vector<int>> adj(vertex_count_);
  for (const Edge& e : edges_) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<std::vector<int>> out;
  for (int s = 0; s < vertex_count_; ++s) {
    if (comp[s] >= 0) continue;
    int c = (int)out.size();
    std::vector<int> stack{s}, members;
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool Digraph::weakly_connected() const { return weak_components().size() == 1; }

IntVec Digraph::incidence_vector(EdgeId id) const {
  const Edge& e = edge(id);
  IntVec x(vertex_count_, 0);
  if (!e.is_loop()) {
    x[e.head] = 1;
    x[e.tail] = -1;
  }
  return x;
}

bool Digraph::is_bridge(EdgeId id) const {
  return deleted(id).weak_components().size() > weak_components().size();
}

bool Digraph::has_parallel(EdgeId id) const {
  const Edge& e = edge(id);
  for (const Edge& f : edges_)
    if (f.id != id && f.tail == e.tail && f.head == e.head) return true;
  return false;
}

std::vector<DirectedCut> directed_elementary_cuts(const Digraph& d) {
  if (!d.weakly_connected()) throw std::invalid_argument("directed_elementary_cuts: disconnected input");
  int n = d.vertex_count();
  std::vector<DirectedCut> cuts;
  if (n < 2) return cuts;

  auto shore_connected = [&](unsigned mask) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    if (verts.empty()) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{verts[0]};
    seen[verts[0]] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Edge& e : d.edges()) {
        if (e.is_loop()) continue;
        int other = -1;
        if (e.tail == v)
          other = e.head;
        else if (e.head == v)
          other = e.tail;
        if (other < 0) continue;
        if (!(mask & (1u << other)) || seen[other]) continue;
        seen[other] = 1;
        ++reached;
        stack.push_back(other);
      }
    }
    return reached == (int)verts.size();
  };

  // Bit 0 pinned to one shore so each bipartition is seen once.
  for (unsigned mask = 1; mask < ((1u << n) - 1); mask += 2) {
    unsigned s = mask;  // contains vertex 0
    unsigned t = ((1u << n) - 1) & ~s;
    if (t == 0) continue;
    int s_to_t = 0, t_to_s = 0;
    std::vector<EdgeId> crossing;
    for (const Edge& e : d.edges()) {
      if (e.is_loop()) continue;
      bool ts = (s >> e.tail) & 1u, hs = (s >> e.head) & 1u;
      if (ts == hs) continue;
      crossing.push_back(e.id);
      if (ts)
        ++s_to_t;
      else
        ++t_to_s;
    }
    if (crossing.empty()) continue;  // cannot happen for connected d
    if (s_to_t != 0 && t_to_s != 0) continue;
    if (!shore_connected(s) || !shore_connected(t)) continue;
    unsigned shore0_mask = (s_to_t != 0) ? s : t;
    DirectedCut cut;
    for (int v = 0; v < n; ++v) {
      if (shore0_mask & (1u << v))
        cut.shore0.push_back(v);
      else
        cut.shore1.push_back(v);
    }
    std::sort(crossing.begin(), crossing.end());
    cut.edge_ids = std::move(crossing);
    cuts.push_back(std::move(cut));
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const DirectedCut& a, const DirectedCut& b) { return a.shore0 < b.shore0; });
  return cuts;
}

}  // namespace rootpoly
