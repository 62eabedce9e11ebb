#pragma once

#include <utility>
#include <vector>

#include "rootpoly/linalg.hpp"

namespace rootpoly {

using EdgeId = int;

struct Edge {
  int tail;
  int head;
  EdgeId id;
  bool is_loop() const { return tail == head; }
};

struct Contraction;

// Directed multigraph with stable edge ids. Ids are the positions in the
// original edge list and survive deletion and contraction, so orderings and
// weights restrict cleanly to minors. Instances are immutable once built.
class Digraph {
 public:
  Digraph(int vertex_count, const std::vector<std::pair<int, int>>& arcs);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return (int)edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const;  // throws on unknown id
  bool has_edge(EdgeId id) const;
  std::vector<EdgeId> edge_ids() const;

  // Same vertices, edge removed, other ids unchanged.
  Digraph deleted(EdgeId e) const;

  // Merge the endpoints of a non-loop edge into the smaller index and compact
  // vertex indices. Loops and parallels created by the merge are kept.
  Contraction contracted(EdgeId e) const;

  // Drop loops; keep the smallest-id representative of each parallel class.
  Digraph reduced() const;

  std::vector<std::vector<int>> weak_components() const;
  bool weakly_connected() const;

  // +1 at the head, -1 at the tail, all-zero for a loop.
  IntVec incidence_vector(EdgeId e) const;

  bool is_bridge(EdgeId e) const;
  bool has_parallel(EdgeId e) const;  // another edge with the same tail and head

 private:
  Digraph() = default;
  static Digraph from_edges(int vertex_count, std::vector<Edge> edges);

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

struct Contraction {
  Digraph graph;
  std::vector<int> vertex_map;  // old vertex index -> new vertex index
};

struct DirectedCut {
  std::vector<int> shore0;       // every cut edge has its tail here
  std::vector<int> shore1;       // and its head here
  std::vector<EdgeId> edge_ids;  // sorted
};

// Every vertex bipartition whose crossing edges all point one way and whose
// shores induce weakly connected subgraphs. Input must be weakly connected.
std::vector<DirectedCut> directed_elementary_cuts(const Digraph& d);

}  // namespace rootpoly
