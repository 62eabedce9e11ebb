#pragma once

#include <unordered_map>
#include <vector>

#include "rootpoly/digraph.hpp"

namespace rootpoly {

// Spanning trees are identified with their sorted edge-id sets.
using SpanningTree = std::vector<EdgeId>;

// Complete duplicate-free enumeration (parallel edges give distinct trees),
// sorted lexicographically by edge-id set. Input must be weakly connected.
std::vector<SpanningTree> spanning_trees(const Digraph& d);

bool is_spanning_tree(const Digraph& d, const SpanningTree& t);

// Fixed edge ordering pi: edge id -> rank 1..m.
class EdgeOrdering {
 public:
  static EdgeOrdering identity(const Digraph& d);  // ascending edge id
  static EdgeOrdering from_rank_order(const std::vector<EdgeId>& ids_in_rank_order);

  int rank(EdgeId id) const;  // 1-based; throws on unknown id
  bool contains(EdgeId id) const;
  int size() const { return (int)by_rank_.size(); }
  const std::vector<EdgeId>& by_rank() const { return by_rank_; }

  // Order-preserving restriction to a subset of the edges, ranks 1..k.
  EdgeOrdering restricted_to(const std::vector<EdgeId>& subset) const;

  EdgeId minimum(const std::vector<EdgeId>& ids) const;
  bool is_bijection_on(const Digraph& d) const;

 private:
  std::vector<EdgeId> by_rank_;
  std::unordered_map<EdgeId, int> rank_of_;
};

struct FundamentalCut {
  EdgeId tree_edge;
  std::vector<EdgeId> edges;     // sorted; contains tree_edge
  std::vector<char> parallel;    // aligned with edges; 1 = stands parallel to tree_edge
  std::vector<int> head_shore;   // component of T-e containing head(tree_edge)
  std::vector<int> tail_shore;

  bool is_parallel(EdgeId id) const;
};

// Edges of d joining the two components of T-e; an edge stands parallel to e
// when its head lies in the same shore as e's head.
FundamentalCut fundamental_cut(const Digraph& d, const SpanningTree& t, EdgeId e);

struct FundamentalCycle {
  EdgeId nontree_edge;
  std::vector<EdgeId> edges;   // sorted; contains nontree_edge
  std::vector<char> parallel;  // aligned with edges; 1 = same cyclic direction as nontree_edge

  bool is_parallel(EdgeId id) const;
  std::vector<EdgeId> parallel_arc() const;  // includes nontree_edge
  std::vector<EdgeId> opposite_arc() const;
};

// The unique cycle in T + f. Cyclic direction is fixed by traversing from f's
// tail along f; loops are rejected.
FundamentalCycle fundamental_cycle(const Digraph& d, const SpanningTree& t, EdgeId f);

// Number of tree edges whose fundamental cut's pi-minimal edge stands
// opposite to them (internally semi-passive edges).
int semi_passive_count(const Digraph& d, const SpanningTree& t, const EdgeOrdering& pi);
int semi_active_count(const Digraph& d, const SpanningTree& t, const EdgeOrdering& pi);

}  // namespace rootpoly
