#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "rootpoly/trees.hpp"

namespace rootpoly {

// A cycle whose two arcs have equal total weight. Definition 4.1-style signs
// need strict comparisons, so this is reported, never silently resolved.
struct nongeneric_error : std::runtime_error {
  std::vector<EdgeId> cycle;
  explicit nongeneric_error(std::vector<EdgeId> c);
};

struct long_arc_error : std::runtime_error {
  std::vector<EdgeId> cycle;
  explicit long_arc_error(std::vector<EdgeId> c);
};

// Integer weights, scaled by 2^(m+1) so that w(f) = 1 - 2^(-pi(f)-1) and the
// contraction weight 2^(-pi(e)-1) become exact integer values.
class ScaledWeights {
 public:
  enum class Kind { Base, Contraction, Custom };

  Int at(EdgeId id) const;
  bool has(EdgeId id) const { return weight_.count(id) != 0; }
  Kind kind() const { return kind_; }
  Int scale() const { return scale_; }
  EdgeId contracted_edge() const { return contracted_edge_; }
  const std::map<EdgeId, Int>& map() const { return weight_; }

  static ScaledWeights custom(std::map<EdgeId, Int> weights);

 private:
  friend ScaledWeights weights_from_ordering(const EdgeOrdering&);
  friend ScaledWeights contraction_weights(const EdgeOrdering&, EdgeId);

  Kind kind_ = Kind::Custom;
  Int scale_ = 0;
  EdgeId contracted_edge_ = -1;
  std::map<EdgeId, Int> weight_;
};

// W(f) = 2^(m+1) - 2^(m-pi(f)); generic by construction (distinct powers of 2).
ScaledWeights weights_from_ordering(const EdgeOrdering& pi);

// Like the base weights except W(e) = 2^(m-pi(e)) for the distinguished edge,
// which must be first in the ordering.
ScaledWeights contraction_weights(const EdgeOrdering& pi, EdgeId e);

struct SignedCycle {
  std::vector<EdgeId> edges;         // sorted
  std::vector<EdgeId> positive_arc;  // sorted; the heavier arc
  std::vector<EdgeId> negative_arc;  // sorted

  int sign_of(EdgeId id) const;  // +1 / -1 / 0
  bool is_positive(EdgeId id) const { return sign_of(id) == 1; }
};

// Every simple cycle of the underlying undirected multigraph, length >= 2
// (2-cycles from parallel and antiparallel pairs included), as sorted edge-id
// sets in deterministic order.
std::vector<std::vector<EdgeId>> all_cycles(const Digraph& d);

bool is_cycle(const Digraph& d, const std::vector<EdgeId>& edge_ids);

// Orient the cycle so the arc with strictly larger total weight is positive.
SignedCycle cycle_sign(const Digraph& d, const ScaledWeights& w, const std::vector<EdgeId>& cycle);

// True iff no cycle has two arcs of equal total weight.
bool is_generic(const Digraph& d, const ScaledWeights& w);

// True iff every cycle's heavier arc has at least as many edges as the
// lighter one. Requires generic weights.
bool is_long_arc_positive(const Digraph& d, const ScaledWeights& w);

// Sign of a cycle of d/e under the contracted signature: cycles of d are
// signed directly; the rest lift through e, get signed, and the arcs are
// restricted to the surviving edges.
SignedCycle contracted_cycle_sign(const Digraph& d, const ScaledWeights& wbar, EdgeId e,
                                  const std::vector<EdgeId>& cycle_in_minor);

using CycleSignature = std::function<SignedCycle(const std::vector<EdgeId>&)>;

// Spanning trees T such that every non-tree non-loop edge lies on the
// positive arc of its fundamental cycle. (A loop always counts as positive:
// its lift through a contracted edge puts it on the heavy arc.)
std::vector<SpanningTree> tree_set_filter(const Digraph& d, const CycleSignature& sigma);

// tree(D, cir^W): rejects weights that are not generic or not long arc
// positive, reporting a diagnostic cycle.
std::vector<SpanningTree> dissecting_tree_set(const Digraph& d, const ScaledWeights& w);

}  // namespace rootpoly
