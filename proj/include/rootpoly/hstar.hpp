#pragma once

#include <optional>
#include <vector>

#include "rootpoly/geometry.hpp"
#include "rootpoly/signatures.hpp"

namespace rootpoly {

// h* as the semi-passivity generating function over tree(D, cir^w) with
// w induced by pi; the digraph is reduced first and pi restricted to the
// surviving edges.
Polynomial hstar_via_dissection(const Digraph& d, const EdgeOrdering& pi);

// Canonical entry point: ascending edge ids. The result does not depend on
// the ordering.
Polynomial hstar(const Digraph& d);

// Product of the component h*-polynomials; the extended root polytope of a
// disjoint union is the free sum over the shared origin vertex.
Polynomial hstar_components(const Digraph& d);

// h* straight from lattice-point counts, independent of the tree machinery.
Polynomial hstar_oracle(const Digraph& d);

// True iff e is a loop, a bridge, or has a parallel copy; equivalent to
// h*_D = h*_{D-e}.
bool deletion_equality_predicate(const Digraph& d, EdgeId e);

// True iff every facet avoiding the origin contains x_e; equivalent to
// h*_D = h*_{D/e}. Loops are rejected.
bool contraction_equality_predicate(const Digraph& d, EdgeId e);

struct EdgeReport {
  EdgeId id = -1;
  bool loop = false;
  Polynomial deletion_hstar;
  bool deletion_le = false;
  bool deletion_eq = false;
  bool deletion_predicate = false;
  bool deletion_agrees = false;
  std::optional<Polynomial> contraction_hstar;  // absent for loops
  bool contraction_le = false;
  bool contraction_eq = false;
  bool contraction_predicate = false;
  bool contraction_agrees = false;
};

struct MonotonicityReport {
  Polynomial hstar;
  std::vector<EdgeReport> edges;

  bool all_le() const;
  bool all_agree() const;
};

MonotonicityReport monotonicity_report(const Digraph& d);

struct UndirectedGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // loops and parallels allowed

  bool connected() const;
};

// Each edge uv becomes a fresh vertex m with directed edges u->m and v->m.
Digraph subdivide_and_orient(const UndirectedGraph& g);

// T_G(x,1) by deletion-contraction: bridges contribute a factor x, loops a
// factor 1. Independent of the polytope machinery.
Polynomial tutte_x1(const UndirectedGraph& g);

}  // namespace rootpoly
