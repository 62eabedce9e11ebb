#pragma once

#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/polynomial.hpp"

namespace rootpoly {

struct Halfspace {
  IntVec normal;               // a, primitive together with the bound
  Int bound;                   // b; a.x <= b on the polytope, k-dilates use k*b
  std::vector<int> incidence;  // generator indices with a.g == b
  bool through_origin;         // a.0 == b, i.e. b == 0
};

struct AffineHull {
  IntVec base;                  // first generator
  IntMat equations;             // rows c with c.x = bound on the hull
  IntVec equation_bounds;       // c.base, k-dilates use k*bound
  std::vector<IntVec> basis;    // saturated direction lattice basis (columns)
  int dim = 0;
};

// V-representation over the integers with the exact facet H-representation
// computed eagerly (brute force over d-subsets of generators). Immutable.
class LatticePolytope {
 public:
  LatticePolytope(int ambient_dim, std::vector<IntVec> generators);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVec>& generators() const { return generators_; }
  const AffineHull& hull() const { return hull_; }
  int dimension() const { return hull_.dim; }
  const std::vector<Halfspace>& facets() const;  // throws for dimension 0
  Int max_coordinate() const { return max_coordinate_; }

  // Membership in the k-th dilate; points off the affine hull give false.
  bool contains(const IntVec& point, Int dilate) const;

 private:
  int ambient_dim_;
  std::vector<IntVec> generators_;
  AffineHull hull_;
  std::vector<Halfspace> facets_;
  Int max_coordinate_ = 0;
};

// conv({0} union {x_e}); loops add nothing, parallels deduplicate.
LatticePolytope polytope_of(const Digraph& d);

// |(k.P) ∩ Z^n| for k = 0..k_max, by pruned box enumeration.
std::vector<Int> ehrhart_counts(const LatticePolytope& p, int k_max);

// h*_i = sum_j (-1)^(i-j) binom(d+1, i-j) L(j); validates h*_0 = 1 and
// nonnegativity, which only fail on upstream counting bugs.
Polynomial hstar_from_counts(const std::vector<Int>& counts, int dim);

struct CutFacet {
  int facet_index;
  DirectedCut cut;
};

struct LayeringFacet {
  int facet_index;
  IntVec layering;                 // min value 0; layering . x_e <= 1 for all e
  std::vector<EdgeId> tight_edges; // sorted; weakly connected subgraph
};

struct FacetClassification {
  std::vector<CutFacet> cut_facets;
  std::vector<LayeringFacet> layering_facets;
};

// Match every origin facet to an elementary directed cut and every other
// facet to an admissible layering; any failure is a structural error.
FacetClassification classify_facets(const Digraph& d, const LatticePolytope& p);

// Shift so the minimum value is 0.
IntVec normalize_layering(IntVec values);

}  // namespace rootpoly
