#include "rootpoly/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rootpoly {

namespace {

// t-coordinates of a point on the hull: solve base + basis * t = point.
IntVec hull_coordinates(const AffineHull& hull, const IntVec& point) {
  int n = (int)point.size();
  int d = hull.dim;
  IntMat basis_matrix(n, IntVec(d));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) basis_matrix[i][j] = hull.basis[j][i];
  IntVec rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = checked_sub(point[i], hull.base[i]);
  auto t = solve_integer(basis_matrix, rhs);
  if (!t) throw structural_error("hull basis does not reach a hull lattice point");
  return *t;
}

}  // namespace

LatticePolytope::LatticePolytope(int ambient_dim, std::vector<IntVec> gens)
    : ambient_dim_(ambient_dim), generators_(std::move(gens)) {
  if (generators_.empty()) throw std::invalid_argument("polytope needs at least one generator");
  for (const auto& g : generators_) {
    if ((int)g.size() != ambient_dim_) throw std::invalid_argument("generator dimension mismatch");
    for (Int c : g) max_coordinate_ = std::max(max_coordinate_, c < 0 ? -c : c);
  }
  {
    std::set<IntVec> distinct(generators_.begin(), generators_.end());
    if (distinct.size() != generators_.size())
      throw std::invalid_argument("generators must be distinct");
  }

  int n = ambient_dim_;
  hull_.base = generators_[0];
  IntMat diffs;
  for (size_t i = 1; i < generators_.size(); ++i) {
    IntVec row(n);
    for (int j = 0; j < n; ++j) row[j] = checked_sub(generators_[i][j], hull_.base[j]);
    diffs.push_back(std::move(row));
  }
  hull_.dim = diffs.empty() ? 0 : rank(diffs);
  hull_.equations = [&] {
    IntMat eqs;
    for (auto& c : kernel_basis(diffs, n)) eqs.push_back(primitive(std::move(c)));
    return eqs;
  }();
  for (const auto& c : hull_.equations) hull_.equation_bounds.push_back(dot(c, hull_.base));
  hull_.basis = kernel_basis(hull_.equations, n);
  if ((int)hull_.basis.size() != hull_.dim)
    throw structural_error("hull basis dimension mismatch");

  int d = hull_.dim;
  if (d == 0) return;

  // t-coordinates of every generator; the polytope is full-dimensional there.
  std::vector<IntVec> tpts;
  tpts.reserve(generators_.size());
  for (const auto& g : generators_) tpts.push_back(hull_coordinates(hull_, g));

  // Candidate facet hyperplanes through d-subsets of generators.
  int g = (int)tpts.size();
  std::set<std::pair<IntVec, Int>> seen;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  auto advance = [&]() {
    int i = d - 1;
    while (i >= 0 && idx[i] == g - d + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  do {
    std::vector<IntVec> subset;
    subset.reserve(d);
    for (int i : idx) subset.push_back(tpts[i]);
    IntVec normal = hyperplane_normal(subset);
    if (normal.empty()) continue;
    Int b = dot(normal, subset[0]);
    bool below = false, above = false;
    for (const auto& t : tpts) {
      Int v = dot(normal, t);
      if (v < b) below = true;
      if (v > b) above = true;
    }
    if (below && above) continue;
    if (!below && !above) throw structural_error("all generators on a hyperplane of full-dim hull");
    if (above) {
      for (Int& c : normal) c = -c;
      b = -b;
    }
    if (!seen.emplace(normal, b).second) continue;

    Halfspace hs;
    for (int i = 0; i < g; ++i)
      if (dot(normal, tpts[i]) == b) hs.incidence.push_back(i);
    // Lift to an ambient functional: solve basis^T a = normal.
    IntMat bt(d, IntVec(ambient_dim_));
    for (int i = 0; i < d; ++i) bt[i] = hull_.basis[i];
    auto a = solve_integer(bt, normal);
    if (!a) throw structural_error("facet lift has no integer solution");
    Int bound = checked_add(b, dot(*a, hull_.base));
    IntVec joint = *a;
    joint.push_back(bound);
    Int c = content(joint);
    if (c > 1) {
      for (Int& x : *a) x /= c;
      bound /= c;
    }
    hs.normal = std::move(*a);
    hs.bound = bound;
    hs.through_origin = (bound == 0);
    facets_.push_back(std::move(hs));
  } while (advance());

  std::sort(facets_.begin(), facets_.end(), [](const Halfspace& x, const Halfspace& y) {
    return std::tie(x.normal, x.bound) < std::tie(y.normal, y.bound);
  });
}

const std::vector<Halfspace>& LatticePolytope::facets() const {
  if (hull_.dim == 0) throw std::invalid_argument("facets: zero-dimensional polytope");
  return facets_;
}

bool LatticePolytope::contains(const IntVec& point, Int dilate) const {
  if ((int)point.size() != ambient_dim_) throw std::invalid_argument("contains: dimension mismatch");
  if (dilate < 0) throw std::invalid_argument("contains: negative dilate");
  for (size_t i = 0; i < hull_.equations.size(); ++i)
    if (dot(hull_.equations[i], point) != checked_mul(dilate, hull_.equation_bounds[i])) return false;
  for (const Halfspace& hs : facets_)
    if (dot(hs.normal, point) > checked_mul(dilate, hs.bound)) return false;
  return true;
}

LatticePolytope polytope_of(const Digraph& d) {
  std::vector<IntVec> gens{IntVec(d.vertex_count(), 0)};
  std::set<IntVec> seen{gens[0]};
  for (const Edge& e : d.edges()) {
    IntVec x = d.incidence_vector(e.id);
    if (seen.insert(x).second) gens.push_back(std::move(x));
  }
  LatticePolytope p(d.vertex_count(), std::move(gens));
  int c = (int)d.weak_components().size();
  if (p.dimension() != d.vertex_count() - c)
    throw structural_error("polytope dimension disagrees with |V| - c");
  return p;
}

std::vector<Int> ehrhart_counts(const LatticePolytope& p, int k_max) {
  if (k_max < 0) throw std::invalid_argument("ehrhart_counts: negative k_max");
  std::vector<Int> counts{1};
  int n = p.ambient_dim();

  struct Constraint {
    IntVec coeff;
    Int bound;      // at dilate k the bound is k*bound
    bool equality;  // otherwise coeff.x <= bound
  };
  std::vector<Constraint> cons;
  for (size_t i = 0; i < p.hull().equations.size(); ++i)
    cons.push_back({p.hull().equations[i], p.hull().equation_bounds[i], true});
  if (p.dimension() > 0)
    for (const Halfspace& hs : p.facets()) cons.push_back({hs.normal, hs.bound, false});

  for (int k = 1; k <= k_max; ++k) {
    Int radius = checked_mul((Int)k, p.max_coordinate());
    // Suffix bounds: the reachable range of each constraint over coordinates >= i.
    std::vector<IntVec> suf_min(cons.size(), IntVec(n + 1, 0));
    std::vector<IntVec> suf_max(cons.size(), IntVec(n + 1, 0));
    for (size_t c = 0; c < cons.size(); ++c) {
      for (int i = n - 1; i >= 0; --i) {
        Int amp = checked_mul(cons[c].coeff[i] < 0 ? -cons[c].coeff[i] : cons[c].coeff[i], radius);
        suf_min[c][i] = checked_sub(suf_min[c][i + 1], amp);
        suf_max[c][i] = checked_add(suf_max[c][i + 1], amp);
      }
    }
    std::vector<Int> partial(cons.size(), 0);
    IntVec point(n, 0);
    Int count = 0;
    auto feasible = [&](int depth) {
      for (size_t c = 0; c < cons.size(); ++c) {
        Int target = checked_mul((Int)k, cons[c].bound);
        Int lo = checked_add(partial[c], suf_min[c][depth]);
        Int hi = checked_add(partial[c], suf_max[c][depth]);
        if (lo > target) return false;
        if (cons[c].equality && hi < target) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, int depth) -> void {
      if (!feasible(depth)) return;
      if (depth == n) {
        ++count;
        return;
      }
      for (Int v = -radius; v <= radius; ++v) {
        point[depth] = v;
        for (size_t c = 0; c < cons.size(); ++c)
          partial[c] = checked_add(partial[c], checked_mul(cons[c].coeff[depth], v));
        self(self, depth + 1);
        for (size_t c = 0; c < cons.size(); ++c)
          partial[c] = checked_sub(partial[c], checked_mul(cons[c].coeff[depth], v));
      }
      point[depth] = 0;
    };
    rec(rec, 0);
    counts.push_back(count);
  }
  return counts;
}

Polynomial hstar_from_counts(const std::vector<Int>& counts, int dim) {
  if ((int)counts.size() < dim + 1)
    throw std::invalid_argument("hstar_from_counts: need counts up to the dimension");
  std::vector<Int> h(dim + 1, 0);
  for (int i = 0; i <= dim; ++i) {
    Int acc = 0;
    for (int j = 0; j <= i; ++j) {
      Int term = checked_mul(binomial(dim + 1, i - j), counts[j]);
      acc = ((i - j) % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
    }
    h[i] = acc;
  }
  if (h[0] != 1) throw structural_error("h*_0 != 1: upstream counting bug");
  for (Int c : h)
    if (c < 0) throw structural_error("negative h* coefficient: upstream counting bug");
  return Polynomial::from_coeffs(std::move(h));
}

IntVec normalize_layering(IntVec values) {
  if (values.empty()) return values;
  Int m = *std::min_element(values.begin(), values.end());
  for (Int& v : values) v = checked_sub(v, m);
  return values;
}

FacetClassification classify_facets(const Digraph& d, const LatticePolytope& p) {
  if (!d.weakly_connected()) throw std::invalid_argument("classify_facets: disconnected input");
  FacetClassification out;
  if (p.dimension() == 0) return out;

  std::vector<DirectedCut> cuts = directed_elementary_cuts(d);
  std::vector<char> cut_used(cuts.size(), 0);
  int n = d.vertex_count();

  const auto& facets = p.facets();
  for (int fi = 0; fi < (int)facets.size(); ++fi) {
    const Halfspace& hs = facets[fi];
    if (hs.through_origin) {
      // Normalize -normal modulo the all-ones vector to the 0/1 shore labels.
      IntVec v(n);
      for (int i = 0; i < n; ++i) v[i] = -hs.normal[i];
      v = primitive(normalize_layering(std::move(v)));
      for (Int x : v)
        if (x != 0 && x != 1) throw structural_error("origin facet normal is not a 0/1 cut vector");
      std::vector<int> shore0, shore1;
      for (int i = 0; i < n; ++i) (v[i] == 0 ? shore0 : shore1).push_back(i);
      int match = -1;
      for (size_t ci = 0; ci < cuts.size(); ++ci)
        if (cuts[ci].shore0 == shore0 && cuts[ci].shore1 == shore1) {
          match = (int)ci;
          break;
        }
      if (match < 0) throw structural_error("origin facet matches no elementary directed cut");
      if (cut_used[match]) throw structural_error("elementary directed cut matched twice");
      cut_used[match] = 1;
      // f_{C*}.x_e must be 1 exactly on the cut and 0 elsewhere.
      for (const Edge& e : d.edges()) {
        Int val = checked_sub(v[e.head], v[e.tail]);
        bool in_cut = std::binary_search(cuts[match].edge_ids.begin(), cuts[match].edge_ids.end(), e.id);
        if (val != (in_cut ? 1 : 0)) throw structural_error("cut facet/edge pattern mismatch");
      }
      out.cut_facets.push_back({fi, cuts[match]});
    } else {
      // Shift modulo the all-ones vector, then strip the common scale; what is
      // left must be an integer layering at level 1.
      IntVec v = normalize_layering(hs.normal);
      IntVec joint = v;
      joint.push_back(hs.bound);
      Int c = content(joint);
      if (hs.bound != c) throw structural_error("non-origin facet does not normalize to level 1");
      if (c > 1)
        for (Int& x : v) x /= c;
      LayeringFacet lf;
      lf.facet_index = fi;
      lf.layering = std::move(v);
      for (const Edge& e : d.edges()) {
        Int val = checked_sub(lf.layering[e.head], lf.layering[e.tail]);
        if (val > 1) throw structural_error("layering exceeds 1 on an edge");
        if (val == 1) lf.tight_edges.push_back(e.id);
      }
      std::sort(lf.tight_edges.begin(), lf.tight_edges.end());
      if (lf.tight_edges.empty()) throw structural_error("layering facet with no tight edges");
      // Tight edges must form a weakly connected subgraph.
      std::vector<std::pair<int, int>> arcs;
      std::map<int, int> vmap;
      for (EdgeId id : lf.tight_edges) {
        const Edge& e = d.edge(id);
        if (!vmap.count(e.tail)) vmap[e.tail] = (int)vmap.size();
        if (!vmap.count(e.head)) vmap[e.head] = (int)vmap.size();
        arcs.emplace_back(vmap[e.tail], vmap[e.head]);
      }
      Digraph tight((int)vmap.size(), arcs);
      if (!tight.weakly_connected()) throw structural_error("tight edges are not weakly connected");
      out.layering_facets.push_back(std::move(lf));
    }
  }
  for (size_t ci = 0; ci < cuts.size(); ++ci)
    if (!cut_used[ci]) throw structural_error("elementary directed cut without a facet");
  return out;
}

}  // namespace rootpoly
