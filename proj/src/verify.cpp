#include "rootpoly/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace rootpoly {

const char* check_name(CheckKind k) {
  switch (k) {
    case CheckKind::Dimension: return "dimension";
    case CheckKind::OracleEquivalence: return "oracle-equivalence";
    case CheckKind::OrderingInvariance: return "ordering-invariance";
    case CheckKind::DeletionMonotone: return "deletion-monotone";
    case CheckKind::ContractionMonotone: return "contraction-monotone";
    case CheckKind::DeletionPredicate: return "deletion-predicate";
    case CheckKind::ContractionPredicate: return "contraction-predicate";
    case CheckKind::VolumeIdentity: return "volume-identity";
    case CheckKind::ContractionLemma: return "contraction-lemma";
    case CheckKind::FacetClassification: return "facet-classification";
    case CheckKind::FundamentalCircuitShape: return "fundamental-circuit-shape";
    case CheckKind::AcyclicityCertificate: return "acyclicity-certificate";
  }
  return "?";
}

std::string digraph_str(const Digraph& d) {
  std::string s = "n=" + std::to_string(d.vertex_count()) + " edges=[";
  for (size_t i = 0; i < d.edges().size(); ++i) {
    const Edge& e = d.edges()[i];
    if (i) s += ",";
    s += "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
  }
  return s + "]";
}

std::vector<EdgeOrdering> sample_orderings(std::vector<EdgeId> ids, int count, std::uint64_t seed) {
  std::sort(ids.begin(), ids.end());
  int m = (int)ids.size();
  Int total = 1;
  bool small = true;
  for (int i = 2; i <= m && small; ++i) {
    total = checked_mul(total, i);
    if (total > count) small = false;
  }
  std::vector<EdgeOrdering> out;
  if (small) {
    std::vector<EdgeId> perm = ids;
    do {
      out.push_back(EdgeOrdering::from_rank_order(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<std::vector<EdgeId>> seen;
  while ((int)out.size() < count) {
    std::vector<EdgeId> perm = ids;
    std::shuffle(perm.begin(), perm.end(), rng);
    if (seen.insert(perm).second) out.push_back(EdgeOrdering::from_rank_order(perm));
  }
  return out;
}

namespace {

std::string tree_str(const SpanningTree& t) {
  std::string s = "{";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + "}";
}

}  // namespace

std::vector<CheckFailure> check_digraph(const Digraph& d, const CheckOptions& opts) {
  std::vector<CheckFailure> failures;
  auto fail = [&](CheckKind kind, std::string detail) {
    failures.push_back({kind, digraph_str(d) + ": " + std::move(detail)});
  };

  Digraph r = d.reduced();
  LatticePolytope p = polytope_of(d);

  if (p.dimension() != d.vertex_count() - 1)
    fail(CheckKind::Dimension, "dim " + std::to_string(p.dimension()));

  Polynomial h = hstar(d);
  Polynomial ho = hstar_from_counts(ehrhart_counts(p, p.dimension()), p.dimension());
  if (!(h == ho))
    fail(CheckKind::OracleEquivalence, "dissection " + h.str() + " vs oracle " + ho.str());

  for (const EdgeOrdering& pi : sample_orderings(d.edge_ids(), opts.ordering_samples, opts.seed)) {
    Polynomial hp = hstar_via_dissection(d, pi);
    if (!(hp == h)) {
      fail(CheckKind::OrderingInvariance, "got " + hp.str() + " expected " + h.str());
      break;
    }
  }

  MonotonicityReport rep = monotonicity_report(d);
  for (const EdgeReport& er : rep.edges) {
    std::string tag = "edge " + std::to_string(er.id);
    if (!er.deletion_le)
      fail(CheckKind::DeletionMonotone, tag + ": " + er.deletion_hstar.str() + " > " + h.str());
    if (!er.deletion_agrees)
      fail(CheckKind::DeletionPredicate,
           tag + ": predicate " + std::to_string(er.deletion_predicate) + " but equality " +
               std::to_string(er.deletion_eq));
    if (!er.loop) {
      if (!er.contraction_le)
        fail(CheckKind::ContractionMonotone,
             tag + ": " + er.contraction_hstar->str() + " > " + h.str());
      if (!er.contraction_agrees)
        fail(CheckKind::ContractionPredicate,
             tag + ": predicate " + std::to_string(er.contraction_predicate) + " but equality " +
                 std::to_string(er.contraction_eq));
    }
  }

  // Volume identity and the dissection certificate.
  EdgeOrdering pi_r = EdgeOrdering::identity(r);
  std::vector<SpanningTree> trees;
  if (r.edge_count() > 0)
    trees = dissecting_tree_set(r, weights_from_ordering(pi_r));
  else
    trees = {{}};
  if ((Int)trees.size() != h.sum())
    fail(CheckKind::VolumeIdentity, "|tree set| " + std::to_string(trees.size()) + " vs h*(1) " +
                                        std::to_string(h.sum()));
  if ((Int)trees.size() != ho.sum())
    fail(CheckKind::VolumeIdentity, "|tree set| vs oracle volume " + std::to_string(ho.sum()));
  {
    std::set<IntVec> barycenters;
    for (const SpanningTree& t : trees) {
      IntVec s(d.vertex_count(), 0);
      for (EdgeId id : t) {
        IntVec x = r.incidence_vector(id);
        for (int i = 0; i < d.vertex_count(); ++i) s[i] = checked_add(s[i], x[i]);
      }
      if (!p.contains(s, d.vertex_count()))
        fail(CheckKind::VolumeIdentity, "barycenter of " + tree_str(t) + " outside the polytope");
      if (!barycenters.insert(s).second)
        fail(CheckKind::VolumeIdentity, "repeated barycenter at " + tree_str(t));
    }
  }

  // Fundamental-circuit shape: for trees of the dissecting set, the arc of f
  // is strictly longer, or arcs tie and the minimal edge is opposite to f.
  for (const SpanningTree& t : trees) {
    for (const Edge& f : r.edges()) {
      if (std::binary_search(t.begin(), t.end(), f.id)) continue;
      FundamentalCycle cyc = fundamental_cycle(r, t, f.id);
      size_t par = cyc.parallel_arc().size(), opp = cyc.opposite_arc().size();
      bool ok = par > opp;
      if (!ok && par == opp) {
        EdgeId min_edge = pi_r.minimum(cyc.edges);
        ok = !cyc.is_parallel(min_edge);
      }
      if (!ok) {
        fail(CheckKind::FundamentalCircuitShape,
             "tree " + tree_str(t) + " edge " + std::to_string(f.id));
        break;
      }
    }
  }

  // Acyclicity certificate: every signed cycle of cir^w has positive inner
  // product with w, so no nonnegative combination of their vectors vanishes.
  {
    ScaledWeights w = (r.edge_count() > 0) ? weights_from_ordering(pi_r)
                                           : ScaledWeights::custom({});
    for (const auto& cycle : all_cycles(r)) {
      SignedCycle sc = cycle_sign(r, w, cycle);
      Int ip = 0;
      for (EdgeId id : sc.positive_arc) ip = checked_add(ip, w.at(id));
      for (EdgeId id : sc.negative_arc) ip = checked_sub(ip, w.at(id));
      if (ip <= 0) {
        fail(CheckKind::AcyclicityCertificate, "cycle with nonpositive weight product");
        break;
      }
    }
  }

  // Contraction lemma: with e first in the ordering, contracting e maps the
  // tree set of R onto the tree set of R/e under the contracted signature.
  for (const Edge& e : r.edges()) {
    std::vector<EdgeId> rank_order{e.id};
    for (EdgeId id : pi_r.by_rank())
      if (id != e.id) rank_order.push_back(id);
    EdgeOrdering pi_e = EdgeOrdering::from_rank_order(rank_order);
    std::vector<SpanningTree> tset = dissecting_tree_set(r, weights_from_ordering(pi_e));
    std::set<SpanningTree> lhs;
    for (const SpanningTree& t : tset) {
      if (!std::binary_search(t.begin(), t.end(), e.id)) continue;
      SpanningTree cut = t;
      std::erase(cut, e.id);
      lhs.insert(cut);
    }
    ScaledWeights wbar = contraction_weights(pi_e, e.id);
    Digraph rc = r.contracted(e.id).graph;
    std::vector<SpanningTree> rhs_list = tree_set_filter(rc, [&](const std::vector<EdgeId>& cyc) {
      return contracted_cycle_sign(r, wbar, e.id, cyc);
    });
    std::set<SpanningTree> rhs(rhs_list.begin(), rhs_list.end());
    if (lhs != rhs) {
      fail(CheckKind::ContractionLemma,
           "edge " + std::to_string(e.id) + ": |lhs|=" + std::to_string(lhs.size()) +
               " |rhs|=" + std::to_string(rhs.size()));
    }
  }

  // Facet structure.
  if (p.dimension() > 0) {
    try {
      FacetClassification fc = classify_facets(d, p);
      size_t origin_facets = 0;
      for (const Halfspace& hs : p.facets())
        if (hs.through_origin) ++origin_facets;
      if (fc.cut_facets.size() != origin_facets ||
          fc.cut_facets.size() != directed_elementary_cuts(d).size())
        fail(CheckKind::FacetClassification, "cut/facet bijection count mismatch");
      if (fc.cut_facets.size() + fc.layering_facets.size() != p.facets().size())
        fail(CheckKind::FacetClassification, "unclassified facets");
    } catch (const structural_error& ex) {
      fail(CheckKind::FacetClassification, ex.what());
    }
  }

  return failures;
}

std::optional<std::string> check_tutte_correspondence(const UndirectedGraph& g) {
  Polynomial t = tutte_x1(g);
  Polynomial h = hstar(subdivide_and_orient(g));
  int r = g.vertex_count - 1;
  if (t.degree() != r) return "T_G(x,1) degree " + std::to_string(t.degree()) + " != rank";
  if (!(h == t.reversed(r)))
    return "h* " + h.str() + " is not the reversal of T_G(x,1) = " + t.str();
  std::vector<Int> hm, tm;
  for (int i = 0; i <= r; ++i) {
    hm.push_back(h.at(i));
    tm.push_back(t.at(i));
  }
  std::sort(hm.begin(), hm.end());
  std::sort(tm.begin(), tm.end());
  if (hm != tm) return "coefficient multisets differ";
  return std::nullopt;
}

}  // namespace rootpoly
