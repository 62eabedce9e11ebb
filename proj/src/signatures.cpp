#include "rootpoly/signatures.hpp"

#include <algorithm>
#include <string>

namespace rootpoly {

namespace {

std::string cycle_str(const std::vector<EdgeId>& c) {
  std::string s = "{";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "}";
}

}  // namespace

nongeneric_error::nongeneric_error(std::vector<EdgeId> c)
    : std::runtime_error("equal arc weights on cycle " + cycle_str(c)), cycle(std::move(c)) {}

long_arc_error::long_arc_error(std::vector<EdgeId> c)
    : std::runtime_error("long arc positivity fails on cycle " + cycle_str(c)), cycle(std::move(c)) {}

Int ScaledWeights::at(EdgeId id) const {
  auto it = weight_.find(id);
  if (it == weight_.end())
    throw std::invalid_argument("no weight for edge id " + std::to_string(id));
  return it->second;
}

ScaledWeights ScaledWeights::custom(std::map<EdgeId, Int> weights) {
  for (auto& [id, w] : weights)
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  ScaledWeights sw;
  sw.kind_ = Kind::Custom;
  sw.weight_ = std::move(weights);
  return sw;
}

ScaledWeights weights_from_ordering(const EdgeOrdering& pi) {
  int m = pi.size();
  ScaledWeights sw;
  sw.kind_ = ScaledWeights::Kind::Base;
  sw.scale_ = pow2(m + 1);
  for (EdgeId id : pi.by_rank())
    sw.weight_[id] = checked_sub(sw.scale_, pow2(m - pi.rank(id)));
  return sw;
}

ScaledWeights contraction_weights(const EdgeOrdering& pi, EdgeId e) {
  if (pi.rank(e) != 1)
    throw std::invalid_argument("contraction weights need the distinguished edge first");
  ScaledWeights sw = weights_from_ordering(pi);
  sw.kind_ = ScaledWeights::Kind::Contraction;
  sw.contracted_edge_ = e;
  sw.weight_[e] = pow2(pi.size() - 1);
  return sw;
}

int SignedCycle::sign_of(EdgeId id) const {
  if (std::binary_search(positive_arc.begin(), positive_arc.end(), id)) return 1;
  if (std::binary_search(negative_arc.begin(), negative_arc.end(), id)) return -1;
  return 0;
}

bool is_cycle(const Digraph& d, const std::vector<EdgeId>& edge_ids) {
  if (edge_ids.size() < 2) return false;
  std::map<int, int> degree;
  for (EdgeId id : edge_ids) {
    if (!d.has_edge(id)) return false;
    const Edge& e = d.edge(id);
    if (e.is_loop()) return false;
    ++degree[e.tail];
    ++degree[e.head];
  }
  for (auto& [v, deg] : degree)
    if (deg != 2) return false;
  if (degree.size() != edge_ids.size()) return false;
  // Connectivity of the edge-induced subgraph.
  std::map<int, std::vector<int>> adj;
  for (EdgeId id : edge_ids) {
    const Edge& e = d.edge(id);
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<int> stack{degree.begin()->first};
  std::map<int, char> seen{{stack[0], 1}};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  for (auto& [v, deg] : degree)
    if (!seen[v]) return false;
  return true;
}

std::vector<std::vector<EdgeId>> all_cycles(const Digraph& d) {
  int m = d.edge_count();
  if (m > 24) throw std::invalid_argument("cycle enumeration limited to 24 edges");
  std::vector<std::vector<EdgeId>> cycles;
  const auto& edges = d.edges();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<EdgeId> ids;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) ids.push_back(edges[i].id);
    if (ids.size() < 2) continue;
    if (is_cycle(d, ids)) cycles.push_back(std::move(ids));
  }
  return cycles;
}

namespace {

// Split a cycle into its two direction classes; the class containing the
// start edge comes first. Traversal starts along the start edge from its tail.
std::pair<std::vector<EdgeId>, std::vector<EdgeId>> orient_cycle(const Digraph& d,
                               const std::vector<EdgeId>& cycle, EdgeId start) {
  std::map<int, std::vector<std::pair<int, EdgeId>>> adj;  // vertex -> (other, id)
  for (EdgeId id : cycle) {
    const Edge& e = d.edge(id);
    adj[e.tail].emplace_back(e.head, id);
    adj[e.head].emplace_back(e.tail, id);
  }
  std::vector<EdgeId> with, against;
  const Edge& se = d.edge(start);
  with.push_back(start);
  int v = se.head;
  EdgeId prev = start;
  while (v != se.tail) {
    bool advanced = false;
    for (auto [w, id] : adj[v]) {
      if (id == prev) continue;
      const Edge& e = d.edge(id);
      if (e.tail == v)
        with.push_back(id);
      else
        against.push_back(id);
      prev = id;
      v = w;
      advanced = true;
      break;
    }
    if (!advanced) throw structural_error("orient_cycle: walk got stuck");
  }
  std::sort(with.begin(), with.end());
  std::sort(against.begin(), against.end());
  return {std::move(with), std::move(against)};
}

}  // namespace

SignedCycle cycle_sign(const Digraph& d, const ScaledWeights& w, const std::vector<EdgeId>& cycle) {
  std::vector<EdgeId> ids = cycle;
  std::sort(ids.begin(), ids.end());
  if (!is_cycle(d, ids)) throw std::invalid_argument("cycle_sign: not a cycle " + cycle_str(ids));
  auto [arc_a, arc_b] = orient_cycle(d, ids, ids[0]);
  Int sum_a = 0, sum_b = 0;
  for (EdgeId id : arc_a) sum_a = checked_add(sum_a, w.at(id));
  for (EdgeId id : arc_b) sum_b = checked_add(sum_b, w.at(id));
  if (sum_a == sum_b) throw nongeneric_error(ids);
  SignedCycle sc;
  sc.edges = std::move(ids);
  if (sum_a > sum_b) {
    sc.positive_arc = std::move(arc_a);
    sc.negative_arc = std::move(arc_b);
  } else {
    sc.positive_arc = std::move(arc_b);
    sc.negative_arc = std::move(arc_a);
  }
  return sc;
}

bool is_generic(const Digraph& d, const ScaledWeights& w) {
  for (const auto& cycle : all_cycles(d)) {
    try {
      cycle_sign(d, w, cycle);
    } catch (const nongeneric_error&) {
      return false;
    }
  }
  return true;
}

bool is_long_arc_positive(const Digraph& d, const ScaledWeights& w) {
  for (const auto& cycle : all_cycles(d)) {
    SignedCycle sc = cycle_sign(d, w, cycle);  // nongeneric_error propagates
    if (sc.positive_arc.size() < sc.negative_arc.size()) return false;
  }
  return true;
}

SignedCycle contracted_cycle_sign(const Digraph& d, const ScaledWeights& wbar, EdgeId e,
                                  const std::vector<EdgeId>& cycle_in_minor) {
  const Edge& ce = d.edge(e);
  if (ce.is_loop()) throw std::invalid_argument("contracted_cycle_sign: loop edge");
  Digraph minor = d.contracted(e).graph;
  std::vector<EdgeId> ids = cycle_in_minor;
  std::sort(ids.begin(), ids.end());
  if (!is_cycle(minor, ids))
    throw std::invalid_argument("contracted_cycle_sign: not a cycle of the contraction");
  if (is_cycle(d, ids)) return cycle_sign(d, wbar, ids);
  std::vector<EdgeId> lifted = ids;
  lifted.push_back(e);
  std::sort(lifted.begin(), lifted.end());
  if (!is_cycle(d, lifted))
    throw structural_error("contracted_cycle_sign: lift is not a cycle");
  SignedCycle sc = cycle_sign(d, wbar, lifted);
  auto drop = [e](std::vector<EdgeId>& arc) { std::erase(arc, e); };
  drop(sc.positive_arc);
  drop(sc.negative_arc);
  sc.edges = std::move(ids);
  return sc;
}

std::vector<SpanningTree> tree_set_filter(const Digraph& d, const CycleSignature& sigma) {
  std::vector<SpanningTree> kept;
  for (const SpanningTree& t : spanning_trees(d)) {
    bool ok = true;
    for (const Edge& f : d.edges()) {
      if (f.is_loop()) continue;
      if (std::binary_search(t.begin(), t.end(), f.id)) continue;
      FundamentalCycle cyc = fundamental_cycle(d, t, f.id);
      if (!sigma(cyc.edges).is_positive(f.id)) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(t);
  }
  return kept;
}

std::vector<SpanningTree> dissecting_tree_set(const Digraph& d, const ScaledWeights& w) {
  if (!d.weakly_connected()) throw std::invalid_argument("dissecting_tree_set: disconnected input");
  for (const auto& cycle : all_cycles(d)) {
    SignedCycle sc = cycle_sign(d, w, cycle);  // nongeneric_error carries the cycle
    if (sc.positive_arc.size() < sc.negative_arc.size()) throw long_arc_error(cycle);
  }
  return tree_set_filter(d, [&](const std::vector<EdgeId>& cycle) { return cycle_sign(d, w, cycle); });
}

}  // namespace rootpoly
