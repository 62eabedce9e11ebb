#include "rootpoly/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rootpoly {

namespace {

// Nondecreasing sequences over arc-type indices = edge multisets.
template <typename Yield>
void multisets(int types, int max_size, bool allow_repeat, Yield&& yield) {
  std::vector<int> current;
  auto rec = [&](auto&& self, int first) -> void {
    yield(current);
    if ((int)current.size() == max_size) return;
    for (int t = first; t < types; ++t) {
      current.push_back(t);
      self(self, allow_repeat ? t : t + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<std::pair<int, int>> canonical_key(int n, const std::vector<std::pair<int, int>>& arcs,
                                               bool undirected) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool have = false;
  do {
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(arcs.size());
    for (auto [t, h] : arcs) {
      int a = perm[t], b = perm[h];
      if (undirected && a > b) std::swap(a, b);
      mapped.emplace_back(a, b);
    }
    std::sort(mapped.begin(), mapped.end());
    if (!have || mapped < best) {
      best = std::move(mapped);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Digraph> enumerate_digraphs(const CorpusSpec& spec) {
  if (spec.max_vertices < 1) throw std::invalid_argument("corpus needs at least one vertex");
  std::vector<Digraph> out;
  std::set<std::pair<int, std::vector<std::pair<int, int>>>> canon_seen;
  for (int n = 1; n <= spec.max_vertices; ++n) {
    std::vector<std::pair<int, int>> arc_types;
    for (int t = 0; t < n; ++t)
      for (int h = 0; h < n; ++h)
        if (t != h || spec.allow_loops) arc_types.emplace_back(t, h);
    multisets((int)arc_types.size(), spec.max_edges, spec.allow_parallel,
              [&](const std::vector<int>& picks) {
                std::vector<std::pair<int, int>> arcs;
                arcs.reserve(picks.size());
                for (int t : picks) arcs.push_back(arc_types[t]);
                Digraph d(n, arcs);
                if (spec.connected_only && !d.weakly_connected()) return;
                if (spec.dedup && !canon_seen.emplace(n, canonical_key(n, arcs, false)).second)
                  return;
                out.push_back(std::move(d));
              });
  }
  return out;
}

std::vector<UndirectedGraph> enumerate_undirected(const UndirectedCorpusSpec& spec) {
  if (spec.max_vertices < 1) throw std::invalid_argument("corpus needs at least one vertex");
  std::vector<UndirectedGraph> out;
  std::set<std::pair<int, std::vector<std::pair<int, int>>>> canon_seen;
  for (int n = 1; n <= spec.max_vertices; ++n) {
    std::vector<std::pair<int, int>> edge_types;
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v)
        if (u != v || spec.allow_loops) edge_types.emplace_back(u, v);
    multisets((int)edge_types.size(), spec.max_edges, spec.allow_parallel,
              [&](const std::vector<int>& picks) {
                UndirectedGraph g;
                g.vertex_count = n;
                for (int t : picks) g.edges.push_back(edge_types[t]);
                if (!g.connected()) return;
                if (spec.dedup && !canon_seen.emplace(n, canonical_key(n, g.edges, true)).second)
                  return;
                out.push_back(std::move(g));
              });
  }
  return out;
}

}  // namespace rootpoly
