#pragma once

#include <vector>

#include "rootpoly/hstar.hpp"

namespace rootpoly {

struct CorpusSpec {
  int max_vertices = 3;
  int max_edges = 4;
  bool allow_loops = true;
  bool allow_parallel = true;
  bool connected_only = true;
  bool dedup = false;  // keep one representative per isomorphism class
};

// Exhaustive enumeration of labeled digraphs on 1..max_vertices vertices with
// at most max_edges edges (edge lists in nondecreasing arc order).
std::vector<Digraph> enumerate_digraphs(const CorpusSpec& spec);

struct UndirectedCorpusSpec {
  int max_vertices = 4;
  int max_edges = 5;
  bool allow_loops = true;
  bool allow_parallel = true;
  bool dedup = false;
};

// Connected undirected multigraphs within the bounds.
std::vector<UndirectedGraph> enumerate_undirected(const UndirectedCorpusSpec& spec);

}  // namespace rootpoly
