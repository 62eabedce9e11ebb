#pragma once

#include "rootpoly/digraph.hpp"

// Small digraphs used throughout the tests. Vertices u,v,w = 0,1,2 and the
// edge labels e1,e2,e3 from the figures are ids 0,1,2.
inline rootpoly::Digraph f1() { return rootpoly::Digraph(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline rootpoly::Digraph f2() { return rootpoly::Digraph(2, {{0, 1}}); }
inline rootpoly::Digraph f3() { return rootpoly::Digraph(2, {{0, 1}, {0, 1}}); }
inline rootpoly::Digraph f4() {
  return rootpoly::Digraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
}
inline rootpoly::Digraph f5() { return rootpoly::Digraph(3, {{0, 1}, {1, 2}}); }
inline rootpoly::Digraph digon() { return rootpoly::Digraph(2, {{0, 1}, {1, 0}}); }
