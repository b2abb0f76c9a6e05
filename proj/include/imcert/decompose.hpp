#pragma once

#include <algorithm>
#include <vector>

#include "imcert/errors.hpp"
#include "imcert/graph.hpp"

namespace imcert {

// Structure around a non-adjacent pivot pair (x, y) in a graph with
// independence number at most 2. side_x collects the non-neighbors of y
// (including x), side_y the non-neighbors of x; both are cliques and together
// with the common neighborhood they partition the vertex set. The refinements
// split each side by visibility of the whole common set and of the anchor,
// the smallest common neighbor.
struct PivotDecomposition {
  int pivot_x = -1;
  int pivot_y = -1;
  int anchor = -1;              // smallest common neighbor, -1 if none
  std::vector<int> common;      // N(x) vs N(y) intersection
  std::vector<int> side_x;      // non-neighbors of y, contains x
  std::vector<int> side_y;      // non-neighbors of x, contains y

  std::vector<int> x_sees_all;      // side_x vertices adjacent to all of common
  std::vector<int> x_misses_some;   // the rest of side_x
  std::vector<int> x_adj_anchor;    // side_x vertices adjacent to the anchor
  std::vector<int> x_nonadj_anchor; // side_x vertices missing the anchor
  std::vector<int> y_sees_all;
  std::vector<int> y_misses_some;
  std::vector<int> y_adj_anchor;
  std::vector<int> y_nonadj_anchor;
};

inline PivotDecomposition decompose(const SimpleGraph& g, int x, int y) {
  require(0 <= x && x < g.n() && 0 <= y && y < g.n() && x != y,
          "decompose: pivots must be two distinct vertices");
  require(!g.adjacent(x, y), "decompose: pivots must be non-adjacent");

  PivotDecomposition d;
  d.pivot_x = x;
  d.pivot_y = y;
  d.common = common_neighbors(g, x, y);
  d.anchor = d.common.empty() ? -1 : d.common.front();
  for (int v = 0; v < g.n(); ++v) {
    if (v != y && !g.adjacent(v, y)) d.side_x.push_back(v);
    if (v != x && !g.adjacent(v, x)) d.side_y.push_back(v);
  }

  auto sees_all_common = [&](int v) {
    for (int c : d.common)
      if (!g.adjacent(v, c)) return false;
    return true;
  };
  for (int v : d.side_x) {
    (sees_all_common(v) ? d.x_sees_all : d.x_misses_some).push_back(v);
    if (d.anchor != -1)
      (g.adjacent(v, d.anchor) ? d.x_adj_anchor : d.x_nonadj_anchor)
          .push_back(v);
  }
  for (int v : d.side_y) {
    (sees_all_common(v) ? d.y_sees_all : d.y_misses_some).push_back(v);
    if (d.anchor != -1)
      (g.adjacent(v, d.anchor) ? d.y_adj_anchor : d.y_nonadj_anchor)
          .push_back(v);
  }
  return d;
}

}  // namespace imcert
