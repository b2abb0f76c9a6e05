#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "imcert/decompose.hpp"
#include "imcert/errors.hpp"
#include "imcert/graph.hpp"

namespace imcert {

struct ClaimCheck {
  std::string name;
  bool holds = false;
};

// The structural facts the biclique construction leans on once it has a
// decomposition around the smallest non-adjacent pair in an edge-critical
// graph with no pair of non-adjacent vertices sharing ell-1 common neighbors.
// Every fact is re-checked here from the graph itself; callers treat a false
// entry as an internal error.
inline std::vector<ClaimCheck> decomposition_claims(const SimpleGraph& g,
                                                    int ell,
                                                    const PivotDecomposition& d) {
  require(!d.common.empty(), "claims: need a nonempty common neighborhood");
  int n = g.n();
  int h = (n + 1) / 2;
  auto sz = [](const std::vector<int>& v) { return static_cast<int>(v.size()); };
  int cx = sz(d.side_x), cy = sz(d.side_y);
  int xa = sz(d.x_adj_anchor), xna = sz(d.x_nonadj_anchor);
  int ya = sz(d.y_adj_anchor), yna = sz(d.y_nonadj_anchor);

  std::vector<ClaimCheck> out;
  auto add = [&out](const char* name, bool holds) {
    out.push_back({name, holds});
  };

  {
    std::vector<int> hit(n, 0);
    for (int v : d.common) ++hit[v];
    for (int v : d.side_x) ++hit[v];
    for (int v : d.side_y) ++hit[v];
    add("partition", std::all_of(hit.begin(), hit.end(),
                                 [](int c) { return c == 1; }));
  }
  add("side-x-clique", is_clique(g, d.side_x));
  add("side-y-clique", is_clique(g, d.side_y));
  add("common-small", sz(d.common) <= ell - 2);
  add("anchor-misses-x", xna >= 1);
  add("anchor-misses-y", yna >= 1);

  auto subset_sorted = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  add("x-seesall-in-adj", subset_sorted(d.x_sees_all, d.x_adj_anchor));
  add("y-seesall-in-adj", subset_sorted(d.y_sees_all, d.y_adj_anchor));
  add("x-adj-small", xa <= ell - 2);
  add("y-adj-small", ya <= ell - 2);
  add("x-nonadj-large", xna >= h - cy + 3);
  add("y-nonadj-large", yna >= h - cx + 3);
  add("balance",
      xa >= 2 * (ell - yna) || ya >= 2 * (ell - xna));

  auto intersect_count = [&](int v, const std::vector<int>& set) {
    int c = 0;
    for (int w : set)
      if (g.adjacent(v, w)) ++c;
    return c;
  };
  {
    bool ok = true;
    for (int v : d.x_misses_some)
      if (intersect_count(v, d.y_misses_some) <= h - cx) ok = false;
    add("x-misses-rich", ok);
    ok = true;
    for (int v : d.y_misses_some)
      if (intersect_count(v, d.x_misses_some) <= h - cy) ok = false;
    add("y-misses-rich", ok);
  }
  add("x-few-misses-forces",
      sz(d.x_misses_some) >= ell || sz(d.x_sees_all) > h - ell - yna);
  add("y-few-misses-forces",
      sz(d.y_misses_some) >= ell || sz(d.y_sees_all) > h - ell - xna);

  {
    bool ok = true;
    for (int u : d.x_nonadj_anchor)
      for (int w : d.y_nonadj_anchor)
        if (!g.adjacent(u, w)) ok = false;
    add("cross-complete", ok);
  }

  // Recompute the visibility split independently of decompose().
  {
    auto sees_all = [&](int v) {
      for (int c : d.common)
        if (!g.adjacent(v, c)) return false;
      return true;
    };
    bool okx = true;
    for (int v : d.side_x)
      if (sees_all(v) !=
          std::binary_search(d.x_sees_all.begin(), d.x_sees_all.end(), v))
        okx = false;
    add("x-seesall-consistent", okx);
    bool oky = true;
    for (int v : d.side_y)
      if (sees_all(v) !=
          std::binary_search(d.y_sees_all.begin(), d.y_sees_all.end(), v))
        oky = false;
    add("y-seesall-consistent", oky);
  }
  return out;
}

}  // namespace imcert
