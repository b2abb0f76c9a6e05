#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "imcert/certificate.hpp"
#include "imcert/errors.hpp"
#include "imcert/graph.hpp"
#include "imcert/pattern.hpp"
#include "imcert/verify.hpp"

namespace imcert {

namespace detail {

// Vertices of a greedily grown clique, highest degrees first.
inline std::vector<int> greedy_clique(const SimpleGraph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.neighbors(a).size() > g.neighbors(b).size();
  });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  return clique;
}

// DSATUR greedy coloring; returns the palette size through `colors_used`.
inline std::vector<int> dsatur_coloring(const SimpleGraph& g,
                                        int& colors_used) {
  int n = g.n();
  std::vector<int> col(n, -1);
  std::vector<std::vector<char>> nbr_colors(n);
  std::vector<int> sat(n, 0);
  colors_used = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (col[v] != -1) continue;
      if (best == -1 || sat[v] > sat[best] ||
          (sat[v] == sat[best] &&
           g.neighbors(v).size() > g.neighbors(best).size()))
        best = v;
    }
    int c = 0;
    while (c < static_cast<int>(nbr_colors[best].size()) &&
           nbr_colors[best][c])
      ++c;
    col[best] = c;
    colors_used = std::max(colors_used, c + 1);
    for (int u : g.neighbors(best)) {
      if (static_cast<int>(nbr_colors[u].size()) <= c)
        nbr_colors[u].resize(c + 1, 0);
      if (!nbr_colors[u][c]) {
        nbr_colors[u][c] = 1;
        ++sat[u];
      }
    }
  }
  return col;
}

inline bool color_backtrack(const SimpleGraph& g, const std::vector<int>& order,
                            std::size_t at, int k, int max_used,
                            std::vector<int>& col) {
  if (at == order.size()) return true;
  int v = order[at];
  int cap = std::min(k - 1, max_used + 1);
  for (int c = 0; c <= cap; ++c) {
    bool free = true;
    for (int u : g.neighbors(v))
      if (col[u] == c) {
        free = false;
        break;
      }
    if (!free) continue;
    col[v] = c;
    if (color_backtrack(g, order, at + 1, k, std::max(max_used, c), col))
      return true;
    col[v] = -1;
  }
  return false;
}

}  // namespace detail

// Proper k-coloring if one exists. Clique vertices are placed first so that
// infeasibility for k below the clique number is detected immediately.
inline std::optional<std::vector<int>> proper_coloring(const SimpleGraph& g,
                                                       int k) {
  require(k >= 1, "coloring: need at least one color");
  if (g.n() > 32) throw SizeLimit("coloring: host larger than 32 vertices");
  std::vector<int> clique = detail::greedy_clique(g);
  if (static_cast<int>(clique.size()) > k) return std::nullopt;
  std::vector<char> in_clique(g.n(), 0);
  for (int v : clique) in_clique[v] = 1;
  std::vector<int> rest;
  for (int v = 0; v < g.n(); ++v)
    if (!in_clique[v]) rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
    return g.neighbors(a).size() > g.neighbors(b).size();
  });
  std::vector<int> order = clique;
  order.insert(order.end(), rest.begin(), rest.end());
  std::vector<int> col(g.n(), -1);
  if (!detail::color_backtrack(g, order, 0, k, -1, col)) return std::nullopt;
  return col;
}

// Coloring with the minimum number of colors, found by tightening the DSATUR
// bound downwards until the backtracking search fails.
inline std::vector<int> optimal_coloring(const SimpleGraph& g) {
  require(g.n() >= 1, "coloring: empty host");
  if (g.n() > 32) throw SizeLimit("coloring: host larger than 32 vertices");
  int ub = 0;
  std::vector<int> best = detail::dsatur_coloring(g, ub);
  int lb = static_cast<int>(detail::greedy_clique(g).size());
  for (int k = lb; k < ub; ++k)
    if (auto col = proper_coloring(g, k)) {
      best = *col;
      break;
    }
  return best;
}

inline int chromatic_number_exact(const SimpleGraph& g) {
  std::vector<int> col = optimal_coloring(g);
  return 1 + *std::max_element(col.begin(), col.end());
}

// Vertices reachable from `start` using only the two given color classes,
// sorted ascending. `start` must carry one of the two colors.
inline std::vector<int> kempe_component(const SimpleGraph& g,
                                        const std::vector<int>& col, int start,
                                        int c1, int c2) {
  require(start >= 0 && start < g.n(), "kempe: start outside the host");
  require(col[start] == c1 || col[start] == c2,
          "kempe: start not in either class");
  std::vector<char> seen(g.n(), 0);
  std::queue<int> bfs;
  bfs.push(start);
  seen[start] = 1;
  std::vector<int> comp;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    comp.push_back(v);
    for (int u : g.neighbors(v))
      if (!seen[u] && (col[u] == c1 || col[u] == c2)) {
        seen[u] = 1;
        bfs.push(u);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

struct KempeTrace {
  int recolor_moves = 0;
  int component_flips = 0;
};

namespace detail {

// Shortest path between two vertices of one two-colored component, found by
// BFS restricted to the two classes.
inline std::vector<int> kempe_path(const SimpleGraph& g,
                                   const std::vector<int>& col, int from,
                                   int to, int c1, int c2) {
  std::vector<int> parent(g.n(), -2);
  std::queue<int> bfs;
  bfs.push(from);
  parent[from] = -1;
  while (!bfs.empty() && parent[to] == -2) {
    int v = bfs.front();
    bfs.pop();
    for (int u : g.neighbors(v))
      if (parent[u] == -2 && (col[u] == c1 || col[u] == c2)) {
        parent[u] = v;
        bfs.push(u);
      }
  }
  ensure(parent[to] != -2, "kempe: endpoints in different components");
  std::vector<int> walk;
  for (int v = to; v != -1; v = parent[v]) walk.push_back(v);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

}  // namespace detail

// Immersion of the complete tripartite pattern with parts 1, 1 and chi-2.
//
// Starting from an optimal coloring, vertices of the top class that miss a
// color are recolored away, and two-colored components hanging off the
// surviving apex are switched until every lower color is reachable from one
// top neighbor along its own two-colored component. Each switch removes a
// top-class neighbor of the apex and never adds one, and each recoloring
// shrinks the top class, so the loop ends after at most n^2 rounds. Paths for
// distinct tail vertices live in edge-disjoint two-colored subgraphs, and the
// two apex edges leave the apex itself, so no host edge is ever shared.
inline ImmersionCertificate kempe_immersion(const SimpleGraph& g,
                                            KempeTrace* tr = nullptr) {
  std::vector<int> col = optimal_coloring(g);
  int chi = 1 + *std::max_element(col.begin(), col.end());
  require(chi >= 3, "kempe: chromatic number below 3");
  int s = chi - 2;
  int top = s + 1;

  // Relabel a smallest class to the top so fewer vertices need recoloring.
  std::vector<int> size(chi, 0);
  for (int c : col) ++size[c];
  int small = 0;
  for (int c = 1; c < chi; ++c)
    if (size[c] < size[small]) small = c;
  if (small != top)
    for (int& c : col) {
      if (c == small)
        c = top;
      else if (c == top)
        c = small;
    }

  long guard = 2L * g.n() * g.n() + 8;
  while (true) {
    ensure(--guard >= 0, "kempe: stabilization did not terminate");

    bool moved = false;
    for (int u = 0; u < g.n() && !moved; ++u) {
      if (col[u] != top) continue;
      std::vector<char> seen_color(chi, 0);
      for (int x : g.neighbors(u)) seen_color[col[x]] = 1;
      for (int c = 0; c <= s; ++c)
        if (!seen_color[c]) {
          col[u] = c;
          moved = true;
          if (tr) ++tr->recolor_moves;
          break;
        }
    }
    if (moved) {
      ensure(std::count(col.begin(), col.end(), top) > 0,
             "kempe: top class emptied below the chromatic number");
      continue;
    }

    int apex = -1;
    for (int v = 0; v < g.n() && apex == -1; ++v)
      if (col[v] == top) apex = v;
    ensure(apex != -1, "kempe: no apex candidate");

    std::vector<int> mates;  // top neighbors carrying color s
    for (int u : g.neighbors(apex))
      if (col[u] == s) mates.push_back(u);
    std::sort(mates.begin(), mates.end());
    ensure(!mates.empty(), "kempe: apex lost its color-s neighbors");

    int flip_mate = -1, flip_color = -1;
    for (int w : mates) {
      std::vector<int> tail(s, -1);
      int c = 0;
      for (; c < s; ++c) {
        std::vector<int> comp = kempe_component(g, col, w, s, c);
        for (int u : comp)
          if (col[u] == c && g.adjacent(apex, u)) {
            tail[c] = u;
            break;
          }
        if (tail[c] == -1) break;
      }
      if (c < s) {
        if (flip_mate == -1) {
          flip_mate = w;
          flip_color = c;
        }
        continue;
      }

      ImmersionCertificate cert;
      cert.host = g;
      cert.pattern = TripartitePattern{s};
      cert.branch = {apex, w};
      cert.branch.insert(cert.branch.end(), tail.begin(), tail.end());
      cert.paths.push_back({{apex, w}, {apex, w}});
      for (int i = 0; i < s; ++i)
        cert.paths.push_back({{apex, tail[i]}, {apex, tail[i]}});
      for (int i = 0; i < s; ++i)
        cert.paths.push_back(
            {{w, tail[i]}, detail::kempe_path(g, col, w, tail[i], s, i)});
      ensure(verify_certificate(cert).valid,
             "kempe: assembled certificate failed verification");
      return cert;
    }

    ensure(flip_mate != -1, "kempe: no candidate to switch");
    for (int u : kempe_component(g, col, flip_mate, s, flip_color))
      col[u] = (col[u] == s) ? flip_color : s;
    if (tr) ++tr->component_flips;
  }
}

}  // namespace imcert
