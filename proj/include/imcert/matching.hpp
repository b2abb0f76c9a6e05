#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "imcert/errors.hpp"
#include "imcert/graph.hpp"
#include "json.hpp"

namespace imcert {

using Matching = std::vector<VertexPair>;

// Proper edge coloring of a bipartite multigraph with k colors, k at least
// the maximum degree. Edges are inserted one by one in the order given; when
// the smallest free color a at u is taken at w, the alternating a/b path
// starting at w is flipped first (it can never reach u: the path enters
// vertices on u's side only through color-a edges, and a is free at u).
// Returns one color in [0,k) per edge instance, aligned with `edges`.
inline std::vector<int> bipartite_edge_coloring(
    int n, const std::vector<char>& side, const std::vector<VertexPair>& edges,
    int k) {
  require(n >= 0 && static_cast<int>(side.size()) == n,
          "edge coloring: side vector must have one entry per vertex");
  require(k >= 1, "edge coloring: need at least one color");
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    require(0 <= u && u < n && 0 <= v && v < n && u != v,
            "edge coloring: bad edge endpoint");
    require(side[u] != side[v], "edge coloring: edge inside one side");
    ++deg[u];
    ++deg[v];
  }
  for (int d : deg)
    require(d <= k, "edge coloring: k below maximum degree");

  std::vector<std::vector<int>> at(n, std::vector<int>(k, -1));
  std::vector<int> col(edges.size(), -1);
  auto other = [&](int e, int x) {
    return edges[e].first == x ? edges[e].second : edges[e].first;
  };
  auto free_color = [&](int x) {
    for (int c = 0; c < k; ++c)
      if (at[x][c] == -1) return c;
    return -1;
  };

  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [u, w] = edges[e];
    int a = free_color(u);
    int b = free_color(w);
    ensure(a != -1 && b != -1, "edge coloring: no free color during insert");
    if (a != b && at[w][a] != -1) {
      // Collect the alternating a/b path from w, then toggle its colors.
      std::vector<int> path;
      int x = w, c = a;
      while (at[x][c] != -1) {
        int pe = at[x][c];
        path.push_back(pe);
        x = other(pe, x);
        c = (c == a) ? b : a;
      }
      for (int pe : path) {
        ensure(edges[pe].first != u && edges[pe].second != u,
               "edge coloring: alternating path touched the anchor vertex");
        int oldc = col[pe];
        if (at[edges[pe].first][oldc] == pe) at[edges[pe].first][oldc] = -1;
        if (at[edges[pe].second][oldc] == pe) at[edges[pe].second][oldc] = -1;
      }
      for (int pe : path) {
        int newc = (col[pe] == a) ? b : a;
        col[pe] = newc;
        ensure(at[edges[pe].first][newc] == -1 &&
                   at[edges[pe].second][newc] == -1,
               "edge coloring: flip produced a clash");
        at[edges[pe].first][newc] = pe;
        at[edges[pe].second][newc] = pe;
      }
      ensure(at[w][a] == -1, "edge coloring: color still busy after flip");
    }
    col[e] = a;
    at[u][a] = e;
    at[w][a] = e;
  }

  // Independent properness check against the raw instance list.
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    ensure(0 <= col[e] && col[e] < k, "edge coloring: uncolored edge");
    ensure(seen.insert({edges[e].first, col[e]}).second &&
               seen.insert({edges[e].second, col[e]}).second,
           "edge coloring: two incident edges share a color");
  }
  return col;
}

// Given j subsets of {0,...,ground_n-1}, each of size k, with j <= k, returns
// matchings M_0..M_{j-1} that are pairwise edge-disjoint, where M_i perfectly
// matches the fresh vertices ground_n+0 .. ground_n+k-1 into the i-th set.
// Built by k-edge-coloring the membership graph: color t at set i picks the
// partner of fresh vertex ground_n+t.
inline std::vector<Matching> disjoint_representative_matchings(
    int ground_n, const std::vector<std::vector<int>>& sets) {
  require(ground_n >= 0, "representative matchings: negative ground size");
  int j = static_cast<int>(sets.size());
  require(j >= 1, "representative matchings: need at least one set");
  int k = static_cast<int>(sets[0].size());
  require(k >= 1, "representative matchings: sets must be nonempty");
  require(j <= k, "representative matchings: more sets than set size");
  for (const auto& s : sets) {
    require(static_cast<int>(s.size()) == k,
            "representative matchings: sets must all have equal size");
    std::set<int> dedup(s.begin(), s.end());
    require(static_cast<int>(dedup.size()) == k,
            "representative matchings: repeated element in a set");
    for (int w : s)
      require(0 <= w && w < ground_n,
              "representative matchings: element out of range");
  }

  int n = ground_n + j;
  std::vector<char> side(n, 0);
  for (int i = 0; i < j; ++i) side[ground_n + i] = 1;
  std::vector<VertexPair> edges;
  for (int i = 0; i < j; ++i) {
    std::vector<int> s = sets[i];
    std::sort(s.begin(), s.end());
    for (int w : s) edges.push_back({w, ground_n + i});
  }
  std::vector<int> col = bipartite_edge_coloring(n, side, edges, k);

  std::vector<Matching> out(j, Matching(k, {-1, -1}));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int i = edges[e].second - ground_n;
    out[i][col[e]] = {ground_n + col[e], edges[e].first};
  }
  std::set<VertexPair> used;
  for (int i = 0; i < j; ++i)
    for (int t = 0; t < k; ++t) {
      ensure(out[i][t].first != -1,
             "representative matchings: color class missing at a set vertex");
      ensure(used.insert(out[i][t]).second,
             "representative matchings: matchings share an edge");
    }
  return out;
}

// Kuhn's augmenting-path maximum matching. adj[l] lists right neighbors of
// left vertex l. Returns matchL with -1 for unmatched left vertices.
inline std::vector<int> max_bipartite_matching(
    int nleft, int nright, const std::vector<std::vector<int>>& adj) {
  require(static_cast<int>(adj.size()) == nleft,
          "max matching: adjacency size mismatch");
  std::vector<int> matchL(nleft, -1), matchR(nright, -1);
  std::vector<char> seen(nright, 0);
  std::function<bool(int)> grow = [&](int l) {
    for (int r : adj[l]) {
      require(0 <= r && r < nright, "max matching: neighbor out of range");
      if (seen[r]) continue;
      seen[r] = 1;
      if (matchR[r] == -1 || grow(matchR[r])) {
        matchR[r] = l;
        matchL[l] = r;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < nleft; ++l) {
    std::fill(seen.begin(), seen.end(), 0);
    grow(l);
  }
  return matchL;
}

// Sequence of disjoint vertex pairs (A_i, B_i) inside a 2k-vertex universe.
struct ABPairs {
  int k = 0;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
};

// Builds pairwise edge-disjoint perfect matchings between A_i and B_i, one
// pair at a time, never reusing an edge. Feasibility at step i rests on
// |A_i| >= 2i: every vertex carries at most i used edges by then, so a Hall
// violation would force |A_i| < 2i.
inline std::vector<Matching> hall_disjoint_AB_matchings(const ABPairs& in) {
  require(in.k >= 1, "AB matchings: k must be positive");
  int k = in.k;
  int m = static_cast<int>(in.pairs.size());
  require(m >= 1 && m <= k, "AB matchings: need between 1 and k pairs");
  for (int i = 0; i < m; ++i) {
    const auto& [A, B] = in.pairs[i];
    require(A.size() == B.size(), "AB matchings: |A_i| != |B_i|");
    require(static_cast<int>(A.size()) <= k, "AB matchings: |A_i| > k");
    require(static_cast<int>(A.size()) >= 2 * i,
            "AB matchings: |A_i| below 2i");
    std::set<int> all;
    for (int v : A) {
      require(0 <= v && v < 2 * k, "AB matchings: vertex out of range");
      require(all.insert(v).second, "AB matchings: repeated vertex in A_i");
    }
    for (int v : B) {
      require(0 <= v && v < 2 * k, "AB matchings: vertex out of range");
      require(all.insert(v).second,
              "AB matchings: A_i and B_i must be disjoint");
    }
  }

  std::set<VertexPair> used;
  std::vector<int> load(2 * k, 0);
  std::vector<Matching> out;
  for (int i = 0; i < m; ++i) {
    const auto& [A, B] = in.pairs[i];
    int s = static_cast<int>(A.size());
    std::vector<std::vector<int>> adj(s);
    for (int l = 0; l < s; ++l)
      for (int r = 0; r < s; ++r)
        if (!used.count(ordered(A[l], B[r]))) adj[l].push_back(r);
    std::vector<int> matchL = max_bipartite_matching(s, s, adj);
    Matching mi;
    for (int l = 0; l < s; ++l) {
      ensure(matchL[l] != -1, "AB matchings: no perfect matching at a step");
      VertexPair e = ordered(A[l], B[matchL[l]]);
      ensure(used.insert(e).second, "AB matchings: edge reused");
      for (int v : {e.first, e.second}) {
        ++load[v];
        ensure(load[v] <= i + 1, "AB matchings: vertex load exceeds step");
      }
      mi.push_back({A[l], B[matchL[l]]});
    }
    std::sort(mi.begin(), mi.end());
    out.push_back(std::move(mi));
  }
  return out;
}

struct SdrInput {
  int ground_n = 0;
  std::vector<std::vector<int>> sets;
};

inline SdrInput sdr_input_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("ground_n") &&
              j["ground_n"].is_number_integer() && j.contains("sets") &&
              j["sets"].is_array(),
          "sdr json: need integer 'ground_n' and array 'sets'");
  SdrInput in;
  in.ground_n = j["ground_n"].get<int>();
  for (const auto& s : j["sets"]) {
    require(s.is_array(), "sdr json: each set must be an array");
    std::vector<int> v;
    for (const auto& x : s) {
      require(x.is_number_integer(), "sdr json: set elements must be integers");
      v.push_back(x.get<int>());
    }
    in.sets.push_back(std::move(v));
  }
  return in;
}

inline ABPairs abpairs_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("k") && j["k"].is_number_integer() &&
              j.contains("pairs") && j["pairs"].is_array(),
          "abpairs json: need integer 'k' and array 'pairs'");
  ABPairs in;
  in.k = j["k"].get<int>();
  for (const auto& p : j["pairs"]) {
    require(p.is_object() && p.contains("A") && p.contains("B") &&
                p["A"].is_array() && p["B"].is_array(),
            "abpairs json: each pair needs arrays 'A' and 'B'");
    std::vector<int> A, B;
    for (const auto& x : p["A"]) {
      require(x.is_number_integer(), "abpairs json: A elements must be integers");
      A.push_back(x.get<int>());
    }
    for (const auto& x : p["B"]) {
      require(x.is_number_integer(), "abpairs json: B elements must be integers");
      B.push_back(x.get<int>());
    }
    in.pairs.push_back({std::move(A), std::move(B)});
  }
  return in;
}

inline nlohmann::json matchings_to_json(const std::vector<Matching>& ms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : ms) {
    nlohmann::json jm = nlohmann::json::array();
    for (auto [u, v] : m) jm.push_back({u, v});
    out.push_back(jm);
  }
  return out;
}

}  // namespace imcert
