#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "imcert/certificate.hpp"
#include "imcert/claims.hpp"
#include "imcert/decompose.hpp"
#include "imcert/errors.hpp"
#include "imcert/graph.hpp"
#include "imcert/matching.hpp"
#include "imcert/pattern.hpp"

namespace imcert {

// Counters describing which construction branches a build went through and
// how the structural claims fared. Purely observational.
struct BuildTrace {
  long builds = 0;
  long complete_shortcut = 0;
  long base_edge = 0;
  long transpose = 0;
  long reductions = 0;
  long rich_direct_x = 0;
  long rich_direct_y = 0;
  long rich_routed = 0;
  long empty_common_fallback = 0;
  long case1 = 0;
  long case21 = 0;
  long case22 = 0;
  long degenerate_direct = 0;
  long detours = 0;
  long claims_evaluated = 0;
  long claims_failed = 0;
};

namespace detail {
inline ImmersionCertificate build_inner(const SimpleGraph& g, int ell,
                                        BuildTrace* tr);

inline void bump(BuildTrace* tr, long BuildTrace::* field) {
  if (tr) ++(tr->*field);
}

inline std::vector<int> sorted_minus(const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_union(std::vector<int> a,
                                     const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

inline std::vector<int> head(const std::vector<int>& a, int count) {
  ensure(0 <= count && count <= static_cast<int>(a.size()),
         "builder: not enough vertices to draw from");
  return {a.begin(), a.begin() + count};
}
}  // namespace detail

// Builds a biclique certificate from its parts and self-checks everything a
// verifier would: part disjointness, walk shape, host adjacency, simplicity,
// and global edge-disjointness. walks is keyed by (left vertex, right vertex)
// and each walk runs from the left vertex to the right one.
inline ImmersionCertificate assemble_biclique_certificate(
    const SimpleGraph& host, std::vector<int> left, std::vector<int> right,
    const std::map<VertexPair, std::vector<int>>& walks) {
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  ensure(!left.empty() && !right.empty(), "assemble: empty part");
  {
    std::set<int> all;
    for (int v : left) {
      ensure(0 <= v && v < host.n(), "assemble: branch vertex out of range");
      ensure(all.insert(v).second, "assemble: repeated branch vertex");
    }
    for (int v : right) {
      ensure(0 <= v && v < host.n(), "assemble: branch vertex out of range");
      ensure(all.insert(v).second, "assemble: parts overlap");
    }
  }
  ensure(walks.size() == left.size() * right.size(),
         "assemble: walk count differs from pattern edge count");

  ImmersionCertificate c;
  c.host = host;
  c.pattern = BicliquePattern{static_cast<int>(left.size()),
                              static_cast<int>(right.size())};
  c.branch = left;
  c.branch.insert(c.branch.end(), right.begin(), right.end());

  std::map<VertexPair, int> use;
  for (int l : left)
    for (int r : right) {
      auto it = walks.find({l, r});
      ensure(it != walks.end(), "assemble: missing walk for a pattern edge");
      const auto& w = it->second;
      ensure(w.size() >= 2 && w.front() == l && w.back() == r,
             "assemble: walk does not run from its left end to its right end");
      std::set<int> seen;
      for (int v : w) ensure(seen.insert(v).second, "assemble: walk repeats a vertex");
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        ensure(host.adjacent(w[i], w[i + 1]),
               "assemble: walk step is not a host edge");
        ++use[ordered(w[i], w[i + 1])];
      }
      c.paths.push_back({{l, r}, w});
    }
  for (const auto& [e, cnt] : use)
    ensure(cnt == 1, "assemble: host edge used twice");
  return c;
}

// Smallest non-adjacent pair whose common neighborhood has at least ell-1
// vertices, in lexicographic pair order.
inline std::optional<VertexPair> find_rich_pair(const SimpleGraph& g, int ell) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.adjacent(u, v)) continue;
      if (common_neighbor_count(g, u, v) >= ell - 1) return VertexPair{u, v};
    }
  return std::nullopt;
}

namespace detail {

inline ImmersionCertificate transpose_biclique(const ImmersionCertificate& c) {
  const auto& bp = std::get<BicliquePattern>(c.pattern);
  std::vector<int> new_left(c.branch.begin() + bp.left_size, c.branch.end());
  std::vector<int> new_right(c.branch.begin(), c.branch.begin() + bp.left_size);
  std::map<VertexPair, std::vector<int>> walks;
  for (const auto& p : c.paths) {
    std::vector<int> w(p.walk.rbegin(), p.walk.rend());
    walks[{p.ends[1], p.ends[0]}] = std::move(w);
  }
  return assemble_biclique_certificate(c.host, new_left, new_right, walks);
}

// Core of the rich-pair extension; preconditions are the caller's problem.
inline ImmersionCertificate extend_impl(const SimpleGraph& g, int x, int y,
                                        int ell, BuildTrace* tr) {
  int n = g.n();
  int h = (n + 1) / 2;
  auto sub = induced_delete(g, {x, y});

  std::vector<int> L, B;
  std::map<VertexPair, std::vector<int>> walks;
  if (ell <= h - 2) {
    ImmersionCertificate inner = build_inner(sub.graph, ell, tr);
    const auto& bp = std::get<BicliquePattern>(inner.pattern);
    for (int i = 0; i < bp.left_size; ++i)
      L.push_back(sub.to_old[inner.branch[i]]);
    for (int i = 0; i < bp.right_size; ++i)
      B.push_back(sub.to_old[inner.branch[bp.left_size + i]]);
    for (const auto& p : inner.paths) {
      std::vector<int> w;
      for (int v : p.walk) w.push_back(sub.to_old[v]);
      walks[{sub.to_old[p.ends[0]], sub.to_old[p.ends[1]]}] = std::move(w);
    }
  } else {
    // Largest possible left part: take the ell smallest surviving vertices;
    // the joining pivot alone forms the right part.
    ensure(sub.graph.n() >= ell, "extend: not enough vertices after deletion");
    for (int i = 0; i < ell; ++i) L.push_back(sub.to_old[i]);
  }

  auto dominates = [&](int v) {
    for (int l : L)
      if (!g.adjacent(v, l)) return false;
    return true;
  };

  int joiner;
  if (dominates(x)) {
    joiner = x;
    bump(tr, &BuildTrace::rich_direct_x);
    for (int l : L) walks[{l, joiner}] = {l, joiner};
  } else if (dominates(y)) {
    joiner = y;
    bump(tr, &BuildTrace::rich_direct_y);
    for (int l : L) walks[{l, joiner}] = {l, joiner};
  } else {
    // x joins anyway; leaves it misses are reached through y and a spare
    // common neighbor of x and y.
    joiner = x;
    bump(tr, &BuildTrace::rich_routed);
    std::vector<int> lx, ly;
    for (int l : L) {
      bool ax = g.adjacent(x, l), ay = g.adjacent(y, l);
      ensure(ax || ay, "extend: leaf sees neither pivot");
      if (ax)
        lx.push_back(l);  // includes leaves seeing both
      else
        ly.push_back(l);
    }
    ensure(!lx.empty() && !ly.empty(), "extend: domination missed earlier");
    std::vector<int> sorted_L = L;
    std::sort(sorted_L.begin(), sorted_L.end());
    std::vector<int> spare =
        sorted_minus(common_neighbors(g, x, y), sorted_L);
    ensure(spare.size() >= ly.size(),
           "extend: not enough spare common neighbors to route through");
    for (int l : lx) walks[{l, x}] = {l, x};
    for (std::size_t i = 0; i < ly.size(); ++i)
      walks[{ly[i], x}] = {ly[i], y, spare[i], x};
  }

  std::vector<int> right = B;
  right.push_back(joiner);
  return assemble_biclique_certificate(g, L, right, walks);
}

}  // namespace detail

// Grows a certificate for the full graph out of one for g minus the rich
// pair {x, y}: the recursion covers the left part and the old right part,
// then one pivot joins the right part, directly adjacent to the whole left
// part or routed through the other pivot.
inline ImmersionCertificate extend_after_recursion(const SimpleGraph& g, int x,
                                                   int y, int ell,
                                                   BuildTrace* tr = nullptr) {
  int n = g.n();
  int h = (n + 1) / 2;
  require(1 <= ell && ell <= h - 1, "extend: ell out of range");
  require(0 <= x && x < n && 0 <= y && y < n && x != y && !g.adjacent(x, y),
          "extend: pivots must be a non-adjacent pair");
  require(alpha_at_most_2(g), "extend: independence number exceeds 2");
  require(static_cast<int>(common_neighbors(g, x, y).size()) >= ell - 1,
          "extend: pivots share too few neighbors");
  return detail::extend_impl(g, x, y, ell, tr);
}

// Both visibility classes small: cross the anchor-missing sets directly and
// route the remaining pairs through distinct common-neighborhood vertices.
inline ImmersionCertificate build_case1(const SimpleGraph& g, int ell,
                                        const PivotDecomposition& d,
                                        BuildTrace* tr = nullptr) {
  int h = (g.n() + 1) / 2;
  int sx = h - ell - static_cast<int>(d.y_nonadj_anchor.size());
  int sy = ell - static_cast<int>(d.x_nonadj_anchor.size());
  ensure(sx >= 0 && sy >= 0, "case1: part sizes out of range");
  // Both parts of the split plus the two anchor-missing sets are bounded by
  // ell-2, so inside a graph on at least 4*ell-1 vertices the common
  // neighborhood holds at least sx+sy+3 vertices.
  ensure(static_cast<int>(d.common.size()) >= sx &&
             static_cast<int>(d.common.size()) >= sy,
         "case1: common neighborhood too small to route through");
  std::vector<int> xs = detail::head(d.x_sees_all, sx);
  std::vector<int> ys = detail::head(d.y_sees_all, sy);

  std::vector<int> left = detail::sorted_union(ys, d.x_nonadj_anchor);
  std::vector<int> right = detail::sorted_union(xs, d.y_nonadj_anchor);

  std::map<VertexPair, std::vector<int>> walks;
  for (int a : d.x_nonadj_anchor) {
    for (int b : d.y_nonadj_anchor) walks[{a, b}] = {a, b};
    for (int r : xs) walks[{a, r}] = {a, r};
  }
  for (int l : ys)
    for (int b : d.y_nonadj_anchor) walks[{l, b}] = {l, b};
  int csz = static_cast<int>(d.common.size());
  for (int jj = 0; jj < sy; ++jj)
    for (int i = 0; i < sx; ++i) {
      int c = d.common[(i + jj) % csz];
      walks[{ys[jj], xs[i]}] = {ys[jj], c, xs[i]};
    }
  detail::bump(tr, &BuildTrace::case1);
  return assemble_biclique_certificate(g, left, right, walks);
}

// One short path system per left vertex that still misses part of the common
// neighborhood: system i connects its source to every target in y_star via
// length-at-most-2 walks with middles drawn from the y side's visibility
// complement, using disjoint representative matchings so that no edge repeats
// within or across systems except for head-on target-to-target swaps.
struct KvSystem {
  int source = -1;
  std::vector<std::vector<int>> walks;  // walks[t] runs source -> y_star[t]
};

struct KvFamily {
  std::vector<int> x_star, y_star;
  std::vector<KvSystem> systems;
  MultiGraph used;  // every edge instance of every system walk
};

inline KvFamily build_kv_family(const SimpleGraph& g,
                                const PivotDecomposition& d,
                                const std::vector<int>& x_star,
                                const std::vector<int>& y_star,
                                BuildTrace* tr = nullptr) {
  (void)tr;
  int j = static_cast<int>(x_star.size());
  int k = static_cast<int>(y_star.size());
  require(j <= k, "kv family: more sources than targets");
  const std::vector<int>& ground = d.y_misses_some;
  std::vector<int> gindex(g.n(), -1);
  for (int i = 0; i < static_cast<int>(ground.size()); ++i)
    gindex[ground[i]] = i;
  for (int t : y_star)
    require(gindex[t] != -1, "kv family: target outside the y visibility complement");

  KvFamily fam;
  fam.x_star = x_star;
  fam.y_star = y_star;
  fam.used = MultiGraph(g.n());
  if (j == 0) return fam;

  std::vector<std::vector<int>> sets;
  for (int v : x_star) {
    std::vector<int> cand;
    for (int w : ground)
      if (g.adjacent(v, w)) cand.push_back(w);
    ensure(static_cast<int>(cand.size()) > k,
           "kv family: source sees too little of the ground set");
    std::vector<int> ni;
    for (int i = 0; i < k; ++i) ni.push_back(gindex[cand[i]]);
    sets.push_back(std::move(ni));
  }
  auto matchings =
      disjoint_representative_matchings(static_cast<int>(ground.size()), sets);

  std::vector<int> ypos(g.n(), -1);
  for (int t = 0; t < k; ++t) ypos[y_star[t]] = t;

  for (int i = 0; i < j; ++i) {
    int v = x_star[i];
    std::vector<int> partner(k, -1);
    for (auto [a, w] : matchings[i])
      partner[a - static_cast<int>(ground.size())] = ground[w];
    KvSystem sys;
    sys.source = v;
    sys.walks.resize(k);
    std::vector<char> direct(k, 0);
    for (int t = 0; t < k; ++t) {
      ensure(partner[t] != -1, "kv family: incomplete matching");
      if (partner[t] == y_star[t]) direct[t] = 1;
    }
    // Head-on swaps inside one system would reuse the target-target edge;
    // both walks drop to direct ones.
    for (int t = 0; t < k; ++t)
      for (int s = t + 1; s < k; ++s)
        if (partner[t] == y_star[s] && partner[s] == y_star[t])
          direct[t] = direct[s] = 1;
    for (int t = 0; t < k; ++t) {
      if (direct[t]) {
        ensure(g.adjacent(v, y_star[t]), "kv family: direct walk not an edge");
        sys.walks[t] = {v, y_star[t]};
      } else {
        ensure(g.adjacent(v, partner[t]) && g.adjacent(partner[t], y_star[t]),
               "kv family: two-step walk not in the host");
        sys.walks[t] = {v, partner[t], y_star[t]};
      }
    }
    // Within-system edge-disjointness.
    std::set<VertexPair> mine;
    for (const auto& w : sys.walks)
      for (std::size_t p = 0; p + 1 < w.size(); ++p)
        ensure(mine.insert(ordered(w[p], w[p + 1])).second,
               "kv family: edge reused inside one system");
    for (const auto& w : sys.walks)
      for (std::size_t p = 0; p + 1 < w.size(); ++p)
        fam.used.add_edge(w[p], w[p + 1]);
    fam.systems.push_back(std::move(sys));
  }

  ensure(fam.used.max_multiplicity() <= 2,
         "kv family: an edge appears in three systems");
  for (auto [u, w] : fam.used.distinct_edges())
    if (fam.used.multiplicity(u, w) == 2)
      ensure(ypos[u] != -1 && ypos[w] != -1,
             "kv family: doubled edge outside the target set");
  return fam;
}

// Both visibility complements large. The doubled target-target edges left by
// the matchings are rerouted one at a time through a still-unused vertex
// outside y_star until the union of all system walks is a simple graph.
inline ImmersionCertificate resolve_case21(const SimpleGraph& g,
                                           const PivotDecomposition& d,
                                           KvFamily& fam, int ell,
                                           BuildTrace* tr = nullptr);

// The y side's visibility complement is small. All target-target walk edges
// are eliminated per system: cycle components collapse to direct edges, path
// components chain to direct edges plus one reroute through the component's
// far end, and what remains is a matching whose walks detour through a
// per-system vertex that sees the whole common neighborhood.
inline ImmersionCertificate resolve_case22(const SimpleGraph& g,
                                           const PivotDecomposition& d,
                                           KvFamily& fam, int ell,
                                           BuildTrace* tr = nullptr);

namespace detail {

struct Case2Frame {
  std::vector<int> x_star, y_star, x_keep, left, right;
};

inline Case2Frame case2_frame(const SimpleGraph& g,
                              const PivotDecomposition& d, int ell) {
  int h = (g.n() + 1) / 2;
  int bxa = static_cast<int>(d.x_nonadj_anchor.size());
  ensure(bxa <= ell, "case2: anchor-missing set exceeds ell");
  int sy = h - static_cast<int>(d.side_x.size());
  ensure(sy >= 1, "case2: x side already covers half the graph");
  ensure(static_cast<int>(d.y_nonadj_anchor.size()) >= sy,
         "case2: not enough anchor-missing vertices on the y side");
  int sx = ell - bxa;

  Case2Frame f;
  f.y_star = head(d.y_nonadj_anchor, sy);
  f.x_star = head(sorted_minus(d.x_misses_some, d.x_nonadj_anchor), sx);
  f.x_keep = sorted_minus(d.x_adj_anchor, f.x_star);
  f.left = sorted_union(f.x_star, d.x_nonadj_anchor);
  f.right = sorted_union(f.x_keep, f.y_star);
  ensure(static_cast<int>(f.left.size()) == ell, "case2: left part size off");
  ensure(static_cast<int>(f.right.size()) == h - ell,
         "case2: right part size off");
  return f;
}

inline void case2_direct_walks(const PivotDecomposition& d,
                               const Case2Frame& f,
                               std::map<VertexPair, std::vector<int>>& walks) {
  for (int a : d.x_nonadj_anchor) {
    for (int b : f.y_star) walks[{a, b}] = {a, b};
    for (int r : f.x_keep) walks[{a, r}] = {a, r};
  }
  for (int v : f.x_star)
    for (int r : f.x_keep) walks[{v, r}] = {v, r};
}

// Direct certificate for the degenerate shape where the x side alone nearly
// fills a half: the anchor-missing part covers the left side and the rest of
// a half comes from the x side itself, topped up from the y side's
// anchor-missing vertices, all of them adjacent to the whole left part.
inline ImmersionCertificate degenerate_direct(const SimpleGraph& g,
                                              const PivotDecomposition& d,
                                              int ell, BuildTrace* tr) {
  int h = (g.n() + 1) / 2;
  ensure(static_cast<int>(d.x_nonadj_anchor.size()) > ell,
         "degenerate: guard called without cause");
  std::vector<int> left = head(d.x_nonadj_anchor, ell);
  std::vector<int> rest = sorted_minus(d.side_x, left);
  std::vector<int> right;
  if (static_cast<int>(d.side_x.size()) >= h) {
    right = head(rest, h - ell);
  } else {
    int need = h - static_cast<int>(d.side_x.size());
    ensure(static_cast<int>(d.y_nonadj_anchor.size()) >= need,
           "degenerate: y side cannot top up the right part");
    right = sorted_union(rest, head(d.y_nonadj_anchor, need));
  }
  std::map<VertexPair, std::vector<int>> walks;
  for (int l : left)
    for (int r : right) walks[{l, r}] = {l, r};
  bump(tr, &BuildTrace::degenerate_direct);
  return assemble_biclique_certificate(g, left, right, walks);
}

}  // namespace detail

inline ImmersionCertificate resolve_case21(const SimpleGraph& g,
                                           const PivotDecomposition& d,
                                           KvFamily& fam, int ell,
                                           BuildTrace* tr) {
  detail::Case2Frame f = detail::case2_frame(g, d, ell);
  ensure(f.x_star == fam.x_star && f.y_star == fam.y_star,
         "case21: family built for a different frame");
  std::vector<char> in_ystar(g.n(), 0);
  for (int t : f.y_star) in_ystar[t] = 1;
  std::vector<int> y_rest = detail::sorted_minus(d.side_y, f.y_star);

  long initial_doubles = 0;
  for (auto [u, w] : fam.used.distinct_edges())
    if (fam.used.multiplicity(u, w) == 2) ++initial_doubles;

  for (long round = 0; round <= initial_doubles; ++round) {
    VertexPair doubled{-1, -1};
    for (auto [u, w] : fam.used.distinct_edges()) {
      ensure(fam.used.multiplicity(u, w) <= 2,
             "case21: edge multiplicity above two");
      if (fam.used.multiplicity(u, w) == 2) {
        doubled = {u, w};
        break;
      }
    }
    if (doubled.first == -1) break;
    ensure(round < initial_doubles, "case21: detours failed to converge");
    auto [u, w] = doubled;
    ensure(in_ystar[u] && in_ystar[w], "case21: doubled edge outside targets");

    // Locate the two walks carrying this edge; both are two-step walks fully
    // inside the target set, from different systems.
    std::vector<std::pair<int, int>> carriers;
    for (int i = 0; i < static_cast<int>(fam.systems.size()); ++i)
      for (int t = 0; t < static_cast<int>(fam.systems[i].walks.size()); ++t) {
        const auto& walk = fam.systems[i].walks[t];
        for (std::size_t p = 0; p + 1 < walk.size(); ++p)
          if (ordered(walk[p], walk[p + 1]) == ordered(u, w))
            carriers.push_back({i, t});
      }
    ensure(carriers.size() == 2 && carriers[0].first != carriers[1].first,
           "case21: doubled edge not carried by two distinct systems");
    auto [i, t] = carriers.front();  // systems scanned in increasing order
    auto& walk = fam.systems[i].walks[t];
    ensure(walk.size() == 3 && in_ystar[walk[1]],
           "case21: detour target walk has unexpected shape");
    int v = walk[0], m = walk[1], e = walk[2];

    auto outside_load = [&](int vert) {
      int q = 0;
      for (auto& [nb, mult] : fam.used.neighbors(vert)) {
        (void)mult;
        if (!in_ystar[nb] && nb != vert &&
            std::binary_search(y_rest.begin(), y_rest.end(), nb))
          ++q;
      }
      return q;
    };
    ensure(static_cast<int>(y_rest.size()) > outside_load(u) + outside_load(w),
           "case21: no room left outside the target set");
    int z = -1;
    for (int cand : y_rest)
      if (fam.used.multiplicity(cand, u) == 0 &&
          fam.used.multiplicity(cand, w) == 0) {
        z = cand;
        break;
      }
    ensure(z != -1, "case21: counting promised a free vertex");
    ensure(g.adjacent(m, z) && g.adjacent(z, e),
           "case21: detour steps are not host edges");
    fam.used.remove_edge_once(m, e);
    fam.used.add_edge(m, z);
    fam.used.add_edge(z, e);
    walk = {v, m, z, e};
    detail::bump(tr, &BuildTrace::detours);
  }
  ensure(fam.used.max_multiplicity() <= 1,
         "case21: walk union still not simple");

  std::map<VertexPair, std::vector<int>> walks;
  detail::case2_direct_walks(d, f, walks);
  for (int i = 0; i < static_cast<int>(fam.systems.size()); ++i)
    for (int t = 0; t < static_cast<int>(fam.systems[i].walks.size()); ++t)
      walks[{fam.x_star[i], fam.y_star[t]}] = fam.systems[i].walks[t];
  detail::bump(tr, &BuildTrace::case21);
  return assemble_biclique_certificate(g, f.left, f.right, walks);
}

inline ImmersionCertificate resolve_case22(const SimpleGraph& g,
                                           const PivotDecomposition& d,
                                           KvFamily& fam, int ell,
                                           BuildTrace* tr) {
  detail::Case2Frame f = detail::case2_frame(g, d, ell);
  ensure(f.x_star == fam.x_star && f.y_star == fam.y_star,
         "case22: family built for a different frame");
  int j = static_cast<int>(fam.x_star.size());
  ensure(static_cast<int>(d.y_sees_all.size()) > j,
         "case22: not enough full-visibility vertices on the y side");
  std::vector<char> in_ystar(g.n(), 0);
  std::vector<int> slot(g.n(), -1);
  for (int t = 0; t < static_cast<int>(f.y_star.size()); ++t) {
    in_ystar[f.y_star[t]] = 1;
    slot[f.y_star[t]] = t;
  }

  for (int i = 0; i < j; ++i) {
    auto& sys = fam.systems[i];
    int v = sys.source;
    int helper = d.y_sees_all[i];  // injective across systems

    // Edges of this system's walks lying inside the target set, one per
    // two-step walk whose middle is a target. Each target vertex is the end
    // of at most one such edge and the middle of at most one.
    struct InEdge {
      int mid, end, t;
    };
    std::vector<InEdge> inedges;
    std::vector<int> deg(g.n(), 0), as_mid(g.n(), 0), as_end(g.n(), 0);
    for (int t = 0; t < static_cast<int>(sys.walks.size()); ++t) {
      const auto& w = sys.walks[t];
      if (w.size() == 3 && in_ystar[w[1]]) {
        inedges.push_back({w[1], w[2], t});
        ++deg[w[1]];
        ++deg[w[2]];
        ++as_mid[w[1]];
        ++as_end[w[2]];
      }
    }
    for (const auto& ie : inedges) {
      ensure(deg[ie.mid] <= 2 && deg[ie.end] <= 2,
             "case22: target vertex on three walk edges");
      ensure(as_mid[ie.mid] <= 1 && as_end[ie.end] <= 1,
             "case22: vertex doubly used in one role");
    }

    // Group the in-target edges into connected components.
    std::map<int, const InEdge*> edge_of_mid;
    for (const auto& ie : inedges) edge_of_mid[ie.mid] = &ie;
    std::set<int> visited_mids;
    std::vector<std::pair<int, int>> pending;  // remaining (mid, end) walks

    for (const auto& start : inedges) {
      if (visited_mids.count(start.mid)) continue;
      // Walk backwards to the component's first middle.
      int first = start.mid;
      {
        std::set<int> guard;
        while (true) {
          guard.insert(first);
          // Predecessor edge: one whose end is `first` and whose middle
          // chains on, i.e. first is also an end of an in-target edge.
          const InEdge* prev = nullptr;
          for (const auto& ie : inedges)
            if (ie.end == first) prev = &ie;
          if (prev == nullptr || guard.count(prev->mid)) break;  // cycle stops
          first = prev->mid;
        }
      }
      // Forward pass from `first`, collecting the chain.
      std::vector<const InEdge*> chain;
      int cur = first;
      std::set<int> seen_mids;
      while (edge_of_mid.count(cur) && !seen_mids.count(cur)) {
        const InEdge* ie = edge_of_mid[cur];
        seen_mids.insert(cur);
        chain.push_back(ie);
        cur = ie->end;
      }
      for (const auto* ie : chain) visited_mids.insert(ie->mid);
      bool is_cycle = (cur == first);

      if (is_cycle) {
        // Every walk in a cycle collapses to a direct edge; all its vertices
        // are matched middles, hence neighbors of the source.
        for (const auto* ie : chain) {
          ensure(g.adjacent(v, ie->end), "case22: cycle end not a neighbor");
          sys.walks[ie->t] = {v, ie->end};
        }
      } else if (chain.size() == 1) {
        pending.push_back({chain[0]->mid, chain[0]->end});
      } else {
        // Chain t1 -> ... -> ts: all but the last walk go direct; the last
        // one reroutes through the free front vertex t1 and joins the
        // pending matching.
        for (std::size_t p = 0; p + 1 < chain.size(); ++p) {
          ensure(g.adjacent(v, chain[p]->end),
                 "case22: chain end not a neighbor");
          sys.walks[chain[p]->t] = {v, chain[p]->end};
        }
        const InEdge* last = chain.back();
        int front = chain.front()->mid;
        ensure(g.adjacent(v, front), "case22: chain front not a neighbor");
        ensure(g.adjacent(front, last->end),
               "case22: chain shortcut edge missing");
        sys.walks[last->t] = {v, front, last->end};
        pending.push_back({front, last->end});
      }
    }

    // The surviving in-target walks form a matching; lengthen each through
    // this system's helper vertex to clear the target set entirely.
    std::set<int> touched;
    for (auto [mid, end] : pending) {
      ensure(touched.insert(mid).second && touched.insert(end).second,
             "case22: leftover walks are not a matching");
      int t = slot[end];
      ensure(t != -1 && sys.walks[t].size() == 3 && sys.walks[t][1] == mid,
             "case22: pending walk out of sync");
      ensure(g.adjacent(mid, helper) && g.adjacent(helper, end),
             "case22: helper detour not in the host");
      ensure(helper != v && !in_ystar[helper],
             "case22: helper vertex collides with the walk");
      sys.walks[t] = {v, mid, helper, end};
    }
  }

  std::map<VertexPair, std::vector<int>> walks;
  detail::case2_direct_walks(d, f, walks);
  for (int i = 0; i < j; ++i)
    for (int t = 0; t < static_cast<int>(fam.systems[i].walks.size()); ++t)
      walks[{fam.x_star[i], fam.y_star[t]}] = fam.systems[i].walks[t];
  detail::bump(tr, &BuildTrace::case22);
  return assemble_biclique_certificate(g, f.left, f.right, walks);
}

namespace detail {

inline void record_claims(const std::vector<ClaimCheck>& cs, BuildTrace* tr) {
  if (tr) {
    tr->claims_evaluated += static_cast<long>(cs.size());
    for (const auto& c : cs)
      if (!c.holds) ++tr->claims_failed;
  }
  for (const auto& c : cs)
    ensure(c.holds, "builder: structural claim failed: " + c.name);
}

inline ImmersionCertificate build_inner(const SimpleGraph& g, int ell,
                                        BuildTrace* tr) {
  int n = g.n();
  int h = (n + 1) / 2;

  if (g.is_complete()) {
    std::vector<int> left, right;
    for (int v = 0; v < ell; ++v) left.push_back(v);
    for (int v = ell; v < h; ++v) right.push_back(v);
    std::map<VertexPair, std::vector<int>> walks;
    for (int l : left)
      for (int r : right) walks[{l, r}] = {l, r};
    bump(tr, &BuildTrace::complete_shortcut);
    return assemble_biclique_certificate(g, left, right, walks);
  }

  if (n <= 4) {
    ensure(ell == 1, "builder: tiny graph with oversized request");
    ensure(g.edge_count() > 0, "builder: tiny graph has no edge");
    auto [u, v] = g.edges().front();
    bump(tr, &BuildTrace::base_edge);
    return assemble_biclique_certificate(g, {u}, {v}, {{{u, v}, {u, v}}});
  }

  if (n <= 4 * ell - 2) {
    ImmersionCertificate flipped = build_inner(g, h - ell, tr);
    bump(tr, &BuildTrace::transpose);
    return transpose_biclique(flipped);
  }

  SimpleGraph gc = edge_critical_reduce(g);
  if (gc.edge_count() != g.edge_count()) bump(tr, &BuildTrace::reductions);

  if (auto rich = find_rich_pair(gc, ell)) {
    ImmersionCertificate cert =
        extend_impl(gc, rich->first, rich->second, ell, tr);
    cert.host = g;
    return cert;
  }

  // No rich pair survives; take the smallest non-adjacent pair apart.
  ensure(!gc.is_complete(), "builder: reduced graph cannot be complete here");
  int px = -1, py = -1;
  for (int u = 0; u < n && px == -1; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!gc.adjacent(u, v)) {
        px = u;
        py = v;
        break;
      }
  PivotDecomposition dec = decompose(gc, px, py);

  ImmersionCertificate cert;
  if (dec.common.empty()) {
    // Two cliques cover everything; the larger one holds a half outright.
    const std::vector<int>& big =
        dec.side_x.size() >= dec.side_y.size() ? dec.side_x : dec.side_y;
    ensure(static_cast<int>(big.size()) >= h,
           "builder: neither clique reaches half the graph");
    std::vector<int> verts = head(big, h);
    std::vector<int> left(verts.begin(), verts.begin() + ell);
    std::vector<int> right(verts.begin() + ell, verts.end());
    std::map<VertexPair, std::vector<int>> walks;
    for (int l : left)
      for (int r : right) walks[{l, r}] = {l, r};
    bump(tr, &BuildTrace::empty_common_fallback);
    cert = assemble_biclique_certificate(gc, left, right, walks);
  } else {
    record_claims(decomposition_claims(gc, ell, dec), tr);
    int bxc = static_cast<int>(dec.x_misses_some.size());
    int byc = static_cast<int>(dec.y_misses_some.size());
    if (bxc < ell && byc < ell) {
      cert = build_case1(gc, ell, dec, tr);
    } else if (bxc >= ell && byc >= ell) {
      bool keep = static_cast<int>(dec.y_adj_anchor.size()) >=
                  2 * (ell - static_cast<int>(dec.x_nonadj_anchor.size()));
      if (!keep) {
        dec = decompose(gc, py, px);
        record_claims(decomposition_claims(gc, ell, dec), tr);
      }
      ensure(static_cast<int>(dec.y_adj_anchor.size()) >=
                 2 * (ell - static_cast<int>(dec.x_nonadj_anchor.size())),
             "builder: no orientation leaves room for detours");
      if (static_cast<int>(dec.x_nonadj_anchor.size()) > ell) {
        cert = degenerate_direct(gc, dec, ell, tr);
      } else {
        Case2Frame f = case2_frame(gc, dec, ell);
        KvFamily fam = build_kv_family(gc, dec, f.x_star, f.y_star, tr);
        cert = resolve_case21(gc, dec, fam, ell, tr);
      }
    } else {
      if (byc >= ell) {
        dec = decompose(gc, py, px);
        record_claims(decomposition_claims(gc, ell, dec), tr);
      }
      if (static_cast<int>(dec.x_nonadj_anchor.size()) > ell) {
        cert = degenerate_direct(gc, dec, ell, tr);
      } else {
        Case2Frame f = case2_frame(gc, dec, ell);
        KvFamily fam = build_kv_family(gc, dec, f.x_star, f.y_star, tr);
        cert = resolve_case22(gc, dec, fam, ell, tr);
      }
    }
  }
  cert.host = g;
  return cert;
}

}  // namespace detail

// Certificate that the complete bipartite graph with parts ell and
// ceil(n/2)-ell immerses into g, for any graph with independence number at
// most 2 and any ell between 1 and ceil(n/2)-1.
inline ImmersionCertificate build_biclique_immersion(const SimpleGraph& g,
                                                     int ell,
                                                     BuildTrace* tr = nullptr) {
  int n = g.n();
  int h = (n + 1) / 2;
  require(1 <= ell && ell <= h - 1, "builder: ell out of range");
  require(alpha_at_most_2(g), "builder: independence number exceeds 2");
  if (tr) ++tr->builds;
  return detail::build_inner(g, ell, tr);
}

}  // namespace imcert
