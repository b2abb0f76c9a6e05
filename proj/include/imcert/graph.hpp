#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "imcert/errors.hpp"

namespace imcert {

using VertexPair = std::pair<int, int>;

inline VertexPair ordered(int u, int v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

// Immutable simple graph on vertices 0..n-1. Adjacency is kept twice: sorted
// neighbor lists for iteration and packed bit rows for O(1) pair queries and
// word-parallel set algebra.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  explicit SimpleGraph(int n, const std::vector<VertexPair>& edge_list = {})
      : n_(n) {
    require(n >= 0, "SimpleGraph: negative vertex count");
    adj_.resize(n_);
    bits_.assign(n_, std::vector<std::uint64_t>(words(), 0));
    for (auto [u, v] : edge_list) add_edge_internal(u, v);
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    edges_.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) edges_.push_back({u, v});
  }

  static SimpleGraph complete(int n) {
    std::vector<VertexPair> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return SimpleGraph(n, e);
  }

  static SimpleGraph cycle(int n) {
    std::vector<VertexPair> e;
    for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
    if (n >= 3) e.push_back({0, n - 1});
    return SimpleGraph(n, e);
  }

  int n() const { return n_; }
  std::size_t edge_count() const { return m_; }
  const std::vector<VertexPair>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int u) const { return adj_.at(u); }
  int degree(int u) const { return static_cast<int>(adj_.at(u).size()); }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (bits_[u][v >> 6] >> (v & 63)) & 1u;
  }

  // Packed adjacency row of u; bit v is set iff uv is an edge.
  const std::vector<std::uint64_t>& row(int u) const {
    check_vertex(u);
    return bits_[u];
  }

  std::size_t words() const { return (static_cast<std::size_t>(n_) + 63) / 64; }

  bool is_complete() const {
    return m_ == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  }

 private:
  void check_vertex(int u) const {
    require(0 <= u && u < n_, "SimpleGraph: vertex out of range");
  }

  void add_edge_internal(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    require(u != v, "SimpleGraph: self-loop");
    if (adjacent(u, v)) return;
    bits_[u][v >> 6] |= std::uint64_t{1} << (v & 63);
    bits_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<VertexPair> edges_;
};

inline SimpleGraph complement(const SimpleGraph& g) {
  std::vector<VertexPair> e;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) e.push_back({u, v});
  return SimpleGraph(g.n(), e);
}

inline std::vector<int> common_neighbors(const SimpleGraph& g, int u, int v) {
  const auto& a = g.row(u);
  const auto& b = g.row(v);
  std::vector<int> out;
  for (std::size_t w = 0; w < g.words(); ++w) {
    std::uint64_t bitsw = a[w] & b[w];
    while (bitsw) {
      int bit = std::countr_zero(bitsw);
      out.push_back(static_cast<int>(w * 64 + bit));
      bitsw &= bitsw - 1;
    }
  }
  return out;
}

inline int common_neighbor_count(const SimpleGraph& g, int u, int v) {
  const auto& a = g.row(u);
  const auto& b = g.row(v);
  int count = 0;
  for (std::size_t w = 0; w < g.words(); ++w)
    count += std::popcount(a[w] & b[w]);
  return count;
}

// True iff g has no independent set of three vertices, i.e. the complement is
// triangle-free.
inline bool alpha_at_most_2(const SimpleGraph& g) {
  int n = g.n();
  std::size_t W = g.words();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      const auto& a = g.row(u);
      const auto& b = g.row(v);
      for (std::size_t w = 0; w < W; ++w) {
        std::uint64_t nonadj = ~(a[w] | b[w]);
        if (static_cast<int>(w) == (u >> 6))
          nonadj &= ~(std::uint64_t{1} << (u & 63));
        if (static_cast<int>(w) == (v >> 6))
          nonadj &= ~(std::uint64_t{1} << (v & 63));
        int lo = static_cast<int>(w * 64);
        int valid = std::min(64, n - lo);
        if (valid <= 0) break;
        if (valid < 64) nonadj &= (std::uint64_t{1} << valid) - 1;
        if (nonadj) return false;  // {u, v, any set bit} is independent
      }
    }
  }
  return true;
}

// Removes edges while doing so keeps the independence number at most 2:
// edge uv is deletable exactly when N[u] and N[v] together cover every vertex.
// Edges are visited in lexicographic order. Deleting an edge only shrinks
// neighborhoods, so a non-deletable edge can never become deletable; one
// forward pass therefore yields the same graph as rescanning from the start
// after every deletion.
inline SimpleGraph edge_critical_reduce(const SimpleGraph& g) {
  require(alpha_at_most_2(g), "edge_critical_reduce: independence number > 2");
  int n = g.n();
  std::size_t W = g.words();
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(n);
  for (int u = 0; u < n; ++u) rows.push_back(g.row(u));

  auto covers_all = [&](int u, int v) {
    for (std::size_t w = 0; w < W; ++w) {
      std::uint64_t cover = rows[u][w] | rows[v][w];
      if (static_cast<int>(w) == (u >> 6)) cover |= std::uint64_t{1} << (u & 63);
      if (static_cast<int>(w) == (v >> 6)) cover |= std::uint64_t{1} << (v & 63);
      int lo = static_cast<int>(w * 64);
      int valid = std::min(64, n - lo);
      if (valid <= 0) break;
      std::uint64_t full =
          valid == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << valid) - 1;
      if ((cover & full) != full) return false;
    }
    return true;
  };

  for (auto [u, v] : g.edges()) {
    if (covers_all(u, v)) {
      rows[u][v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      rows[v][u >> 6] &= ~(std::uint64_t{1} << (u & 63));
    }
  }

  std::vector<VertexPair> kept;
  for (auto [u, v] : g.edges())
    if ((rows[u][v >> 6] >> (v & 63)) & 1u) kept.push_back({u, v});
  return SimpleGraph(n, kept);
}

struct InducedSubgraph {
  SimpleGraph graph;
  std::vector<int> to_old;  // new index -> original vertex
  std::vector<int> to_new;  // original vertex -> new index, -1 if deleted
};

inline InducedSubgraph induced_delete(const SimpleGraph& g,
                                      const std::vector<int>& drop) {
  std::vector<char> gone(g.n(), 0);
  for (int v : drop) {
    require(0 <= v && v < g.n(), "induced_delete: vertex out of range");
    gone[v] = 1;
  }
  InducedSubgraph out;
  out.to_new.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (gone[v]) continue;
    out.to_new[v] = static_cast<int>(out.to_old.size());
    out.to_old.push_back(v);
  }
  std::vector<VertexPair> e;
  for (auto [u, v] : g.edges())
    if (!gone[u] && !gone[v]) e.push_back({out.to_new[u], out.to_new[v]});
  out.graph = SimpleGraph(static_cast<int>(out.to_old.size()), e);
  return out;
}

inline bool is_clique(const SimpleGraph& g, const std::vector<int>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.adjacent(verts[i], verts[j])) return false;
  return true;
}

// Mutable multigraph used as working storage while assembling path systems.
// Stores per-pair multiplicities; no self-loops.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n) : n_(n), adj_(n) {
    require(n >= 0, "MultiGraph: negative vertex count");
  }

  int n() const { return n_; }
  std::size_t edge_instances() const { return m_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    require(u != v, "MultiGraph: self-loop");
    ++adj_[u][v];
    ++adj_[v][u];
    ++m_;
  }

  void remove_edge_once(int u, int v) {
    require(multiplicity(u, v) > 0, "MultiGraph: removing absent edge");
    if (--adj_[u][v] == 0) adj_[u].erase(v);
    if (--adj_[v][u] == 0) adj_[v].erase(u);
    --m_;
  }

  int multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto it = adj_[u].find(v);
    return it == adj_[u].end() ? 0 : it->second;
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (auto& [_, mult] : adj_[v]) d += mult;
    return d;
  }

  const std::map<int, int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::vector<VertexPair> distinct_edges() const {
    std::vector<VertexPair> out;
    for (int u = 0; u < n_; ++u)
      for (auto& [v, _] : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  // Every edge instance, lexicographically sorted, multiplicities expanded.
  std::vector<VertexPair> instances() const {
    std::vector<VertexPair> out;
    for (int u = 0; u < n_; ++u)
      for (auto& [v, mult] : adj_[u])
        if (u < v)
          for (int i = 0; i < mult; ++i) out.push_back({u, v});
    return out;
  }

  int max_multiplicity() const {
    int best = 0;
    for (int u = 0; u < n_; ++u)
      for (auto& [_, mult] : adj_[u]) best = std::max(best, mult);
    return best;
  }

 private:
  void check_vertex(int u) const {
    require(0 <= u && u < n_, "MultiGraph: vertex out of range");
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::map<int, int>> adj_;
};

}  // namespace imcert
