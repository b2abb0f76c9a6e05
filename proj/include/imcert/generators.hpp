#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imcert/errors.hpp"
#include "imcert/graph.hpp"

namespace imcert {

// splitmix64: tiny, seedable, identical output everywhere. Random graph
// streams stay reproducible across standard library implementations, which
// std::mt19937 distributions would not guarantee.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double unit() { return static_cast<double>(next() >> 11) / 9007199254740992.0; }

  int below(int m) { return static_cast<int>(next() % static_cast<std::uint64_t>(m)); }
};

struct GeneratorSpec {
  std::string model;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
};

inline std::vector<std::string> generator_models() {
  return {"complement-trianglefree", "c5-blowup", "split-cliques",
          "complete-minus-star"};
}

namespace detail {

// Random maximal-ish triangle-free graph, complemented. Pairs are tried in a
// shuffled order and an edge joins the complement only when it closes no
// triangle there.
inline SimpleGraph gen_complement_trianglefree(int n, double p, Rng& rng) {
  std::vector<VertexPair> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (int i = static_cast<int>(pairs.size()) - 1; i > 0; --i)
    std::swap(pairs[i], pairs[rng.below(i + 1)]);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<VertexPair> kept;
  for (auto [u, v] : pairs) {
    if (rng.unit() >= p) continue;
    bool closes = false;
    for (int w = 0; w < n && !closes; ++w)
      if (adj[u][w] && adj[v][w]) closes = true;
    if (closes) continue;
    adj[u][v] = adj[v][u] = 1;
    kept.push_back({u, v});
  }
  return complement(SimpleGraph(n, kept));
}

// Five cliques joined along a five-cycle. Group sizes start balanced; with
// probability p a vertex is thrown into a uniformly random group instead.
inline SimpleGraph gen_c5_blowup(int n, double p, Rng& rng) {
  std::vector<int> group(n);
  for (int v = 0; v < n; ++v)
    group[v] = (rng.unit() < p) ? rng.below(5) : v % 5;
  std::vector<VertexPair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int d = (group[v] - group[u] + 5) % 5;
      if (d == 0 || d == 1 || d == 4) e.push_back({u, v});
    }
  return SimpleGraph(n, e);
}

// Two cliques covering the vertex set plus random cross edges.
inline SimpleGraph gen_split_cliques(int n, double p, Rng& rng) {
  std::vector<int> side(n);
  for (int v = 0; v < n; ++v) side[v] = rng.below(2);
  std::vector<VertexPair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (side[u] == side[v] || rng.unit() < p) e.push_back({u, v});
  return SimpleGraph(n, e);
}

// Complete graph minus a random sub-star at one center; the complement is a
// star, hence triangle-free.
inline SimpleGraph gen_complete_minus_star(int n, double p, Rng& rng) {
  int center = rng.below(n);
  std::vector<VertexPair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if ((u == center || v == center) && rng.unit() < p) continue;
      e.push_back({u, v});
    }
  return SimpleGraph(n, e);
}

}  // namespace detail

inline SimpleGraph generate_graph(const GeneratorSpec& spec) {
  require(spec.n >= 1, "generate: need at least one vertex");
  require(spec.p >= 0.0 && spec.p <= 1.0, "generate: p outside [0,1]");
  Rng rng(spec.seed);
  SimpleGraph g(1, {});
  if (spec.model == "complement-trianglefree")
    g = detail::gen_complement_trianglefree(spec.n, spec.p, rng);
  else if (spec.model == "c5-blowup")
    g = detail::gen_c5_blowup(spec.n, spec.p, rng);
  else if (spec.model == "split-cliques")
    g = detail::gen_split_cliques(spec.n, spec.p, rng);
  else if (spec.model == "complete-minus-star")
    g = detail::gen_complete_minus_star(spec.n, spec.p, rng);
  else
    require(false, "generate: unknown model " + spec.model);
  ensure(alpha_at_most_2(g), "generate: model produced a large independent set");
  return g;
}

}  // namespace imcert
