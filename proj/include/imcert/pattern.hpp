#pragma once

#include <variant>
#include <vector>

#include "imcert/errors.hpp"
#include "imcert/graph.hpp"

namespace imcert {

// Complete bipartite pattern. Vertices 0..left_size-1 form the left part,
// the next right_size vertices the right part.
struct BicliquePattern {
  int left_size = 0;
  int right_size = 0;
};

// Complete tripartite pattern with parts of sizes 1, 1 and tail. Vertex 0 and
// vertex 1 are the singleton parts, vertices 2..tail+1 the third part.
struct TripartitePattern {
  int tail = 0;
};

using Pattern = std::variant<BicliquePattern, TripartitePattern>;

inline int pattern_order(const Pattern& p) {
  if (auto* b = std::get_if<BicliquePattern>(&p))
    return b->left_size + b->right_size;
  return 2 + std::get<TripartitePattern>(p).tail;
}

inline void validate_pattern(const Pattern& p) {
  if (auto* b = std::get_if<BicliquePattern>(&p)) {
    require(b->left_size >= 1 && b->right_size >= 1,
            "pattern: biclique parts must be nonempty");
  } else {
    require(std::get<TripartitePattern>(p).tail >= 1,
            "pattern: tripartite tail must be nonempty");
  }
}

// Pattern edges in canonical order. Biclique: by (left index, right index).
// Tripartite: the 0-1 edge, then 0 against the tail, then 1 against the tail.
inline std::vector<VertexPair> pattern_edges(const Pattern& p) {
  std::vector<VertexPair> out;
  if (auto* b = std::get_if<BicliquePattern>(&p)) {
    for (int u = 0; u < b->left_size; ++u)
      for (int v = 0; v < b->right_size; ++v)
        out.push_back({u, b->left_size + v});
  } else {
    int s = std::get<TripartitePattern>(p).tail;
    out.push_back({0, 1});
    for (int w = 0; w < s; ++w) out.push_back({0, 2 + w});
    for (int w = 0; w < s; ++w) out.push_back({1, 2 + w});
  }
  return out;
}

}  // namespace imcert
