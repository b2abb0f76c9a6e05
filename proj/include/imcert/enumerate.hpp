#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "imcert/errors.hpp"
#include "imcert/graph.hpp"

namespace imcert {

namespace detail {

// Graphs on up to 8 vertices as bitmasks: edge {u,v} with u < v sits at bit
// 8*u+v.
inline std::uint64_t mask_bit(int u, int v) {
  if (u > v) std::swap(u, v);
  return 1ULL << (8 * u + v);
}

inline std::uint64_t permute_mask(std::uint64_t mask, int n,
                                  const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (mask & mask_bit(u, v)) out |= mask_bit(perm[u], perm[v]);
  return out;
}

inline std::uint64_t canonical_mask(std::uint64_t mask, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    best = std::min(best, permute_mask(mask, n, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

// All graphs on n vertices with independence number at most 2, one per
// isomorphism class, ordered by the canonical bitmask of the complement.
// Built by growing triangle-free complements one vertex at a time and
// deduplicating up to isomorphism at each level.
inline std::vector<SimpleGraph> enumerate_alpha2_hosts(int n) {
  require(n >= 1, "enumerate: need at least one vertex");
  if (n > 7) throw SizeLimit("enumerate: more than 7 vertices");
  std::set<std::uint64_t> level{0};  // triangle-free graphs on one vertex
  for (int k = 1; k < n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t mask : level)
      for (int sub = 0; sub < (1 << k); ++sub) {
        bool closes = false;
        for (int a = 0; a < k && !closes; ++a)
          for (int b = a + 1; b < k && !closes; ++b)
            if ((sub >> a & 1) && (sub >> b & 1) &&
                (mask & detail::mask_bit(a, b)))
              closes = true;
        if (closes) continue;
        std::uint64_t grown = mask;
        for (int a = 0; a < k; ++a)
          if (sub >> a & 1) grown |= detail::mask_bit(a, k);
        next.insert(detail::canonical_mask(grown, k + 1));
      }
    level = std::move(next);
  }
  std::vector<SimpleGraph> out;
  for (std::uint64_t mask : level) {
    std::vector<VertexPair> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (mask & detail::mask_bit(u, v)) e.push_back({u, v});
    out.push_back(complement(SimpleGraph(n, e)));
  }
  return out;
}

}  // namespace imcert
