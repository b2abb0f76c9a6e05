#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "imcert/certificate.hpp"
#include "imcert/errors.hpp"
#include "imcert/graph.hpp"
#include "imcert/pattern.hpp"

namespace imcert {

struct VerificationFailure {
  std::string rule;
  std::string detail;
};

struct VerificationStats {
  int paths = 0;
  int max_path_length = 0;
  int host_edges_used = 0;
};

struct VerificationReport {
  bool valid = false;
  std::vector<VerificationFailure> failures;
  VerificationStats stats;
};

// Checks a certificate from scratch: injective branch placement, one host
// path per pattern edge matched by its unordered endpoint pair, every walk a
// simple path in the host, and no host edge used by two walks. Collects all
// rule violations instead of stopping at the first.
inline VerificationReport verify_certificate(const ImmersionCertificate& c) {
  VerificationReport rep;
  auto fail = [&](const std::string& rule, const std::string& detail) {
    rep.failures.push_back({rule, detail});
  };

  bool pattern_ok = true;
  if (auto* b = std::get_if<BicliquePattern>(&c.pattern)) {
    if (b->left_size < 1 || b->right_size < 1) pattern_ok = false;
  } else if (std::get<TripartitePattern>(c.pattern).tail < 1) {
    pattern_ok = false;
  }
  if (!pattern_ok) {
    fail("pattern", "pattern part sizes must be positive");
    return rep;
  }

  int order = pattern_order(c.pattern);
  bool branch_ok = true;
  if (static_cast<int>(c.branch.size()) != order) {
    fail("branch", "branch size differs from pattern order");
    branch_ok = false;
  }
  for (int v : c.branch)
    if (v < 0 || v >= c.host.n()) {
      fail("branch", "branch vertex outside the host");
      branch_ok = false;
    }
  if (branch_ok) {
    std::vector<int> sorted = c.branch;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail("branch", "branch map is not injective");
      branch_ok = false;
    }
  }

  std::map<VertexPair, int> edge_use;
  for (std::size_t i = 0; i < c.paths.size(); ++i) {
    const auto& p = c.paths[i];
    std::ostringstream tag;
    tag << "path " << i;
    if (p.walk.empty()) {
      fail("walk", tag.str() + ": empty walk");
      continue;
    }
    bool in_range = true;
    for (int v : p.walk)
      if (v < 0 || v >= c.host.n()) in_range = false;
    if (!in_range) {
      fail("walk", tag.str() + ": vertex outside the host");
      continue;
    }
    if (p.walk.front() != p.ends[0] || p.walk.back() != p.ends[1])
      fail("walk", tag.str() + ": walk endpoints disagree with ends");
    std::vector<int> seen = p.walk;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      fail("walk", tag.str() + ": walk repeats a vertex");
    for (std::size_t t = 0; t + 1 < p.walk.size(); ++t) {
      if (!c.host.adjacent(p.walk[t], p.walk[t + 1])) {
        std::ostringstream d;
        d << tag.str() << ": step " << p.walk[t] << "-" << p.walk[t + 1]
          << " is not a host edge";
        fail("walk", d.str());
      } else {
        ++edge_use[ordered(p.walk[t], p.walk[t + 1])];
      }
    }
    rep.stats.max_path_length = std::max(
        rep.stats.max_path_length, static_cast<int>(p.walk.size()) - 1);
  }
  rep.stats.paths = static_cast<int>(c.paths.size());
  rep.stats.host_edges_used = static_cast<int>(edge_use.size());
  for (const auto& [e, cnt] : edge_use)
    if (cnt > 1) {
      std::ostringstream d;
      d << "host edge " << e.first << "-" << e.second << " used " << cnt
        << " times";
      fail("edge-disjoint", d.str());
    }

  if (branch_ok) {
    auto pedges = pattern_edges(c.pattern);
    if (c.paths.size() != pedges.size())
      fail("cover", "number of paths differs from number of pattern edges");
    std::map<VertexPair, int> needed;
    for (auto [u, v] : pedges)
      ++needed[ordered(c.branch[u], c.branch[v])];
    for (std::size_t i = 0; i < c.paths.size(); ++i) {
      auto key = ordered(c.paths[i].ends[0], c.paths[i].ends[1]);
      auto it = needed.find(key);
      if (it == needed.end() || it->second == 0) {
        std::ostringstream d;
        d << "path " << i << " with ends " << key.first << "-" << key.second
          << " matches no pattern edge";
        fail("cover", d.str());
      } else {
        --it->second;
      }
    }
    for (const auto& [key, cnt] : needed)
      if (cnt > 0) {
        std::ostringstream d;
        d << "pattern edge mapped to " << key.first << "-" << key.second
          << " has no path";
        fail("cover", d.str());
      }
  }

  rep.valid = rep.failures.empty();
  return rep;
}

inline nlohmann::json report_to_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["valid"] = rep.valid;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : rep.failures)
    j["failures"].push_back({{"rule", f.rule}, {"detail", f.detail}});
  j["stats"] = {{"paths", rep.stats.paths},
                {"max_path_length", rep.stats.max_path_length},
                {"host_edges_used", rep.stats.host_edges_used}};
  return j;
}

namespace detail {

// Enumerates simple s-t paths of exactly `steps` edges avoiding used edges;
// calls sink(walk) for each, stopping early if sink returns true.
inline bool paths_of_length(const SimpleGraph& g, int target, int steps,
                            std::vector<int>& walk, std::vector<char>& visited,
                            std::uint64_t& used,
                            const std::function<bool(const std::vector<int>&)>& sink) {
  int cur = walk.back();
  if (steps == 0) {
    if (cur != target) return false;
    return sink(walk);
  }
  for (int nb : g.neighbors(cur)) {
    if (visited[nb]) continue;
    auto [a, b] = ordered(cur, nb);
    std::uint64_t bit = std::uint64_t{1} << (a * 8 + b);
    if (used & bit) continue;
    visited[nb] = 1;
    walk.push_back(nb);
    used |= bit;
    bool done = paths_of_length(g, target, steps - 1, walk, visited, used, sink);
    used &= ~bit;
    walk.pop_back();
    visited[nb] = 0;
    if (done) return true;
  }
  return false;
}

inline bool route_all(const SimpleGraph& g,
                      const std::vector<VertexPair>& hostends, std::size_t idx,
                      std::uint64_t& used, std::vector<std::vector<int>>& walks) {
  if (idx == hostends.size()) return true;
  auto [s, t] = hostends[idx];
  for (int len = 1; len < g.n(); ++len) {
    std::vector<int> walk{s};
    std::vector<char> visited(g.n(), 0);
    visited[s] = 1;
    // At the moment sink fires, `used` already carries the bits of the walk
    // being built, so the recursion below sees a consistent mask.
    bool done = paths_of_length(
        g, t, len, walk, visited, used,
        [&](const std::vector<int>& found) {
          walks.push_back(found);
          if (route_all(g, hostends, idx + 1, used, walks)) return true;
          walks.pop_back();
          return false;
        });
    if (done) return true;
  }
  return false;
}

inline bool choose_parts(const SimpleGraph& host,
                         const std::vector<int>& part_sizes, std::size_t part,
                         std::vector<char>& taken, std::vector<int>& branch,
                         const std::function<bool()>& leaf) {
  if (part == part_sizes.size()) return leaf();
  int need = part_sizes[part];
  std::vector<int> chosen;
  std::function<bool(int)> pick = [&](int from) {
    if (static_cast<int>(chosen.size()) == need) {
      for (int v : chosen) branch.push_back(v);
      bool done = choose_parts(host, part_sizes, part + 1, taken, branch, leaf);
      branch.resize(branch.size() - need);
      return done;
    }
    for (int v = from; v < host.n(); ++v) {
      if (taken[v]) continue;
      taken[v] = 1;
      chosen.push_back(v);
      if (pick(v + 1)) return true;
      chosen.pop_back();
      taken[v] = 0;
    }
    return false;
  };
  return pick(0);
}

}  // namespace detail

// Exhaustive immersion search on tiny hosts: tries every injective placement
// (each part listed in increasing order) and, per placement, backtracks over
// edge-disjoint simple paths by increasing length. Deterministic; first hit
// wins. Guards: host order at most 8 and at most 6 pattern edges.
inline std::optional<ImmersionCertificate> exhaustive_immersion_search(
    const SimpleGraph& host, const Pattern& pattern) {
  validate_pattern(pattern);
  auto pedges = pattern_edges(pattern);
  if (host.n() > 8)
    throw SizeLimit("exhaustive search: host larger than 8 vertices");
  if (pedges.size() > 6)
    throw SizeLimit("exhaustive search: pattern larger than 6 edges");
  if (pattern_order(pattern) > host.n()) return std::nullopt;

  std::vector<int> part_sizes;
  if (auto* b = std::get_if<BicliquePattern>(&pattern))
    part_sizes = {b->left_size, b->right_size};
  else
    part_sizes = {1, 1, std::get<TripartitePattern>(pattern).tail};

  std::optional<ImmersionCertificate> result;
  std::vector<char> taken(host.n(), 0);
  std::vector<int> branch;
  detail::choose_parts(host, part_sizes, 0, taken, branch, [&]() {
    if (std::holds_alternative<TripartitePattern>(pattern) &&
        branch[0] > branch[1])
      return false;  // the two singleton parts are interchangeable
    std::vector<VertexPair> hostends;
    for (auto [u, v] : pedges) hostends.push_back({branch[u], branch[v]});
    std::uint64_t used = 0;
    std::vector<std::vector<int>> walks;
    if (!detail::route_all(host, hostends, 0, used, walks)) return false;
    ImmersionCertificate c;
    c.host = host;
    c.pattern = pattern;
    c.branch = branch;
    for (std::size_t i = 0; i < walks.size(); ++i)
      c.paths.push_back({{hostends[i].first, hostends[i].second}, walks[i]});
    result = std::move(c);
    return true;
  });
  return result;
}

}  // namespace imcert
