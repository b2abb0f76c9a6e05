#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "imcert/errors.hpp"
#include "imcert/graph.hpp"
#include "json.hpp"

namespace imcert {

// graph6: one printable byte per 6 bits, offset 63. Header for n, then the
// upper triangle of the adjacency matrix read column by column.
inline std::string to_graph6(const SimpleGraph& g) {
  int n = g.n();
  require(n <= 258047, "to_graph6: order too large for the 3-byte form");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline SimpleGraph from_graph6(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  require(!s.empty(), "from_graph6: empty input");

  auto sixtet = [&](std::size_t i) {
    int c = static_cast<unsigned char>(s[i]);
    require(63 <= c && c <= 126, "from_graph6: byte out of range");
    return c - 63;
  };

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(s[0]) == 126) {
    require(s.size() >= 2, "from_graph6: truncated order");
    require(static_cast<unsigned char>(s[1]) != 126,
            "from_graph6: 8-byte order form not supported");
    require(s.size() >= 4, "from_graph6: truncated order");
    n = (static_cast<long>(sixtet(1)) << 12) | (sixtet(2) << 6) | sixtet(3);
    pos = 4;
  } else {
    n = sixtet(0);
    pos = 1;
  }

  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t need = (nbits + 5) / 6;
  require(s.size() - pos == need, "from_graph6: body length mismatch");

  std::vector<VertexPair> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int c = sixtet(pos + k / 6);
      if ((c >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  if (nbits % 6 != 0) {
    int c = sixtet(pos + need - 1);
    require((c & ((1 << (6 - nbits % 6)) - 1)) == 0,
            "from_graph6: nonzero padding bits");
  }
  return SimpleGraph(static_cast<int>(n), edges);
}

inline nlohmann::json graph_to_json(const SimpleGraph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

inline SimpleGraph graph_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("n") && j["n"].is_number_integer(),
          "graph json: missing integer field 'n'");
  long n = j["n"].get<long>();
  require(n >= 0, "graph json: negative 'n'");
  require(n <= 1000000, "graph json: 'n' unreasonably large");
  std::vector<VertexPair> edges;
  if (j.contains("edges")) {
    require(j["edges"].is_array(), "graph json: 'edges' must be an array");
    for (const auto& e : j["edges"]) {
      require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                  e[1].is_number_integer(),
              "graph json: each edge must be a pair of integers");
      long u = e[0].get<long>(), v = e[1].get<long>();
      require(0 <= u && u < n && 0 <= v && v < n && u != v,
              "graph json: edge endpoint out of range or self-loop");
      edges.push_back(ordered(static_cast<int>(u), static_cast<int>(v)));
    }
  }
  return SimpleGraph(static_cast<int>(n), edges);
}

// Accepts either a JSON object or a graph6 line.
inline SimpleGraph parse_graph_auto(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  require(i < text.size(), "parse_graph_auto: empty input");
  if (text[i] == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    require(!j.is_discarded(), "parse_graph_auto: malformed json");
    return graph_from_json(j);
  }
  return from_graph6(text);
}

}  // namespace imcert
