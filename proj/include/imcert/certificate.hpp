#pragma once

#include <array>
#include <string>
#include <vector>

#include "imcert/errors.hpp"
#include "imcert/graph.hpp"
#include "imcert/graph_io.hpp"
#include "imcert/pattern.hpp"
#include "json.hpp"

namespace imcert {

// One routed pattern edge: its two host endpoints and the host walk that
// realizes it. The walk starts at ends[0] and finishes at ends[1].
struct CertPath {
  std::array<int, 2> ends{-1, -1};
  std::vector<int> walk;
};

inline bool operator==(const CertPath& a, const CertPath& b) {
  return a.ends == b.ends && a.walk == b.walk;
}

// Immersion witness: an injective placement of the pattern vertices into the
// host plus one host path per pattern edge, pairwise edge-disjoint.
struct ImmersionCertificate {
  SimpleGraph host;
  Pattern pattern = BicliquePattern{1, 1};
  std::vector<int> branch;      // pattern vertex -> host vertex
  std::vector<CertPath> paths;  // unordered; matched to pattern edges by ends
};

inline nlohmann::json certificate_to_json(const ImmersionCertificate& c) {
  nlohmann::json j;
  j["host"] = graph_to_json(c.host);
  if (auto* b = std::get_if<BicliquePattern>(&c.pattern)) {
    j["pattern"] = {{"kind", "biclique"},
                    {"left", b->left_size},
                    {"right", b->right_size}};
    j["branch"]["left"] = std::vector<int>(
        c.branch.begin(), c.branch.begin() + std::min<std::size_t>(
                                                 b->left_size, c.branch.size()));
    j["branch"]["right"] = std::vector<int>(
        c.branch.begin() + std::min<std::size_t>(b->left_size, c.branch.size()),
        c.branch.end());
  } else {
    nlohmann::json parts = nlohmann::json::array();
    if (c.branch.size() >= 2) {
      parts.push_back({c.branch[0]});
      parts.push_back({c.branch[1]});
      parts.push_back(std::vector<int>(c.branch.begin() + 2, c.branch.end()));
    }
    j["pattern"] = {{"kind", "complete_tripartite"},
                    {"parts", {1, 1, std::get<TripartitePattern>(c.pattern).tail}}};
    j["branch"]["parts"] = parts;
  }
  j["paths"] = nlohmann::json::array();
  for (const auto& p : c.paths)
    j["paths"].push_back({{"ends", {p.ends[0], p.ends[1]}}, {"walk", p.walk}});
  return j;
}

inline ImmersionCertificate certificate_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("host") && j.contains("pattern") &&
              j.contains("branch") && j.contains("paths"),
          "certificate json: need host, pattern, branch, paths");
  ImmersionCertificate c;
  c.host = graph_from_json(j["host"]);

  const auto& pj = j["pattern"];
  require(pj.is_object() && pj.contains("kind") && pj["kind"].is_string(),
          "certificate json: pattern needs a string 'kind'");
  std::string kind = pj["kind"].get<std::string>();
  auto read_ints = [](const nlohmann::json& a, const char* what) {
    require(a.is_array(), what);
    std::vector<int> v;
    for (const auto& x : a) {
      require(x.is_number_integer(), what);
      v.push_back(x.get<int>());
    }
    return v;
  };
  if (kind == "biclique") {
    require(pj.contains("left") && pj["left"].is_number_integer() &&
                pj.contains("right") && pj["right"].is_number_integer(),
            "certificate json: biclique needs integer left and right");
    c.pattern = BicliquePattern{pj["left"].get<int>(), pj["right"].get<int>()};
    validate_pattern(c.pattern);
    require(j["branch"].is_object() && j["branch"].contains("left") &&
                j["branch"].contains("right"),
            "certificate json: biclique branch needs left and right arrays");
    auto L = read_ints(j["branch"]["left"],
                       "certificate json: branch.left must hold integers");
    auto R = read_ints(j["branch"]["right"],
                       "certificate json: branch.right must hold integers");
    require(static_cast<int>(L.size()) ==
                    std::get<BicliquePattern>(c.pattern).left_size &&
            static_cast<int>(R.size()) ==
                    std::get<BicliquePattern>(c.pattern).right_size,
            "certificate json: branch part sizes disagree with pattern");
    c.branch = L;
    c.branch.insert(c.branch.end(), R.begin(), R.end());
  } else if (kind == "complete_tripartite") {
    require(pj.contains("parts") && pj["parts"].is_array() &&
                pj["parts"].size() == 3,
            "certificate json: tripartite needs parts [1,1,s]");
    auto sizes = read_ints(pj["parts"],
                           "certificate json: parts must hold integers");
    require(sizes[0] == 1 && sizes[1] == 1 && sizes[2] >= 1,
            "certificate json: tripartite parts must be [1,1,s]");
    c.pattern = TripartitePattern{sizes[2]};
    require(j["branch"].is_object() && j["branch"].contains("parts") &&
                j["branch"]["parts"].is_array() &&
                j["branch"]["parts"].size() == 3,
            "certificate json: tripartite branch needs 3 part arrays");
    c.branch.clear();
    for (int part = 0; part < 3; ++part) {
      auto vs = read_ints(j["branch"]["parts"][part],
                          "certificate json: branch parts must hold integers");
      require(static_cast<int>(vs.size()) == (part < 2 ? 1 : sizes[2]),
              "certificate json: branch part sizes disagree with pattern");
      c.branch.insert(c.branch.end(), vs.begin(), vs.end());
    }
  } else {
    require(false, "certificate json: unknown pattern kind");
  }

  require(j["paths"].is_array(), "certificate json: paths must be an array");
  for (const auto& p : j["paths"]) {
    require(p.is_object() && p.contains("ends") && p["ends"].is_array() &&
                p["ends"].size() == 2 && p.contains("walk"),
            "certificate json: each path needs ends [u,v] and a walk");
    CertPath cp;
    auto ends = read_ints(p["ends"],
                          "certificate json: ends must hold integers");
    cp.ends = {ends[0], ends[1]};
    cp.walk = read_ints(p["walk"],
                        "certificate json: walk must hold integers");
    c.paths.push_back(std::move(cp));
  }
  return c;
}

}  // namespace imcert
