#include "imcert/graph_io.hpp"

#include <gtest/gtest.h>

#include <random>

using imcert::SimpleGraph;
using imcert::VertexPair;

namespace {

SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<VertexPair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return SimpleGraph(n, e);
}

bool same_graph(const SimpleGraph& a, const SimpleGraph& b) {
  return a.n() == b.n() && a.edges() == b.edges();
}

}  // namespace

TEST(Graph6, FrozenVectors) {
  EXPECT_EQ(imcert::to_graph6(SimpleGraph::cycle(5)), "Dhc");
  EXPECT_EQ(imcert::to_graph6(SimpleGraph::complete(2)), "A_");
  EXPECT_EQ(imcert::to_graph6(SimpleGraph(3, {{0, 1}, {1, 2}})), "Bg");
  EXPECT_EQ(imcert::to_graph6(SimpleGraph(2)), "A?");
  EXPECT_EQ(imcert::to_graph6(SimpleGraph(0)), "?");
  EXPECT_EQ(imcert::to_graph6(SimpleGraph(1)), "@");

  EXPECT_TRUE(same_graph(imcert::from_graph6("Dhc"), SimpleGraph::cycle(5)));
  EXPECT_TRUE(same_graph(imcert::from_graph6("A_"), SimpleGraph::complete(2)));
  EXPECT_TRUE(
      same_graph(imcert::from_graph6("Bg"), SimpleGraph(3, {{0, 1}, {1, 2}})));
  EXPECT_TRUE(same_graph(imcert::from_graph6("A?"), SimpleGraph(2)));
}

TEST(Graph6, HeaderAndWhitespaceAccepted) {
  EXPECT_TRUE(
      same_graph(imcert::from_graph6(">>graph6<<Dhc"), SimpleGraph::cycle(5)));
  EXPECT_TRUE(same_graph(imcert::from_graph6("  Dhc\n"), SimpleGraph::cycle(5)));
}

TEST(Graph6, RoundTripIncludingMultibyteOrder) {
  std::mt19937 rng(31);
  for (int n : {1, 2, 5, 10, 40, 62, 63, 64, 65, 80}) {
    SimpleGraph g = random_graph(n, 0.45, rng);
    std::string s = imcert::to_graph6(g);
    if (n >= 63)
      EXPECT_EQ(s[0], '~');
    else
      EXPECT_NE(s[0], '~');
    EXPECT_TRUE(same_graph(imcert::from_graph6(s), g)) << "n=" << n;
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(imcert::from_graph6(""), imcert::PreconditionViolated);
  EXPECT_THROW(imcert::from_graph6("Dh"), imcert::PreconditionViolated);
  EXPECT_THROW(imcert::from_graph6("Dhcc"), imcert::PreconditionViolated);
  EXPECT_THROW(imcert::from_graph6("D\x1fhc"), imcert::PreconditionViolated);
  EXPECT_THROW(imcert::from_graph6("~~????"), imcert::PreconditionViolated);
  // C5 body with a nonzero padding bit in the last sixtet.
  EXPECT_THROW(imcert::from_graph6("Dhd"), imcert::PreconditionViolated);
}

TEST(GraphJson, RoundTrip) {
  std::mt19937 rng(77);
  for (int t = 0; t < 25; ++t) {
    SimpleGraph g = random_graph(1 + static_cast<int>(rng() % 15), 0.5, rng);
    nlohmann::json j = imcert::graph_to_json(g);
    EXPECT_TRUE(same_graph(imcert::graph_from_json(j), g));
  }
  nlohmann::json j = imcert::graph_to_json(SimpleGraph(3, {{2, 0}}));
  EXPECT_EQ(j.dump(), R"({"edges":[[0,2]],"n":3})");
}

TEST(GraphJson, LiberalReadNormalizes) {
  auto j = nlohmann::json::parse(R"({"n":3,"edges":[[2,1],[1,2],[1,0]]})");
  SimpleGraph g = imcert::graph_from_json(j);
  EXPECT_EQ(g.edges(), (std::vector<VertexPair>{{0, 1}, {1, 2}}));
}

TEST(GraphJson, RejectsMalformedInput) {
  using nlohmann::json;
  EXPECT_THROW(imcert::graph_from_json(json::parse(R"({"edges":[]})")),
               imcert::PreconditionViolated);
  EXPECT_THROW(imcert::graph_from_json(json::parse(R"({"n":-1})")),
               imcert::PreconditionViolated);
  EXPECT_THROW(imcert::graph_from_json(json::parse(R"({"n":2,"edges":[[0,0]]})")),
               imcert::PreconditionViolated);
  EXPECT_THROW(imcert::graph_from_json(json::parse(R"({"n":2,"edges":[[0,2]]})")),
               imcert::PreconditionViolated);
  EXPECT_THROW(imcert::graph_from_json(json::parse(R"({"n":2,"edges":[[0]]})")),
               imcert::PreconditionViolated);
  EXPECT_THROW(imcert::graph_from_json(json::parse(R"({"n":2,"edges":[[0,1.5]]})")),
               imcert::PreconditionViolated);
}

TEST(ParseGraphAuto, DetectsFormat) {
  EXPECT_TRUE(same_graph(imcert::parse_graph_auto("  {\"n\":2,\"edges\":[[0,1]]}"),
                         SimpleGraph::complete(2)));
  EXPECT_TRUE(same_graph(imcert::parse_graph_auto("Dhc\n"), SimpleGraph::cycle(5)));
  EXPECT_THROW(imcert::parse_graph_auto("   "), imcert::PreconditionViolated);
  EXPECT_THROW(imcert::parse_graph_auto("{bad"), imcert::PreconditionViolated);
}
