#include "imcert/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using imcert::BicliquePattern;
using imcert::CertPath;
using imcert::ImmersionCertificate;
using imcert::SimpleGraph;
using imcert::TripartitePattern;

namespace {

ImmersionCertificate star_in_c5() {
  ImmersionCertificate c;
  c.host = SimpleGraph::cycle(5);
  c.pattern = BicliquePattern{1, 2};
  c.branch = {0, 1, 4};
  c.paths = {{{0, 1}, {0, 1}}, {{0, 4}, {0, 4}}};
  return c;
}

bool has_rule(const imcert::VerificationReport& r, const std::string& rule) {
  return std::any_of(r.failures.begin(), r.failures.end(),
                     [&](const auto& f) { return f.rule == rule; });
}

}  // namespace

TEST(Verify, AcceptsDirectStar) {
  auto rep = imcert::verify_certificate(star_in_c5());
  EXPECT_TRUE(rep.valid);
  EXPECT_TRUE(rep.failures.empty());
  EXPECT_EQ(rep.stats.paths, 2);
  EXPECT_EQ(rep.stats.max_path_length, 1);
  EXPECT_EQ(rep.stats.host_edges_used, 2);
}

TEST(Verify, AcceptsTripartiteInK4) {
  ImmersionCertificate c;
  c.host = SimpleGraph::complete(4);
  c.pattern = TripartitePattern{2};
  c.branch = {0, 1, 2, 3};
  c.paths = {{{0, 1}, {0, 1}}, {{0, 2}, {0, 2}}, {{0, 3}, {0, 3}},
             {{1, 2}, {1, 2}}, {{1, 3}, {1, 3}}};
  auto rep = imcert::verify_certificate(c);
  EXPECT_TRUE(rep.valid);
  EXPECT_EQ(rep.stats.paths, 5);
}

TEST(Verify, WalkMayPassThroughOtherBranchVertices) {
  ImmersionCertificate c;
  c.host = SimpleGraph::complete(4);
  c.pattern = BicliquePattern{1, 2};
  c.branch = {0, 1, 2};
  // The 0-1 route runs through branch vertex 2; still a legal immersion.
  c.paths = {{{0, 1}, {0, 2, 1}}, {{0, 2}, {0, 3, 2}}};
  auto rep = imcert::verify_certificate(c);
  EXPECT_TRUE(rep.valid) << imcert::report_to_json(rep).dump(2);
  EXPECT_EQ(rep.stats.max_path_length, 2);
}

TEST(Verify, PathOrderIrrelevant) {
  auto c = star_in_c5();
  std::swap(c.paths[0], c.paths[1]);
  EXPECT_TRUE(imcert::verify_certificate(c).valid);
}

TEST(Verify, RejectsNonInjectiveBranch) {
  auto c = star_in_c5();
  c.branch = {0, 1, 1};
  auto rep = imcert::verify_certificate(c);
  EXPECT_FALSE(rep.valid);
  EXPECT_TRUE(has_rule(rep, "branch"));
}

TEST(Verify, RejectsBranchOutsideHost) {
  auto c = star_in_c5();
  c.branch = {0, 1, 7};
  EXPECT_TRUE(has_rule(imcert::verify_certificate(c), "branch"));
}

TEST(Verify, RejectsWrongPathCount) {
  auto c = star_in_c5();
  c.paths.pop_back();
  auto rep = imcert::verify_certificate(c);
  EXPECT_FALSE(rep.valid);
  EXPECT_TRUE(has_rule(rep, "cover"));
}

TEST(Verify, RejectsEndsMismatch) {
  auto c = star_in_c5();
  c.paths[1] = {{0, 3}, {0, 4, 3}};  // ends not an image of a pattern edge
  auto rep = imcert::verify_certificate(c);
  EXPECT_FALSE(rep.valid);
  EXPECT_TRUE(has_rule(rep, "cover"));
}

TEST(Verify, RejectsWalkEndpointDisagreement) {
  auto c = star_in_c5();
  c.paths[1] = {{0, 4}, {4, 0}};  // reversed walk
  auto rep = imcert::verify_certificate(c);
  EXPECT_FALSE(rep.valid);
  EXPECT_TRUE(has_rule(rep, "walk"));
}

TEST(Verify, RejectsNonAdjacentStep) {
  auto c = star_in_c5();
  c.paths[1] = {{0, 4}, {0, 2, 4}};  // 0-2 and 2-4 are chords, not edges
  auto rep = imcert::verify_certificate(c);
  EXPECT_FALSE(rep.valid);
  EXPECT_TRUE(has_rule(rep, "walk"));
}

TEST(Verify, RejectsRepeatedVertex) {
  ImmersionCertificate c;
  c.host = SimpleGraph::complete(4);
  c.pattern = BicliquePattern{1, 1};
  c.branch = {0, 1};
  c.paths = {{{0, 1}, {0, 2, 3, 0, 1}}};
  auto rep = imcert::verify_certificate(c);
  EXPECT_FALSE(rep.valid);
  EXPECT_TRUE(has_rule(rep, "walk"));
}

TEST(Verify, RejectsSharedEdge) {
  ImmersionCertificate c;
  c.host = SimpleGraph::cycle(5);
  c.pattern = BicliquePattern{1, 2};
  c.branch = {0, 1, 2};
  c.paths = {{{0, 1}, {0, 1}}, {{0, 2}, {0, 1, 2}}};
  auto rep = imcert::verify_certificate(c);
  EXPECT_FALSE(rep.valid);
  EXPECT_TRUE(has_rule(rep, "edge-disjoint"));
}

TEST(Verify, RejectsEmptyWalkAndBadPattern) {
  auto c = star_in_c5();
  c.paths[0].walk.clear();
  EXPECT_TRUE(has_rule(imcert::verify_certificate(c), "walk"));

  ImmersionCertificate bad;
  bad.host = SimpleGraph::complete(2);
  bad.pattern = BicliquePattern{0, 1};
  EXPECT_TRUE(has_rule(imcert::verify_certificate(bad), "pattern"));
}

TEST(Verify, CollectsMultipleFailures) {
  auto c = star_in_c5();
  c.branch = {0, 1, 1};
  c.paths[0] = {{0, 1}, {0, 3, 1}};  // 0-3 is an edge, 3-1 is not
  auto rep = imcert::verify_certificate(c);
  EXPECT_FALSE(rep.valid);
  EXPECT_GE(rep.failures.size(), 2u);
}

TEST(CertificateJson, RoundTripBiclique) {
  auto c = star_in_c5();
  auto j = imcert::certificate_to_json(c);
  EXPECT_EQ(j["pattern"]["kind"], "biclique");
  EXPECT_EQ(j["branch"]["left"], nlohmann::json::array({0}));
  EXPECT_EQ(j["branch"]["right"], nlohmann::json::array({1, 4}));
  auto back = imcert::certificate_from_json(j);
  EXPECT_TRUE(imcert::verify_certificate(back).valid);
  EXPECT_EQ(imcert::certificate_to_json(back).dump(), j.dump());
}

TEST(CertificateJson, RoundTripTripartite) {
  ImmersionCertificate c;
  c.host = SimpleGraph::complete(4);
  c.pattern = TripartitePattern{2};
  c.branch = {0, 1, 2, 3};
  c.paths = {{{0, 1}, {0, 1}}, {{0, 2}, {0, 2}}, {{0, 3}, {0, 3}},
             {{1, 2}, {1, 2}}, {{1, 3}, {1, 3}}};
  auto j = imcert::certificate_to_json(c);
  EXPECT_EQ(j["pattern"]["kind"], "complete_tripartite");
  EXPECT_EQ(j["pattern"]["parts"], nlohmann::json::array({1, 1, 2}));
  EXPECT_EQ(j["branch"]["parts"][2], nlohmann::json::array({2, 3}));
  auto back = imcert::certificate_from_json(j);
  EXPECT_TRUE(imcert::verify_certificate(back).valid);
}

TEST(CertificateJson, RejectsMalformed) {
  using nlohmann::json;
  EXPECT_THROW(imcert::certificate_from_json(json::parse(R"({"host":{"n":1}})")),
               imcert::PreconditionViolated);
  auto j = imcert::certificate_to_json(star_in_c5());
  j["pattern"]["kind"] = "clique";
  EXPECT_THROW(imcert::certificate_from_json(j), imcert::PreconditionViolated);
  j = imcert::certificate_to_json(star_in_c5());
  j["branch"]["left"] = nlohmann::json::array({0, 2});
  EXPECT_THROW(imcert::certificate_from_json(j), imcert::PreconditionViolated);
}
