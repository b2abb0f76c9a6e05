// Acceptance battery. Each test prints one [CRITERION k] PASS/FAIL line;
// the build trace is shared across tests so the claim audit at the end sees
// every decomposition the earlier sweeps performed.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "imcert/builder.hpp"
#include "imcert/chromatic.hpp"
#include "imcert/enumerate.hpp"
#include "imcert/generators.hpp"
#include "imcert/matching.hpp"
#include "imcert/suite.hpp"
#include "imcert/verify.hpp"

namespace {

using imcert::BicliquePattern;
using imcert::ImmersionCertificate;
using imcert::Rng;
using imcert::SimpleGraph;
using imcert::VertexPair;

imcert::BuildTrace g_trace;

void absorb(const imcert::BuildTrace& t) {
  g_trace.builds += t.builds;
  g_trace.claims_evaluated += t.claims_evaluated;
  g_trace.claims_failed += t.claims_failed;
}

void stamp(int criterion) {
  std::cout << "[CRITERION " << criterion << "] "
            << (::testing::Test::HasFailure() ? "FAIL" : "PASS") << "\n";
}

// 35-vertex host whose smallest non-adjacent pair decomposes with a nonempty
// common neighborhood and both anchor-missing sides small; drives the claim
// machinery deterministically.
SimpleGraph pivot_case_fixture() {
  std::vector<VertexPair> e;
  auto add_clique = [&](const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        e.push_back({vs[i], vs[j]});
  };
  std::vector<int> C, xc{0}, yc{1}, xs{0}, ys{1};
  for (int v = 2; v <= 8; ++v) C.push_back(v);
  for (int v = 9; v <= 14; ++v) xc.push_back(v);
  for (int v = 22; v <= 27; ++v) yc.push_back(v);
  for (int v = 9; v <= 21; ++v) xs.push_back(v);
  for (int v = 22; v <= 34; ++v) ys.push_back(v);
  add_clique(C);
  add_clique(xs);
  add_clique(ys);
  for (int c : C)
    for (int v : xc) e.push_back({c, v});
  for (int c : C)
    for (int v : yc) e.push_back({c, v});
  for (int u = 15; u <= 21; ++u)
    for (int w = 28; w <= 34; ++w) e.push_back({u, w});
  return SimpleGraph(35, e);
}

TEST(Acceptance, Criterion1GeneratedSweepBuildsAllSizes) {
  [&] {
    auto start = std::chrono::steady_clock::now();
    imcert::SuiteOptions opt;
    opt.n_min = 5;
    opt.n_max = 60;
    opt.seeds = 50;
    opt.kempe_cap = 0;  // tripartite builds are criterion 5
    imcert::SuiteResult res = imcert::run_suite(opt);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    EXPECT_EQ(res.hosts, 4L * 56 * 50);
    EXPECT_EQ(res.builds, 173600);
    EXPECT_EQ(res.invalid, 0);
    EXPECT_LT(secs, 300.0);
    absorb(res.trace);
  }();
  stamp(1);
}

TEST(Acceptance, Criterion2BuilderAgreesWithExhaustiveSearch) {
  imcert::BuildTrace tr;
  [&] {
    const std::vector<std::size_t> expected{1, 2, 3, 7, 14, 38, 107};
    for (int n = 1; n <= 7; ++n) {
      auto hosts = imcert::enumerate_alpha2_hosts(n);
      ASSERT_EQ(hosts.size(), expected[n - 1]);
      int h = (n + 1) / 2;
      for (const auto& g : hosts)
        for (int ell = 1; ell <= h - 1; ++ell) {
          ImmersionCertificate built =
              imcert::build_biclique_immersion(g, ell, &tr);
          ASSERT_TRUE(imcert::verify_certificate(built).valid)
              << "n=" << n << " ell=" << ell;
          auto found = imcert::exhaustive_immersion_search(
              g, BicliquePattern{ell, h - ell});
          ASSERT_TRUE(found.has_value()) << "n=" << n << " ell=" << ell;
          ASSERT_TRUE(imcert::verify_certificate(*found).valid);
        }
    }
    const auto models = imcert::generator_models();
    for (int i = 0; i < 500; ++i) {
      imcert::GeneratorSpec spec;
      spec.model = models[i % models.size()];
      spec.n = 8;
      spec.p = 0.2 + 0.3 * (i % 3);
      spec.seed = 52000ULL + i;
      SimpleGraph g = imcert::generate_graph(spec);
      for (int ell = 1; ell <= 3; ++ell) {
        ImmersionCertificate built =
            imcert::build_biclique_immersion(g, ell, &tr);
        ASSERT_TRUE(imcert::verify_certificate(built).valid);
        auto found = imcert::exhaustive_immersion_search(
            g, BicliquePattern{ell, 4 - ell});
        ASSERT_TRUE(found.has_value()) << "host " << i << " ell=" << ell;
        ASSERT_TRUE(imcert::verify_certificate(*found).valid);
      }
    }
  }();
  absorb(tr);
  stamp(2);
}

TEST(Acceptance, Criterion3RepresentativeMatchingFamilies) {
  Rng rng(301);
  [&] {
  for (int round = 0; round < 1000; ++round) {
    int k = 1 + rng.below(8);
    int j = 1 + rng.below(k);
    int ground_n = std::max(k, 3) + rng.below(9);
    std::vector<int> universe(ground_n);
    for (int v = 0; v < ground_n; ++v) universe[v] = v;
    std::vector<std::vector<int>> sets;
    for (int i = 0; i < j; ++i) {
      for (int t = ground_n - 1; t > 0; --t)
        std::swap(universe[t], universe[rng.below(t + 1)]);
      std::vector<int> s(universe.begin(), universe.begin() + k);
      std::sort(s.begin(), s.end());
      sets.push_back(s);
    }
    auto out = imcert::disjoint_representative_matchings(ground_n, sets);
    ASSERT_EQ(static_cast<int>(out.size()), j);
    std::set<std::pair<int, int>> all_edges;
    for (int i = 0; i < j; ++i) {
      ASSERT_EQ(static_cast<int>(out[i].size()), k);
      std::set<int> members;
      for (int t = 0; t < k; ++t) {
        EXPECT_EQ(out[i][t].first, ground_n + t);  // one edge per slot
        EXPECT_TRUE(std::binary_search(sets[i].begin(), sets[i].end(),
                                       out[i][t].second));
        EXPECT_TRUE(members.insert(out[i][t].second).second);
        EXPECT_TRUE(all_edges.insert(out[i][t]).second)
            << "edge shared between matchings";
      }
    }
  }
  }();
  stamp(3);
}

TEST(Acceptance, Criterion4DisjointPairMatchings) {
  Rng rng(401);
  [&] {
  for (int round = 0; round < 500; ++round) {
    int k = 1 + rng.below(12);
    int m = std::min(k, k / 2 + 1);
    imcert::ABPairs in;
    in.k = k;
    std::vector<int> universe(2 * k);
    for (int v = 0; v < 2 * k; ++v) universe[v] = v;
    std::vector<int> sizes;
    for (int i = 0; i < m; ++i) {
      int lo = std::max(1, 2 * i);
      int s = lo + rng.below(k - lo + 1);
      sizes.push_back(s);
      for (int t = 2 * k - 1; t > 0; --t)
        std::swap(universe[t], universe[rng.below(t + 1)]);
      std::vector<int> A(universe.begin(), universe.begin() + s);
      std::vector<int> B(universe.begin() + s, universe.begin() + 2 * s);
      in.pairs.push_back({A, B});
    }
    auto out = imcert::hall_disjoint_AB_matchings(in);
    ASSERT_EQ(static_cast<int>(out.size()), m);
    std::set<VertexPair> all_edges;
    for (int i = 0; i < m; ++i) {
      ASSERT_EQ(static_cast<int>(out[i].size()), sizes[i]);
      std::set<int> a_seen, b_seen;
      const auto& [A, B] = in.pairs[i];
      for (auto [a, b] : out[i]) {
        EXPECT_TRUE(std::count(A.begin(), A.end(), a) == 1);
        EXPECT_TRUE(std::count(B.begin(), B.end(), b) == 1);
        EXPECT_TRUE(a_seen.insert(a).second);
        EXPECT_TRUE(b_seen.insert(b).second);
        EXPECT_TRUE(all_edges.insert(imcert::ordered(a, b)).second)
            << "edge reused across matchings";
      }
    }
  }
  }();
  stamp(4);
}

TEST(Acceptance, Criterion5TripartiteCertificates) {
  [&] {
    const auto models = imcert::generator_models();
    for (int i = 0; i < 200; ++i) {
      imcert::GeneratorSpec spec;
      spec.model = models[i % models.size()];
      spec.n = 5 + (i % 12);  // 5..16
      spec.p = 0.15 + 0.35 * (i % 3);
      spec.seed = 95000ULL + i;
      SimpleGraph g = imcert::generate_graph(spec);
      ImmersionCertificate c = imcert::kempe_immersion(g);
      ASSERT_TRUE(imcert::verify_certificate(c).valid) << "host " << i;
      int tail = std::get<imcert::TripartitePattern>(c.pattern).tail;
      EXPECT_EQ(tail, imcert::chromatic_number_exact(g) - 2);
      EXPECT_GE(tail, (spec.n + 1) / 2 - 2);  // independence 2 forces chi
    }
  }();
  stamp(5);
}

TEST(Acceptance, Criterion6NoStructuralClaimEverFailed) {
  // One deterministic host that must walk the full claim list, on top of
  // whatever the sweeps above already decomposed.
  [&] {
    imcert::BuildTrace tr;
    ImmersionCertificate c =
        imcert::build_biclique_immersion(pivot_case_fixture(), 9, &tr);
    EXPECT_TRUE(imcert::verify_certificate(c).valid);
    EXPECT_EQ(tr.claims_evaluated, 20);
    absorb(tr);
    EXPECT_GE(g_trace.claims_evaluated, 20);
    EXPECT_EQ(g_trace.claims_failed, 0);
  }();
  stamp(6);
}

// Mutation classes for the verifier fuzz. Every class is invalidating by
// construction: it breaks a rule the verifier must check, so a surviving
// mutant means a verifier hole.
enum class Mutation {
  kDropPath,
  kDuplicatePath,
  kTruncateWalk,
  kCollideBranch,
  kReverseWalk,
  kVertexOutOfRange,
  kRewireEnds,
  kDeleteHostEdge,
};

bool applicable(Mutation m, const ImmersionCertificate& c) {
  switch (m) {
    case Mutation::kCollideBranch:
      return c.branch.size() >= 2;
    case Mutation::kRewireEnds:
      if (auto* b = std::get_if<BicliquePattern>(&c.pattern))
        return b->left_size >= 2;
      return std::get<imcert::TripartitePattern>(c.pattern).tail >= 2;
    default:
      return true;
  }
}

ImmersionCertificate mutate(const ImmersionCertificate& base, Mutation m,
                            Rng& rng) {
  ImmersionCertificate c = base;
  int np = static_cast<int>(c.paths.size());
  int pick = rng.below(np);
  switch (m) {
    case Mutation::kDropPath:
      c.paths.erase(c.paths.begin() + pick);
      break;
    case Mutation::kDuplicatePath:
      c.paths.push_back(c.paths[pick]);
      break;
    case Mutation::kTruncateWalk:
      c.paths[pick].walk.pop_back();
      break;
    case Mutation::kCollideBranch: {
      int i = rng.below(static_cast<int>(c.branch.size()));
      int j = rng.below(static_cast<int>(c.branch.size()) - 1);
      if (j >= i) ++j;
      c.branch[i] = c.branch[j];
      break;
    }
    case Mutation::kReverseWalk:
      std::reverse(c.paths[pick].walk.begin(), c.paths[pick].walk.end());
      break;
    case Mutation::kVertexOutOfRange:
      c.paths[pick].walk[rng.below(
          static_cast<int>(c.paths[pick].walk.size()))] = c.host.n();
      break;
    case Mutation::kRewireEnds: {
      // Two branch vertices of the same part never span a pattern edge:
      // the first two left vertices, or the first two tail vertices.
      int a, b;
      if (std::holds_alternative<BicliquePattern>(c.pattern)) {
        a = c.branch[0];
        b = c.branch[1];
      } else {
        a = c.branch[2];
        b = c.branch[3];
      }
      c.paths[pick].ends = {a, b};
      break;
    }
    case Mutation::kDeleteHostEdge: {
      const auto& w = c.paths[pick].walk;
      VertexPair gone = imcert::ordered(w[0], w[1]);
      std::vector<VertexPair> kept;
      for (auto e : c.host.edges())
        if (e != gone) kept.push_back(e);
      c.host = SimpleGraph(c.host.n(), kept);
      break;
    }
  }
  return c;
}

TEST(Acceptance, Criterion7MutatedCertificatesAllRejected) {
  [&] {
    std::vector<ImmersionCertificate> golden;
    golden.push_back(imcert::build_biclique_immersion(pivot_case_fixture(), 9));
    {
      imcert::GeneratorSpec spec{"complement-trianglefree", 16, 0.5, 777};
      golden.push_back(
          imcert::build_biclique_immersion(imcert::generate_graph(spec), 4));
      golden.push_back(imcert::kempe_immersion(imcert::generate_graph(spec)));
    }
    {
      std::vector<VertexPair> e;
      for (int base : {0, 4})
        for (int u = 0; u < 4; ++u)
          for (int v = u + 1; v < 4; ++v) e.push_back({base + u, base + v});
      golden.push_back(imcert::build_biclique_immersion(SimpleGraph(8, e), 2));
    }

    const Mutation all[] = {
        Mutation::kDropPath,     Mutation::kDuplicatePath,
        Mutation::kTruncateWalk, Mutation::kCollideBranch,
        Mutation::kReverseWalk,  Mutation::kVertexOutOfRange,
        Mutation::kRewireEnds,   Mutation::kDeleteHostEdge,
    };
    Rng rng(701);
    for (std::size_t gi = 0; gi < golden.size(); ++gi) {
      ASSERT_TRUE(imcert::verify_certificate(golden[gi]).valid);
      std::vector<Mutation> usable;
      for (Mutation m : all)
        if (applicable(m, golden[gi])) usable.push_back(m);
      for (int round = 0; round < 100; ++round) {
        Mutation m = usable[rng.below(static_cast<int>(usable.size()))];
        ImmersionCertificate bad = mutate(golden[gi], m, rng);
        EXPECT_FALSE(imcert::verify_certificate(bad).valid)
            << "golden " << gi << " survived mutation " << static_cast<int>(m)
            << " in round " << round;
      }
    }
  }();
  stamp(7);
}

}  // namespace
