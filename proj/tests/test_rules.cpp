#include <gtest/gtest.h>

#include "prefnet/aggregation.hpp"
#include "prefnet/generators.hpp"
#include "prefnet/reference.hpp"
#include "prefnet/rng.hpp"
#include "prefnet/rules.hpp"

using namespace prefnet;

TEST(Clique, Reference) {
  const auto pi = reference::b3ct_profile();
  EXPECT_FALSE(clique_member(pi, parse_subset(pi, "1,2,3")));
  EXPECT_FALSE(clique_g_member(pi, parse_subset(pi, "1,2,3"), 1));
  EXPECT_TRUE(clique_g_member(pi, parse_subset(pi, "1,2,3"), 3));
  const auto net = PreferenceNetwork({LinearOrder({0, 1}), LinearOrder({1, 0})});
  EXPECT_TRUE(clique_member(net, SubsetMask::single(0)));
  EXPECT_TRUE(clique_member(net, SubsetMask::single(1)));
  EXPECT_TRUE(clique_member(net, net.ground()));
}

TEST(Clique, NestedOrDisjoint) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform_int(2, 7);
    const auto net = planted_network(n, SubsetMask(rng.next() & SubsetMask::full(n).bits()), 0.9, rng.next());
    const auto cl = enumerate_rule(clique_rule(), net);
    for (auto a : cl)
      for (auto b : cl) EXPECT_TRUE(a.disjoint(b) || a.subset_of(b) || b.subset_of(a));
  }
}

TEST(Clique, GZeroEquivalence) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto net = random_network(rng.uniform_int(2, 6), rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty()) continue;
    EXPECT_EQ(clique_g_member(net, s, 0), clique_member(net, s));
    EXPECT_TRUE(clique_g_member(net, s, net.size() - s.size()));
    EXPECT_EQ(lambda_harmonious_member(net, s, Rational(1)), clique_member(net, s));
    EXPECT_TRUE(lambda_harmonious_member(net, s, Rational(0)));
  }
}

TEST(Harmonious, Reference) {
  const auto pi = reference::b3ct_profile();
  const SubsetMask t = parse_subset(pi, "1,5,6");
  EXPECT_TRUE(harmonious_member(pi, t));
  EXPECT_TRUE(lambda_harmonious_member(pi, t, Rational(2, 3)));
  EXPECT_FALSE(lambda_harmonious_member(pi, t, Rational(3, 4)));
  EXPECT_TRUE(harmonious_member(pi, pi.ground()));
  const auto u = reference::unanimity_profile();
  EXPECT_FALSE(harmonious_member(u, parse_subset(u, "a,b")));
}

TEST(Harmonious, LambdaMonotone) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto net = random_network(rng.uniform_int(2, 7), rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty()) continue;
    const Rational a(rng.uniform_int(0, 10), 10), b(rng.uniform_int(0, 10), 10);
    const Rational lo = std::min(a, b), hi = std::max(a, b);
    if (lambda_harmonious_member(net, s, hi)) EXPECT_TRUE(lambda_harmonious_member(net, s, lo));
  }
}

TEST(Harmonious, StrongSmallWorld) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto net = random_network(rng.uniform_int(2, 7), rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty()) continue;
    bool rhs = true;
    (net.ground() - s).for_each([&](MemberId v) {
      const SubsetMask local = s | SubsetMask::single(v);
      rhs = rhs && harmonious_member(project(net, local), restrict_to(s, local));
    });
    EXPECT_EQ(harmonious_member(net, s), rhs);
  }
}

TEST(Weighted, WeakGsProfile) {
  const auto net = reference::weak_gs_profile();
  const SubsetMask s = parse_subset(net, "1,2,3,4");
  std::vector<int> votes;
  for (MemberId i = 0; i < 6; ++i) votes.push_back(phi_votes(net, s, 4, i));
  EXPECT_EQ(votes, (std::vector<int>{4, 4, 3, 3, 1, 1}));
  EXPECT_TRUE(weighted_member(net, s, b3ct_family()));
  EXPECT_TRUE(weighted_member(net, s, borda_family()));
  // recomputed Borda totals under w = (6,5,4,3,2,1)
  const auto scores = weighted_scores(borda_weights(6), net.profile(s));
  EXPECT_EQ(scores, (std::vector<double>{20, 16, 16, 14, 10, 8}));
}

TEST(Weighted, SingleMember) {
  const PreferenceNetwork one({LinearOrder({0})});
  EXPECT_TRUE(weighted_member(one, one.ground(), b3ct_family()));
}

TEST(Comprehensive, Reference) {
  const auto pi = reference::b3ct_profile();
  EXPECT_TRUE(comprehensive_member(pi, pi.ground()));
  EXPECT_FALSE(comprehensive_member(pi, parse_subset(pi, "1,5,6")));
  const auto hs = hero_sidekick(4);
  EXPECT_TRUE(comprehensive_member(hs, SubsetMask::of({0, 1, 2, 3})));
}

TEST(Lattice, IdempotenceAndAbsorption) {
  const auto c1 = harmonious_rule(), c2 = b3ct_rule();
  const auto idem = c1 & c1;
  const auto absorb = c1 | (c1 & c2);
  const auto absorb2 = c1 & (c1 | c2);
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto net = random_network(rng.uniform_int(2, 6), rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty()) continue;
    EXPECT_EQ(idem(net, s), c1(net, s));
    EXPECT_EQ(absorb(net, s), c1(net, s));
    EXPECT_EQ(absorb2(net, s), c1(net, s));
  }
}

TEST(Enumerate, HeroSidekickCliques) {
  const auto hs = hero_sidekick(4);
  const auto cl = enumerate_rule(clique_rule(), hs);
  EXPECT_EQ(cl.size(), 9u);
  const auto comp = enumerate_rule(comprehensive_rule(), hs);
  for (std::uint64_t side = 0; side < 16; ++side) {
    const SubsetMask s(0xFull | (side << 4));
    EXPECT_TRUE(std::find(comp.begin(), comp.end(), s) != comp.end()) << to_string(s);
  }
}

TEST(Enumerate, CapAndJobs) {
  const auto big = random_network(21, 1);
  EXPECT_THROW(enumerate_rule(clique_rule(), big), LimitError);
  const auto net = random_network(10, 2);
  EnumerateOptions one, four;
  four.jobs = 4;
  EXPECT_EQ(enumerate_rule(harmonious_rule(), net, one), enumerate_rule(harmonious_rule(), net, four));
}

TEST(Factory, KnownNames) {
  for (const auto& name : rule_names()) EXPECT_NO_THROW(make_rule(name));
  EXPECT_THROW(make_rule("kemeny"), InputError);
}
