#include <gtest/gtest.h>

#include "prefnet/generators.hpp"
#include "prefnet/reference.hpp"
#include "prefnet/rng.hpp"
#include "prefnet/rules.hpp"
#include "prefnet/stability.hpp"

using namespace prefnet;

TEST(Perturbation, ReferencePair) {
  const auto pi = reference::b3ct_profile();
  const auto moved = reference::b3ct_promoted();
  const SubsetMask s = parse_subset(pi, "1,2,3");
  const auto r = perturbation_report(pi, moved, s);
  EXPECT_EQ(r.disagreements, (std::vector<int>{1, 0, 2, 2, 1, 1}));
  EXPECT_EQ(r.max_fraction, Rational(2, 3));
  EXPECT_TRUE(is_delta_perturbation(pi, moved, s, Rational(2, 3)));
  EXPECT_FALSE(is_delta_perturbation(pi, moved, s, Rational(1, 2)));
  EXPECT_TRUE(is_delta_perturbation(pi, pi, s, Rational(0)));
}

TEST(Perturbation, ReversalNeedsOneThird) {
  const auto pi = reference::b3ct_profile();
  const SubsetMask s = parse_subset(pi, "1,2,3");
  auto l = pi.order(0).list();
  std::reverse(l.begin(), l.end());
  const auto rev = pi.with_order(0, LinearOrder(l));
  EXPECT_EQ(perturbation_report(pi, rev, s).max_fraction, Rational(1, 3));
  EXPECT_THROW(perturbation_report(pi, random_network(5, 1), s), InputError);
}

TEST(AlphaBeta, Reference) {
  const auto pi = reference::b3ct_profile();
  const auto ab = alpha_beta(pi, parse_subset(pi, "1,2,3"));
  EXPECT_EQ(ab.alpha, Rational(2, 3));
  EXPECT_EQ(ab.beta, Rational(1, 3));
  const auto whole = alpha_beta(pi, pi.ground());
  EXPECT_TRUE(whole.no_outsiders);
  EXPECT_EQ(whole.alpha, Rational(1));
  EXPECT_EQ(whole.beta, Rational(0));
}

TEST(Bounds, CertifiedAndRefuted) {
  const auto pi = reference::b3ct_profile();
  const SubsetMask s = parse_subset(pi, "1,2,3");
  const auto b = b3ct_perturbation_bounds(pi, s);
  EXPECT_EQ(b.certified, Rational(1, 6));
  ASSERT_TRUE(b.refuted);
  EXPECT_LE(b.certified, *b.refuted);
  ASSERT_TRUE(b.refutation);
  EXPECT_FALSE(b3ct_rule()(*b.refutation, s));
  EXPECT_TRUE(is_delta_perturbation(pi, *b.refutation, s, *b.refuted));
  EXPECT_THROW(b3ct_perturbation_bounds(pi, parse_subset(pi, "4,5")), InputError);
}

TEST(Bounds, RandomConsistency) {
  Rng rng(4);
  int tested = 0;
  for (int trial = 0; trial < 2000 && tested < 150; ++trial) {
    const int n = rng.uniform_int(3, 6);
    const SubsetMask planted(rng.next() & SubsetMask::full(n).bits());
    if (planted.empty() || planted.size() > 3) continue;
    const auto net = planted_network(n, planted, 0.6, rng.next());
    if (!b3ct_rule()(net, planted)) continue;
    ++tested;
    const auto b = b3ct_perturbation_bounds(net, planted);
    if (b.refuted) EXPECT_LE(b.certified, *b.refuted);
    // nothing breaks strictly below the certified radius
    if (b.certified > 0) {
      const Rational below = b.certified - Rational(1, 1000);
      if (below >= 0) EXPECT_FALSE(find_breaking_perturbation(net, planted, below, false));
    }
    if (b.refuted) EXPECT_TRUE(find_breaking_perturbation(net, planted, *b.refuted, false));
  }
  EXPECT_GT(tested, 30);
}

TEST(Strong, ReferenceB3ct) {
  const auto pi = reference::b3ct_profile();
  const SubsetMask s = parse_subset(pi, "1,2,3");
  EXPECT_FALSE(delta_strong_b3ct(pi, s, Rational(1, 3)));
  EXPECT_TRUE(delta_strong_b3ct(pi, s, Rational(0)));
  EXPECT_EQ(delta_strong_fixed_point(weighted_aggregator(b3ct_family()), pi, s, Rational(0)),
            is_fixed_point(weighted_aggregator(b3ct_family()), pi, s));
}

TEST(Strong, CliqueIsStrong) {
  const auto hs = hero_sidekick(3);
  const SubsetMask duo = SubsetMask::of({0, 3});
  ASSERT_TRUE(clique_member(hs, duo));
  EXPECT_TRUE(delta_strong_fixed_point(harmonious_aggregator(), hs, duo, Rational(1, 2)));
  EXPECT_TRUE(delta_strong_harmonious(hs, duo, Rational(1, 2)));
  EXPECT_FALSE(delta_strong_harmonious(hs, duo, Rational(1)));  // empty T qualifies
  EXPECT_TRUE(delta_stable_harmonious(hs, duo, Rational(1, 2)));
}

TEST(Stable, ReferenceThreshold) {
  const auto pi = reference::b3ct_profile();
  const SubsetMask t = parse_subset(pi, "1,5,6");
  EXPECT_TRUE(delta_stable_harmonious(pi, t, Rational(1, 6)));
  EXPECT_FALSE(delta_stable_harmonious(pi, t, Rational(1, 5)));
  EXPECT_THROW(delta_stable_harmonious(pi, t, Rational(3, 4)), InputError);
}

TEST(Stable, ImplicationsAndMonotonicity) {
  Rng rng(6);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.uniform_int(3, 7);
    const auto net = planted_network(n, SubsetMask(rng.next() & SubsetMask::full(n).bits()), 0.7, rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty()) continue;
    const Rational d(rng.uniform_int(0, 10), 10);
    const Rational d2 = d / 2;
    if (delta_strong_harmonious(net, s, d)) {
      EXPECT_TRUE(delta_stable_harmonious(net, s, d2));
      EXPECT_TRUE(delta_strong_harmonious(net, s, d2));
    }
    if (delta_strong_b3ct(net, s, d) && s != net.ground()) {
      const auto ab = alpha_beta(net, s);
      EXPECT_GT(ab.alpha - ab.beta, d);
    }
  }
}

TEST(Identify, TrivialCases) {
  const auto pi = reference::b3ct_profile();
  const SubsetMask t = parse_subset(pi, "1,5,6");
  EXPECT_EQ(identify(pi, t.members(), 3), t);
  for (MemberId s = 0; s < 6; ++s)
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(identify(pi, {s}, k), pi.order(s).top(k));
  EXPECT_THROW(identify(pi, {}, 1), InputError);
  EXPECT_THROW(identify(pi, {0}, 7), InputError);
}

TEST(Sampling, SampleSize) {
  EXPECT_EQ(identification_sample_size(10, 0.25), 443);
  EXPECT_EQ(identification_sample_size(1, 0.5), 1);
}

TEST(Sampling, SubsetOfBruteForceAndEnumerationEqual) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(3, 8);
    const auto net = planted_network(n, SubsetMask(rng.next() & SubsetMask::full(n).bits()), 0.9, rng.next());
    const Rational d(1, 4);
    const auto truth = brute_force_stable_harmonious(net, d);
    const auto sampled = sample_stable_harmonious(net, d, 50, rng.next());
    for (auto s : sampled) EXPECT_TRUE(std::find(truth.begin(), truth.end(), s) != truth.end());
    EXPECT_EQ(sample_stable_harmonious(net, d, 0, 1, SampleMode::Enumeration), truth);
  }
}

TEST(Sampling, CliqueAppearsAndJobsInvariant) {
  const auto hs = hero_sidekick(3);
  const auto out = sample_stable_harmonious(hs, Rational(1, 4), 100, 9);
  EXPECT_TRUE(std::find(out.begin(), out.end(), SubsetMask::of({0, 3})) != out.end());
  EXPECT_EQ(out, sample_stable_harmonious(hs, Rational(1, 4), 100, 9, SampleMode::Sampling, 4));
}

TEST(ExhaustivePerturbation, MembershipPreservingDisjunction) {
  Rng rng(10);
  int certified = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.uniform_int(3, 5);
    const SubsetMask s(rng.next() & SubsetMask::full(n).bits());
    if (s.empty() || s.size() > 3 || s == SubsetMask::full(n)) continue;
    const auto net = planted_network(n, s, 0.7, rng.next());
    if (!b3ct_rule()(net, s)) continue;
    const Rational d(rng.uniform_int(0, 3), 3);
    if (find_breaking_perturbation(net, s, d, true)) continue;
    ++certified;
    const auto ab = alpha_beta(net, s);
    bool top_block = false;
    s.for_each([&](MemberId v) { top_block = top_block || net.order(v).top(s.size()) == s; });
    EXPECT_TRUE((ab.alpha > d && ab.beta < ab.alpha - d) || top_block);
  }
  EXPECT_GT(certified, 10);
  EXPECT_THROW(find_breaking_perturbation(random_network(7, 1), SubsetMask::single(0), Rational(0), true), LimitError);
}
