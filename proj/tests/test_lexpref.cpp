#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "prefnet/generators.hpp"
#include "prefnet/lexpref.hpp"
#include "prefnet/reference.hpp"
#include "prefnet/rng.hpp"
#include "prefnet/rules.hpp"

using namespace prefnet;

namespace {

bool bijection_exists(const LinearOrder& o, SubsetMask g, SubsetMask gp) {
  auto a = g.members();
  auto b = gp.members();
  std::sort(b.begin(), b.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size(); ++i) ok = ok && o.prefers(b[i], a[i]);
    if (ok) return true;
  } while (std::next_permutation(b.begin(), b.end()));
  return false;
}

// Random network together with a member of Clique(g) built by keeping S inside [1:|S|+g].
std::pair<PreferenceNetwork, SubsetMask> clique_g_instance(int n, int g, Rng& rng) {
  const int k = rng.uniform_int(1, n - 1);
  auto perm = rng.permutation(n);
  const SubsetMask s = SubsetMask::of(std::vector<MemberId>(perm.begin(), perm.begin() + k));
  std::vector<LinearOrder> orders;
  for (MemberId v = 0; v < n; ++v) {
    auto l = rng.permutation(n);
    if (s.contains(v)) {
      // place members in random slots among the first k+g
      const int window = std::min(n, k + g);
      std::vector<int> slots(window);
      std::iota(slots.begin(), slots.end(), 0);
      rng.shuffle(slots);
      slots.resize(k);
      std::sort(slots.begin(), slots.end());
      std::vector<MemberId> mem = s.members(), out = (SubsetMask::full(n) - s).members();
      rng.shuffle(mem);
      rng.shuffle(out);
      std::vector<MemberId> l2(n, -1);
      for (int i = 0; i < k; ++i) l2[slots[i]] = mem[i];
      std::size_t j = 0;
      for (auto& x : l2)
        if (x < 0) x = out[j++];
      l = l2;
    }
    orders.emplace_back(l);
  }
  return {PreferenceNetwork(std::move(orders)), s};
}

}  // namespace

TEST(LexPrefers, TextbookCases) {
  const LinearOrder o({0, 1, 2, 3});
  EXPECT_TRUE(lex_prefers(o, SubsetMask::of({2, 3}), SubsetMask::of({0, 1})));
  EXPECT_FALSE(lex_prefers(o, SubsetMask::of({0, 1}), SubsetMask::of({2, 3})));
  EXPECT_THROW(lex_prefers(o, SubsetMask::of({0}), SubsetMask::of({1, 2})), InputError);
  EXPECT_THROW(lex_prefers(o, SubsetMask::of({0, 1}), SubsetMask::of({1, 2})), InputError);
}

TEST(LexPrefers, ArrogantMemberBallot) {
  const auto pi = reference::b3ct_profile();
  const auto& o = pi.order(pi.id("1"));
  EXPECT_TRUE(lex_prefers(o, parse_subset(pi, "5,6"), parse_subset(pi, "2,4")));
}

TEST(LexPrefers, MatchesBijectionSearch) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform_int(2, 9);
    const LinearOrder o(rng.permutation(n));
    const int k = rng.uniform_int(1, n / 2);
    auto p = rng.permutation(n);
    const SubsetMask g = SubsetMask::of({p.begin(), p.begin() + k});
    const SubsetMask gp = SubsetMask::of({p.begin() + k, p.begin() + 2 * k});
    EXPECT_EQ(lex_prefers(o, g, gp), bijection_exists(o, g, gp));
  }
}

TEST(GsWitness, ArrogantMembersReplaced) {
  const auto pi = reference::b3ct_profile();
  const SubsetMask t = parse_subset(pi, "1,5,6");
  auto w = gs_witness(pi, t);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify(pi, t, *w));
  // the recorded witness is also valid
  GsWitness rec{parse_subset(pi, "5,6"), parse_subset(pi, "2,4"), {}};
  rec.bijections.push_back(sorted_bijection(pi.order(pi.id("1")), pi.id("1"), rec.group, rec.replacement));
  EXPECT_TRUE(verify(pi, t, rec));
}

TEST(GsWitness, VacuousCases) {
  const auto pi = reference::b3ct_profile();
  EXPECT_FALSE(gs_witness(pi, pi.ground()));
  for (MemberId v = 0; v < pi.size(); ++v) EXPECT_FALSE(gs_witness(pi, SubsetMask::single(v)));
  EXPECT_FALSE(sa_witness(pi, parse_subset(pi, "1,2,3")));
  EXPECT_FALSE(sa_witness(pi, parse_subset(pi, "1,2,3,4")));
}

TEST(GsWitness, SizeGuard) {
  const auto big = random_network(25, 3);
  EXPECT_THROW(gs_witness(big, SubsetMask::of({0, 1})), LimitError);
  SearchOptions force;
  force.force = true;
  EXPECT_NO_THROW(sa_witness(big, SubsetMask::of({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}), force));
}

TEST(GsWitness, JobsDoNotChangeWitness) {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto net = random_network(rng.uniform_int(4, 9), rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty()) continue;
    SearchOptions one, four;
    four.jobs = 4;
    const auto a = gs_witness(net, s, one), b = gs_witness(net, s, four);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->group, b->group);
      EXPECT_EQ(a->replacement, b->replacement);
      EXPECT_TRUE(verify(net, s, *a));
    }
    const auto c = sa_witness(net, s, one), d = sa_witness(net, s, four);
    ASSERT_EQ(c.has_value(), d.has_value());
    if (c) {
      EXPECT_EQ(c->replacement, d->replacement);
      EXPECT_TRUE(verify(net, s, *c));
    }
  }
}

TEST(PrunedSearch, AgreesWithExhaustive) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform_int(3, 9);
    const int g = rng.uniform_int(0, 3);
    auto [net, s] = clique_g_instance(n, g, rng);
    ASSERT_TRUE(clique_g_member(net, s, g));
    EXPECT_EQ(gs_witness_pruned(net, s, g).has_value(), gs_witness(net, s).has_value());
    EXPECT_EQ(sa_witness_pruned(net, s, g).has_value(), sa_witness(net, s).has_value());
    if (g == 0) {
      EXPECT_FALSE(gs_witness_pruned(net, s, 0));
      EXPECT_FALSE(sa_witness_pruned(net, s, 0));
    }
  }
}

TEST(PrunedSearch, RejectsNonMembers) {
  const auto pi = reference::b3ct_profile();
  EXPECT_THROW(gs_witness_pruned(pi, parse_subset(pi, "1,5,6"), 0), InputError);
}

TEST(HarmoniousCheck, AgreesWithExhaustive) {
  Rng rng(23);
  int tested = 0;
  for (int trial = 0; trial < 4000 && tested < 300; ++trial) {
    const int n = rng.uniform_int(3, 9);
    const auto net = planted_network(n, SubsetMask(rng.next() & SubsetMask::full(n).bits()), 0.7, rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty()) continue;
    // largest λ that S satisfies, then check the polynomial regime
    const Rational lambda(min_cross_support(net, s), s.size());
    if (2 * min_cross_support(net, s) <= s.size() || !((Rational(1) - lambda) * s.size() < 2)) continue;
    ++tested;
    EXPECT_EQ(gs_check_harmonious(net, s, lambda).has_value(), gs_witness(net, s).has_value());
  }
  EXPECT_GT(tested, 50);
}

TEST(WeakGs, RecordedInstanceViolates) {
  const auto net = reference::weak_gs_profile();
  const SubsetMask s = parse_subset(net, "1,2,3,4");
  auto w = weak_gs_witness(net, s);
  ASSERT_TRUE(w);
  EXPECT_LE(w->group.size(), 2);
  // one shared bijection works for both remaining members
  (s - w->group).for_each([&](MemberId voter) {
    for (auto [u, v] : w->pairs) EXPECT_TRUE(net.order(voter).prefers(v, u));
  });
  EXPECT_TRUE(gs_witness(net, s));
}

TEST(WeakGs, WeakerThanGs) {
  Rng rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const auto net = random_network(rng.uniform_int(3, 8), rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty()) continue;
    if (weak_gs_witness(net, s)) EXPECT_TRUE(gs_witness(net, s));
  }
}
