#include <gtest/gtest.h>

#include "prefnet/aggregation.hpp"
#include "prefnet/generators.hpp"
#include "prefnet/reference.hpp"
#include "prefnet/rng.hpp"
#include "prefnet/rules.hpp"

using namespace prefnet;

namespace {

std::vector<int> b3ct_votes(const PreferenceNetwork& net, SubsetMask s, int k) {
  std::vector<int> out;
  for (MemberId i = 0; i < net.size(); ++i) out.push_back(phi_votes(net, s, k, i));
  return out;
}

std::vector<std::string> block_labels(const PreferenceNetwork& net, const OrderedPartition& p) {
  std::vector<std::string> out;
  for (auto b : p.blocks) out.push_back(format_subset(net, b));
  return out;
}

}  // namespace

TEST(Weights, Schemas) {
  const auto b = b3ct_weights(6);
  EXPECT_EQ(b.w[2], (std::vector<double>{1, 1, 1, 0, 0, 0}));
  const auto bo = borda_weights(6);
  for (const auto& wk : bo.w) EXPECT_EQ(wk, (std::vector<double>{6, 5, 4, 3, 2, 1}));
  EXPECT_EQ(b3ct_weights(1).w[0], std::vector<double>{1});
}

TEST(Weighted, ReferenceVotes) {
  const auto pi = reference::b3ct_profile();
  const SubsetMask s = parse_subset(pi, "1,2,3");
  EXPECT_EQ(b3ct_votes(pi, s, 3), (std::vector<int>{2, 2, 2, 1, 1, 1}));
  const auto agg = aggregate_weighted(b3ct_weights(6), pi.profile(s));
  EXPECT_EQ(block_labels(pi, agg), (std::vector<std::string>{"1,2,3", "4,5,6"}));

  const auto moved = reference::b3ct_promoted();
  const auto agg2 = aggregate_weighted(b3ct_weights(6), moved.profile(s));
  EXPECT_EQ(block_labels(moved, agg2), (std::vector<std::string>{"4", "1,2,3", "5,6"}));
  EXPECT_EQ(phi_votes(moved, s, 3, moved.id("4")), 3);
}

TEST(Weighted, PhiOnSubgroup) {
  const auto pi = reference::b3ct_profile();
  const SubsetMask t = parse_subset(pi, "1,2");
  EXPECT_EQ(b3ct_votes(pi, t, 3), (std::vector<int>{1, 2, 1, 1, 1, 0}));
  for (MemberId i = 0; i < 6; ++i) EXPECT_EQ(phi_votes(pi, t, 6, i), 2);
  EXPECT_THROW(phi_votes(pi, t, 0, 0), InputError);
}

TEST(Weighted, BordaSingleVoterIsThatOrder) {
  const auto net = random_network(7, 4);
  const auto agg = aggregate_weighted(borda_weights(7), net.profile(SubsetMask::single(2)));
  EXPECT_EQ(agg, OrderedPartition::from_order(net.order(2)));
}

TEST(Weighted, AffineInvariance) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform_int(2, 7);
    const auto net = random_network(n, rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty()) continue;
    auto w = borda_weights(n);
    auto w2 = w;
    for (auto& wk : w2.w)
      for (auto& x : wk) x = 3 * x + 2;
    EXPECT_EQ(aggregate_weighted(w, net.profile(s)), aggregate_weighted(w2, net.profile(s)));
  }
}

TEST(Weighted, SchemaMismatch) {
  const auto pi = reference::b3ct_profile();
  EXPECT_THROW(aggregate_weighted(b3ct_weights(5), pi.profile(pi.ground())), InputError);
}

TEST(Harmonious, UnanimityCounterexample) {
  const auto net = reference::unanimity_profile();
  const SubsetMask s = parse_subset(net, "a,b");
  const auto agg = aggregate_harmonious(net.profile(s), 3);
  ASSERT_EQ(agg.blocks.size(), 1u);
  EXPECT_FALSE(is_fixed_point(harmonious_aggregator(), net, s));
}

TEST(Harmonious, ArrogantCommunityOrder) {
  const auto pi = reference::b3ct_profile();
  const SubsetMask t = parse_subset(pi, "1,5,6");
  const auto agg = aggregate_harmonious(pi.profile(t), 6);
  EXPECT_EQ(block_labels(pi, agg), (std::vector<std::string>{"1", "5", "6", "4", "2", "3"}));
}

TEST(Harmonious, UnanimousProfileIsThatOrder) {
  const LinearOrder o({3, 1, 0, 2});
  const Profile p{o, o, o};
  EXPECT_EQ(aggregate_harmonious(p, 4), OrderedPartition::from_order(o));
}

TEST(Harmonious, CrossBlockPairsHaveOneDirection) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform_int(2, 8);
    const auto net = random_network(n, rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty()) continue;
    const auto p = net.profile(s);
    const auto g = majority_digraph(p, n);
    const auto agg = aggregate_harmonious(p, n);
    SubsetMask cover;
    for (auto b : agg.blocks) {
      EXPECT_TRUE(cover.disjoint(b));
      cover = cover | b;
    }
    EXPECT_EQ(cover, SubsetMask::full(n));
    for (MemberId i = 0; i < n; ++i)
      for (MemberId j = 0; j < n; ++j)
        if (agg.strictly_prefers(i, j)) {
          EXPECT_TRUE(g.edge(i, j));
          EXPECT_FALSE(g.edge(j, i));
        }
  }
}

TEST(FixedPoint, HarmoniousMatchesDefinition) {
  Rng rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform_int(2, 7);
    const auto net = random_network(n, rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty()) continue;
    EXPECT_EQ(is_fixed_point(harmonious_aggregator(), net, s), harmonious_member(net, s));
    EXPECT_EQ(is_fixed_point(weighted_aggregator(b3ct_family()), net, s), weighted_member(net, s, b3ct_family()));
  }
}

TEST(FixedPoint, WholeSetAlways) {
  const auto pi = reference::b3ct_profile();
  EXPECT_TRUE(is_fixed_point(harmonious_aggregator(), pi, pi.ground()));
  EXPECT_TRUE(is_fixed_point(weighted_aggregator(borda_family()), pi, pi.ground()));
  EXPECT_TRUE(is_fixed_point(weighted_aggregator(b3ct_family()), pi, parse_subset(pi, "1,2,3")));
}
