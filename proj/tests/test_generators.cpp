#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "prefnet/generators.hpp"
#include "prefnet/rng.hpp"
#include "prefnet/rules.hpp"

using namespace prefnet;

namespace {

SatInstance all_sign_patterns() {
  SatInstance inst{3, {}};
  for (int m = 0; m < 8; ++m) inst.clauses.push_back({m & 1 ? -1 : 1, m & 2 ? -2 : 2, m & 4 ? -3 : 3});
  return inst;
}

}  // namespace

TEST(Sat, Oracles) {
  EXPECT_TRUE(brute_force_sat({3, {{1, 2, 3}}}));
  EXPECT_TRUE(brute_force_sat({2, {}}));
  EXPECT_FALSE(brute_force_sat(all_sign_patterns()));
  EXPECT_TRUE(brute_force_1in3({3, {{1, 2, 3}}}));
  EXPECT_FALSE(brute_force_1in3({3, {{1, 2, 3}, {-1, -2, -3}}}));
  EXPECT_THROW(brute_force_sat({25, {}}), LimitError);
  EXPECT_THROW(validate(SatInstance{3, {{1, 1, 2}}}), InputError);
  EXPECT_THROW(validate(SatInstance{2, {{1, 2, 3}}}), InputError);
}

TEST(Sat, Dimacs) {
  const auto inst = parse_dimacs_string("c demo\np cnf 3 2\n1 -2 3 0\n-1 2 3 0\n");
  EXPECT_EQ(inst.num_vars, 3);
  ASSERT_EQ(inst.clauses.size(), 2u);
  EXPECT_EQ(parse_dimacs_string(to_dimacs(inst)).clauses, inst.clauses);
  EXPECT_THROW(parse_dimacs_string("p cnf 3 1\n1 2 0\n"), InputError);
  EXPECT_THROW(parse_dimacs_string("p cnf 3 2\n1 2 3 0\n"), InputError);
}

TEST(SatGadget, SizesAndWitness) {
  const SatInstance one{3, {{1, 2, 3}}};
  const auto g = sat_to_network(one, 1);
  EXPECT_EQ(g.network.size(), 11);
  EXPECT_EQ(g.s.size(), 4);
  const auto w = sa_witness(g.network, g.s);
  ASSERT_TRUE(w);
  // D is always part of the replacement
  EXPECT_TRUE(g.network.find("d1").has_value());
  EXPECT_TRUE(w->replacement.contains(g.network.id("d1")));
  EXPECT_EQ(sat_to_network(one, 1).network, g.network);
}

TEST(SatGadget, Biconditional) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_3sat(rng.uniform_int(3, 4), rng.uniform_int(1, 4), rng.next());
    const bool sat = brute_force_sat(inst);
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      const auto g = sat_to_network(inst, seed);
      EXPECT_EQ(sa_witness(g.network, g.s).has_value(), sat);
    }
  }
}

TEST(SatGadget, Unsatisfiable) {
  const auto g = sat_to_network(all_sign_patterns(), 3);
  EXPECT_EQ(g.network.size(), 25);
  SearchOptions force;
  force.force = true;
  EXPECT_FALSE(sa_witness(g.network, g.s, force));
}

TEST(Padding, GsOfPaddedMatchesSaOfOriginal) {
  Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = random_3sat(3, rng.uniform_int(1, 2), rng.next());
    const auto g = sat_to_network(inst, rng.next());
    const auto padded = pad_network(g.network, g.s, g.s.size(), rng.next());
    EXPECT_EQ(padded.s.size(), 2 * g.s.size());
    SearchOptions force;
    force.force = true;
    EXPECT_EQ(gs_witness(padded.network, padded.s, force).has_value(), sa_witness(g.network, g.s).has_value());
    EXPECT_FALSE(sa_witness(padded.network, padded.s, force));
  }
  const auto net = random_network(5, 1);
  EXPECT_THROW(pad_network(net, SubsetMask::of({0, 1}), 1, 1), InputError);
}

TEST(Padding, SelfApprovingStaysGroupStable) {
  Rng rng(41);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 20; ++trial) {
    const auto net = random_network(rng.uniform_int(3, 5), rng.next());
    const SubsetMask s(rng.next() & net.ground().bits());
    if (s.empty() || s.size() > 3 || sa_witness(net, s)) continue;
    ++tested;
    const auto padded = pad_network(net, s, s.size(), rng.next());
    EXPECT_FALSE(gs_witness(padded.network, padded.s));
  }
}

TEST(HeroSidekick, Shape) {
  const auto one = hero_sidekick(1);
  EXPECT_TRUE(clique_member(one, one.ground()));
  const auto four = hero_sidekick(4);
  EXPECT_EQ(four.size(), 8);
  EXPECT_FALSE(sa_witness(four, SubsetMask::of({0, 1, 2, 3})));
}

TEST(Cubic, Sizes) {
  const SatInstance one{3, {{1, 2, 3}}};
  const auto g = cubic_1in3_gadget(one, Rational(3, 7), 1);
  EXPECT_EQ(g.s.size(), 7);
  EXPECT_EQ(g.network.size(), 13);
  EXPECT_THROW(cubic_1in3_gadget(one, Rational(1, 2), 1), InputError);
  EXPECT_THROW(cubic_1in3_gadget(one, {{0}, {0}}, Rational(1, 4), 1), InputError);
}

TEST(Cubic, Biconditional) {
  const std::vector<SatInstance> cases{
      {3, {{1, 2, 3}}},
      {3, {{1, 2, 3}, {-1, -2, -3}}},
      {4, {{1, 2, 3}, {-1, 2, 4}}},
      {4, {{1, 2, 3}, {1, 2, 4}, {-1, -2, -3}}},
  };
  for (const auto& inst : cases) {
    const int k = static_cast<int>(partition_clauses(inst).size());
    const Rational lambda = cubic_gadget_max_lambda(inst, k);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto g = cubic_1in3_gadget(inst, lambda, seed);
      const bool in_all = lambda_harmonious_member(g.network, g.s, lambda) && !gs_witness(g.network, g.s) &&
                          !sa_witness(g.network, g.s);
      EXPECT_EQ(!in_all, brute_force_1in3(inst)) << to_dimacs(inst);
    }
  }
}

TEST(Random, DeterministicAndUniform) {
  EXPECT_EQ(random_network(6, 5), random_network(6, 5));
  EXPECT_EQ(random_network(1, 5).order(0).list(), std::vector<MemberId>{0});
  std::map<std::vector<MemberId>, int> freq;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) ++freq[random_network(3, seed).order(0).list()];
  ASSERT_EQ(freq.size(), 6u);
  for (auto& [order, count] : freq) EXPECT_NEAR(count / 10000.0, 1.0 / 6, 0.02);
}

TEST(Random, ThreeSatShape) {
  const auto inst = random_3sat(4, 4, 9);
  EXPECT_NO_THROW(validate(inst));
  EXPECT_EQ(inst.clauses.size(), 4u);
}
