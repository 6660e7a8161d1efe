#pragma once

#include <functional>
#include <string>
#include <vector>

#include "prefnet/core.hpp"

namespace prefnet {

// Weight vectors w^k (k = 1..n) over n positions.
struct WeightSchema {
  std::string name;
  int n = 0;
  std::vector<std::vector<double>> w;  // w[k-1][p-1]

  // Weight of position p (1-based) when k ballots are aggregated. For k > n
  // every position weighs 1.
  double weight(int k, int p) const;
};

WeightSchema b3ct_weights(int n);
WeightSchema borda_weights(int n);

// A schema for every ground-set size; rules evaluated on projections need this.
using WeightFamily = std::function<WeightSchema(int n)>;
WeightFamily b3ct_family();
WeightFamily borda_family();

// Aggregation function over ballots on {0..n-1}. Must accept an empty profile.
using AggregationFn = std::function<OrderedPartition(const Profile&, int n)>;

OrderedPartition aggregate_weighted(const WeightSchema& w, const Profile& ballots);
std::vector<double> weighted_scores(const WeightSchema& w, const Profile& ballots);

// Edge (i,j) iff at least half of the ballots rank i above j.
struct MajorityDigraph {
  int n = 0;
  std::vector<std::vector<int>> support;  // support[i][j] = #ballots with i above j
  int voters = 0;
  bool edge(MemberId i, MemberId j) const { return i != j && 2 * support[i][j] >= voters; }
};

MajorityDigraph majority_digraph(const Profile& ballots, int n);
OrderedPartition aggregate_harmonious(const Profile& ballots, int n);

AggregationFn weighted_aggregator(WeightFamily family);
AggregationFn harmonious_aggregator();

// u ≻ v for every u in S, v outside, under F(Π_S).
bool is_fixed_point(const AggregationFn& f, const PreferenceNetwork& network, SubsetMask s);
bool separates(const OrderedPartition& p, SubsetMask s, int n);

// |{s in T : π_s(i) <= k}|
int phi_votes(const PreferenceNetwork& network, SubsetMask t, int k, MemberId i);

}  // namespace prefnet
