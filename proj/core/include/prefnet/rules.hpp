#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "prefnet/aggregation.hpp"
#include "prefnet/lexpref.hpp"

namespace prefnet {

using MemberPredicate = std::function<bool(const PreferenceNetwork&, SubsetMask)>;

struct CommunityRule {
  std::string name;
  MemberPredicate member;

  bool operator()(const PreferenceNetwork& net, SubsetMask s) const { return member(net, s); }
};

// g as a function of |S|.
using GFunction = std::function<int(int)>;

bool clique_member(const PreferenceNetwork& net, SubsetMask s);
bool clique_g_member(const PreferenceNetwork& net, SubsetMask s, int g);
bool clique_g_member(const PreferenceNetwork& net, SubsetMask s, const GFunction& g);
bool harmonious_member(const PreferenceNetwork& net, SubsetMask s);
bool lambda_harmonious_member(const PreferenceNetwork& net, SubsetMask s, Rational lambda);
bool weighted_member(const PreferenceNetwork& net, SubsetMask s, const WeightSchema& w);
bool weighted_member(const PreferenceNetwork& net, SubsetMask s, const WeightFamily& family);
bool gs_member(const PreferenceNetwork& net, SubsetMask s, const SearchOptions& opts = {});
bool sa_member(const PreferenceNetwork& net, SubsetMask s, const SearchOptions& opts = {});
bool comprehensive_member(const PreferenceNetwork& net, SubsetMask s, const SearchOptions& opts = {});

// Number of members of S ranking u above v.
int support(const PreferenceNetwork& net, SubsetMask s, MemberId u, MemberId v);
// Smallest support over cross pairs (u in S, v outside); |S| when S = V.
int min_cross_support(const PreferenceNetwork& net, SubsetMask s);

CommunityRule clique_rule();
CommunityRule clique_g_rule(int g);
CommunityRule harmonious_rule();
CommunityRule lambda_harmonious_rule(Rational lambda);
CommunityRule weighted_rule(WeightFamily family, std::string name);
CommunityRule b3ct_rule();
CommunityRule borda_rule();
CommunityRule gs_rule(SearchOptions opts = {});
CommunityRule sa_rule(SearchOptions opts = {});
CommunityRule comprehensive_rule(SearchOptions opts = {});
CommunityRule all_rule();

// Rule expression tree under pointwise union and intersection.
struct RuleExpr {
  enum class Kind { Leaf, Union, Intersection };
  Kind kind = Kind::Leaf;
  CommunityRule leaf;
  std::vector<RuleExpr> children;

  static RuleExpr of(CommunityRule r) { return RuleExpr{Kind::Leaf, std::move(r), {}}; }
  static RuleExpr unite(std::vector<RuleExpr> c) { return RuleExpr{Kind::Union, {}, std::move(c)}; }
  static RuleExpr intersect(std::vector<RuleExpr> c) { return RuleExpr{Kind::Intersection, {}, std::move(c)}; }
};

CommunityRule combine(const RuleExpr& expr);
CommunityRule operator|(const CommunityRule& a, const CommunityRule& b);
CommunityRule operator&(const CommunityRule& a, const CommunityRule& b);

struct EnumerateOptions {
  int cap = 20;
  bool force = false;
  int jobs = 1;
};

// All non-empty members of C(A) in canonical order (size, then mask).
std::vector<SubsetMask> enumerate_rule(const CommunityRule& rule, const PreferenceNetwork& net,
                                       const EnumerateOptions& opts = {});

// Rule names accepted by make_rule: clique, clique-g, harmonious, lambda-harmonious,
// b3ct, borda, gs, sa, comprehensive, all.
struct RuleParams {
  int g = 0;
  Rational lambda{1, 2};
  SearchOptions search;
};
CommunityRule make_rule(const std::string& name, const RuleParams& params = {});
std::vector<std::string> rule_names();

}  // namespace prefnet
