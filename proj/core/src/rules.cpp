#include "prefnet/rules.hpp"

#include <algorithm>
#include <climits>

#include "prefnet/parallel.hpp"

namespace prefnet {

namespace {

void require_subset(const PreferenceNetwork& net, SubsetMask s) {
  if (s.empty()) throw InputError("subset must be non-empty");
  if (!s.subset_of(net.ground())) throw InputError("subset names members outside the network");
}

}  // namespace

bool clique_member(const PreferenceNetwork& net, SubsetMask s) {
  require_subset(net, s);
  const int k = s.size();
  bool ok = true;
  s.for_each([&](MemberId voter) {
    if (ok && net.order(voter).top(k) != s) ok = false;
  });
  return ok;
}

bool clique_g_member(const PreferenceNetwork& net, SubsetMask s, int g) {
  return clique_g_member(net, s, GFunction([g](int) { return g; }));
}

bool clique_g_member(const PreferenceNetwork& net, SubsetMask s, const GFunction& g) {
  require_subset(net, s);
  const int bound = s.size() + g(s.size());
  bool ok = true;
  s.for_each([&](MemberId voter) {
    s.for_each([&](MemberId u) {
      if (net.order(voter).rank(u) > bound) ok = false;
    });
  });
  return ok;
}

int support(const PreferenceNetwork& net, SubsetMask s, MemberId u, MemberId v) {
  int c = 0;
  s.for_each([&](MemberId voter) { c += net.order(voter).prefers(u, v) ? 1 : 0; });
  return c;
}

int min_cross_support(const PreferenceNetwork& net, SubsetMask s) {
  require_subset(net, s);
  int best = s.size();
  const SubsetMask out = net.ground() - s;
  s.for_each([&](MemberId u) { out.for_each([&](MemberId v) { best = std::min(best, support(net, s, u, v)); }); });
  return best;
}

bool harmonious_member(const PreferenceNetwork& net, SubsetMask s) {
  return 2 * min_cross_support(net, s) > s.size();
}

bool lambda_harmonious_member(const PreferenceNetwork& net, SubsetMask s, Rational lambda) {
  if (lambda < 0 || lambda > 1) throw InputError("lambda must lie in [0,1]");
  return Rational(min_cross_support(net, s)) >= lambda * s.size();
}

bool weighted_member(const PreferenceNetwork& net, SubsetMask s, const WeightSchema& w) {
  require_subset(net, s);
  if (w.n != net.size()) throw InputError("weight schema size does not match the network");
  const auto score = weighted_scores(w, net.profile(s));
  double lo = 0, hi = 0;
  bool have_lo = false, have_hi = false;
  for (int i = 0; i < net.size(); ++i) {
    if (s.contains(i)) {
      lo = have_lo ? std::min(lo, score[i]) : score[i];
      have_lo = true;
    } else {
      hi = have_hi ? std::max(hi, score[i]) : score[i];
      have_hi = true;
    }
  }
  return !have_hi || lo > hi;
}

bool weighted_member(const PreferenceNetwork& net, SubsetMask s, const WeightFamily& family) {
  return weighted_member(net, s, family(net.size()));
}

bool gs_member(const PreferenceNetwork& net, SubsetMask s, const SearchOptions& opts) {
  return !gs_witness(net, s, opts).has_value();
}

bool sa_member(const PreferenceNetwork& net, SubsetMask s, const SearchOptions& opts) {
  return !sa_witness(net, s, opts).has_value();
}

bool comprehensive_member(const PreferenceNetwork& net, SubsetMask s, const SearchOptions& opts) {
  return sa_member(net, s, opts) && gs_member(net, s, opts);
}

CommunityRule clique_rule() { return {"clique", [](const auto& n, SubsetMask s) { return clique_member(n, s); }}; }

CommunityRule clique_g_rule(int g) {
  return {"clique-g(" + std::to_string(g) + ")",
          [g](const auto& n, SubsetMask s) { return clique_g_member(n, s, g); }};
}

CommunityRule harmonious_rule() {
  return {"harmonious", [](const auto& n, SubsetMask s) { return harmonious_member(n, s); }};
}

CommunityRule lambda_harmonious_rule(Rational lambda) {
  return {"lambda-harmonious(" + std::to_string(lambda.numerator()) + "/" + std::to_string(lambda.denominator()) + ")",
          [lambda](const auto& n, SubsetMask s) { return lambda_harmonious_member(n, s, lambda); }};
}

CommunityRule weighted_rule(WeightFamily family, std::string name) {
  return {std::move(name),
          [family = std::move(family)](const auto& n, SubsetMask s) { return weighted_member(n, s, family); }};
}

CommunityRule b3ct_rule() { return weighted_rule(b3ct_family(), "b3ct"); }
CommunityRule borda_rule() { return weighted_rule(borda_family(), "borda"); }

CommunityRule gs_rule(SearchOptions opts) {
  return {"gs", [opts](const auto& n, SubsetMask s) { return gs_member(n, s, opts); }};
}

CommunityRule sa_rule(SearchOptions opts) {
  return {"sa", [opts](const auto& n, SubsetMask s) { return sa_member(n, s, opts); }};
}

CommunityRule comprehensive_rule(SearchOptions opts) {
  return {"comprehensive", [opts](const auto& n, SubsetMask s) { return comprehensive_member(n, s, opts); }};
}

CommunityRule all_rule() {
  return {"all", [](const PreferenceNetwork& n, SubsetMask s) {
            require_subset(n, s);
            return true;
          }};
}

CommunityRule combine(const RuleExpr& expr) {
  if (expr.kind == RuleExpr::Kind::Leaf) return expr.leaf;
  if (expr.children.empty()) throw InputError("rule expression with no operands");
  std::vector<CommunityRule> parts;
  for (const auto& c : expr.children) parts.push_back(combine(c));
  const bool is_union = expr.kind == RuleExpr::Kind::Union;
  std::string name = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) name += (i ? (is_union ? " | " : " & ") : "") + parts[i].name;
  name += ")";
  return {name, [parts, is_union](const PreferenceNetwork& n, SubsetMask s) {
            for (const auto& p : parts)
              if (p(n, s) == is_union) return is_union;
            return !is_union;
          }};
}

CommunityRule operator|(const CommunityRule& a, const CommunityRule& b) {
  return combine(RuleExpr::unite({RuleExpr::of(a), RuleExpr::of(b)}));
}

CommunityRule operator&(const CommunityRule& a, const CommunityRule& b) {
  return combine(RuleExpr::intersect({RuleExpr::of(a), RuleExpr::of(b)}));
}

std::vector<SubsetMask> enumerate_rule(const CommunityRule& rule, const PreferenceNetwork& net,
                                       const EnumerateOptions& opts) {
  const int n = net.size();
  if (n > opts.cap && !opts.force)
    throw LimitError("enumeration refused for " + std::to_string(n) + " members (cap " + std::to_string(opts.cap) +
                     "; use force)");
  if (n >= 63) throw LimitError("enumeration beyond 62 members is not supported");
  const std::size_t total = (std::size_t{1} << n) - 1;  // masks 1..2^n-1
  const int jobs = resolve_jobs(opts.jobs);
  std::vector<std::vector<SubsetMask>> parts(static_cast<std::size_t>(std::max(1, jobs)));
  parallel_chunks(total, jobs, [&](std::size_t b, std::size_t e, int worker) {
    auto& out = parts[worker];
    for (std::size_t i = b; i < e; ++i) {
      const SubsetMask m(static_cast<std::uint64_t>(i + 1));
      if (rule(net, m)) out.push_back(m);
    }
  });
  std::vector<SubsetMask> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end(), CanonicalLess{});
  return all;
}

CommunityRule make_rule(const std::string& name, const RuleParams& p) {
  if (name == "clique") return clique_rule();
  if (name == "clique-g") return clique_g_rule(p.g);
  if (name == "harmonious") return harmonious_rule();
  if (name == "lambda-harmonious") return lambda_harmonious_rule(p.lambda);
  if (name == "b3ct") return b3ct_rule();
  if (name == "borda") return borda_rule();
  if (name == "gs") return gs_rule(p.search);
  if (name == "sa") return sa_rule(p.search);
  if (name == "comprehensive") return comprehensive_rule(p.search);
  if (name == "all") return all_rule();
  throw InputError("unknown rule '" + name + "'");
}

std::vector<std::string> rule_names() {
  return {"clique", "clique-g", "harmonious", "lambda-harmonious", "b3ct", "borda", "gs", "sa", "comprehensive", "all"};
}

}  // namespace prefnet
