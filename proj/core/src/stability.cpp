#include "prefnet/stability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "prefnet/parallel.hpp"
#include "prefnet/rng.hpp"
#include "prefnet/rules.hpp"

namespace prefnet {

namespace {

void check_delta(Rational delta, Rational hi) {
  if (delta < 0 || delta > hi) throw InputError("delta out of range");
}

// Sub-masks T of S with |T| >= (1-δ)|S|; stops at the first T for which `bad` holds.
bool all_large_subsets(SubsetMask s, Rational delta, const std::function<bool(SubsetMask)>& bad) {
  const Rational need = (Rational(1) - delta) * Rational(s.size());
  const std::uint64_t full = s.bits();
  for (std::uint64_t t = full;; t = (t - 1) & full) {
    const SubsetMask tm(t);
    if (Rational(tm.size()) >= need) {
      if (tm.empty() || bad(tm)) return false;
    }
    if (t == 0) break;
  }
  return true;
}

bool b3ct_member_votes(const std::vector<int>& votes, SubsetMask s) {
  int lo = INT32_MAX, hi = -1;
  for (int v = 0; v < static_cast<int>(votes.size()); ++v) {
    if (s.contains(v)) lo = std::min(lo, votes[v]);
    else hi = std::max(hi, votes[v]);
  }
  return lo > hi;
}

std::vector<int> top_votes(const PreferenceNetwork& net, SubsetMask voters, int k) {
  std::vector<int> votes(net.size(), 0);
  voters.for_each([&](MemberId s) { net.order(s).top(k).for_each([&](MemberId u) { ++votes[u]; }); });
  return votes;
}

SubsetMask rank_positions(const LinearOrder& o, SubsetMask m) {
  SubsetMask pos;
  m.for_each([&](MemberId u) { pos.insert(o.rank(u) - 1); });
  return pos;
}

}  // namespace

PerturbationReport perturbation_report(const PreferenceNetwork& base, const PreferenceNetwork& perturbed, SubsetMask s) {
  if (base.size() != perturbed.size()) throw InputError("profiles have different ground sets");
  if (s.empty() || !s.subset_of(base.ground())) throw InputError("S must be a non-empty subset");
  PerturbationReport r;
  r.disagreements.assign(base.size(), 0);
  r.membership_preserving = true;
  s.for_each([&](MemberId voter) {
    const auto &a = base.order(voter), &b = perturbed.order(voter);
    for (MemberId v = 0; v < base.size(); ++v)
      if (a.rank(v) != b.rank(v)) ++r.disagreements[v];
    if (rank_positions(a, s) != rank_positions(b, s)) r.membership_preserving = false;
  });
  const int worst = *std::max_element(r.disagreements.begin(), r.disagreements.end());
  r.max_fraction = Rational(worst, s.size());
  return r;
}

bool is_delta_perturbation(const PreferenceNetwork& base, const PreferenceNetwork& perturbed, SubsetMask s,
                           Rational delta) {
  return perturbation_report(base, perturbed, s).max_fraction <= delta;
}

AlphaBeta alpha_beta(const PreferenceNetwork& net, SubsetMask s) {
  if (s.empty() || !s.subset_of(net.ground())) throw InputError("S must be a non-empty subset");
  const int k = s.size();
  const auto votes = top_votes(net, s, k);
  AlphaBeta ab;
  int lo = k, hi = 0;
  for (MemberId v = 0; v < net.size(); ++v) {
    if (s.contains(v)) lo = std::min(lo, votes[v]);
    else hi = std::max(hi, votes[v]);
  }
  ab.alpha = Rational(lo, k);
  ab.beta = Rational(hi, k);
  ab.no_outsiders = s == net.ground();
  return ab;
}

namespace {

bool b3ct_member(const PreferenceNetwork& net, SubsetMask s) {
  return b3ct_member_votes(top_votes(net, s, s.size()), s);
}

LinearOrder demote_to_last(const LinearOrder& o, MemberId u) {
  auto l = o.list();
  l.erase(std::find(l.begin(), l.end(), u));
  l.push_back(u);
  return LinearOrder(std::move(l));
}

LinearOrder swap_members(const LinearOrder& o, MemberId a, MemberId b) {
  auto l = o.list();
  std::swap(*std::find(l.begin(), l.end(), a), *std::find(l.begin(), l.end(), b));
  return LinearOrder(std::move(l));
}

}  // namespace

PerturbationBounds b3ct_perturbation_bounds(const PreferenceNetwork& net, SubsetMask s) {
  if (s.empty() || !s.subset_of(net.ground()) || !b3ct_member(net, s))
    throw InputError("S is not a B3CT community");
  const AlphaBeta ab = alpha_beta(net, s);
  PerturbationBounds out;
  out.certified = (ab.alpha - ab.beta) / 2;
  if (ab.no_outsiders) return out;

  const int k = s.size();
  const auto votes = top_votes(net, s, k);
  MemberId u_star = -1, v_star = -1;
  for (MemberId v = 0; v < net.size(); ++v) {
    if (s.contains(v) && (u_star < 0 || votes[v] < votes[u_star])) u_star = v;
    if (!s.contains(v) && (v_star < 0 || votes[v] > votes[v_star])) v_star = v;
  }

  auto consider = [&](const PreferenceNetwork& cand) {
    if (b3ct_member(cand, s)) return false;
    const Rational d = perturbation_report(net, cand, s).max_fraction;
    if (!out.refuted || d < *out.refuted) {
      out.refuted = d;
      out.refutation = cand;
    }
    return true;
  };

  // Push u* below every other member in the ballots that currently vote for it.
  {
    PreferenceNetwork cur = net;
    bool done = false;
    s.for_each([&](MemberId voter) {
      if (done || net.order(voter).rank(u_star) > k) return;
      cur = cur.with_order(voter, demote_to_last(cur.order(voter), u_star));
      done = consider(cur);
    });
  }
  // Pull v* into the top |S| of ballots that do not vote for it, displacing u* where possible.
  {
    PreferenceNetwork cur = net;
    bool done = false;
    s.for_each([&](MemberId voter) {
      if (done || net.order(voter).rank(v_star) <= k) return;
      const auto& o = cur.order(voter);
      const MemberId victim = o.rank(u_star) <= k ? u_star : o.at(k);
      cur = cur.with_order(voter, swap_members(o, v_star, victim));
      done = consider(cur);
    });
  }
  return out;
}

std::optional<PreferenceNetwork> find_breaking_perturbation(const PreferenceNetwork& net, SubsetMask s, Rational delta,
                                                            bool membership_preserving) {
  const int n = net.size();
  if (n > 6) throw LimitError("exhaustive perturbation search is limited to n <= 6");
  if (s.empty() || !s.subset_of(net.ground())) throw InputError("S must be a non-empty subset");
  check_delta(delta, Rational(1));
  const int k = s.size();
  const Rational capr = delta * Rational(k);
  const int cap = static_cast<int>(capr.numerator() / capr.denominator());

  // Per voter: for each top-k set, the subset-minimal changed-rank masks (with a witness order).
  struct Option {
    SubsetMask top, changed;
    LinearOrder order;
  };
  const auto voters = s.members();
  std::vector<std::vector<Option>> options(voters.size());
  for (std::size_t i = 0; i < voters.size(); ++i) {
    const auto& base = net.order(voters[i]);
    const SubsetMask base_pos = rank_positions(base, s);
    std::vector<MemberId> l(n);
    for (int x = 0; x < n; ++x) l[x] = x;
    auto& opts = options[i];
    do {
      const LinearOrder cand(l);
      if (membership_preserving && rank_positions(cand, s) != base_pos) continue;
      SubsetMask changed;
      for (MemberId v = 0; v < n; ++v)
        if (cand.rank(v) != base.rank(v)) changed.insert(v);
      if (cap == 0 && !changed.empty()) continue;
      const SubsetMask top = cand.top(k);
      bool dominated = false;
      for (const auto& o : opts)
        if (o.top == top && o.changed.subset_of(changed)) dominated = true;
      if (dominated) continue;
      opts.erase(std::remove_if(opts.begin(), opts.end(),
                                [&](const Option& o) { return o.top == top && changed.subset_of(o.changed); }),
                 opts.end());
      opts.push_back({top, changed, cand});
    } while (std::next_permutation(l.begin(), l.end()));
  }

  std::vector<int> counts(n, 0), votes(n, 0);
  std::vector<const Option*> chosen(voters.size());
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i == voters.size()) return !b3ct_member_votes(votes, s);
    for (const auto& o : options[i]) {
      bool ok = true;
      o.changed.for_each([&](MemberId v) {
        if (counts[v] + 1 > cap) ok = false;
      });
      if (!ok) continue;
      o.changed.for_each([&](MemberId v) { ++counts[v]; });
      o.top.for_each([&](MemberId v) { ++votes[v]; });
      chosen[i] = &o;
      const bool hit = dfs(i + 1);
      o.changed.for_each([&](MemberId v) { --counts[v]; });
      o.top.for_each([&](MemberId v) { --votes[v]; });
      if (hit) return true;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  auto orders = net.orders();
  for (std::size_t i = 0; i < voters.size(); ++i) orders[voters[i]] = chosen[i]->order;
  return PreferenceNetwork(net.labels(), std::move(orders));
}

bool delta_strong_fixed_point(const AggregationFn& f, const PreferenceNetwork& net, SubsetMask s, Rational delta) {
  if (s.empty() || !s.subset_of(net.ground())) throw InputError("S must be a non-empty subset");
  check_delta(delta, Rational(1));
  return all_large_subsets(s, delta, [&](SubsetMask t) { return !separates(f(net.profile(t), net.size()), s, net.size()); });
}

bool delta_strong_b3ct(const PreferenceNetwork& net, SubsetMask s, Rational delta) {
  if (s.empty() || !s.subset_of(net.ground())) throw InputError("S must be a non-empty subset");
  check_delta(delta, Rational(1));
  return all_large_subsets(s, delta, [&](SubsetMask t) { return !b3ct_member_votes(top_votes(net, t, s.size()), s); });
}

bool delta_stable_harmonious(const PreferenceNetwork& net, SubsetMask s, Rational delta) {
  if (s.empty() || !s.subset_of(net.ground())) throw InputError("S must be a non-empty subset");
  check_delta(delta, Rational(1, 2));
  return Rational(min_cross_support(net, s)) >= (Rational(1, 2) + delta) * Rational(s.size());
}

bool delta_strong_harmonious(const PreferenceNetwork& net, SubsetMask s, Rational delta) {
  if (s.empty() || !s.subset_of(net.ground())) throw InputError("S must be a non-empty subset");
  check_delta(delta, Rational(1));
  const SubsetMask out = net.ground() - s;
  return all_large_subsets(s, delta, [&](SubsetMask t) {
    bool bad = false;
    s.for_each([&](MemberId u) {
      out.for_each([&](MemberId v) {
        if (2 * support(net, t, u, v) <= t.size()) bad = true;
      });
    });
    return bad;
  });
}

namespace {

// Block-prefix unions of F_H over the given ballots.
std::vector<SubsetMask> harmonious_prefixes(const PreferenceNetwork& net, const std::vector<MemberId>& ballots) {
  Profile p;
  p.reserve(ballots.size());
  for (MemberId b : ballots) p.push_back(net.order(b));
  const auto agg = aggregate_harmonious(p, net.size());
  std::vector<SubsetMask> out;
  SubsetMask acc;
  for (const auto& block : agg.blocks) {
    acc = acc | block;
    out.push_back(acc);
  }
  return out;
}

bool majority_carries(const PreferenceNetwork& net, const std::vector<MemberId>& ballots, SubsetMask s) {
  const SubsetMask out = net.ground() - s;
  const int m = static_cast<int>(ballots.size());
  bool ok = true;
  s.for_each([&](MemberId u) {
    out.for_each([&](MemberId v) {
      int c = 0;
      for (MemberId b : ballots) c += net.order(b).prefers(u, v);
      if (2 * c <= m) ok = false;
    });
  });
  return ok;
}

}  // namespace

std::optional<SubsetMask> identify(const PreferenceNetwork& net, const std::vector<MemberId>& t_multiset, int t) {
  if (t_multiset.empty()) throw InputError("T must be non-empty");
  if (t < 1 || t > net.size()) throw InputError("target size out of range");
  for (MemberId b : t_multiset)
    if (b < 0 || b >= net.size()) throw InputError("T names an unknown member");
  for (SubsetMask p : harmonious_prefixes(net, t_multiset))
    if (p.size() == t) {
      if (!majority_carries(net, t_multiset, p)) return std::nullopt;
      return p;
    }
  return std::nullopt;
}

int identification_sample_size(int n, double delta) {
  if (!(delta > 0)) throw InputError("delta must be positive");
  const double k = std::ceil(12.0 * std::log(static_cast<double>(n)) / (delta * delta));
  return std::max(1, static_cast<int>(k));
}

std::vector<SubsetMask> sample_stable_harmonious(const PreferenceNetwork& net, Rational delta, std::uint64_t samples,
                                                 std::uint64_t seed, SampleMode mode, int jobs) {
  if (delta <= 0 || delta > Rational(1, 2)) throw InputError("delta must lie in (0, 1/2]");
  const int n = net.size();
  if (n == 0) return {};
  jobs = resolve_jobs(jobs);
  std::vector<std::set<std::uint64_t>> found(jobs);

  auto harvest = [&](const std::vector<MemberId>& ballots, std::set<std::uint64_t>& into) {
    for (SubsetMask p : harmonious_prefixes(net, ballots))
      if (majority_carries(net, ballots, p) && delta_stable_harmonious(net, p, delta)) into.insert(p.bits());
  };

  if (mode == SampleMode::Enumeration) {
    if (n > 20) throw LimitError("T-enumeration is limited to n <= 20");
    const std::uint64_t count = (std::uint64_t{1} << n) - 1;
    parallel_chunks(count, jobs, [&](std::size_t b, std::size_t e, int w) {
      for (std::size_t i = b; i < e; ++i) harvest(SubsetMask(i + 1).members(), found[w]);
    });
  } else {
    const int k = identification_sample_size(n, boost::rational_cast<double>(delta));
    parallel_chunks(samples, jobs, [&](std::size_t b, std::size_t e, int w) {
      for (std::size_t i = b; i < e; ++i) {
        Rng rng(derive_seed(seed, i));
        const MemberId anchor = static_cast<MemberId>(rng.below(n));
        const int size = rng.uniform_int(1, n);
        const auto pool = net.order(anchor).top(size).members();
        std::vector<MemberId> ballots(k);
        for (auto& x : ballots) x = pool[rng.below(pool.size())];
        harvest(ballots, found[w]);
      }
    });
  }
  std::set<std::uint64_t> all;
  for (auto& f : found) all.insert(f.begin(), f.end());
  std::vector<SubsetMask> out;
  for (auto b : all) out.push_back(SubsetMask(b));
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<SubsetMask> brute_force_stable_harmonious(const PreferenceNetwork& net, Rational delta) {
  if (net.size() > 20) throw LimitError("brute force is limited to n <= 20");
  std::vector<SubsetMask> out;
  for (SubsetMask m : canonical_subsets(net.size()))
    if (delta_stable_harmonious(net, m, delta)) out.push_back(m);
  return out;
}

}  // namespace prefnet
