#include "prefnet/lexpref.hpp"

#include <algorithm>
#include <string>

#include "prefnet/parallel.hpp"

namespace prefnet {

namespace {

void require_subset(const PreferenceNetwork& net, SubsetMask s) {
  if (s.empty()) throw InputError("subset must be non-empty");
  if (!s.subset_of(net.ground())) throw InputError("subset names members outside the network");
}

void require_size_guard(const PreferenceNetwork& net, const SearchOptions& opts) {
  if (net.size() > kExhaustiveLimit && !opts.force)
    throw LimitError("exhaustive search refused for " + std::to_string(net.size()) + " members (limit " +
                     std::to_string(kExhaustiveLimit) + "; use force)");
}

int worst_rank(const LinearOrder& o, SubsetMask m) {
  int w = 0;
  m.for_each([&](MemberId u) { w = std::max(w, o.rank(u)); });
  return w;
}

// Outsiders that every voter in `voters` ranks above their worst member of `g`.
SubsetMask beating_pool(const PreferenceNetwork& net, SubsetMask outsiders, SubsetMask voters, SubsetMask g) {
  SubsetMask pool = outsiders;
  voters.for_each([&](MemberId s) {
    if (pool.empty()) return;
    const auto& o = net.order(s);
    const int w = worst_rank(o, g);
    pool.for_each([&](MemberId v) {
      if (o.rank(v) > w) pool.erase(v);
    });
  });
  return pool;
}

bool all_prefer(const PreferenceNetwork& net, SubsetMask voters, SubsetMask g, SubsetMask gp) {
  bool ok = true;
  voters.for_each([&](MemberId s) {
    if (ok && !lex_prefers_unchecked(net.order(s), g, gp)) ok = false;
  });
  return ok;
}

std::vector<Bijection> bijections_for(const PreferenceNetwork& net, SubsetMask voters, SubsetMask g,
                                      SubsetMask gp) {
  std::vector<Bijection> out;
  voters.for_each([&](MemberId s) { out.push_back(sorted_bijection(net.order(s), s, g, gp)); });
  return out;
}

// First k-subset of pool (numeric order) accepted by pred, searching blocks
// keyed by the subset's largest element in parallel.
std::optional<SubsetMask> first_k_subset(SubsetMask pool, int k, int jobs,
                                         const std::function<bool(SubsetMask)>& pred) {
  const int m = pool.size();
  if (k <= 0 || k > m) return std::nullopt;
  const auto elems = pool.members();
  const std::size_t tasks = static_cast<std::size_t>(m - k + 1);
  std::vector<SubsetMask> hit(tasks);
  auto idx = parallel_first(tasks, jobs, [&](std::size_t t) {
    const int top = static_cast<int>(t) + k - 1;
    SubsetMask lower;
    for (int i = 0; i < top; ++i) lower.insert(elems[i]);
    const SubsetMask fixed = SubsetMask::single(elems[top]);
    return for_each_k_subset(lower, k - 1, [&](SubsetMask sub) {
      const SubsetMask cand = sub | fixed;
      if (!pred(cand)) return false;
      hit[t] = cand;
      return true;
    });
  });
  if (!idx) return std::nullopt;
  return hit[*idx];
}

}  // namespace

bool lex_prefers_unchecked(const LinearOrder& order, SubsetMask g, SubsetMask gp) {
  int balance = 0;
  int remaining = g.size() + gp.size();
  for (MemberId u : order.list()) {
    if (gp.contains(u)) {
      ++balance;
      --remaining;
    } else if (g.contains(u)) {
      if (--balance < 0) return false;
      --remaining;
    }
    if (remaining == 0) break;
  }
  return true;
}

bool lex_prefers(const LinearOrder& order, SubsetMask g, SubsetMask gp) {
  if (g.empty() || gp.empty()) throw InputError("lexicographic comparison needs non-empty groups");
  if (g.size() != gp.size()) throw InputError("lexicographic comparison needs equal-size groups");
  if (!g.disjoint(gp)) throw InputError("lexicographic comparison needs disjoint groups");
  const SubsetMask all = SubsetMask::full(order.size());
  if (!g.subset_of(all) || !gp.subset_of(all)) throw InputError("group names an unknown member");
  return lex_prefers_unchecked(order, g, gp);
}

Bijection sorted_bijection(const LinearOrder& order, MemberId voter, SubsetMask g, SubsetMask gp) {
  const auto a = order.sorted(g);
  const auto b = order.sorted(gp);
  Bijection f{voter, {}};
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) f.pairs.emplace_back(a[i], b[i]);
  return f;
}

std::optional<SaWitness> sa_witness(const PreferenceNetwork& net, SubsetMask s, const SearchOptions& opts) {
  require_subset(net, s);
  require_size_guard(net, opts);
  const SubsetMask outsiders = net.ground() - s;
  const int k = s.size();
  if (outsiders.size() < k) return std::nullopt;
  const SubsetMask pool = beating_pool(net, outsiders, s, s);
  auto gp = first_k_subset(pool, k, opts.jobs, [&](SubsetMask c) { return all_prefer(net, s, s, c); });
  if (!gp) return std::nullopt;
  return SaWitness{*gp, bijections_for(net, s, s, *gp)};
}

std::optional<GsWitness> gs_witness(const PreferenceNetwork& net, SubsetMask s, const SearchOptions& opts) {
  require_subset(net, s);
  require_size_guard(net, opts);
  const SubsetMask outsiders = net.ground() - s;
  std::vector<SubsetMask> groups;
  for (int k = 1; k < s.size() && k <= outsiders.size(); ++k)
    for_each_k_subset(s, k, [&](SubsetMask g) {
      groups.push_back(g);
      return false;
    });
  std::vector<SubsetMask> found(groups.size());
  auto idx = parallel_first(groups.size(), opts.jobs, [&](std::size_t i) {
    const SubsetMask g = groups[i];
    const SubsetMask rest = s - g;
    const SubsetMask pool = beating_pool(net, outsiders, rest, g);
    return for_each_k_subset(pool, g.size(), [&](SubsetMask c) {
      if (!all_prefer(net, rest, g, c)) return false;
      found[i] = c;
      return true;
    });
  });
  if (!idx) return std::nullopt;
  const SubsetMask g = groups[*idx];
  return GsWitness{g, found[*idx], bijections_for(net, s - g, g, found[*idx])};
}

namespace {

bool in_clique_g(const PreferenceNetwork& net, SubsetMask s, int g) {
  const int bound = s.size() + g;
  bool ok = true;
  s.for_each([&](MemberId voter) {
    s.for_each([&](MemberId u) {
      if (net.order(voter).rank(u) > bound) ok = false;
    });
  });
  return ok;
}

SubsetMask top_outsiders(const PreferenceNetwork& net, MemberId voter, SubsetMask s, int g) {
  return net.order(voter).top(s.size() + g) - s;
}

}  // namespace

std::optional<GsWitness> gs_witness_pruned(const PreferenceNetwork& net, SubsetMask s, int g) {
  require_subset(net, s);
  if (g < 0) throw InputError("g must be non-negative");
  if (!in_clique_g(net, s, g)) throw InputError("subset is not in Clique(g) for g=" + std::to_string(g));
  for (int k = 1; k < s.size() && k <= g; ++k) {
    std::optional<GsWitness> out;
    for_each_k_subset(s, k, [&](SubsetMask grp) {
      const SubsetMask rest = s - grp;
      SubsetMask pool = net.ground() - s;
      rest.for_each([&](MemberId voter) { pool = pool & top_outsiders(net, voter, s, g); });
      return for_each_k_subset(pool, k, [&](SubsetMask c) {
        if (!all_prefer(net, rest, grp, c)) return false;
        out = GsWitness{grp, c, bijections_for(net, rest, grp, c)};
        return true;
      });
    });
    if (out) return out;
  }
  return std::nullopt;
}

std::optional<SaWitness> sa_witness_pruned(const PreferenceNetwork& net, SubsetMask s, int g) {
  require_subset(net, s);
  if (g < 0) throw InputError("g must be non-negative");
  if (!in_clique_g(net, s, g)) throw InputError("subset is not in Clique(g) for g=" + std::to_string(g));
  SubsetMask pool = net.ground() - s;
  s.for_each([&](MemberId voter) { pool = pool & top_outsiders(net, voter, s, g); });
  std::optional<SaWitness> out;
  for_each_k_subset(pool, s.size(), [&](SubsetMask c) {
    if (!all_prefer(net, s, s, c)) return false;
    out = SaWitness{c, bijections_for(net, s, s, c)};
    return true;
  });
  return out;
}

std::optional<GsWitness> gs_check_harmonious(const PreferenceNetwork& net, SubsetMask s, Rational lambda) {
  require_subset(net, s);
  if (lambda < 0 || lambda > 1) throw InputError("lambda must lie in [0,1]");
  if ((1 - lambda) * s.size() >= 2) throw InputError("fast check requires (1-lambda)|S| < 2");
  const SubsetMask outsiders = net.ground() - s;
  // λ-harmonious: every cross pair carried by at least λ|S| members.
  bool harmonious = true;
  s.for_each([&](MemberId u) {
    outsiders.for_each([&](MemberId v) {
      int c = 0;
      s.for_each([&](MemberId voter) { c += net.order(voter).prefers(u, v) ? 1 : 0; });
      if (Rational(c) < lambda * s.size()) harmonious = false;
    });
  });
  if (!harmonious) throw InputError("subset is not lambda-harmonious");

  const int k = s.size() - 1;
  if (k < 1 || outsiders.size() < k) return std::nullopt;
  const auto ids = s.members();
  for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
    const MemberId lone = *it;
    const LinearOrder& o = net.order(lone);
    const SubsetMask grp = s - SubsetMask::single(lone);
    // Feasible iff the best outsiders consistent with the constraints win.
    auto feasible = [&](SubsetMask chosen, SubsetMask allowed) {
      SubsetMask cand = chosen;
      for (MemberId u : o.list()) {
        if (cand.size() >= k) break;
        if (allowed.contains(u) && !cand.contains(u)) cand.insert(u);
      }
      return cand.size() == k && lex_prefers_unchecked(o, grp, cand);
    };
    if (!feasible(SubsetMask{}, outsiders)) continue;
    // Smallest numeric mask: decide from the highest id down, excluding when possible.
    SubsetMask chosen;
    const auto outs = outsiders.members();
    for (auto v = outs.rbegin(); v != outs.rend(); ++v) {
      if (chosen.size() == k) break;
      SubsetMask lower;
      for (MemberId w : outs)
        if (w < *v) lower.insert(w);
      if (!feasible(chosen, lower)) chosen.insert(*v);
    }
    return GsWitness{grp, chosen, {sorted_bijection(o, lone, grp, chosen)}};
  }
  return std::nullopt;
}

namespace {

bool kuhn(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& match_r, std::vector<char>& seen) {
  for (int v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = 1;
    if (match_r[v] < 0 || kuhn(match_r[v], adj, match_r, seen)) {
      match_r[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<WeakGsWitness> weak_gs_witness(const PreferenceNetwork& net, SubsetMask s) {
  require_subset(net, s);
  const SubsetMask outsiders = net.ground() - s;
  const auto outs = outsiders.members();
  for (int k = 1; 2 * k <= s.size() && k <= outsiders.size(); ++k) {
    std::optional<WeakGsWitness> out;
    for_each_k_subset(s, k, [&](SubsetMask grp) {
      const SubsetMask rest = s - grp;
      const auto gs = grp.members();
      std::vector<std::vector<int>> adj(gs.size());
      for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = 0; j < outs.size(); ++j) {
          bool all = true;
          rest.for_each([&](MemberId voter) {
            if (!net.order(voter).prefers(outs[j], gs[i])) all = false;
          });
          if (all) adj[i].push_back(static_cast<int>(j));
        }
      std::vector<int> match_r(outs.size(), -1);
      for (std::size_t i = 0; i < gs.size(); ++i) {
        std::vector<char> seen(outs.size(), 0);
        if (!kuhn(static_cast<int>(i), adj, match_r, seen)) return false;
      }
      WeakGsWitness w{grp, {}, {}};
      for (std::size_t j = 0; j < outs.size(); ++j)
        if (match_r[j] >= 0) {
          w.replacement.insert(outs[j]);
          w.pairs.emplace_back(gs[match_r[j]], outs[j]);
        }
      std::sort(w.pairs.begin(), w.pairs.end());
      out = std::move(w);
      return true;
    });
    if (out) return out;
  }
  return std::nullopt;
}

namespace {

bool verify_bijections(const PreferenceNetwork& net, SubsetMask voters, SubsetMask from, SubsetMask to,
                       const std::vector<Bijection>& fs) {
  SubsetMask covered;
  for (const auto& f : fs) {
    if (f.voter < 0 || f.voter >= net.size() || !voters.contains(f.voter) || covered.contains(f.voter)) return false;
    covered.insert(f.voter);
    SubsetMask dom, img;
    for (auto [u, w] : f.pairs) {
      if (!from.contains(u) || !to.contains(w) || dom.contains(u) || img.contains(w)) return false;
      dom.insert(u);
      img.insert(w);
      if (!net.order(f.voter).prefers(w, u)) return false;
    }
    if (dom != from || img != to) return false;
  }
  return covered == voters;
}

}  // namespace

bool verify(const PreferenceNetwork& net, SubsetMask s, const GsWitness& w) {
  if (w.group.empty() || !w.group.subset_of(s) || w.group == s) return false;
  if (!w.replacement.subset_of(net.ground() - s) || w.replacement.size() != w.group.size()) return false;
  return verify_bijections(net, s - w.group, w.group, w.replacement, w.bijections);
}

bool verify(const PreferenceNetwork& net, SubsetMask s, const SaWitness& w) {
  if (!w.replacement.subset_of(net.ground() - s) || w.replacement.size() != s.size()) return false;
  return verify_bijections(net, s, s, w.replacement, w.bijections);
}

}  // namespace prefnet
