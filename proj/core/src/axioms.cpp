#include "prefnet/axioms.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "prefnet/generators.hpp"
#include "prefnet/parallel.hpp"
#include "prefnet/reference.hpp"
#include "prefnet/rng.hpp"

namespace prefnet {

namespace {

struct AxiomName {
  AxiomId id;
  const char* name;
};

constexpr AxiomName kNames[] = {
    {AxiomId::GS, "GS"},     {AxiomId::SA, "SA"},   {AxiomId::A, "A"},   {AxiomId::Mon, "Mon"},
    {AxiomId::CRNM, "CRNM"}, {AxiomId::CRM, "CRM"}, {AxiomId::WC, "WC"}, {AxiomId::Emb, "Emb"},
    {AxiomId::IOO, "IOO"},   {AxiomId::PE, "PE"},   {AxiomId::Cq, "Cq"}, {AxiomId::OD, "OD"},
    {AxiomId::SmallWorld, "SmallWorld"}, {AxiomId::ORM, "ORM"}, {AxiomId::WeakGS, "WeakGS"},
};

SubsetMask need_subset(const PreferenceNetwork& net, const AxiomContext& ctx, AxiomId a) {
  if (!ctx.subset) throw InputError(to_string(a) + " needs a subset S");
  const SubsetMask s = *ctx.subset;
  if (s.empty() || !s.subset_of(net.ground())) throw InputError("S must be a non-empty subset of the network");
  return s;
}

const PreferenceNetwork& need_alternate(const PreferenceNetwork& net, const AxiomContext& ctx, AxiomId a) {
  if (!ctx.alternate) throw InputError(to_string(a) + " needs an alternate profile");
  if (ctx.alternate->size() != net.size()) throw InputError("alternate profile has a different ground set");
  return *ctx.alternate;
}

bool same_size(const PreferenceNetwork& a, const PreferenceNetwork& b) { return a.size() == b.size(); }

// Relative order of `m` in order o, as a list.
std::vector<MemberId> relative(const LinearOrder& o, SubsetMask m) { return o.sorted(m); }

}  // namespace

std::vector<AxiomId> all_axiom_ids() {
  std::vector<AxiomId> v;
  for (const auto& n : kNames) v.push_back(n.id);
  return v;
}

std::string to_string(AxiomId a) {
  for (const auto& n : kNames)
    if (n.id == a) return n.name;
  return "?";
}

AxiomId parse_axiom(const std::string& name) {
  for (const auto& n : kNames) {
    std::string lower_a = n.name, lower_b = name;
    std::transform(lower_a.begin(), lower_a.end(), lower_a.begin(), ::tolower);
    std::transform(lower_b.begin(), lower_b.end(), lower_b.begin(), ::tolower);
    if (lower_a == lower_b) return n.id;
  }
  throw InputError("unknown axiom '" + name + "'");
}

bool mon_premise(const PreferenceNetwork& promoted, const PreferenceNetwork& demoted, SubsetMask s) {
  if (!same_size(promoted, demoted)) return false;
  bool ok = true;
  s.for_each([&](MemberId voter) {
    const auto &p = promoted.order(voter), &d = demoted.order(voter);
    s.for_each([&](MemberId u) {
      for (MemberId v = 0; v < promoted.size(); ++v)
        if (v != u && d.prefers(u, v) && !p.prefers(u, v)) ok = false;
    });
  });
  return ok;
}

bool crnm_premise(const PreferenceNetwork& base, const PreferenceNetwork& coherent, SubsetMask s) {
  if (!same_size(base, coherent)) return false;
  const SubsetMask out = base.ground() - s;
  const auto ref = relative(coherent.order(s.lowest()), out);
  bool ok = true;
  s.for_each([&](MemberId voter) {
    if (relative(coherent.order(voter), out) != ref) ok = false;
    s.for_each([&](MemberId u) {
      if (coherent.order(voter).rank(u) != base.order(voter).rank(u)) ok = false;
    });
  });
  return ok;
}

bool crm_premise(const PreferenceNetwork& base, const PreferenceNetwork& coherent, SubsetMask s) {
  if (!same_size(base, coherent)) return false;
  const SubsetMask out = base.ground() - s;
  const auto ref = relative(coherent.order(s.lowest()), s);
  bool ok = true;
  s.for_each([&](MemberId voter) {
    if (relative(coherent.order(voter), s) != ref) ok = false;
    out.for_each([&](MemberId v) {
      if (coherent.order(voter).rank(v) != base.order(voter).rank(v)) ok = false;
    });
  });
  return ok;
}

bool ioo_premise(const PreferenceNetwork& a, const PreferenceNetwork& b, SubsetMask s) {
  if (!same_size(a, b)) return false;
  bool ok = true;
  s.for_each([&](MemberId voter) {
    if (!(a.order(voter) == b.order(voter))) ok = false;
  });
  return ok;
}

bool orm_premise(const PreferenceNetwork& base, const PreferenceNetwork& promoted, SubsetMask s) {
  if (!same_size(base, promoted)) return false;
  const SubsetMask out = base.ground() - s;
  bool ok = true;
  s.for_each([&](MemberId voter) {
    const auto &b = base.order(voter), &p = promoted.order(voter);
    s.for_each([&](MemberId u) {
      for (MemberId t = 0; t < base.size(); ++t)
        if (t != u && b.prefers(u, t) && !p.prefers(u, t)) ok = false;
    });
    if (relative(b, out) != relative(p, out)) ok = false;
  });
  return ok;
}

bool emb_premise(const PreferenceNetwork& net, SubsetMask sub) {
  bool ok = true;
  sub.for_each([&](MemberId i) {
    if (net.order(i).top(sub.size()) != sub) ok = false;
  });
  return ok;
}

namespace {

bool emb_holds(const CommunityRule& rule, const PreferenceNetwork& net, SubsetMask sub) {
  if (sub.size() > 20) throw LimitError("embedding check limited to 20 members");
  const PreferenceNetwork small = project(net, sub);
  const std::uint64_t count = (std::uint64_t{1} << sub.size());
  for (std::uint64_t b = 1; b < count; ++b) {
    const SubsetMask local(b);
    if (rule(small, local) != rule(net, lift(local, sub))) return false;
  }
  return true;
}

bool od_holds(const CommunityRule& rule, const PreferenceNetwork& net, SubsetMask s, std::optional<MemberId> departing) {
  if (!rule(net, s)) return true;
  const SubsetMask out = net.ground() - s;
  bool ok = true;
  out.for_each([&](MemberId v) {
    if (!ok || (departing && *departing != v)) return;
    const SubsetMask rest = net.ground() - SubsetMask::single(v);
    if (!rule(project(net, rest), restrict_to(s, rest))) ok = false;
  });
  return ok;
}

bool small_world_holds(const CommunityRule& rule, const PreferenceNetwork& net, SubsetMask s) {
  const bool lhs = rule(net, s);
  const SubsetMask out = net.ground() - s;
  bool rhs = true;
  for (int k = 0; k < s.size() && k <= out.size() && rhs; ++k)
    for_each_k_subset(out, k, [&](SubsetMask u) {
      const SubsetMask local = s | u;
      if (!rule(project(net, local), restrict_to(s, local))) rhs = false;
      return !rhs;
    });
  return lhs == rhs;
}

bool pareto_holds(const PreferenceNetwork& net, SubsetMask s) {
  const SubsetMask out = net.ground() - s;
  bool ok = true;
  s.for_each([&](MemberId u) {
    out.for_each([&](MemberId v) {
      if (support(net, s, u, v) == 0) ok = false;
    });
  });
  return ok;
}

}  // namespace

bool check_instance_axiom(const CommunityRule& rule, AxiomId axiom, const PreferenceNetwork& net,
                          const AxiomContext& ctx, const SearchOptions& search) {
  switch (axiom) {
    case AxiomId::WC:
      return rule(net, net.ground());
    case AxiomId::Emb: {
      if (!ctx.sub_ground) throw InputError("Emb needs a sub-ground set V'");
      const SubsetMask sub = *ctx.sub_ground;
      if (sub.empty() || !sub.subset_of(net.ground())) throw InputError("V' must be a non-empty subset");
      return !emb_premise(net, sub) || emb_holds(rule, net, sub);
    }
    default:
      break;
  }
  const SubsetMask s = need_subset(net, ctx, axiom);
  switch (axiom) {
    case AxiomId::GS:
      return !rule(net, s) || !gs_witness(net, s, search);
    case AxiomId::SA:
      return !rule(net, s) || !sa_witness(net, s, search);
    case AxiomId::A: {
      if (!ctx.sigma) throw InputError("A needs a permutation sigma");
      const auto image = apply_isomorphism(net, *ctx.sigma);
      return rule(net, s) == rule(image, apply_permutation(s, *ctx.sigma));
    }
    case AxiomId::Mon: {
      const auto& alt = need_alternate(net, ctx, axiom);
      return !mon_premise(net, alt, s) || !rule(alt, s) || rule(net, s);
    }
    case AxiomId::CRNM: {
      const auto& alt = need_alternate(net, ctx, axiom);
      return !crnm_premise(net, alt, s) || !rule(alt, s) || rule(net, s);
    }
    case AxiomId::CRM: {
      const auto& alt = need_alternate(net, ctx, axiom);
      return !crm_premise(net, alt, s) || !rule(alt, s) || rule(net, s);
    }
    case AxiomId::IOO: {
      const auto& alt = need_alternate(net, ctx, axiom);
      return !ioo_premise(net, alt, s) || rule(alt, s) == rule(net, s);
    }
    case AxiomId::ORM: {
      const auto& alt = need_alternate(net, ctx, axiom);
      return !orm_premise(net, alt, s) || !rule(net, s) || rule(alt, s);
    }
    case AxiomId::PE:
      return !rule(net, s) || pareto_holds(net, s);
    case AxiomId::Cq:
      return !clique_member(net, s) || rule(net, s);
    case AxiomId::OD:
      return od_holds(rule, net, s, ctx.departing);
    case AxiomId::SmallWorld:
      return small_world_holds(rule, net, s);
    case AxiomId::WeakGS:
      return !rule(net, s) || !weak_gs_witness(net, s);
    default:
      break;
  }
  throw InputError("unhandled axiom");
}

bool check_property(const CommunityRule& rule, AxiomId property, const PreferenceNetwork& net, SubsetMask s,
                    const SearchOptions& search) {
  switch (property) {
    case AxiomId::GS: case AxiomId::SA: case AxiomId::WC: case AxiomId::PE: case AxiomId::Cq:
    case AxiomId::OD: case AxiomId::SmallWorld: case AxiomId::WeakGS:
      break;
    default:
      throw InputError(to_string(property) + " quantifies more than a subset; use check_instance_axiom");
  }
  AxiomContext ctx;
  ctx.subset = s;
  return check_instance_axiom(rule, property, net, ctx, search);
}

PreferenceNetwork promote_members(const PreferenceNetwork& net, SubsetMask s, int swaps, std::uint64_t seed,
                                  bool shuffle_outsider_pairs) {
  Rng rng(seed);
  auto orders = net.orders();
  const int n = net.size();
  if (n < 2) return net;
  s.for_each([&](MemberId voter) {
    auto l = orders[voter].list();
    for (int k = 0; k < swaps; ++k) {
      const int p = static_cast<int>(rng.below(n - 1));
      const bool a_in = s.contains(l[p]), b_in = s.contains(l[p + 1]);
      if ((!a_in && b_in) || (shuffle_outsider_pairs && !a_in && !b_in)) std::swap(l[p], l[p + 1]);
    }
    orders[voter] = LinearOrder(std::move(l));
  });
  return PreferenceNetwork(net.labels(), std::move(orders));
}

namespace {

PreferenceNetwork refill(const PreferenceNetwork& net, SubsetMask voters, SubsetMask slots,
                         const std::function<std::vector<MemberId>(MemberId)>& fill) {
  auto orders = net.orders();
  voters.for_each([&](MemberId voter) {
    auto l = orders[voter].list();
    const auto src = fill(voter);
    std::size_t k = 0;
    for (auto& x : l)
      if (slots.contains(x)) x = src.at(k++);
    orders[voter] = LinearOrder(std::move(l));
  });
  return PreferenceNetwork(net.labels(), std::move(orders));
}

}  // namespace

PreferenceNetwork cohere_non_members(const PreferenceNetwork& net, SubsetMask s, const std::vector<MemberId>& shared) {
  const SubsetMask out = net.ground() - s;
  if (SubsetMask::of(shared) != out || static_cast<int>(shared.size()) != out.size())
    throw InputError("shared order must list exactly the non-members");
  return refill(net, s, out, [&](MemberId) { return shared; });
}

PreferenceNetwork cohere_members(const PreferenceNetwork& net, SubsetMask s, const std::vector<MemberId>& shared) {
  if (SubsetMask::of(shared) != s || static_cast<int>(shared.size()) != s.size())
    throw InputError("shared order must list exactly the members");
  return refill(net, s, s, [&](MemberId) { return shared; });
}

PreferenceNetwork randomize_outsider_ballots(const PreferenceNetwork& net, SubsetMask s, std::uint64_t seed) {
  Rng rng(seed);
  auto orders = net.orders();
  for (MemberId v = 0; v < net.size(); ++v)
    if (!s.contains(v)) orders[v] = LinearOrder(rng.permutation(net.size()));
  return PreferenceNetwork(net.labels(), std::move(orders));
}

PreferenceNetwork embed_first(const PreferenceNetwork& net, SubsetMask sub) {
  auto orders = net.orders();
  const SubsetMask rest = net.ground() - sub;
  sub.for_each([&](MemberId i) {
    auto l = orders[i].sorted(sub);
    const auto tail = orders[i].sorted(rest);
    l.insert(l.end(), tail.begin(), tail.end());
    orders[i] = LinearOrder(std::move(l));
  });
  return PreferenceNetwork(net.labels(), std::move(orders));
}

// ---------------- falsification harness ----------------

namespace {

struct Instance {
  PreferenceNetwork network;
  AxiomContext context;
  std::string source;
};

SubsetMask random_nonempty(int n, Rng& rng) {
  for (;;) {
    const SubsetMask m(rng.next() & SubsetMask::full(n).bits());
    if (!m.empty()) return m;
  }
}

std::vector<SubsetMask> members_of(const CommunityRule& rule, const PreferenceNetwork& net) {
  std::vector<SubsetMask> out;
  const std::uint64_t count = std::uint64_t{1} << net.size();
  for (std::uint64_t b = 1; b < count; ++b)
    if (rule(net, SubsetMask(b))) out.push_back(SubsetMask(b));
  return out;
}

SubsetMask pick_subset(const CommunityRule& rule, const PreferenceNetwork& net, Rng& rng) {
  const auto comm = members_of(rule, net);
  if (!comm.empty()) return comm[rng.below(comm.size())];
  return random_nonempty(net.size(), rng);
}

// Biconditional axioms also need non-members: half the draws ignore the rule.
SubsetMask pick_any_subset(const CommunityRule& rule, const PreferenceNetwork& net, Rng& rng) {
  if (rng.coin()) return random_nonempty(net.size(), rng);
  return pick_subset(rule, net, rng);
}

PreferenceNetwork random_base(const FalsifyOptions& opts, Rng& rng) {
  const int n = rng.uniform_int(opts.min_n, opts.max_n);
  if (rng.coin()) {
    const SubsetMask planted = random_nonempty(n, rng);
    return planted_network(n, planted, 0.8, rng.next());
  }
  return random_network(n, rng.next());
}

std::vector<MemberId> shuffled_members(SubsetMask m, Rng& rng) {
  auto v = m.members();
  rng.shuffle(v);
  return v;
}

Instance make_trial(const CommunityRule& rule, AxiomId axiom, const FalsifyOptions& opts, std::uint64_t index) {
  Rng rng(derive_seed(opts.seed, index));
  PreferenceNetwork base = random_base(opts, rng);
  const int n = base.size();
  Instance inst{base, {}, "trial:" + std::to_string(index)};
  auto& ctx = inst.context;
  switch (axiom) {
    case AxiomId::WC:
      break;
    case AxiomId::Emb: {
      const SubsetMask sub = random_nonempty(n, rng);
      inst.network = embed_first(base, sub);
      ctx.sub_ground = sub;
      break;
    }
    case AxiomId::Cq: {
      const auto cliques = members_of(clique_rule(), base);
      ctx.subset = cliques.empty() ? random_nonempty(n, rng) : cliques[rng.below(cliques.size())];
      break;
    }
    case AxiomId::A: {
      ctx.subset = pick_any_subset(rule, base, rng);
      ctx.sigma = rng.permutation(n);
      break;
    }
    case AxiomId::Mon: {
      // alternate: the demoted profile in which S is a community
      const SubsetMask s = pick_subset(rule, base, rng);
      PreferenceNetwork up = promote_members(base, s, rng.uniform_int(0, 3 * n), rng.next(), true);
      if (rng.coin()) up = randomize_outsider_ballots(up, s, rng.next());
      ctx.subset = s;
      ctx.alternate = base;
      inst.network = up;
      break;
    }
    case AxiomId::CRNM:
    case AxiomId::CRM: {
      const SubsetMask s = pick_subset(rule, base, rng);
      const bool members = axiom == AxiomId::CRM;
      const SubsetMask slots = members ? s : base.ground() - s;
      const auto shared = shuffled_members(slots, rng);
      PreferenceNetwork coherent = members ? cohere_members(base, s, shared) : cohere_non_members(base, s, shared);
      // the network under test scatters the coherent slots independently per member
      PreferenceNetwork scattered = refill(coherent, s, slots, [&](MemberId) { return shuffled_members(slots, rng); });
      ctx.subset = s;
      ctx.alternate = coherent;
      inst.network = scattered;
      break;
    }
    case AxiomId::IOO: {
      const SubsetMask s = pick_any_subset(rule, base, rng);
      ctx.subset = s;
      ctx.alternate = randomize_outsider_ballots(base, s, rng.next());
      break;
    }
    case AxiomId::ORM: {
      const SubsetMask s = pick_subset(rule, base, rng);
      PreferenceNetwork up = promote_members(base, s, rng.uniform_int(0, 3 * n), rng.next(), false);
      if (rng.coin()) up = randomize_outsider_ballots(up, s, rng.next());
      ctx.subset = s;
      ctx.alternate = up;
      break;
    }
    case AxiomId::OD: {
      const SubsetMask s = pick_subset(rule, base, rng);
      ctx.subset = s;
      const auto out = (base.ground() - s).members();
      if (!out.empty()) ctx.departing = out[rng.below(out.size())];
      break;
    }
    case AxiomId::SmallWorld:
      ctx.subset = pick_any_subset(rule, base, rng);
      break;
    default:
      ctx.subset = pick_subset(rule, base, rng);
      break;
  }
  return inst;
}

SubsetMask labels_mask(const PreferenceNetwork& net, const std::string& csv) { return parse_subset(net, csv); }

std::vector<Instance> reference_instances(AxiomId axiom) {
  std::vector<Instance> out;
  const auto pi = reference::b3ct_profile();
  const auto promoted = reference::b3ct_promoted();
  const auto weak = reference::weak_gs_profile();
  auto with_subset = [](PreferenceNetwork net, SubsetMask s, std::string name) {
    Instance i{std::move(net), {}, "reference:" + name};
    i.context.subset = s;
    return i;
  };
  switch (axiom) {
    case AxiomId::Mon: {
      Instance i = with_subset(promoted, labels_mask(promoted, "1,2,3"), "b3ct-promotion");
      i.context.alternate = pi;
      out.push_back(std::move(i));
      break;
    }
    case AxiomId::GS:
      out.push_back(with_subset(pi, labels_mask(pi, "1,5,6"), "arrogant-member"));
      break;
    case AxiomId::OD: {
      Instance i = with_subset(pi, labels_mask(pi, "1,2,3"), "outsider-departure");
      i.context.departing = pi.id("5");
      out.push_back(std::move(i));
      break;
    }
    case AxiomId::WeakGS:
      out.push_back(with_subset(weak, labels_mask(weak, "1,2,3,4"), "weak-gs"));
      break;
    case AxiomId::WC:
      for (auto& r : reference::all_networks()) out.push_back({r.network, {}, "reference:" + r.name});
      break;
    default:
      break;
  }
  return out;
}

}  // namespace

std::optional<Counterexample> falsify_axiom(const CommunityRule& rule, AxiomId axiom, const FalsifyOptions& opts) {
  if (opts.budget < 1) throw InputError("budget must be at least 1");
  if (opts.min_n < 1 || opts.max_n < opts.min_n || opts.max_n > 10) throw InputError("bad trial network size range");
  if (opts.reference_first) {
    for (auto& inst : reference_instances(axiom))
      if (!check_instance_axiom(rule, axiom, inst.network, inst.context))
        return Counterexample{axiom, inst.network, inst.context, inst.source, "recorded instance violates " + to_string(axiom)};
  }
  auto idx = parallel_first(opts.budget, opts.jobs, [&](std::size_t i) {
    const Instance inst = make_trial(rule, axiom, opts, i);
    return !check_instance_axiom(rule, axiom, inst.network, inst.context);
  });
  if (!idx) return std::nullopt;
  Instance inst = make_trial(rule, axiom, opts, *idx);
  std::ostringstream trace;
  trace << "seed " << opts.seed << ", trial " << *idx << ", n=" << inst.network.size();
  return Counterexample{axiom, std::move(inst.network), std::move(inst.context), inst.source, trace.str()};
}

bool replays(const CommunityRule& rule, const Counterexample& cx) {
  return !check_instance_axiom(rule, cx.axiom, cx.network, cx.context);
}

// ---------------- weighted impossibility gauntlet ----------------

namespace {

std::vector<std::array<int, 5>> gauntlet_sigmas(const std::array<double, 5>& w) {
  std::array<int, 5> sorted{0, 1, 2, 3, 4};
  std::stable_sort(sorted.begin(), sorted.begin() + 3, [&](int a, int b) { return w[a] > w[b]; });
  std::stable_sort(sorted.begin() + 3, sorted.end(), [&](int a, int b) { return w[a] > w[b]; });
  std::vector<std::array<int, 5>> out{sorted};
  std::array<int, 3> head{0, 1, 2};
  do {
    std::array<int, 2> tail{3, 4};
    do {
      std::array<int, 5> s{head[0], head[1], head[2], tail[0], tail[1]};
      if (s != sorted) out.push_back(s);
    } while (std::next_permutation(tail.begin(), tail.end()));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

}  // namespace

GauntletResult weighted_gs_gauntlet(const std::array<double, 5>& w) {
  const double lo = std::min({w[0], w[1], w[2]});
  const double hi = std::max(w[3], w[4]);
  if (!(lo > hi)) throw InputError("weights must satisfy min(w1,w2,w3) > max(w4,w5)");
  WeightSchema schema{"gauntlet", 5, {}};
  schema.w.assign(5, std::vector<double>(w.begin(), w.end()));
  for (const auto& sigma : gauntlet_sigmas(w)) {
    for (int which = 1; which <= 3; ++which) {
      const auto proof = reference::impossibility_profile(which);
      const SubsetMask s = parse_subset(proof, "a,b,c");
      auto orders = proof.orders();
      s.for_each([&](MemberId voter) {
        std::vector<MemberId> l(5);
        const auto& src = proof.order(voter).list();
        for (int p = 0; p < 5; ++p) l[sigma[p]] = src[p];
        orders[voter] = LinearOrder(std::move(l));
      });
      PreferenceNetwork net(proof.labels(), std::move(orders));
      if (!weighted_member(net, s, schema)) continue;
      auto witness = gs_witness(net, s);
      if (!witness) continue;
      return GauntletResult{which, sigma, net, s, weighted_scores(schema, net.profile(s)), *witness};
    }
  }
  throw std::logic_error("no proof profile refutes group stability for these weights");
}

}  // namespace prefnet
