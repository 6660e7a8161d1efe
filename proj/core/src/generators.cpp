#include "prefnet/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "prefnet/rng.hpp"

namespace prefnet {

void validate(const SatInstance& inst) {
  if (inst.num_vars < 0) throw InputError("negative variable count");
  for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
    const auto& cl = inst.clauses[c];
    for (int lit : cl)
      if (lit == 0 || std::abs(lit) > inst.num_vars)
        throw InputError("clause " + std::to_string(c + 1) + " names an undeclared variable");
    if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
      throw InputError("clause " + std::to_string(c + 1) + " repeats a literal");
  }
}

namespace {

std::string literal_label(int lit) { return (lit < 0 ? "!x" : "x") + std::to_string(std::abs(lit)); }

void append_shuffled(std::vector<MemberId>& out, std::vector<MemberId> block, Rng& rng) {
  rng.shuffle(block);
  out.insert(out.end(), block.begin(), block.end());
}

std::vector<MemberId> range_ids(int from, int count) {
  std::vector<MemberId> v(count);
  for (int i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

std::vector<MemberId> without(std::vector<MemberId> v, const std::vector<MemberId>& drop) {
  v.erase(std::remove_if(v.begin(), v.end(),
                         [&](MemberId x) { return std::find(drop.begin(), drop.end(), x) != drop.end(); }),
          v.end());
  return v;
}

std::vector<MemberId> random_list(int n, Rng& rng) { return rng.permutation(n); }

}  // namespace

MemberId sat_gadget_literal(const SatInstance& inst, int lit) {
  const int m = static_cast<int>(inst.clauses.size());
  const int base = m + inst.num_vars + m;
  return base + 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0);
}

GadgetOutput sat_to_network(const SatInstance& inst, std::uint64_t seed) {
  validate(inst);
  const int m = static_cast<int>(inst.clauses.size());
  const int n = inst.num_vars;
  const int total = 2 * m + 3 * n;
  if (total == 0) throw InputError("empty instance");
  if (total > SubsetMask::kMaxMembers) throw InputError("gadget would exceed 64 members");
  const int a0 = 0, b0 = m, d0 = m + n, x0 = 2 * m + n;
  std::vector<std::string> labels;
  for (int j = 1; j <= m; ++j) labels.push_back("a" + std::to_string(j));
  for (int i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
  for (int j = 1; j <= m; ++j) labels.push_back("d" + std::to_string(j));
  for (int i = 1; i <= n; ++i) {
    labels.push_back(literal_label(i));
    labels.push_back(literal_label(-i));
  }
  const auto A = range_ids(a0, m), B = range_ids(b0, n), D = range_ids(d0, m), X = range_ids(x0, 2 * n);
  Rng rng(derive_seed(seed, 0x5a7));
  std::vector<LinearOrder> orders;
  for (int j = 0; j < m; ++j) {
    std::vector<MemberId> cj;
    for (int lit : inst.clauses[j]) cj.push_back(sat_gadget_literal(inst, lit));
    std::vector<MemberId> l;
    append_shuffled(l, cj, rng);
    l.push_back(A[j]);
    std::vector<MemberId> mid = D;
    mid.insert(mid.end(), X.begin(), X.end());
    append_shuffled(l, without(mid, cj), rng);
    std::vector<MemberId> low = B;
    low.insert(low.end(), A.begin(), A.end());
    append_shuffled(l, without(low, {A[j]}), rng);
    orders.emplace_back(std::move(l));
  }
  for (int i = 0; i < n; ++i) {
    const std::vector<MemberId> pair = {X[2 * i], X[2 * i + 1]};
    std::vector<MemberId> l;
    append_shuffled(l, D, rng);
    append_shuffled(l, A, rng);
    append_shuffled(l, pair, rng);
    l.push_back(B[i]);
    append_shuffled(l, without(X, pair), rng);
    append_shuffled(l, without(B, {B[i]}), rng);
    orders.emplace_back(std::move(l));
  }
  for (int v = d0; v < total; ++v) orders.emplace_back(random_list(total, rng));
  SubsetMask s;
  for (MemberId x : A) s.insert(x);
  for (MemberId x : B) s.insert(x);
  return {PreferenceNetwork(std::move(labels), std::move(orders)), s,
          "3-SAT gadget: " + std::to_string(m) + " clauses, " + std::to_string(n) + " variables"};
}

GadgetOutput pad_network(const PreferenceNetwork& net, SubsetMask s, int p, std::uint64_t seed) {
  if (s.empty() || !s.subset_of(net.ground())) throw InputError("padding needs a non-empty subset of the network");
  if (p < s.size()) throw InputError("pad size must be at least |S|");
  const int n = net.size();
  const int total = n + p;
  if (total > SubsetMask::kMaxMembers) throw InputError("padded network would exceed 64 members");
  std::vector<std::string> labels = net.labels();
  for (int i = 1; i <= p; ++i) {
    std::string l = "p" + std::to_string(i);
    while (net.find(l)) l = "_" + l;
    labels.push_back(l);
  }
  const auto smembers = s.members();
  const auto tilde = range_ids(n, p);
  SubsetMask s_prime = s;
  for (MemberId t : tilde) s_prime.insert(t);
  Rng rng(derive_seed(seed, 0x9ad));
  std::vector<LinearOrder> orders;
  for (MemberId v = 0; v < n; ++v) {
    if (s.contains(v)) {
      // S' first, then V - S in the member's original relative order.
      std::vector<MemberId> l;
      append_shuffled(l, s_prime.members(), rng);
      for (MemberId u : net.order(v).list())
        if (!s.contains(u)) l.push_back(u);
      orders.emplace_back(std::move(l));
    } else {
      orders.emplace_back(random_list(total, rng));
    }
  }
  for (int i = 0; i < p; ++i) {
    const MemberId image = smembers[i % smembers.size()];
    std::vector<MemberId> l;
    append_shuffled(l, tilde, rng);
    for (MemberId u : net.order(image).list()) l.push_back(u);
    orders.emplace_back(std::move(l));
  }
  return {PreferenceNetwork(std::move(labels), std::move(orders)), s_prime,
          "padded with " + std::to_string(p) + " members"};
}

PreferenceNetwork hero_sidekick(int duos) {
  if (duos < 1) throw InputError("need at least one duo");
  if (2 * duos > SubsetMask::kMaxMembers) throw InputError("too many duos");
  const int d = duos;
  std::vector<std::string> labels;
  for (int i = 1; i <= d; ++i) labels.push_back("h" + std::to_string(i));
  for (int i = 1; i <= d; ++i) labels.push_back("k" + std::to_string(i));
  std::vector<LinearOrder> orders(2 * d);
  for (int i = 0; i < d; ++i) {
    std::vector<MemberId> l = {i, d + i};
    for (int h = 0; h < d; ++h)
      if (h != i) l.push_back(h);
    for (int k = 0; k < d; ++k)
      if (k != i) l.push_back(d + k);
    orders[i] = LinearOrder(l);
    orders[d + i] = LinearOrder(l);
  }
  return PreferenceNetwork(std::move(labels), std::move(orders));
}

std::vector<std::vector<int>> partition_clauses(const SatInstance& inst) {
  validate(inst);
  const int m = static_cast<int>(inst.clauses.size());
  std::vector<int> color(m, -1);
  int ncolors = 0;
  auto share = [&](int a, int b) {
    for (int x : inst.clauses[a])
      for (int y : inst.clauses[b])
        if (std::abs(x) == std::abs(y)) return true;
    return false;
  };
  for (int c = 0; c < m; ++c) {
    std::set<int> used;
    for (int e = 0; e < c; ++e)
      if (share(c, e)) used.insert(color[e]);
    int k = 0;
    while (used.count(k)) ++k;
    color[c] = k;
    ncolors = std::max(ncolors, k + 1);
  }
  std::vector<std::vector<int>> classes(ncolors);
  for (int c = 0; c < m; ++c) classes[color[c]].push_back(c);
  return classes;
}

MemberId cubic_gadget_literal(const SatInstance& inst, int classes, int lit) {
  const int base = inst.num_vars + 2 * classes + 2;
  return base + 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0);
}

Rational cubic_gadget_max_lambda(const SatInstance& inst, int classes) {
  return Rational(inst.num_vars, inst.num_vars + 2 * classes + 2);
}

GadgetOutput cubic_1in3_gadget(const SatInstance& inst, const std::vector<std::vector<int>>& classes, Rational lambda,
                               std::uint64_t seed) {
  validate(inst);
  const int n = inst.num_vars;
  const int m = static_cast<int>(inst.clauses.size());
  const int k = static_cast<int>(classes.size());
  if (n < 1) throw InputError("gadget needs at least one variable");
  std::vector<int> seen(m, 0);
  for (const auto& cls : classes) {
    std::set<int> vars;
    for (int c : cls) {
      if (c < 0 || c >= m) throw InputError("class names an unknown clause");
      ++seen[c];
      std::set<int> mine;
      for (int lit : inst.clauses[c]) mine.insert(std::abs(lit));
      for (int v : mine)
        if (!vars.insert(v).second) throw InputError("clauses in one class share a variable");
    }
  }
  for (int c = 0; c < m; ++c)
    if (seen[c] != 1) throw InputError("classes must partition the clauses");
  const int t_count = 2 * k + 2;
  const int s_size = n + t_count;
  const int total = s_size + 2 * n;
  if (total > SubsetMask::kMaxMembers) throw InputError("gadget would exceed 64 members");
  if (lambda < 0 || lambda > 1) throw InputError("lambda must lie in [0,1]");
  if ((1 - lambda) * s_size < 2 * (k + 1)) throw InputError("gadget requires (1-lambda)|S| >= 2(k+1)");

  const auto Y = range_ids(0, n), T = range_ids(n, t_count), X = range_ids(s_size, 2 * n);
  auto lit_id = [&](int lit) { return cubic_gadget_literal(inst, k, lit); };
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
  for (int i = 1; i <= t_count; ++i) labels.push_back("t" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    labels.push_back(literal_label(i));
    labels.push_back(literal_label(-i));
  }

  // Orders on Y ∪ X for the members of T.
  std::vector<std::vector<MemberId>> tails;
  {
    std::vector<MemberId> fwd, bwd;
    for (int i = 0; i < n; ++i) fwd.insert(fwd.end(), {X[2 * i], X[2 * i + 1], Y[i]});
    for (int i = n - 1; i >= 0; --i) bwd.insert(bwd.end(), {X[2 * i], X[2 * i + 1], Y[i]});
    tails.push_back(fwd);
    tails.push_back(bwd);
  }
  for (const auto& cls : classes) {
    const int l = static_cast<int>(cls.size());
    if (l > n) throw InputError("class has more clauses than there are variables");
    std::vector<MemberId> z;
    for (int c : cls)
      for (int lit : inst.clauses[c]) z.push_back(lit_id(lit));
    std::vector<MemberId> q = without(X, z);
    for (int i = l; i < n; ++i) q.push_back(Y[i]);
    std::vector<MemberId> up, down = q;
    for (int j = 0; j < l; ++j) up.insert(up.end(), {z[3 * j], z[3 * j + 1], z[3 * j + 2], Y[j]});
    up.insert(up.end(), q.begin(), q.end());
    for (int j = l - 1; j >= 0; --j) down.insert(down.end(), {z[3 * j], z[3 * j + 1], z[3 * j + 2], Y[j]});
    tails.push_back(up);
    tails.push_back(down);
  }

  Rng rng(derive_seed(seed, 0xc0b));
  std::vector<LinearOrder> orders;
  for (int i = 0; i < n; ++i) {
    std::vector<MemberId> l;
    append_shuffled(l, T, rng);
    append_shuffled(l, Y, rng);
    append_shuffled(l, X, rng);
    orders.emplace_back(std::move(l));
  }
  for (int t = 0; t < t_count; ++t) {
    std::vector<MemberId> l;
    append_shuffled(l, T, rng);
    l.insert(l.end(), tails[t].begin(), tails[t].end());
    orders.emplace_back(std::move(l));
  }
  for (int i = 0; i < 2 * n; ++i) orders.emplace_back(random_list(total, rng));
  SubsetMask s;
  for (MemberId y : Y) s.insert(y);
  for (MemberId t : T) s.insert(t);
  return {PreferenceNetwork(std::move(labels), std::move(orders)), s,
          "1-in-3 gadget: " + std::to_string(k) + " clause classes"};
}

GadgetOutput cubic_1in3_gadget(const SatInstance& inst, Rational lambda, std::uint64_t seed) {
  return cubic_1in3_gadget(inst, partition_clauses(inst), lambda, seed);
}

PreferenceNetwork random_network(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("network needs at least one member");
  if (n > SubsetMask::kMaxMembers) throw InputError("network would exceed 64 members");
  Rng rng(seed);
  std::vector<LinearOrder> orders;
  for (int s = 0; s < n; ++s) orders.emplace_back(rng.permutation(n));
  return PreferenceNetwork(std::move(orders));
}

PreferenceNetwork planted_network(int n, SubsetMask s, double loyalty, std::uint64_t seed) {
  if (n < 1 || n > SubsetMask::kMaxMembers) throw InputError("bad network size");
  if (!s.subset_of(SubsetMask::full(n))) throw InputError("planted set exceeds the network");
  Rng rng(seed);
  const auto in = s.members();
  const auto out = (SubsetMask::full(n) - s).members();
  std::vector<LinearOrder> orders;
  for (int v = 0; v < n; ++v) {
    if (s.contains(v) && rng.coin(loyalty)) {
      std::vector<MemberId> l;
      append_shuffled(l, in, rng);
      append_shuffled(l, out, rng);
      orders.emplace_back(std::move(l));
    } else {
      orders.emplace_back(rng.permutation(n));
    }
  }
  return PreferenceNetwork(std::move(orders));
}

SatInstance random_3sat(int num_vars, int num_clauses, std::uint64_t seed) {
  if (2 * num_vars < 3) throw InputError("need at least two variables for 3-literal clauses");
  Rng rng(seed);
  SatInstance inst{num_vars, {}};
  for (int c = 0; c < num_clauses; ++c) {
    std::array<int, 3> cl{};
    int filled = 0;
    while (filled < 3) {
      const int v = rng.uniform_int(1, num_vars);
      const int lit = rng.coin() ? v : -v;
      if (std::find(cl.begin(), cl.begin() + filled, lit) == cl.begin() + filled) cl[filled++] = lit;
    }
    inst.clauses.push_back(cl);
  }
  return inst;
}

namespace {

template <class Accept>
std::optional<std::vector<bool>> search_assignment(const SatInstance& inst, Accept accept) {
  validate(inst);
  if (inst.num_vars > kBruteForceVarLimit)
    throw LimitError("brute-force oracle limited to " + std::to_string(kBruteForceVarLimit) + " variables");
  const int n = inst.num_vars;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    bool ok = true;
    for (const auto& cl : inst.clauses) {
      int truths = 0;
      for (int lit : cl) {
        const bool val = (a >> (std::abs(lit) - 1)) & 1u;
        truths += (lit > 0) == val ? 1 : 0;
      }
      if (!accept(truths)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<bool> out(n);
      for (int i = 0; i < n; ++i) out[i] = (a >> i) & 1u;
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<bool>> sat_assignment(const SatInstance& inst) {
  return search_assignment(inst, [](int t) { return t >= 1; });
}

bool brute_force_sat(const SatInstance& inst) { return sat_assignment(inst).has_value(); }

std::optional<std::vector<bool>> one_in_three_assignment(const SatInstance& inst) {
  return search_assignment(inst, [](int t) { return t == 1; });
}

bool brute_force_1in3(const SatInstance& inst) { return one_in_three_assignment(inst).has_value(); }

}  // namespace prefnet
