#include <algorithm>
#include <cmath>
#include <sstream>

#include "prefnet/axioms.hpp"
#include "prefnet/reference.hpp"
#include "prefnet/rng.hpp"

namespace prefnet {

std::string to_string(AggAxiom a) {
  switch (a) {
    case AggAxiom::U: return "U";
    case AggAxiom::ND: return "ND";
    case AggAxiom::IIA: return "IIA";
  }
  return "?";
}

AggAxiom parse_agg_axiom(const std::string& name) {
  if (name == "U" || name == "u") return AggAxiom::U;
  if (name == "ND" || name == "nd") return AggAxiom::ND;
  if (name == "IIA" || name == "iia") return AggAxiom::IIA;
  throw InputError("unknown aggregation axiom '" + name + "'");
}

namespace {

// -1: i above j, 0: tied, 1: j above i
int relation(const OrderedPartition& p, MemberId i, MemberId j) {
  const int a = p.block_of(i), b = p.block_of(j);
  return a < b ? -1 : (a == b ? 0 : 1);
}

std::vector<LinearOrder> all_orders(int n) {
  std::vector<MemberId> l(n);
  for (int i = 0; i < n; ++i) l[i] = i;
  std::vector<LinearOrder> out;
  do out.emplace_back(l);
  while (std::next_permutation(l.begin(), l.end()));
  return out;
}

// (n!)^voters if it fits under `cap`, else 0.
std::uint64_t space_size(int n, int voters, std::uint64_t cap) {
  double fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  const double total = std::pow(fact, voters);
  return total <= static_cast<double>(cap) ? static_cast<std::uint64_t>(total) : 0;
}

// Mixed-radix decoding of profile number `code`.
Profile decode(const std::vector<LinearOrder>& orders, int voters, std::uint64_t code) {
  Profile p;
  for (int v = 0; v < voters; ++v) {
    p.push_back(orders[code % orders.size()]);
    code /= orders.size();
  }
  return p;
}

Profile random_profile(int n, int voters, Rng& rng) {
  Profile p;
  for (int v = 0; v < voters; ++v) p.emplace_back(rng.permutation(n));
  return p;
}

std::optional<AggCounterexample> unanimity_violation(const AggregationFn& f, const Profile& p, int n) {
  const auto agg = f(p, n);
  for (MemberId i = 0; i < n; ++i)
    for (MemberId j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool all = std::all_of(p.begin(), p.end(), [&](const LinearOrder& o) { return o.prefers(i, j); });
      if (all && !agg.strictly_prefers(i, j)) {
        std::ostringstream t;
        t << "every ballot ranks " << i + 1 << " above " << j + 1 << " but the aggregate does not";
        return AggCounterexample{AggAxiom::U, {p}, i, j, -1, t.str()};
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<AggCounterexample> test_aggregation_axiom(const AggregationFn& f, AggAxiom axiom, int n, int voters,
                                                        const AggTestOptions& opts) {
  if (n < 2 || n > 8) throw InputError("aggregation tests need 2 <= n <= 8");
  if (voters < 1 || voters > 16) throw InputError("aggregation tests need 1 <= voters <= 16");
  if (opts.budget < 1) throw InputError("budget must be at least 1");
  Rng rng(opts.seed);
  const auto orders = all_orders(n);

  switch (axiom) {
    case AggAxiom::U: {
      if (opts.reference_first && n == 3 && voters == 2) {
        const auto ref = reference::unanimity_profile();
        const auto ballots = ref.profile(parse_subset(ref, "a,b"));
        if (auto cx = unanimity_violation(f, ballots, n)) return cx;
      }
      const std::uint64_t total = space_size(n, voters, opts.budget);
      const std::uint64_t trials = total ? total : opts.budget;
      for (std::uint64_t t = 0; t < trials; ++t) {
        const Profile p = total ? decode(orders, voters, t) : random_profile(n, voters, rng);
        if (auto cx = unanimity_violation(f, p, n)) return cx;
      }
      return std::nullopt;
    }
    case AggAxiom::ND: {
      // ND fails iff some voter's order (as singleton blocks) equals every aggregate.
      std::vector<bool> alive(voters, true);
      const std::uint64_t total = space_size(n, voters, opts.budget);
      const std::uint64_t trials = total ? total : opts.budget;
      for (std::uint64_t t = 0; t < trials; ++t) {
        const Profile p = total ? decode(orders, voters, t) : random_profile(n, voters, rng);
        const auto agg = f(p, n);
        bool any = false;
        for (int v = 0; v < voters; ++v) {
          if (alive[v] && !(agg == OrderedPartition::from_order(p[v]))) alive[v] = false;
          any = any || alive[v];
        }
        if (!any) return std::nullopt;
      }
      const int d = static_cast<int>(std::find(alive.begin(), alive.end(), true) - alive.begin());
      std::ostringstream t;
      t << "voter " << d << " matched the aggregate on all " << trials << (total ? " profiles" : " sampled profiles");
      return AggCounterexample{AggAxiom::ND, {}, -1, -1, d, t.str()};
    }
    case AggAxiom::IIA: {
      const std::uint64_t total = space_size(n, 2 * voters, opts.budget);
      auto differ = [&](const Profile& p, const Profile& q, MemberId a, MemberId b) -> std::optional<AggCounterexample> {
        for (int v = 0; v < voters; ++v)
          if (p[v].prefers(a, b) != q[v].prefers(a, b)) return std::nullopt;
        const int r1 = relation(f(p, n), a, b), r2 = relation(f(q, n), a, b);
        if (r1 == r2) return std::nullopt;
        std::ostringstream t;
        t << "ballots agree on " << a + 1 << " vs " << b + 1 << " but the aggregates relate them differently";
        return AggCounterexample{AggAxiom::IIA, {p, q}, a, b, -1, t.str()};
      };
      if (total) {
        const std::uint64_t half = space_size(n, voters, opts.budget);
        for (std::uint64_t x = 0; x < half; ++x)
          for (std::uint64_t y = 0; y < half; ++y) {
            const Profile p = decode(orders, voters, x), q = decode(orders, voters, y);
            for (MemberId a = 0; a < n; ++a)
              for (MemberId b = a + 1; b < n; ++b)
                if (auto cx = differ(p, q, a, b)) return cx;
          }
        return std::nullopt;
      }
      for (std::uint64_t t = 0; t < opts.budget; ++t) {
        const Profile p = random_profile(n, voters, rng);
        Profile q = random_profile(n, voters, rng);
        const MemberId a = static_cast<MemberId>(rng.below(n));
        MemberId b = static_cast<MemberId>(rng.below(n - 1));
        if (b >= a) ++b;
        for (int v = 0; v < voters; ++v)
          if (p[v].prefers(a, b) != q[v].prefers(a, b)) {
            auto l = q[v].list();
            std::swap(*std::find(l.begin(), l.end(), a), *std::find(l.begin(), l.end(), b));
            q[v] = LinearOrder(std::move(l));
          }
        if (auto cx = differ(p, q, a, b)) return cx;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace prefnet
