#include "prefnet/aggregation.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace prefnet {

double WeightSchema::weight(int k, int p) const {
  if (p < 1 || p > n) throw InputError("position out of range");
  if (k > n) return 1.0;
  if (k < 1) throw InputError("voter count must be positive");
  return w[k - 1][p - 1];
}

WeightSchema b3ct_weights(int n) {
  if (n < 1) throw InputError("schema needs n >= 1");
  WeightSchema s{"b3ct", n, {}};
  for (int k = 1; k <= n; ++k) {
    std::vector<double> v(n, 0.0);
    std::fill(v.begin(), v.begin() + k, 1.0);
    s.w.push_back(std::move(v));
  }
  return s;
}

WeightSchema borda_weights(int n) {
  if (n < 1) throw InputError("schema needs n >= 1");
  WeightSchema s{"borda", n, {}};
  std::vector<double> v(n);
  for (int p = 0; p < n; ++p) v[p] = n - p;
  s.w.assign(n, v);
  return s;
}

WeightFamily b3ct_family() { return [](int n) { return b3ct_weights(n); }; }
WeightFamily borda_family() { return [](int n) { return borda_weights(n); }; }

std::vector<double> weighted_scores(const WeightSchema& w, const Profile& ballots) {
  std::vector<double> score(w.n, 0.0);
  const int k = static_cast<int>(ballots.size());
  for (const auto& b : ballots) {
    if (b.size() != w.n) throw InputError("ballot length does not match weight schema");
    for (int p = 1; p <= w.n; ++p) score[b.at(p)] += w.weight(k, p);
  }
  return score;
}

namespace {

OrderedPartition blocks_by_score(const std::vector<double>& score) {
  std::map<double, SubsetMask, std::greater<>> groups;
  for (int i = 0; i < static_cast<int>(score.size()); ++i) groups[score[i]].insert(i);
  OrderedPartition p;
  for (auto& [sc, m] : groups) p.blocks.push_back(m);
  return p;
}

}  // namespace

OrderedPartition aggregate_weighted(const WeightSchema& w, const Profile& ballots) {
  if (w.n < 1 || static_cast<int>(w.w.size()) != w.n) throw InputError("malformed weight schema");
  for (const auto& v : w.w)
    if (static_cast<int>(v.size()) != w.n) throw InputError("weight vector length does not match n");
  return blocks_by_score(weighted_scores(w, ballots));
}

MajorityDigraph majority_digraph(const Profile& ballots, int n) {
  MajorityDigraph g;
  g.n = n;
  g.voters = static_cast<int>(ballots.size());
  g.support.assign(n, std::vector<int>(n, 0));
  for (const auto& b : ballots) {
    if (b.size() != n) throw InputError("ballot length does not match ground set");
    const auto& l = b.list();
    for (int a = 0; a < n; ++a)
      for (int c = a + 1; c < n; ++c) ++g.support[l[a]][l[c]];
  }
  return g;
}

namespace {

struct Tarjan {
  const MajorityDigraph& g;
  std::vector<int> index, low, comp;
  std::vector<char> on_stack;
  std::vector<int> stack;
  int counter = 0, ncomp = 0;

  explicit Tarjan(const MajorityDigraph& graph)
      : g(graph), index(graph.n, -1), low(graph.n, 0), comp(graph.n, -1), on_stack(graph.n, 0) {}

  void visit(int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w = 0; w < g.n; ++w) {
      if (!g.edge(v, w)) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      for (;;) {
        const int w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  }
};

}  // namespace

OrderedPartition aggregate_harmonious(const Profile& ballots, int n) {
  const MajorityDigraph g = majority_digraph(ballots, n);
  Tarjan t(g);
  for (int v = 0; v < n; ++v)
    if (t.index[v] < 0) t.visit(v);
  // The condensation of a tournament is a transitive tournament, so ordering
  // components by out-degree recovers its Hamiltonian path.
  std::vector<SubsetMask> comps(t.ncomp);
  for (int v = 0; v < n; ++v) comps[t.comp[v]].insert(v);
  std::vector<int> outdeg(t.ncomp, 0);
  for (int a = 0; a < t.ncomp; ++a)
    for (int b = 0; b < t.ncomp; ++b)
      if (a != b && g.edge(comps[a].lowest(), comps[b].lowest())) ++outdeg[a];
  std::vector<int> order(t.ncomp);
  for (int i = 0; i < t.ncomp; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return outdeg[a] > outdeg[b]; });
  OrderedPartition p;
  for (int c : order) p.blocks.push_back(comps[c]);
  return p;
}

AggregationFn weighted_aggregator(WeightFamily family) {
  return [family = std::move(family)](const Profile& ballots, int n) {
    if (ballots.empty()) return OrderedPartition{{SubsetMask::full(n)}};
    return aggregate_weighted(family(n), ballots);
  };
}

AggregationFn harmonious_aggregator() {
  return [](const Profile& ballots, int n) { return aggregate_harmonious(ballots, n); };
}

bool separates(const OrderedPartition& p, SubsetMask s, int n) {
  // Blocks must list all of S before any outsider, with no mixed block.
  SubsetMask seen;
  for (const auto& b : p.blocks) {
    if (seen == s) return true;
    if (!b.subset_of(s)) return false;
    seen = seen | b;
  }
  return seen == s && s == SubsetMask::full(n);
}

bool is_fixed_point(const AggregationFn& f, const PreferenceNetwork& network, SubsetMask s) {
  if (s.empty()) throw InputError("subset must be non-empty");
  return separates(f(network.profile(s), network.size()), s, network.size());
}

int phi_votes(const PreferenceNetwork& network, SubsetMask t, int k, MemberId i) {
  if (k < 1 || k > network.size()) throw InputError("k must lie in [1:n]");
  int c = 0;
  t.for_each([&](MemberId s) { c += network.order(s).rank(i) <= k ? 1 : 0; });
  return c;
}

}  // namespace prefnet
