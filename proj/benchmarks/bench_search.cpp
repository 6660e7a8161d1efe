#include <benchmark/benchmark.h>

#include "prefnet/generators.hpp"
#include "prefnet/lexpref.hpp"
#include "prefnet/rng.hpp"
#include "prefnet/rules.hpp"
#include "prefnet/stability.hpp"

using namespace prefnet;

namespace {

// Members of S rank S first (shuffled) with up to g outsiders slotted into
// the top |S|+g; everyone else uniform. S is the first |S| ids.
struct Instance {
  PreferenceNetwork net;
  SubsetMask s;
};

Instance clique_g_instance(int n, int k, int g, std::uint64_t seed) {
  Rng rng(seed);
  const SubsetMask s = SubsetMask::full(k);
  std::vector<LinearOrder> orders;
  for (int v = 0; v < n; ++v) {
    if (v >= k) {
      auto p = rng.permutation(n);
      orders.emplace_back(std::vector<MemberId>(p.begin(), p.end()));
      continue;
    }
    std::vector<MemberId> in, out;
    for (int u = 0; u < n; ++u) (u < k ? in : out).push_back(u);
    rng.shuffle(in);
    rng.shuffle(out);
    std::vector<MemberId> head(in);
    const int extra = static_cast<int>(rng.below(g + 1));
    head.insert(head.end(), out.begin(), out.begin() + extra);
    rng.shuffle(head);
    // members of S must stay within the top |S|+g: already true since |head| <= k+g
    head.insert(head.end(), out.begin() + extra, out.end());
    orders.emplace_back(head);
  }
  return {PreferenceNetwork(std::move(orders)), s};
}

constexpr int kG = 2;

void BM_GsExhaustive(benchmark::State& st) {
  const auto in = clique_g_instance(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), kG, 7);
  for (auto _ : st) benchmark::DoNotOptimize(gs_witness(in.net, in.s));
}

void BM_GsPruned(benchmark::State& st) {
  const auto in = clique_g_instance(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), kG, 7);
  for (auto _ : st) benchmark::DoNotOptimize(gs_witness_pruned(in.net, in.s, kG));
}

void BM_SaExhaustive(benchmark::State& st) {
  const auto in = clique_g_instance(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), kG, 7);
  for (auto _ : st) benchmark::DoNotOptimize(sa_witness(in.net, in.s));
}

void BM_SaPruned(benchmark::State& st) {
  const auto in = clique_g_instance(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), kG, 7);
  for (auto _ : st) benchmark::DoNotOptimize(sa_witness_pruned(in.net, in.s, kG));
}

void search_args(benchmark::internal::Benchmark* b) {
  for (int n : {10, 14, 18}) b->Args({n, n / 2});
}

void BM_SampleStableHarmonious(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto net = planted_network(n, SubsetMask::full(n / 2), 0.95, 11);
  for (auto _ : st) benchmark::DoNotOptimize(sample_stable_harmonious(net, Rational(1, 4), 200, 3));
}

}  // namespace

BENCHMARK(BM_GsExhaustive)->Apply(search_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GsPruned)->Apply(search_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SaExhaustive)->Apply(search_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SaPruned)->Apply(search_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SampleStableHarmonious)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
