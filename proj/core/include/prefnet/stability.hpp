#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prefnet/aggregation.hpp"
#include "prefnet/lexpref.hpp"

namespace prefnet {

struct PerturbationReport {
  std::vector<int> disagreements;   // per v: members of S whose rank of v changed
  Rational max_fraction{0};         // max over v of disagreements / |S|
  bool membership_preserving = false;  // π_s(S) = π'_s(S) for all s in S
};

PerturbationReport perturbation_report(const PreferenceNetwork& base, const PreferenceNetwork& perturbed, SubsetMask s);
bool is_delta_perturbation(const PreferenceNetwork& base, const PreferenceNetwork& perturbed, SubsetMask s,
                           Rational delta);

struct AlphaBeta {
  Rational alpha{0};  // min over u in S of φ_S(u)/|S|
  Rational beta{0};   // max over v outside of φ_S(v)/|S|; 0 when S = V
  bool no_outsiders = false;
};

// Top-|S| votes φ_S.
AlphaBeta alpha_beta(const PreferenceNetwork& net, SubsetMask s);

struct PerturbationBounds {
  Rational certified{0};             // (α*-β*)/2
  std::optional<Rational> refuted;   // absent when S = V (nothing can break it)
  std::optional<PreferenceNetwork> refutation;  // the breaking profile
};

// Throws InputError unless S is a B3CT community.
PerturbationBounds b3ct_perturbation_bounds(const PreferenceNetwork& net, SubsetMask s);

// Exhaustive search over δ-perturbations of Π_S for one that breaks B3CT membership.
// Limited to n <= 6.
std::optional<PreferenceNetwork> find_breaking_perturbation(const PreferenceNetwork& net, SubsetMask s, Rational delta,
                                                            bool membership_preserving);

// Every T ⊆ S with |T| >= (1-δ)|S| keeps S on top of F(Π_T).
bool delta_strong_fixed_point(const AggregationFn& f, const PreferenceNetwork& net, SubsetMask s, Rational delta);
// Same quantifier with top-|S| votes φ_{T,|S|}.
bool delta_strong_b3ct(const PreferenceNetwork& net, SubsetMask s, Rational delta);
// Every cross pair carried by at least (1/2+δ)|S| members. δ in [0,1/2].
bool delta_stable_harmonious(const PreferenceNetwork& net, SubsetMask s, Rational delta);
// Every T ⊆ S with |T| >= (1-δ)|S| has a strict majority on every cross pair.
bool delta_strong_harmonious(const PreferenceNetwork& net, SubsetMask s, Rational delta);

// Prefix of F_H over the ballots of T (a multiset) with exactly t members, if any.
std::optional<SubsetMask> identify(const PreferenceNetwork& net, const std::vector<MemberId>& t_multiset, int t);

// ceil(12 ln n / δ²), at least 1.
int identification_sample_size(int n, double delta);

enum class SampleMode { Sampling, Enumeration };

// Sampling: per draw, pick a random seed ballot prefix R and draw k ballots from R.
// Enumeration: every non-empty T ⊆ V as a set. Each candidate prefix is verified
// with delta_stable_harmonious. Result is in canonical order.
std::vector<SubsetMask> sample_stable_harmonious(const PreferenceNetwork& net, Rational delta, std::uint64_t samples,
                                                 std::uint64_t seed, SampleMode mode = SampleMode::Sampling,
                                                 int jobs = 1);
std::vector<SubsetMask> brute_force_stable_harmonious(const PreferenceNetwork& net, Rational delta);

}  // namespace prefnet
