#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prefnet/core.hpp"

namespace prefnet {

using Rational = boost::rational<std::int64_t>;

// f_s as explicit pairs (u, f_s(u)).
struct Bijection {
  MemberId voter = -1;
  std::vector<std::pair<MemberId, MemberId>> pairs;
};

struct GsWitness {
  SubsetMask group;        // G ⊊ S
  SubsetMask replacement;  // G' ⊆ V-S
  std::vector<Bijection> bijections;  // one per s in S-G
};

struct SaWitness {
  SubsetMask replacement;  // G' ⊆ V-S, |G'| = |S|
  std::vector<Bijection> bijections;  // one per s in S
};

struct SearchOptions {
  bool force = false;  // lift the |V| <= 24 guard
  int jobs = 1;
};

inline constexpr int kExhaustiveLimit = 24;

// True iff the i-th best of G' beats the i-th best of G for every i.
bool lex_prefers(const LinearOrder& order, SubsetMask g, SubsetMask g_prime);
// Same test without argument validation (hot loops).
bool lex_prefers_unchecked(const LinearOrder& order, SubsetMask g, SubsetMask g_prime);
// i-th best to i-th best.
Bijection sorted_bijection(const LinearOrder& order, MemberId voter, SubsetMask g, SubsetMask g_prime);

// Exhaustive searches. The witness returned is the first in the order
// (|G|, G mask, G' mask), independent of opts.jobs.
std::optional<SaWitness> sa_witness(const PreferenceNetwork& network, SubsetMask s, const SearchOptions& opts = {});
std::optional<GsWitness> gs_witness(const PreferenceNetwork& network, SubsetMask s, const SearchOptions& opts = {});

// Searches restricted to T_s = π_s^{-1}([1:|S|+g]) - S. Require S ∈ Clique(g).
std::optional<GsWitness> gs_witness_pruned(const PreferenceNetwork& network, SubsetMask s, int g);
std::optional<SaWitness> sa_witness_pruned(const PreferenceNetwork& network, SubsetMask s, int g);

// Polynomial check for λ-harmonious S with (1-λ)|S| < 2. Tests only G = S-{s}.
std::optional<GsWitness> gs_check_harmonious(const PreferenceNetwork& network, SubsetMask s, Rational lambda);

// Weak GS: |G| <= |S|/2 and one bijection shared by all of S-G.
struct WeakGsWitness {
  SubsetMask group;
  SubsetMask replacement;
  std::vector<std::pair<MemberId, MemberId>> pairs;
};
std::optional<WeakGsWitness> weak_gs_witness(const PreferenceNetwork& network, SubsetMask s);

// Replays every inequality of a witness.
bool verify(const PreferenceNetwork& network, SubsetMask s, const GsWitness& w);
bool verify(const PreferenceNetwork& network, SubsetMask s, const SaWitness& w);

}  // namespace prefnet
