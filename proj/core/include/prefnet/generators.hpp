#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "prefnet/lexpref.hpp"

namespace prefnet {

// 3-literal clauses; a literal is a signed 1-based variable index (DIMACS style).
struct SatInstance {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

// Throws InputError unless every clause has three distinct literals over declared variables.
void validate(const SatInstance& inst);

struct GadgetOutput {
  PreferenceNetwork network;
  SubsetMask s;
  std::string notes;
};

// Members a1..am, b1..bn, d1..dm, then literals x1,!x1,...; S = A ∪ B.
GadgetOutput sat_to_network(const SatInstance& inst, std::uint64_t seed);

// Adds p >= |S| members p1..pp to S. The padded set fails GS exactly when S fails SA,
// and is always self-approving.
GadgetOutput pad_network(const PreferenceNetwork& net, SubsetMask s, int p, std::uint64_t seed);

// Heroes h1..hd (ids 0..d-1), sidekicks k1..kd (ids d..2d-1).
PreferenceNetwork hero_sidekick(int duos);

// Greedy colouring of the clause conflict graph (clauses sharing a variable conflict).
std::vector<std::vector<int>> partition_clauses(const SatInstance& inst);

// Members y1..yn, t1..t(2k+2), then literals. S = Y ∪ T. Requires (1-λ)|S| >= 2(k+1).
GadgetOutput cubic_1in3_gadget(const SatInstance& inst, const std::vector<std::vector<int>>& classes,
                               Rational lambda, std::uint64_t seed);
GadgetOutput cubic_1in3_gadget(const SatInstance& inst, Rational lambda, std::uint64_t seed);
// Largest λ the gadget admits: |Y| / |S|.
Rational cubic_gadget_max_lambda(const SatInstance& inst, int classes);

PreferenceNetwork random_network(int n, std::uint64_t seed);
// Members of `s` rank S first (random internal order) with probability `loyalty`,
// otherwise a uniform order; everyone else uniform.
PreferenceNetwork planted_network(int n, SubsetMask s, double loyalty, std::uint64_t seed);
// Three distinct literals per clause, drawn uniformly.
SatInstance random_3sat(int num_vars, int num_clauses, std::uint64_t seed);

inline constexpr int kBruteForceVarLimit = 24;
std::optional<std::vector<bool>> sat_assignment(const SatInstance& inst);
bool brute_force_sat(const SatInstance& inst);
std::optional<std::vector<bool>> one_in_three_assignment(const SatInstance& inst);
bool brute_force_1in3(const SatInstance& inst);

// DIMACS CNF restricted to 3-literal clauses.
SatInstance parse_dimacs(std::istream& in);
SatInstance parse_dimacs_string(const std::string& text);
std::string to_dimacs(const SatInstance& inst);

// Member id of a literal in the SAT gadget / cubic gadget layouts.
MemberId sat_gadget_literal(const SatInstance& inst, int literal);
MemberId cubic_gadget_literal(const SatInstance& inst, int classes, int literal);

}  // namespace prefnet
