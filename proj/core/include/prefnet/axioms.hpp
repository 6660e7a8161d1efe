#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prefnet/rules.hpp"

namespace prefnet {

enum class AxiomId { GS, SA, A, Mon, CRNM, CRM, WC, Emb, IOO, PE, Cq, OD, SmallWorld, ORM, WeakGS };

inline constexpr std::array<AxiomId, 8> kCoreAxioms = {AxiomId::GS,   AxiomId::SA,  AxiomId::A,  AxiomId::Mon,
                                                       AxiomId::CRNM, AxiomId::CRM, AxiomId::WC, AxiomId::Emb};
std::vector<AxiomId> all_axiom_ids();
std::string to_string(AxiomId a);
AxiomId parse_axiom(const std::string& name);

// Quantified objects of one axiom instance. Which fields are needed depends on the axiom:
//   A: subset, sigma.  Mon/CRNM/CRM/IOO/ORM: subset, alternate.  Emb: sub_ground.
//   OD: subset (departing optional; all outsiders when absent).  WC: nothing.
//   Others: subset.
// Mon, CRNM and CRM conclude membership in `network` from membership in `alternate`;
// ORM concludes membership in `alternate` from membership in `network`.
struct AxiomContext {
  std::optional<SubsetMask> subset;
  std::optional<PreferenceNetwork> alternate;
  std::optional<std::vector<MemberId>> sigma;
  std::optional<SubsetMask> sub_ground;
  std::optional<MemberId> departing;
};

// Whether the alternate profile satisfies the axiom's premise. Instances whose
// premise fails hold vacuously.
bool mon_premise(const PreferenceNetwork& promoted, const PreferenceNetwork& demoted, SubsetMask s);
bool crnm_premise(const PreferenceNetwork& base, const PreferenceNetwork& coherent, SubsetMask s);
bool crm_premise(const PreferenceNetwork& base, const PreferenceNetwork& coherent, SubsetMask s);
bool ioo_premise(const PreferenceNetwork& a, const PreferenceNetwork& b, SubsetMask s);
bool orm_premise(const PreferenceNetwork& base, const PreferenceNetwork& promoted, SubsetMask s);
bool emb_premise(const PreferenceNetwork& net, SubsetMask sub);

// Evaluates the axiom's implication on exactly this instance.
bool check_instance_axiom(const CommunityRule& rule, AxiomId axiom, const PreferenceNetwork& net,
                          const AxiomContext& ctx, const SearchOptions& search = {});
// Axioms and properties quantified only over S (GS, SA, WC, PE, Cq, OD, SmallWorld, WeakGS).
bool check_property(const CommunityRule& rule, AxiomId property, const PreferenceNetwork& net, SubsetMask s,
                    const SearchOptions& search = {});

struct Counterexample {
  AxiomId axiom = AxiomId::GS;
  PreferenceNetwork network;
  AxiomContext context;
  std::string source;  // "reference:<name>" or "trial:<index>"
  std::string trace;
};

struct FalsifyOptions {
  std::uint64_t budget = 1000;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool reference_first = false;
  int min_n = 2;
  int max_n = 6;
};

// Searches reference instances (when requested) and then random admissible instances.
// Absence is evidence, not proof.
std::optional<Counterexample> falsify_axiom(const CommunityRule& rule, AxiomId axiom, const FalsifyOptions& opts);
// True iff the recorded instance violates the axiom.
bool replays(const CommunityRule& rule, const Counterexample& cx);

// Transformations used by the harness (exposed for tests and the CLI).
PreferenceNetwork promote_members(const PreferenceNetwork& net, SubsetMask s, int swaps, std::uint64_t seed,
                                  bool shuffle_outsider_pairs);
PreferenceNetwork cohere_non_members(const PreferenceNetwork& net, SubsetMask s, const std::vector<MemberId>& shared);
PreferenceNetwork cohere_members(const PreferenceNetwork& net, SubsetMask s, const std::vector<MemberId>& shared);
PreferenceNetwork randomize_outsider_ballots(const PreferenceNetwork& net, SubsetMask s, std::uint64_t seed);
PreferenceNetwork embed_first(const PreferenceNetwork& net, SubsetMask sub);

// ---- Weighted impossibility gauntlet ----

struct GauntletResult {
  int profile = 0;                    // 1, 2 or 3
  std::array<int, 5> sigma{};         // position p (0-based) of the proof profile goes to sigma[p]
  PreferenceNetwork network;          // members a..e
  SubsetMask s;                       // {a,b,c}
  std::vector<double> scores;
  GsWitness witness;
};

// Requires min(w1,w2,w3) > max(w4,w5).
GauntletResult weighted_gs_gauntlet(const std::array<double, 5>& w3);

// ---- Aggregation-level axioms ----

enum class AggAxiom { U, ND, IIA };
std::string to_string(AggAxiom a);
AggAxiom parse_agg_axiom(const std::string& name);

struct AggCounterexample {
  AggAxiom axiom = AggAxiom::U;
  std::vector<Profile> profiles;  // one profile (U, ND samples omitted) or two (IIA)
  MemberId i = -1, j = -1;        // offending pair
  int dictator = -1;              // ND: voter index matching every aggregate
  std::string trace;
};

struct AggTestOptions {
  std::uint64_t budget = 1000;
  std::uint64_t seed = 1;
  bool reference_first = false;
};

std::optional<AggCounterexample> test_aggregation_axiom(const AggregationFn& f, AggAxiom axiom, int n, int voters,
                                                        const AggTestOptions& opts);

}  // namespace prefnet
