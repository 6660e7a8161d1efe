#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prefnet/subset.hpp"

namespace prefnet {

// Malformed input or violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search was refused because it exceeds a size guard (see `force` options).
class LimitError : public InputError {
 public:
  using InputError::InputError;
};

// Total ranking of {0..n-1}. Ranks are 1-based.
class LinearOrder {
 public:
  LinearOrder() = default;
  // `list[p]` is the member at rank p+1. Throws InputError unless list is a permutation.
  explicit LinearOrder(std::vector<MemberId> list);
  static LinearOrder identity(int n);
  static LinearOrder from_ranks(const std::vector<int>& ranks);

  int size() const { return static_cast<int>(list_.size()); }
  int rank(MemberId u) const;
  MemberId at(int rank) const;  // member at 1-based rank
  bool prefers(MemberId u, MemberId v) const { return rank(u) < rank(v); }
  const std::vector<MemberId>& list() const { return list_; }
  const std::vector<int>& ranks() const { return rank_; }

  // Members of `m` ordered best first.
  std::vector<MemberId> sorted(SubsetMask m) const;
  // Members occupying ranks [1:k].
  SubsetMask top(int k) const;

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) { return a.list_ == b.list_; }

 private:
  std::vector<MemberId> list_;
  std::vector<int> rank_;  // rank_[u] in [1:n]
};

using Profile = std::vector<LinearOrder>;

bool prefers(const LinearOrder& order, MemberId u, MemberId v);

struct Violation {
  std::string member;  // label of the offending row (empty for document-level issues)
  std::string message;
};

// Unvalidated network: labels plus per-member rank lists (ids into labels).
struct RawNetwork {
  std::vector<std::string> labels;
  std::vector<std::vector<MemberId>> lists;
};

std::vector<Violation> validate(const RawNetwork& raw);

// Ground set V plus one order per member. Immutable.
class PreferenceNetwork {
 public:
  PreferenceNetwork() = default;
  PreferenceNetwork(std::vector<std::string> labels, std::vector<LinearOrder> orders);
  // Labels default to "1".."n".
  explicit PreferenceNetwork(std::vector<LinearOrder> orders);
  static PreferenceNetwork from_raw(const RawNetwork& raw);
  // Builds from ranked label lists, one per member in `labels` order.
  static PreferenceNetwork from_labels(const std::vector<std::string>& labels,
                                       const std::vector<std::vector<std::string>>& lists);

  int size() const { return static_cast<int>(orders_.size()); }
  SubsetMask ground() const { return SubsetMask::full(size()); }
  const LinearOrder& order(MemberId s) const { return orders_.at(s); }
  const std::vector<LinearOrder>& orders() const { return orders_; }
  const std::string& label(MemberId i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<MemberId> find(const std::string& label) const;
  MemberId id(const std::string& label) const;  // throws InputError

  // Profile Π_S restricted to voters in S (ascending id).
  Profile profile(SubsetMask voters) const;
  Profile profile(const std::vector<MemberId>& voters) const;

  // Copy with the order of member s replaced.
  PreferenceNetwork with_order(MemberId s, LinearOrder order) const;

  friend bool operator==(const PreferenceNetwork& a, const PreferenceNetwork& b) {
    return a.labels_ == b.labels_ && a.orders_ == b.orders_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<LinearOrder> orders_;
};

std::vector<Violation> validate(const PreferenceNetwork& network);

// Ordered sequence of disjoint non-empty blocks covering {0..n-1}.
struct OrderedPartition {
  std::vector<SubsetMask> blocks;

  int block_of(MemberId i) const;
  bool strictly_prefers(MemberId u, MemberId v) const { return block_of(u) < block_of(v); }
  // Singleton blocks in the given order.
  static OrderedPartition from_order(const LinearOrder& order);
  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

// Projection onto V'. New member i corresponds to the i-th smallest id of V'.
PreferenceNetwork project(const PreferenceNetwork& network, SubsetMask sub);
// Maps a mask over the projected network back to ids of the original.
SubsetMask lift(SubsetMask local, SubsetMask sub);
// Maps a mask contained in `sub` to ids of the projected network.
SubsetMask restrict_to(SubsetMask global, SubsetMask sub);

// sigma[v] is the image of v. Result satisfies π'_{σ(s)}(σ(v)) = π_s(v); labels stay with ids.
PreferenceNetwork apply_isomorphism(const PreferenceNetwork& network, const std::vector<MemberId>& sigma);
SubsetMask apply_permutation(SubsetMask m, const std::vector<MemberId>& sigma);

// Parses "1,5,6" style label lists against the network.
SubsetMask parse_subset(const PreferenceNetwork& network, const std::string& text);
std::string format_subset(const PreferenceNetwork& network, SubsetMask m);

}  // namespace prefnet
