#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace prefnet {

using MemberId = int;

// Subset of a ground set of at most 64 members, stored as a bitmask.
class SubsetMask {
 public:
  static constexpr int kMaxMembers = 64;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr SubsetMask single(MemberId i) { return SubsetMask(std::uint64_t{1} << i); }
  static SubsetMask of(const std::vector<MemberId>& ids) {
    SubsetMask m;
    for (MemberId i : ids) m.insert(i);
    return m;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(MemberId i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(MemberId i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(MemberId i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(SubsetMask o) const { return (bits_ & o.bits_) == 0; }
  constexpr MemberId lowest() const { return std::countr_zero(bits_); }
  constexpr MemberId highest() const { return 63 - std::countl_zero(bits_); }

  std::vector<MemberId> members() const {
    std::vector<MemberId> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Iterate members without allocating.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(static_cast<MemberId>(std::countr_zero(b)));
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SubsetMask a, SubsetMask b) = default;
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order used everywhere: by size, then by numeric mask.
struct CanonicalLess {
  constexpr bool operator()(SubsetMask a, SubsetMask b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

// Next mask with the same popcount in increasing numeric order (Gosper).
constexpr std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Scatter the low bits of `packed` onto the set bits of `pool`, preserving order.
constexpr std::uint64_t deposit_bits(std::uint64_t packed, std::uint64_t pool) {
  std::uint64_t out = 0;
  for (std::uint64_t b = pool; b && packed; b &= b - 1, packed >>= 1)
    if (packed & 1u) out |= b & (~b + 1);
  return out;
}

// Calls f(sub) for every k-subset of pool in increasing numeric order; stops when f returns true.
template <class F>
bool for_each_k_subset(SubsetMask pool, int k, F&& f) {
  const int m = pool.size();
  if (k < 0 || k > m) return false;
  if (k == 0) return f(SubsetMask{});
  if (k == m) return f(pool);
  const std::uint64_t end = m >= 64 ? 0 : (std::uint64_t{1} << m);
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1;;) {
    if (f(SubsetMask(deposit_bits(x, pool.bits())))) return true;
    if (x == ((std::uint64_t{1} << k) - 1) << (m - k)) break;
    x = next_same_popcount(x);
    if (end && x >= end) break;
  }
  return false;
}

// All non-empty subsets of the full n-set in canonical order.
std::vector<SubsetMask> canonical_subsets(int n);
// All k-subsets of pool in increasing numeric order.
std::vector<SubsetMask> k_subsets(SubsetMask pool, int k);

std::string to_string(SubsetMask m);

}  // namespace prefnet
