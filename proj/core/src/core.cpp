#include "prefnet/core.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace prefnet {

std::vector<SubsetMask> canonical_subsets(int n) {
  std::vector<SubsetMask> out;
  const SubsetMask all = SubsetMask::full(n);
  for (int k = 1; k <= n; ++k)
    for_each_k_subset(all, k, [&](SubsetMask m) {
      out.push_back(m);
      return false;
    });
  return out;
}

std::vector<SubsetMask> k_subsets(SubsetMask pool, int k) {
  std::vector<SubsetMask> out;
  for_each_k_subset(pool, k, [&](SubsetMask m) {
    out.push_back(m);
    return false;
  });
  return out;
}

std::string to_string(SubsetMask m) {
  std::string s = "{";
  bool first = true;
  m.for_each([&](MemberId i) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  });
  return s + "}";
}

LinearOrder::LinearOrder(std::vector<MemberId> list) : list_(std::move(list)) {
  const int n = size();
  if (n > SubsetMask::kMaxMembers) throw InputError("order longer than 64 members");
  rank_.assign(n, 0);
  for (int p = 0; p < n; ++p) {
    const MemberId u = list_[p];
    if (u < 0 || u >= n) throw InputError("order names unknown member id " + std::to_string(u));
    if (rank_[u] != 0) throw InputError("order lists member id " + std::to_string(u) + " twice");
    rank_[u] = p + 1;
  }
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<MemberId> l(n);
  for (int i = 0; i < n; ++i) l[i] = i;
  return LinearOrder(std::move(l));
}

LinearOrder LinearOrder::from_ranks(const std::vector<int>& ranks) {
  const int n = static_cast<int>(ranks.size());
  std::vector<MemberId> l(n, -1);
  for (int u = 0; u < n; ++u) {
    const int r = ranks[u];
    if (r < 1 || r > n || l[r - 1] != -1) throw InputError("rank vector is not a bijection onto [1:n]");
    l[r - 1] = u;
  }
  return LinearOrder(std::move(l));
}

int LinearOrder::rank(MemberId u) const {
  if (u < 0 || u >= size()) throw InputError("unknown member id " + std::to_string(u));
  return rank_[u];
}

MemberId LinearOrder::at(int r) const {
  if (r < 1 || r > size()) throw InputError("rank out of range: " + std::to_string(r));
  return list_[r - 1];
}

std::vector<MemberId> LinearOrder::sorted(SubsetMask m) const {
  std::vector<MemberId> out;
  out.reserve(m.size());
  for (MemberId u : list_)
    if (m.contains(u)) out.push_back(u);
  return out;
}

SubsetMask LinearOrder::top(int k) const {
  SubsetMask m;
  for (int p = 0; p < k && p < size(); ++p) m.insert(list_[p]);
  return m;
}

bool prefers(const LinearOrder& order, MemberId u, MemberId v) { return order.rank(u) < order.rank(v); }

std::vector<Violation> validate(const RawNetwork& raw) {
  std::vector<Violation> out;
  const int n = static_cast<int>(raw.labels.size());
  if (n == 0) out.push_back({"", "network has no members"});
  if (n > SubsetMask::kMaxMembers) out.push_back({"", "network has more than 64 members"});
  std::unordered_set<std::string> seen;
  for (const auto& l : raw.labels)
    if (!seen.insert(l).second) out.push_back({l, "duplicate label '" + l + "'"});
  if (static_cast<int>(raw.lists.size()) != n) {
    out.push_back({"", "expected " + std::to_string(n) + " preference lists, got " +
                           std::to_string(raw.lists.size())});
    return out;
  }
  for (int s = 0; s < n; ++s) {
    const auto& who = raw.labels[s];
    const auto& l = raw.lists[s];
    std::vector<int> count(n, 0);
    bool bad_id = false;
    for (MemberId u : l) {
      if (u < 0 || u >= n) {
        bad_id = true;
        continue;
      }
      ++count[u];
    }
    if (bad_id) out.push_back({who, "list of '" + who + "' names an unknown member"});
    std::string dup, missing;
    for (int u = 0; u < n; ++u) {
      if (count[u] > 1) dup += (dup.empty() ? "" : ",") + raw.labels[u];
      if (count[u] == 0) missing += (missing.empty() ? "" : ",") + raw.labels[u];
    }
    if (!dup.empty()) out.push_back({who, "list of '" + who + "' repeats " + dup});
    if (!missing.empty()) out.push_back({who, "list of '" + who + "' is missing " + missing});
  }
  return out;
}

namespace {

std::string join_violations(const std::vector<Violation>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x.message;
  return s;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> l(n);
  for (int i = 0; i < n; ++i) l[i] = std::to_string(i + 1);
  return l;
}

}  // namespace

PreferenceNetwork::PreferenceNetwork(std::vector<std::string> labels, std::vector<LinearOrder> orders)
    : labels_(std::move(labels)), orders_(std::move(orders)) {
  RawNetwork raw{labels_, {}};
  for (const auto& o : orders_) raw.lists.push_back(o.list());
  auto v = validate(raw);
  if (!v.empty()) throw InputError(join_violations(v));
}

PreferenceNetwork::PreferenceNetwork(std::vector<LinearOrder> orders)
    : labels_(default_labels(static_cast<int>(orders.size()))), orders_(std::move(orders)) {
  RawNetwork raw{labels_, {}};
  for (const auto& o : orders_) raw.lists.push_back(o.list());
  auto v = validate(raw);
  if (!v.empty()) throw InputError(join_violations(v));
}

PreferenceNetwork PreferenceNetwork::from_raw(const RawNetwork& raw) {
  auto v = validate(raw);
  if (!v.empty()) throw InputError(join_violations(v));
  std::vector<LinearOrder> orders;
  for (const auto& l : raw.lists) orders.emplace_back(l);
  return PreferenceNetwork(raw.labels, std::move(orders));
}

PreferenceNetwork PreferenceNetwork::from_labels(const std::vector<std::string>& labels,
                                                 const std::vector<std::vector<std::string>>& lists) {
  std::unordered_map<std::string, MemberId> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) index.emplace(labels[i], i);
  RawNetwork raw{labels, {}};
  for (const auto& l : lists) {
    std::vector<MemberId> ids;
    for (const auto& x : l) {
      auto it = index.find(x);
      if (it == index.end()) throw InputError("unknown member '" + x + "'");
      ids.push_back(it->second);
    }
    raw.lists.push_back(std::move(ids));
  }
  return from_raw(raw);
}

std::optional<MemberId> PreferenceNetwork::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

MemberId PreferenceNetwork::id(const std::string& label) const {
  auto i = find(label);
  if (!i) throw InputError("unknown member '" + label + "'");
  return *i;
}

Profile PreferenceNetwork::profile(SubsetMask voters) const {
  Profile p;
  voters.for_each([&](MemberId s) { p.push_back(orders_.at(s)); });
  return p;
}

Profile PreferenceNetwork::profile(const std::vector<MemberId>& voters) const {
  Profile p;
  for (MemberId s : voters) p.push_back(orders_.at(s));
  return p;
}

PreferenceNetwork PreferenceNetwork::with_order(MemberId s, LinearOrder order) const {
  auto orders = orders_;
  orders.at(s) = std::move(order);
  return PreferenceNetwork(labels_, std::move(orders));
}

std::vector<Violation> validate(const PreferenceNetwork& network) {
  RawNetwork raw{network.labels(), {}};
  for (const auto& o : network.orders()) raw.lists.push_back(o.list());
  return validate(raw);
}

int OrderedPartition::block_of(MemberId i) const {
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    if (blocks[b].contains(i)) return b;
  throw InputError("member " + std::to_string(i) + " is not covered by the partition");
}

OrderedPartition OrderedPartition::from_order(const LinearOrder& order) {
  OrderedPartition p;
  for (MemberId u : order.list()) p.blocks.push_back(SubsetMask::single(u));
  return p;
}

SubsetMask lift(SubsetMask local, SubsetMask sub) { return SubsetMask(deposit_bits(local.bits(), sub.bits())); }

SubsetMask restrict_to(SubsetMask global, SubsetMask sub) {
  SubsetMask out;
  int i = 0;
  sub.for_each([&](MemberId v) {
    if (global.contains(v)) out.insert(i);
    ++i;
  });
  return out;
}

PreferenceNetwork project(const PreferenceNetwork& network, SubsetMask sub) {
  if (sub.empty()) throw InputError("projection onto an empty set");
  if (!sub.subset_of(network.ground())) throw InputError("projection set exceeds the ground set");
  const auto ids = sub.members();
  std::vector<int> local(network.size(), -1);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) local[ids[i]] = i;
  std::vector<std::string> labels;
  std::vector<LinearOrder> orders;
  for (MemberId s : ids) {
    labels.push_back(network.label(s));
    std::vector<MemberId> l;
    for (MemberId u : network.order(s).list())
      if (local[u] >= 0) l.push_back(local[u]);
    orders.emplace_back(std::move(l));
  }
  return PreferenceNetwork(std::move(labels), std::move(orders));
}

namespace {

void check_bijection(const std::vector<MemberId>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw InputError("relabeling has wrong length");
  std::vector<char> hit(n, 0);
  for (MemberId x : sigma) {
    if (x < 0 || x >= n || hit[x]) throw InputError("relabeling is not a bijection");
    hit[x] = 1;
  }
}

}  // namespace

PreferenceNetwork apply_isomorphism(const PreferenceNetwork& network, const std::vector<MemberId>& sigma) {
  const int n = network.size();
  check_bijection(sigma, n);
  std::vector<LinearOrder> orders(n);
  for (MemberId s = 0; s < n; ++s) {
    std::vector<MemberId> l;
    l.reserve(n);
    for (MemberId v : network.order(s).list()) l.push_back(sigma[v]);
    orders[sigma[s]] = LinearOrder(std::move(l));
  }
  return PreferenceNetwork(network.labels(), std::move(orders));
}

SubsetMask apply_permutation(SubsetMask m, const std::vector<MemberId>& sigma) {
  SubsetMask out;
  m.for_each([&](MemberId v) { out.insert(sigma.at(v)); });
  return out;
}

SubsetMask parse_subset(const PreferenceNetwork& network, const std::string& text) {
  SubsetMask m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, e - b + 1);
    const MemberId i = network.id(item);
    if (m.contains(i)) throw InputError("member '" + item + "' listed twice in subset");
    m.insert(i);
  }
  if (m.empty()) throw InputError("empty subset");
  return m;
}

std::string format_subset(const PreferenceNetwork& network, SubsetMask m) {
  std::string s;
  m.for_each([&](MemberId i) { s += (s.empty() ? "" : ",") + network.label(i); });
  return s;
}

}  // namespace prefnet
