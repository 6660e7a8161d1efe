#include "prefnet/reference.hpp"

#include <algorithm>

namespace prefnet::reference {

namespace {

std::vector<std::string> split_chars(const std::string& s) {
  std::vector<std::string> out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

// Unspecified rows: own label first, then the others in label order.
std::vector<std::string> self_first(const std::vector<std::string>& labels, const std::string& self) {
  std::vector<std::string> out{self};
  for (const auto& l : labels)
    if (l != self) out.push_back(l);
  return out;
}

PreferenceNetwork build(const std::string& label_chars, const std::vector<std::string>& rows) {
  const auto labels = split_chars(label_chars);
  std::vector<std::vector<std::string>> lists;
  for (std::size_t i = 0; i < labels.size(); ++i)
    lists.push_back(i < rows.size() && !rows[i].empty() ? split_chars(rows[i]) : self_first(labels, labels[i]));
  return PreferenceNetwork::from_labels(labels, lists);
}

}  // namespace

PreferenceNetwork b3ct_profile() {
  return build("123456", {"142356", "253416", "631425", "456123", "156423", "165423"});
}

PreferenceNetwork b3ct_promoted() {
  return build("123456", {"142356", "234516", "314625", "456123", "156423", "165423"});
}

PreferenceNetwork weak_gs_profile() { return build("123456", {"125463", "126354", "341256", "341256"}); }

PreferenceNetwork impossibility_profile(int which) {
  switch (which) {
    case 1: return build("abcde", {"adebc", "abcde", "abcde"});
    case 2: return build("abcde", {"abdce", "abdce", "caebd"});
    case 3: return build("abcde", {"abdce", "dcabe", "cbaed"});
    default: throw InputError("impossibility profile must be 1, 2 or 3");
  }
}

PreferenceNetwork unanimity_profile() { return build("abc", {"acb", "bac"}); }

std::vector<NamedNetwork> all_networks() {
  return {{"b3ct", b3ct_profile()},
          {"b3ct-promoted", b3ct_promoted()},
          {"weak-gs", weak_gs_profile()},
          {"impossibility-1", impossibility_profile(1)},
          {"impossibility-2", impossibility_profile(2)},
          {"impossibility-3", impossibility_profile(3)},
          {"unanimity", unanimity_profile()}};
}

}  // namespace prefnet::reference
