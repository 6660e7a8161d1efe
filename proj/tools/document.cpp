#include "document.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace prefnet::cli {

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

ParsedDocument read_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("document: expected an object");
  for (const auto& [key, _] : doc.items())
    if (key != "members" && key != "preferences") throw InputError("document: unknown field " + quoted(key));
  if (!doc.contains("members") || !doc["members"].is_array()) throw InputError("members: expected an array of labels");
  if (!doc.contains("preferences") || !doc["preferences"].is_object())
    throw InputError("preferences: expected an object keyed by member label");

  ParsedDocument out;
  auto& raw = out.raw;
  std::unordered_map<std::string, MemberId> ids;
  for (std::size_t i = 0; i < doc["members"].size(); ++i) {
    const auto& m = doc["members"][i];
    if (!m.is_string()) throw InputError("members[" + std::to_string(i) + "]: expected a string label");
    const auto label = m.get<std::string>();
    if (label.empty()) throw InputError("members[" + std::to_string(i) + "]: empty label");
    ids.emplace(label, static_cast<MemberId>(raw.labels.size()));
    raw.labels.push_back(label);
  }
  const auto& prefs = doc["preferences"];
  for (const auto& [key, _] : prefs.items())
    if (!ids.count(key)) throw InputError("preferences." + key + ": not a member");
  for (const auto& who : raw.labels) {
    if (!prefs.contains(who)) {
      out.violations.push_back({who, "preferences." + who + ": missing ranked list"});
      raw.lists.emplace_back();
      continue;
    }
    const auto& list = prefs[who];
    const std::string field = "preferences." + who;
    if (!list.is_array()) throw InputError(field + ": expected an array of labels");
    std::vector<MemberId> ranked;
    for (std::size_t p = 0; p < list.size(); ++p) {
      const std::string at = field + "[" + std::to_string(p) + "]";
      if (!list[p].is_string()) throw InputError(at + ": expected a string label");
      const auto it = ids.find(list[p].get<std::string>());
      if (it == ids.end()) throw InputError(at + ": unknown member " + quoted(list[p].get<std::string>()));
      ranked.push_back(it->second);
    }
    raw.lists.push_back(std::move(ranked));
  }
  for (auto& v : validate(raw)) {
    // A missing list already has its own entry.
    bool dup = false;
    for (const auto& o : out.violations) dup = dup || (o.member == v.member && !v.member.empty());
    if (!dup) out.violations.push_back(std::move(v));
  }
  return out;
}

PreferenceNetwork parse_network(const std::string& text) {
  auto doc = read_document(text);
  if (!doc.violations.empty()) {
    std::string msg;
    for (const auto& v : doc.violations) msg += (msg.empty() ? "" : "; ") + v.message;
    throw InputError(msg);
  }
  return PreferenceNetwork::from_raw(doc.raw);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PreferenceNetwork load_network(const std::string& path) {
  try {
    return parse_network(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json network_to_json(const PreferenceNetwork& net) {
  Json doc;
  doc["members"] = net.labels();
  Json prefs = Json::object();
  for (MemberId s = 0; s < net.size(); ++s) {
    Json list = Json::array();
    for (MemberId u : net.order(s).list()) list.push_back(net.label(u));
    prefs[net.label(s)] = std::move(list);
  }
  doc["preferences"] = std::move(prefs);
  return doc;
}

std::string serialize_network(const PreferenceNetwork& net) { return network_to_json(net).dump(2) + "\n"; }

}  // namespace prefnet::cli
