#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "prefnet/core.hpp"

namespace prefnet::cli {

using Json = nlohmann::ordered_json;

// {"members": [labels...], "preferences": {label: [labels in rank order]}}
// Structural problems throw InputError naming the offending field. Ranking
// problems (duplicates, missing members) come back as violations.
struct ParsedDocument {
  RawNetwork raw;
  std::vector<Violation> violations;
};
ParsedDocument read_document(const std::string& text);

// Throws InputError listing every violation.
PreferenceNetwork parse_network(const std::string& text);
PreferenceNetwork load_network(const std::string& path);

Json network_to_json(const PreferenceNetwork& net);
std::string serialize_network(const PreferenceNetwork& net);

std::string read_file(const std::string& path);

}  // namespace prefnet::cli
