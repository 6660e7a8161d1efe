#pragma once

#include <string>
#include <vector>

#include "prefnet/core.hpp"

// Transcriptions of the worked examples used as test anchors. Orders of
// members the examples leave unspecified are fixed here (own label first,
// then the remaining labels in listed order).
namespace prefnet::reference {

// Six members labelled 1..6; S = {1,2,3} is a B3CT community.
PreferenceNetwork b3ct_profile();
// Same network after members 2 and 3 promote 3 (and 1); S = {1,2,3} is no longer a B3CT community.
PreferenceNetwork b3ct_promoted();
// Labels 1..6; S = {1,2,3,4} is a B3CT and Borda community but not weakly group stable.
PreferenceNetwork weak_gs_profile();
// Labels a..e; profile 1, 2 or 3 of the weighted impossibility argument.
PreferenceNetwork impossibility_profile(int which);
// Labels a,b,c; harmonious aggregation of {a,b} violates unanimity.
PreferenceNetwork unanimity_profile();

struct NamedNetwork {
  std::string name;
  PreferenceNetwork network;
};
std::vector<NamedNetwork> all_networks();

}  // namespace prefnet::reference
