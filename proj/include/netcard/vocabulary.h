// Copyright 2026 The Netcard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETCARD_VOCABULARY_H_
#define NETCARD_VOCABULARY_H_

#include <algorithm>
#include <array>
#include <string_view>

namespace netcard {

// Row labels of the overall and meta-information panels, in card order.
inline constexpr std::array<std::string_view, 6> kOverallFields = {
    "Name",      "Kind",             "Nodes are",
    "Links are", "Link weights are", "Considerations",
};

inline constexpr std::array<std::string_view, 8> kMetainfoFields = {
    "Node metadata", "Link metadata",  "Date of creation",
    "Data generating process", "Ethics", "Funding",
    "Citation",      "Access",
};

inline constexpr std::string_view kLinkWeightsField = "Link weights are";

inline bool IsOverallField(std::string_view name) {
  return std::find(kOverallFields.begin(), kOverallFields.end(), name) !=
         kOverallFields.end();
}

inline bool IsMetainfoField(std::string_view name) {
  return std::find(kMetainfoFields.begin(), kMetainfoFields.end(), name) !=
         kMetainfoFields.end();
}

}  // namespace netcard

#endif  // NETCARD_VOCABULARY_H_
