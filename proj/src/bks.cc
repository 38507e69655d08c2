// Copyright 2026 The scp-cro Authors.
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

#include "scp/bks.h"

#include <algorithm>
#include <cctype>

namespace scp {

const std::map<std::string, Cost>& BksTable() {
  static const auto* const kTable = new std::map<std::string, Cost>{
      // Weighted sets 4, 5, 6.
      {"4.1", 429}, {"4.2", 512}, {"4.3", 516}, {"4.4", 494}, {"4.5", 512},
      {"4.6", 560}, {"4.7", 430}, {"4.8", 492}, {"4.9", 641}, {"4.10", 514},
      {"5.1", 253}, {"5.2", 302}, {"5.3", 226}, {"5.4", 242}, {"5.5", 211},
      {"5.6", 213}, {"5.7", 293}, {"5.8", 288}, {"5.9", 279}, {"5.10", 265},
      {"6.1", 138}, {"6.2", 146}, {"6.3", 145}, {"6.4", 131}, {"6.5", 161},
      // Weighted sets A-D.
      {"A.1", 253}, {"A.2", 252}, {"A.3", 232}, {"A.4", 234}, {"A.5", 236},
      {"B.1", 69}, {"B.2", 76}, {"B.3", 80}, {"B.4", 79}, {"B.5", 72},
      {"C.1", 227}, {"C.2", 219}, {"C.3", 243}, {"C.4", 219}, {"C.5", 215},
      {"D.1", 60}, {"D.2", 66}, {"D.3", 72}, {"D.4", 62}, {"D.5", 61},
      // Weighted sets NRE-NRH.
      {"NRE.1", 29}, {"NRE.2", 30}, {"NRE.3", 27}, {"NRE.4", 28},
      {"NRE.5", 28},
      {"NRF.1", 14}, {"NRF.2", 15}, {"NRF.3", 14}, {"NRF.4", 14},
      {"NRF.5", 13},
      {"NRG.1", 176}, {"NRG.2", 154}, {"NRG.3", 166}, {"NRG.4", 168},
      {"NRG.5", 168},
      {"NRH.1", 63}, {"NRH.2", 63}, {"NRH.3", 59}, {"NRH.4", 58},
      {"NRH.5", 55},
      // Unicost.
      {"E.1", 5}, {"E.2", 5}, {"E.3", 5}, {"E.4", 5}, {"E.5", 5},
      {"CLR.10", 25}, {"CLR.11", 23}, {"CLR.12", 23}, {"CLR.13", 23},
      {"CYC.6", 60}, {"CYC.7", 144}, {"CYC.8", 344}, {"CYC.9", 780},
      {"CYC.10", 1792}, {"CYC.11", 4103},
  };
  return *kTable;
}

std::optional<Cost> LookupBks(std::string_view name) {
  const auto& table = BksTable();
  const auto it = table.find(CanonicalInstanceName(name));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string CanonicalInstanceName(std::string_view file_name) {
  std::string name(file_name);
  if (const auto slash = name.find_last_of("/\\"); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower.size() > 4 && lower.ends_with(".txt")) {
    lower.resize(lower.size() - 4);
  }

  // Already canonical, e.g. "4.1" or "cyc.6".
  if (const auto dot = lower.find('.'); dot != std::string::npos) {
    std::string upper = lower;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return BksTable().contains(upper) ? upper : name;
  }
  if (!lower.starts_with("scp") || lower.size() < 5) return name;
  std::string stem = lower.substr(3);

  std::string set;
  std::string number;
  if (std::isdigit(static_cast<unsigned char>(stem[0]))) {
    set = stem.substr(0, 1);
    number = stem.substr(1);
  } else {
    const auto split = stem.find_first_of("0123456789");
    if (split == std::string::npos) return name;
    set = stem.substr(0, split);
    number = stem.substr(split);
  }
  if (number.empty() ||
      !std::all_of(number.begin(), number.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    return name;
  }
  number.erase(0, std::min(number.find_first_not_of('0'), number.size() - 1));
  std::transform(set.begin(), set.end(), set.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return set + "." + number;
}

}  // namespace scp
