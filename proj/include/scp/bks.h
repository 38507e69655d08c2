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

#ifndef SCP_BKS_H_
#define SCP_BKS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "scp/instance.h"

namespace scp {

// Best known solution values of the 65 weighted and 15 unicost OR-Library
// instances, keyed by canonical name ("4.1", "NRE.3", "CYC.7", ...).
const std::map<std::string, Cost>& BksTable();

std::optional<Cost> LookupBks(std::string_view name);

// Maps an OR-Library file name or stem to the canonical instance name:
// "scp41.txt" -> "4.1", "scpnre1" -> "NRE.1", "scpcyc06" -> "CYC.6".
// Names that are already canonical are returned upper-cased. Anything else
// is returned unchanged.
std::string CanonicalInstanceName(std::string_view file_name);

}  // namespace scp

#endif  // SCP_BKS_H_
