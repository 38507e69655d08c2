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

#ifndef SCP_RUN_RESULT_H_
#define SCP_RUN_RESULT_H_

#include <array>
#include <cstdint>
#include <string_view>

#include "scp/instance.h"

namespace scp {

enum class Reaction {
  kOnWall = 0,
  kDecomposition = 1,
  kInter = 2,
  kSynthesis = 3,
};

std::string_view ReactionName(Reaction reaction);

struct ReactionCounts {
  std::array<std::int64_t, 4> attempted{};
  std::array<std::int64_t, 4> accepted{};

  void Record(Reaction reaction, bool ok) {
    ++attempted[static_cast<int>(reaction)];
    if (ok) ++accepted[static_cast<int>(reaction)];
  }
};

// Outcome of one optimization run.
struct RunResult {
  Cost best_cost = 0;
  Cover best_cover;
  Solution best_solution;
  std::int64_t fe_used = 0;
  ReactionCounts reactions;
  std::int64_t generations = 0;  // hGA only
  double wall_time_s = 0.0;
};

}  // namespace scp

#endif  // SCP_RUN_RESULT_H_
