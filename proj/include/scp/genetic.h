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

#ifndef SCP_GENETIC_H_
#define SCP_GENETIC_H_

#include <cstdint>

#include "scp/instance.h"
#include "scp/run_result.h"

namespace scp {

struct GaParams {
  int pop_size = 10;
  double crossover_rate = 0.8;
  double mutation_rate = 0.2;
  // 0 means n * kEvaluationsPerColumn.
  std::int64_t fe_limit = 0;
  // Post-process the final best solution into a prime cover.
  bool remove_redundancy = false;

  void Validate() const;
  std::int64_t ResolvedFeLimit(const Instance& instance) const;
};

// Generational GA built from the same operators as the CRO engine.
//
// Each generation shuffles the population into pairs; a pair is crossed
// with probability crossover_rate by running perturbation search on both
// members (2 evaluations). Each individual then mutates with probability
// mutation_rate: it is decomposed and the cheaper of the two products is
// kept (2 evaluations). Parents and offspring are merged and truncated to
// pop_size by cost, parents first on ties. The run stops once fe_limit
// evaluations have been spent.
RunResult RunHga(const Instance& instance, const GaParams& params,
                 std::uint64_t seed);

}  // namespace scp

#endif  // SCP_GENETIC_H_
