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

#include <algorithm>
#include <limits>

#include "doctest.h"
#include "scp/error.h"
#include "scp/genetic.h"
#include "scp/instance.h"
#include "scp/operators.h"
#include "scp/orlib_io.h"
#include "scp/rng.h"
#include "test_oracles.h"

namespace scp {
namespace {

Instance Medium(std::uint64_t seed) {
  return GenerateRandom({30, 60, 0.1, 1, 100, seed});
}

TEST_CASE("zero rates return the best initial individual") {
  const Instance inst = Medium(1);
  GaParams p;
  p.crossover_rate = 0.0;
  p.mutation_rate = 0.0;
  const RunResult r = RunHga(inst, p, 5);
  CHECK(r.fe_used == p.pop_size);
  CHECK(r.generations == 0);

  // Same stream as the GA's initialization.
  Rng rng(5);
  OperatorSet ops(inst, Initializer::kReverseCumulative,
                  Neighborhood::kPerturbation);
  Cost best = std::numeric_limits<Cost>::max();
  for (int k = 0; k < p.pop_size; ++k) {
    best = std::min(best, EvaluateCost(inst, ops.Initialize(rng)));
  }
  CHECK(r.best_cost == best);
}

TEST_CASE("a lone individual with crossover only does not loop") {
  GaParams p;
  p.pop_size = 1;
  p.mutation_rate = 0.0;
  const RunResult r = RunHga(Medium(2), p, 1);
  CHECK(r.fe_used == 1);
}

TEST_CASE("runs are deterministic, feasible and within budget") {
  const Instance inst = Medium(3);
  GaParams p;
  p.fe_limit = 8000;
  const RunResult a = RunHga(inst, p, 9);
  const RunResult b = RunHga(inst, p, 9);
  CHECK(a.best_cost == b.best_cost);
  CHECK(a.best_cover == b.best_cover);
  CHECK(a.generations == b.generations);
  CHECK(a.fe_used >= p.fe_limit);
  // One generation can overshoot by at most one mutation pair.
  CHECK(a.fe_used <= p.fe_limit + 1);
  CHECK(IsFeasibleCover(inst, a.best_cover.columns));
  CHECK(a.best_cost == EvaluateCost(inst, a.best_cover));
  CHECK(a.best_cost == EvaluateCost(inst, a.best_solution));
}

TEST_CASE("redundancy removal yields a prime cover no worse than without") {
  const Instance inst = Medium(4);
  GaParams p;
  p.fe_limit = 4000;
  const RunResult plain = RunHga(inst, p, 3);
  p.remove_redundancy = true;
  const RunResult pruned = RunHga(inst, p, 3);
  CHECK(pruned.best_cost <= plain.best_cost);
  CHECK(IsPrimeCover(inst, pruned.best_cover.columns));
}

TEST_CASE("results never beat the exhaustive optimum") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto plain = oracle::RandomPlain(8, 12, 0.3, seed);
    const Instance inst = oracle::FromPlain(plain);
    GaParams p;
    p.fe_limit = 3000;
    CHECK(RunHga(inst, p, seed + 1).best_cost >=
          oracle::ExhaustiveOptimum(plain));
  }
}

TEST_CASE("parameter validation") {
  const Instance inst = Medium(5);
  auto code = [&](GaParams p) {
    try {
      RunHga(inst, p, 1);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIoError;
  };
  GaParams p;
  p.pop_size = 0;
  CHECK(code(p) == ErrorCode::kInvalidArgument);
  p = GaParams();
  p.crossover_rate = 2.0;
  CHECK(code(p) == ErrorCode::kInvalidArgument);
  p = GaParams();
  p.mutation_rate = -0.5;
  CHECK(code(p) == ErrorCode::kInvalidArgument);
  p = GaParams();
  p.fe_limit = -3;
  CHECK(code(p) == ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace scp
