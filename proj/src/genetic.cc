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

#include "scp/genetic.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <vector>

#include "scp/cro_engine.h"
#include "scp/error.h"
#include "scp/operators.h"
#include "scp/rng.h"

namespace scp {

void GaParams::Validate() const {
  if (pop_size < 1) {
    throw Error(ErrorCode::kInvalidArgument, "pop_size must be at least 1");
  }
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0) ||
      !(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "GA rates must lie in [0, 1]");
  }
  if (fe_limit < 0) {
    throw Error(ErrorCode::kInvalidArgument, "fe_limit must be nonnegative");
  }
}

std::int64_t GaParams::ResolvedFeLimit(const Instance& instance) const {
  return fe_limit > 0 ? fe_limit
                      : std::int64_t{instance.num_cols()} * kEvaluationsPerColumn;
}

namespace {

struct Individual {
  Solution solution;
  Cost cost = 0;
};

class GaRun {
 public:
  GaRun(const Instance& instance, const GaParams& params, std::uint64_t seed)
      : params_(params),
        rng_(seed),
        ops_(instance, Initializer::kReverseCumulative,
             Neighborhood::kPerturbation),
        fe_limit_(params.ResolvedFeLimit(instance)) {}

  RunResult Run() {
    std::vector<Individual> population;
    for (int k = 0; k < params_.pop_size; ++k) {
      Solution s = ops_.Initialize(rng_);
      const Cost c = Evaluate(s);
      population.push_back({std::move(s), c});
    }
    // Crossover needs a pair of parents.
    const bool static_population =
        params_.mutation_rate == 0.0 &&
        (params_.crossover_rate == 0.0 || params_.pop_size < 2);
    std::int64_t generations = 0;
    while (!static_population && fe_count_ < fe_limit_) {
      population = NextGeneration(std::move(population));
      ++generations;
    }
    RunResult result;
    result.best_solution = best_.solution;
    if (params_.remove_redundancy) {
      result.best_solution = RemoveRedundancy(ops_.instance(), best_.solution,
                                              rng_);
    }
    result.best_cover = ToCover(result.best_solution);
    result.best_cost = ops_.Evaluate(result.best_solution);
    result.fe_used = fe_count_;
    result.generations = generations;
    return result;
  }

 private:
  Cost Evaluate(const Solution& s) {
    const Cost c = ops_.Evaluate(s);
    ++fe_count_;
    if (best_.solution.assignment.empty() || c < best_.cost) {
      best_ = {s, c};
    }
    return c;
  }

  bool HasBudget() const { return fe_count_ < fe_limit_; }

  std::vector<Individual> NextGeneration(std::vector<Individual> parents) {
    std::vector<Individual> offspring;
    std::vector<std::size_t> order(parents.size());
    std::iota(order.begin(), order.end(), 0);
    rng_.Shuffle(std::span<std::size_t>(order));
    for (std::size_t k = 0; k + 1 < order.size(); k += 2) {
      if (!rng_.Bernoulli(params_.crossover_rate) || !HasBudget()) continue;
      for (std::size_t idx : {order[k], order[k + 1]}) {
        Solution child = ops_.Neighbor(parents[idx].solution, rng_);
        const Cost c = Evaluate(child);
        offspring.push_back({std::move(child), c});
      }
    }
    for (const Individual& parent : parents) {
      if (!rng_.Bernoulli(params_.mutation_rate) || !HasBudget()) continue;
      auto [a, b] = ops_.Decompose(parent.solution, rng_);
      const Cost ca = Evaluate(a);
      const Cost cb = Evaluate(b);
      if (cb < ca) {
        offspring.push_back({std::move(b), cb});
      } else {
        offspring.push_back({std::move(a), ca});
      }
    }
    parents.insert(parents.end(), std::make_move_iterator(offspring.begin()),
                   std::make_move_iterator(offspring.end()));
    std::stable_sort(
        parents.begin(), parents.end(),
        [](const Individual& x, const Individual& y) { return x.cost < y.cost; });
    parents.resize(params_.pop_size);
    return parents;
  }

  GaParams params_;
  Rng rng_;
  OperatorSet ops_;
  std::int64_t fe_limit_;
  std::int64_t fe_count_ = 0;
  Individual best_;
};

}  // namespace

RunResult RunHga(const Instance& instance, const GaParams& params,
                 std::uint64_t seed) {
  params.Validate();
  const auto start = std::chrono::steady_clock::now();
  RunResult result = GaRun(instance, params, seed).Run();
  result.wall_time_s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return result;
}

}  // namespace scp
