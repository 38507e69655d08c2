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

#include "scp/cro_engine.h"

#include <cassert>
#include <chrono>
#include <string>

#include "scp/error.h"

namespace scp {

std::string_view ReactionName(Reaction reaction) {
  switch (reaction) {
    case Reaction::kOnWall:
      return "on_wall";
    case Reaction::kDecomposition:
      return "decomposition";
    case Reaction::kInter:
      return "inter";
    case Reaction::kSynthesis:
      return "synthesis";
  }
  return "?";
}

void Params::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, what);
  };
  if (pop_size < 1) fail("pop_size must be at least 1");
  if (!(init_ke >= 0.0)) fail("init_ke must be nonnegative");
  if (!(init_buffer >= 0.0)) fail("init_buffer must be nonnegative");
  if (!(collision_rate >= 0.0 && collision_rate <= 1.0)) {
    fail("collision_rate must lie in [0, 1]");
  }
  if (!(ke_loss_rate >= 0.0 && ke_loss_rate <= 1.0)) {
    fail("ke_loss_rate must lie in [0, 1]");
  }
  if (dec_threshold < 0) fail("dec_threshold must be nonnegative");
  if (!(syn_threshold >= 0.0)) fail("syn_threshold must be nonnegative");
  if (fe_limit < 0) fail("fe_limit must be nonnegative");
}

std::int64_t Params::ResolvedFeLimit(const Instance& instance) const {
  return fe_limit > 0 ? fe_limit
                      : std::int64_t{instance.num_cols()} * kEvaluationsPerColumn;
}

Initializer InitializerFor(Variant variant) {
  return variant == Variant::kHcroIr ? Initializer::kRandomPick
                                     : Initializer::kReverseCumulative;
}

Neighborhood NeighborhoodFor(Variant variant) {
  return variant == Variant::kHcroNr ? Neighborhood::kRemoveRepair
                                     : Neighborhood::kPerturbation;
}

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kHcro:
      return "hcro";
    case Variant::kHcroIr:
      return "hcro-ir";
    case Variant::kHcroNr:
      return "hcro-nr";
  }
  return "?";
}

namespace energy_rules {

OnWallOutcome OnWall(Cost pe, Energy ke, Cost new_pe, double ke_loss_rate,
                     Rng& rng) {
  const Energy available = Energy::FromCost(pe) + ke;
  const Energy needed = Energy::FromCost(new_pe);
  if (available < needed) return {};
  const Energy surplus = available - needed;
  const double q = rng.Uniform(ke_loss_rate, 1.0);
  const Energy kept = surplus.Portion(q);
  return {true, kept, surplus - kept};
}

DecompositionOutcome Decomposition(Cost pe, Energy ke, Cost pe1, Cost pe2,
                                   Energy buffer, Rng& rng) {
  const Energy available = Energy::FromCost(pe) + ke;
  const Energy needed = Energy::FromCost(pe1 + pe2);
  if (available >= needed) {
    const Energy leftover = available - needed;
    const Energy ke1 = leftover.Portion(rng.Uniform01());
    return {true, ke1, leftover - ke1, Energy()};
  }
  const double d1 = rng.Uniform01();
  const double d2 = rng.Uniform01();
  const Energy deficit = needed - available;
  if (static_cast<double>(buffer.ticks()) * d1 * d2 >=
      static_cast<double>(deficit.ticks())) {
    return {true, Energy(), Energy(), deficit};
  }
  return {};
}

InterOutcome Inter(Energy total, Cost new_pe1, Cost new_pe2, Rng& rng) {
  const Energy needed = Energy::FromCost(new_pe1 + new_pe2);
  if (total < needed) return {};
  const Energy leftover = total - needed;
  const Energy ke1 = leftover.Portion(rng.Uniform01());
  return {true, ke1, leftover - ke1};
}

SynthesisOutcome Synthesis(Energy total, Cost new_pe) {
  const Energy needed = Energy::FromCost(new_pe);
  if (total < needed) return {};
  return {true, total - needed};
}

}  // namespace energy_rules

CroEngine::CroEngine(const Instance& instance, const Params& params,
                     std::uint64_t seed, Variant variant)
    : instance_(&instance),
      params_(params),
      rng_(seed),
      ops_(instance, InitializerFor(variant), NeighborhoodFor(variant)) {
  params_.Validate();
  fe_limit_ = params_.ResolvedFeLimit(instance);
  buffer_ = Energy::FromValue(params_.init_buffer);
  const Energy init_ke = Energy::FromValue(params_.init_ke);
  population_.reserve(params_.pop_size);
  for (int k = 0; k < params_.pop_size; ++k) {
    Solution solution = ops_.Initialize(rng_);
    const Cost pe = Evaluate(solution);
    population_.push_back(NewMolecule(std::move(solution), pe, init_ke));
  }
  if (!params_.count_initial_evaluations) fe_count_ = 0;
}

Cost CroEngine::Evaluate(const Solution& solution) {
  const Cost cost = ops_.Evaluate(solution);
  ++fe_count_;
  if (best_solution_.assignment.empty() || cost < best_cost_) {
    best_cost_ = cost;
    best_solution_ = solution;
  }
  return cost;
}

Molecule CroEngine::NewMolecule(Solution solution, Cost pe, Energy ke) const {
  Molecule molecule;
  molecule.min_solution = solution;
  molecule.solution = std::move(solution);
  molecule.pe = pe;
  molecule.min_pe = pe;
  molecule.ke = ke;
  return molecule;
}

void CroEngine::Hit(Molecule& molecule) {
  ++molecule.num_hit;
  if (molecule.pe < molecule.min_pe) {
    molecule.min_pe = molecule.pe;
    molecule.min_solution = molecule.solution;
    molecule.min_hit = molecule.num_hit;
  }
}

void CroEngine::Notify(Reaction reaction, bool accepted) {
  reactions_.Record(reaction, accepted);
  if (observer_) observer_(*this, {reaction, accepted});
}

Energy CroEngine::TotalEnergy() const {
  Energy total = buffer_;
  for (const Molecule& m : population_) total += Energy::FromCost(m.pe) + m.ke;
  return total;
}

Reaction CroEngine::Step() {
  if (Done()) {
    throw Error(ErrorCode::kBudgetExhausted,
                "evaluation budget of " + std::to_string(fe_limit_) +
                    " already spent");
  }
  const double u = rng_.Uniform01();
  const std::size_t size = population_.size();
  if (size == 1 || u <= params_.collision_rate) {
    const auto index = static_cast<std::size_t>(rng_.UniformInt(size));
    const Molecule& m = population_[index];
    if (m.num_hit - m.min_hit > params_.dec_threshold) {
      Decomposition(index);
      return Reaction::kDecomposition;
    }
    OnWall(index);
    return Reaction::kOnWall;
  }
  const auto first = static_cast<std::size_t>(rng_.UniformInt(size));
  auto second = static_cast<std::size_t>(rng_.UniformInt(size - 1));
  if (second >= first) ++second;
  const Energy threshold = Energy::FromValue(params_.syn_threshold);
  if (population_[first].ke <= threshold &&
      population_[second].ke <= threshold) {
    Synthesis(first, second);
    return Reaction::kSynthesis;
  }
  Inter(first, second);
  return Reaction::kInter;
}

bool CroEngine::OnWall(std::size_t index) {
  Solution candidate = ops_.Neighbor(population_[index].solution, rng_);
  const Cost pe = Evaluate(candidate);
  Molecule& m = population_[index];
  const auto outcome =
      energy_rules::OnWall(m.pe, m.ke, pe, params_.ke_loss_rate, rng_);
  if (outcome.accepted) {
    m.solution = std::move(candidate);
    m.pe = pe;
    m.ke = outcome.ke;
    buffer_ += outcome.to_buffer;
  }
  Hit(m);
  Notify(Reaction::kOnWall, outcome.accepted);
  return outcome.accepted;
}

bool CroEngine::Decomposition(std::size_t index) {
  auto [s1, s2] = ops_.Decompose(population_[index].solution, rng_);
  const Cost pe1 = Evaluate(s1);
  const Cost pe2 = Evaluate(s2);
  Molecule& m = population_[index];
  const auto outcome =
      energy_rules::Decomposition(m.pe, m.ke, pe1, pe2, buffer_, rng_);
  if (!outcome.accepted) {
    Hit(m);
    Notify(Reaction::kDecomposition, false);
    return false;
  }
  buffer_ -= outcome.from_buffer;
  population_[index] = NewMolecule(std::move(s1), pe1, outcome.ke1);
  population_.push_back(NewMolecule(std::move(s2), pe2, outcome.ke2));
  Notify(Reaction::kDecomposition, true);
  return true;
}

bool CroEngine::Inter(std::size_t first, std::size_t second) {
  assert(first != second);
  Solution s1 = ops_.Neighbor(population_[first].solution, rng_);
  Solution s2 = ops_.Neighbor(population_[second].solution, rng_);
  const Cost pe1 = Evaluate(s1);
  const Cost pe2 = Evaluate(s2);
  Molecule& m1 = population_[first];
  Molecule& m2 = population_[second];
  const Energy total =
      Energy::FromCost(m1.pe) + m1.ke + Energy::FromCost(m2.pe) + m2.ke;
  const auto outcome = energy_rules::Inter(total, pe1, pe2, rng_);
  if (outcome.accepted) {
    m1.solution = std::move(s1);
    m1.pe = pe1;
    m1.ke = outcome.ke1;
    m2.solution = std::move(s2);
    m2.pe = pe2;
    m2.ke = outcome.ke2;
  }
  Hit(m1);
  Hit(m2);
  Notify(Reaction::kInter, outcome.accepted);
  return outcome.accepted;
}

bool CroEngine::Synthesis(std::size_t first, std::size_t second) {
  assert(first != second);
  const Molecule& m1 = population_[first];
  const Molecule& m2 = population_[second];
  Solution merged = ops_.Synthesize(m1.solution, m1.pe, m2.solution, m2.pe,
                                    rng_);
  const Cost pe = Evaluate(merged);
  const Energy total =
      Energy::FromCost(m1.pe) + m1.ke + Energy::FromCost(m2.pe) + m2.ke;
  const auto outcome = energy_rules::Synthesis(total, pe);
  if (!outcome.accepted) {
    Hit(population_[first]);
    Hit(population_[second]);
    Notify(Reaction::kSynthesis, false);
    return false;
  }
  population_[first] = NewMolecule(std::move(merged), pe, outcome.ke);
  if (second + 1 != population_.size()) {
    population_[second] = std::move(population_.back());
  }
  population_.pop_back();
  Notify(Reaction::kSynthesis, true);
  return true;
}

RunResult CroEngine::Finish() {
  RunResult result;
  result.best_solution = best_solution_;
  if (params_.remove_redundancy) {
    result.best_solution = RemoveRedundancy(*instance_, best_solution_, rng_);
  }
  result.best_cover = ToCover(result.best_solution);
  result.best_cost = EvaluateCost(*instance_, result.best_cover);
  result.fe_used = fe_count_;
  result.reactions = reactions_;
  return result;
}

RunResult RunCro(const Instance& instance, const Params& params,
                 std::uint64_t seed, Variant variant) {
  const auto start = std::chrono::steady_clock::now();
  CroEngine engine(instance, params, seed, variant);
  while (!engine.Done()) engine.Step();
  RunResult result = engine.Finish();
  result.wall_time_s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return result;
}

}  // namespace scp
