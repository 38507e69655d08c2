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

// Chemical reaction optimization driver.
//
// A population of molecules, each holding a solution (potential energy =
// cost) and kinetic energy, evolves through four reactions: on-wall
// collision, decomposition, inter-molecular collision and synthesis. A
// central buffer absorbs and supplies energy so that
//   sum(pe + ke) + buffer
// stays constant across every reaction. Energies are fixed-point integers
// (see Energy), so the invariant holds exactly.

#ifndef SCP_CRO_ENGINE_H_
#define SCP_CRO_ENGINE_H_

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "scp/energy.h"
#include "scp/instance.h"
#include "scp/operators.h"
#include "scp/rng.h"
#include "scp/run_result.h"

namespace scp {

inline constexpr std::int64_t kEvaluationsPerColumn = 1000;

struct Params {
  int pop_size = 10;
  double init_ke = 1000.0;
  double init_buffer = 10000.0;
  // Probability of a unimolecular event.
  double collision_rate = 0.1;
  // Lower bound of the kinetic energy fraction kept after an on-wall hit.
  double ke_loss_rate = 0.1;
  // Decompose once num_hit - min_hit exceeds this.
  std::int64_t dec_threshold = 10000;
  // Synthesize when both molecules have ke <= this.
  double syn_threshold = 1000.0;
  // Objective evaluations allowed; 0 means n * kEvaluationsPerColumn.
  std::int64_t fe_limit = 0;
  bool count_initial_evaluations = true;
  // Post-process the final best solution into a prime cover.
  bool remove_redundancy = false;

  // Throws Error(kInvalidArgument) on out-of-range values.
  void Validate() const;
  std::int64_t ResolvedFeLimit(const Instance& instance) const;
};

enum class Variant {
  kHcro,    // cost-biased init + perturbation search
  kHcroIr,  // random-pick init + perturbation search
  kHcroNr,  // cost-biased init + remove-repair search
};

Initializer InitializerFor(Variant variant);
Neighborhood NeighborhoodFor(Variant variant);
std::string_view VariantName(Variant variant);

struct Molecule {
  Solution solution;
  Cost pe = 0;
  Energy ke;
  std::int64_t num_hit = 0;
  std::int64_t min_hit = 0;
  Cost min_pe = 0;
  Solution min_solution;
};

// Energy bookkeeping of each reaction, separated from the structure
// operators so the rules can be exercised with chosen numbers.
namespace energy_rules {

struct OnWallOutcome {
  bool accepted = false;
  Energy ke;
  Energy to_buffer;
};
// Accept iff pe + ke >= new_pe. The surplus is split with q drawn uniformly
// in [ke_loss_rate, 1]: floor(q * surplus) stays as kinetic energy, the rest
// goes to the buffer.
OnWallOutcome OnWall(Cost pe, Energy ke, Cost new_pe, double ke_loss_rate,
                     Rng& rng);

struct DecompositionOutcome {
  bool accepted = false;
  Energy ke1;
  Energy ke2;
  Energy from_buffer;
};
// Accept if pe + ke covers pe1 + pe2, splitting the leftover by a uniform
// fraction. Otherwise draw d1, d2 in [0, 1) and accept if
// pe + ke + d1 * d2 * buffer >= pe1 + pe2, withdrawing exactly the deficit
// from the buffer (both products then start with zero kinetic energy).
DecompositionOutcome Decomposition(Cost pe, Energy ke, Cost pe1, Cost pe2,
                                   Energy buffer, Rng& rng);

struct InterOutcome {
  bool accepted = false;
  Energy ke1;
  Energy ke2;
};
// `total` is pe1 + ke1 + pe2 + ke2 before the collision.
InterOutcome Inter(Energy total, Cost new_pe1, Cost new_pe2, Rng& rng);

struct SynthesisOutcome {
  bool accepted = false;
  Energy ke;
};
SynthesisOutcome Synthesis(Energy total, Cost new_pe);

}  // namespace energy_rules

struct ReactionEvent {
  Reaction reaction;
  bool accepted;
};

class CroEngine {
 public:
  using Observer = std::function<void(const CroEngine&, const ReactionEvent&)>;

  // Builds the initial population. Throws Error(kInvalidArgument) on bad
  // params.
  CroEngine(const Instance& instance, const Params& params, std::uint64_t seed,
            Variant variant = Variant::kHcro);
  // The engine keeps a reference to the instance.
  CroEngine(Instance&&, const Params&, std::uint64_t,
            Variant = Variant::kHcro) = delete;

  bool Done() const { return fe_count_ >= fe_limit_; }

  // Picks and performs one reaction. Throws Error(kBudgetExhausted) when
  // Done().
  Reaction Step();

  // Individual reactions; each returns whether it was accepted.
  bool OnWall(std::size_t index);
  bool Decomposition(std::size_t index);
  bool Inter(std::size_t first, std::size_t second);
  bool Synthesis(std::size_t first, std::size_t second);

  // Called after every reaction.
  void set_observer(Observer observer) { observer_ = std::move(observer); }

  const Instance& instance() const { return *instance_; }
  const Params& params() const { return params_; }
  const std::vector<Molecule>& population() const { return population_; }
  Energy buffer() const { return buffer_; }
  Energy TotalEnergy() const;
  std::int64_t fe_count() const { return fe_count_; }
  std::int64_t fe_limit() const { return fe_limit_; }
  Cost best_cost() const { return best_cost_; }
  const Solution& best_solution() const { return best_solution_; }
  const ReactionCounts& reactions() const { return reactions_; }

  // Result for the run so far; applies redundancy removal if configured.
  RunResult Finish();

 private:
  Cost Evaluate(const Solution& solution);
  Molecule NewMolecule(Solution solution, Cost pe, Energy ke) const;
  static void Hit(Molecule& molecule);
  void Notify(Reaction reaction, bool accepted);

  const Instance* instance_;
  Params params_;
  Rng rng_;
  OperatorSet ops_;
  std::vector<Molecule> population_;
  Energy buffer_;
  std::int64_t fe_count_ = 0;
  std::int64_t fe_limit_ = 0;
  Cost best_cost_ = 0;
  Solution best_solution_;
  ReactionCounts reactions_;
  Observer observer_;
};

// Initializes an engine and steps it until the evaluation budget is spent.
RunResult RunCro(const Instance& instance, const Params& params,
                 std::uint64_t seed, Variant variant = Variant::kHcro);

}  // namespace scp

#endif  // SCP_CRO_ENGINE_H_
