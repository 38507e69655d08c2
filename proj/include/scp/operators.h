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

// Solution construction and neighborhood operators.
//
// Every operator maps valid Solutions to valid Solutions: each position only
// ever receives a column that covers its row, so feasibility holds by
// construction.
//
// Cost-biased initializer: for row i with covering set X_i, column j gets
// weight v_j = c_max + c_min - c_j (c_max, c_min taken over X_i), and is
// drawn with probability v_j / sum(v).
//
// Perturbation search: the used column with the lowest n_j / c_j (n_j =
// positions assigned to j) is removed, leaving blanks. While blanks remain,
// a column k is drawn with probability proportional to s_k / c_k (s_k =
// blanks whose row k covers) and fills every blank it covers.

#ifndef SCP_OPERATORS_H_
#define SCP_OPERATORS_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "scp/instance.h"
#include "scp/rng.h"

namespace scp {

using Ratio = boost::multiprecision::cpp_rational;

inline constexpr Index kBlank = -1;
inline constexpr int kDecomposeSearches = 10;

// Like Solution, but entries may be kBlank.
struct PartialSolution {
  std::vector<Index> assignment;
};

enum class Initializer {
  kReverseCumulative,
  kRandomPick,
};

enum class Neighborhood {
  kPerturbation,
  kRemoveRepair,
};

// Exact per-row selection table of the cost-biased initializer, in
// cols_covering(row) order.
struct InitWeight {
  Index column;
  Ratio value;
  Ratio probability;
};
std::vector<InitWeight> ReverseCumulativeTable(const Instance& instance,
                                               Index row);

// n_j / c_j for every used column, ascending by column.
struct CostEfficiency {
  Index column;
  Index occurrences;
  Ratio efficiency;
};
std::vector<CostEfficiency> CostEfficiencyTable(const Instance& instance,
                                                const Solution& solution);

// s_k / c_k and the normalized selection probability for every column with
// s_k > 0, ascending by column.
struct RepairOption {
  Index column;
  Index coverable_blanks;
  Ratio efficiency;
  Ratio probability;
};
std::vector<RepairOption> RepairTable(const Instance& instance,
                                      const PartialSolution& partial);

// Scratch buffers sized for one instance. Reusing one across calls keeps the
// operators allocation-free on the hot path. Not thread-safe.
class Workspace {
 public:
  explicit Workspace(const Instance& instance);

 private:
  friend struct WorkspaceAccess;

  std::vector<Index> counter_;  // per column, zero between calls
  std::vector<char> flag_;      // per column, zero between calls
  std::vector<Index> columns_;
  std::vector<Index> rows_;
  std::vector<double> weights_;
};

Solution ReverseCumulativeInit(const Instance& instance, Rng& rng);

// Walks a random permutation of the rows. A row not yet covered by a column
// picked earlier in the walk gets a uniformly random covering column; a row
// that is already covered gets the lowest-index picked column covering it.
Solution RandomPickInit(const Instance& instance, Rng& rng);

struct PerturbationTrace {
  Index removed_column = kBlank;
  std::vector<Index> repair_columns;
};

Solution PerturbationSearch(const Instance& instance, const Solution& solution,
                            Rng& rng, PerturbationTrace* trace = nullptr);

// Removes a uniformly random used column. Freed rows still covered by a
// remaining column move to the lowest-index such column; the rest are
// rebuilt by the random-pick walk.
Solution RemoveRepairSearch(const Instance& instance, const Solution& solution,
                            Rng& rng);

// Two copies of `solution`, each pushed through kDecomposeSearches
// applications of the neighborhood operator (first copy, then second, from
// the same stream).
std::pair<Solution, Solution> Decompose(
    const Instance& instance, const Solution& solution, Rng& rng,
    Neighborhood neighborhood = Neighborhood::kPerturbation);

// Position-wise mix: each position comes from s1 with probability
// c2 / (c1 + c2), otherwise from s2.
Solution Synthesize(const Instance& instance, const Solution& s1,
                    const Solution& s2, Rng& rng);
Solution Synthesize(const Solution& s1, Cost c1, const Solution& s2, Cost c2,
                    Rng& rng);

// Chvatal's greedy: repeatedly take the column minimizing c_j / (uncovered
// rows it covers), lowest index on ties. The result is not made prime.
Cover GreedySolve(const Instance& instance);

// Binds one initializer and one neighborhood to an instance, with reusable
// scratch space. This is what the search drivers use.
class OperatorSet {
 public:
  OperatorSet(const Instance& instance, Initializer initializer,
              Neighborhood neighborhood);

  const Instance& instance() const { return *instance_; }
  Initializer initializer() const { return initializer_; }
  Neighborhood neighborhood() const { return neighborhood_; }

  Solution Initialize(Rng& rng);
  Solution Neighbor(const Solution& solution, Rng& rng);
  std::pair<Solution, Solution> Decompose(const Solution& solution, Rng& rng);
  Solution Synthesize(const Solution& s1, Cost c1, const Solution& s2,
                      Cost c2, Rng& rng);
  Cost Evaluate(const Solution& solution) { return evaluator_(solution); }

 private:
  void NeighborInPlace(std::vector<Index>& assignment, Rng& rng);

  const Instance* instance_;
  Initializer initializer_;
  Neighborhood neighborhood_;
  Workspace workspace_;
  CostEvaluator evaluator_;
};

}  // namespace scp

#endif  // SCP_OPERATORS_H_
