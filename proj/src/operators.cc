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

#include "scp/operators.h"

#include <algorithm>
#include <cassert>
#include <map>

namespace scp {

Workspace::Workspace(const Instance& instance)
    : counter_(instance.num_cols(), 0), flag_(instance.num_cols(), 0) {
  columns_.reserve(instance.num_cols());
  rows_.reserve(instance.num_rows());
  weights_.reserve(instance.num_cols());
}

// In-place kernels shared by the free functions and OperatorSet. Each one
// leaves the workspace counters and flags zeroed on return.
struct WorkspaceAccess {
  // Fills the blank `rows` of `assignment` with the random-pick walk. Rows
  // are visited in a random order.
  static void RandomPickFill(const Instance& instance,
                             std::vector<Index>& assignment,
                             std::vector<Index>& rows, Rng& rng,
                             Workspace& ws) {
    rng.Shuffle(std::span<Index>(rows));
    auto& picked = ws.flag_;
    auto& picked_list = ws.columns_;
    picked_list.clear();
    for (Index row : rows) {
      const auto cols = instance.cols_covering(row);
      Index chosen = kBlank;
      for (Index col : cols) {
        if (picked[col]) {
          chosen = col;
          break;
        }
      }
      if (chosen == kBlank) {
        chosen = cols[rng.UniformInt(cols.size())];
        picked[chosen] = 1;
        picked_list.push_back(chosen);
      }
      assignment[row] = chosen;
    }
    for (Index col : picked_list) picked[col] = 0;
    picked_list.clear();
  }

  // Distinct columns of `assignment`, in order of first appearance, with
  // their occurrence counts left in ws.counter_.
  static void CountColumns(const std::vector<Index>& assignment,
                           Workspace& ws) {
    ws.columns_.clear();
    for (Index col : assignment) {
      if (ws.counter_[col]++ == 0) ws.columns_.push_back(col);
    }
  }

  static void ClearCounts(Workspace& ws) {
    for (Index col : ws.columns_) ws.counter_[col] = 0;
    ws.columns_.clear();
  }

  static void Perturb(const Instance& instance, std::vector<Index>& assignment,
                      Rng& rng, Workspace& ws, PerturbationTrace* trace) {
    // Remove phase: argmin of n_j / c_j, compared exactly by
    // cross-multiplication.
    CountColumns(assignment, ws);
    auto& tied = ws.rows_;
    tied.clear();
    Index best = kBlank;
    for (Index col : ws.columns_) {
      if (best == kBlank) {
        best = col;
        tied.push_back(col);
        continue;
      }
      const auto lhs = static_cast<std::int64_t>(ws.counter_[col]) *
                       instance.cost(best);
      const auto rhs = static_cast<std::int64_t>(ws.counter_[best]) *
                       instance.cost(col);
      if (lhs < rhs) {
        best = col;
        tied.clear();
        tied.push_back(col);
      } else if (lhs == rhs) {
        tied.push_back(col);
      }
    }
    ClearCounts(ws);
    const Index removed =
        tied.size() == 1 ? tied.front() : tied[rng.UniformInt(tied.size())];
    if (trace != nullptr) {
      trace->removed_column = removed;
      trace->repair_columns.clear();
    }

    auto& blanks = ws.rows_;
    blanks.clear();
    for (Index row = 0; row < static_cast<Index>(assignment.size()); ++row) {
      if (assignment[row] == removed) {
        assignment[row] = kBlank;
        blanks.push_back(row);
      }
    }

    // Repair phase. counter_ holds s_k; columns_ lists every k that ever had
    // s_k > 0 during this call.
    auto& coverable = ws.counter_;
    auto& candidates = ws.columns_;
    for (Index row : blanks) {
      for (Index col : instance.cols_covering(row)) {
        if (coverable[col]++ == 0) candidates.push_back(col);
      }
    }
    auto remaining = static_cast<Index>(blanks.size());
    auto& weights = ws.weights_;
    while (remaining > 0) {
      weights.clear();
      double total = 0.0;
      Index last_positive = kBlank;
      for (Index col : candidates) {
        double w = 0.0;
        if (coverable[col] > 0) {
          w = static_cast<double>(coverable[col]) /
              static_cast<double>(instance.cost(col));
          last_positive = col;
        }
        weights.push_back(w);
        total += w;
      }
      const double target = rng.Uniform01() * total;
      Index pick = last_positive;
      double acc = 0.0;
      for (std::size_t t = 0; t < candidates.size(); ++t) {
        if (weights[t] <= 0.0) continue;
        acc += weights[t];
        if (target < acc) {
          pick = candidates[t];
          break;
        }
      }
      assert(pick != kBlank);
      if (trace != nullptr) trace->repair_columns.push_back(pick);
      for (Index row : instance.rows_covered_by(pick)) {
        if (assignment[row] != kBlank) continue;
        assignment[row] = pick;
        --remaining;
        for (Index col : instance.cols_covering(row)) --coverable[col];
      }
    }
    candidates.clear();
  }

  static void RemoveRepair(const Instance& instance,
                           std::vector<Index>& assignment, Rng& rng,
                           Workspace& ws) {
    CountColumns(assignment, ws);
    const Index removed = ws.columns_[rng.UniformInt(ws.columns_.size())];
    ClearCounts(ws);

    // Mark the columns that stay in the cover; reuse counter_ as the mark so
    // flag_ stays free for RandomPickFill.
    for (Index col : assignment) {
      if (col != removed) ws.counter_[col] = 1;
    }
    std::vector<Index> uncovered;
    for (Index row = 0; row < static_cast<Index>(assignment.size()); ++row) {
      if (assignment[row] != removed) continue;
      assignment[row] = kBlank;
      for (Index col : instance.cols_covering(row)) {
        if (ws.counter_[col]) {
          assignment[row] = col;
          break;
        }
      }
      if (assignment[row] == kBlank) uncovered.push_back(row);
    }
    for (Index col : assignment) {
      if (col != kBlank) ws.counter_[col] = 0;
    }
    RandomPickFill(instance, assignment, uncovered, rng, ws);
  }
};

namespace {

Ratio ToRatio(std::int64_t num, std::int64_t den = 1) {
  return Ratio(num) / Ratio(den);
}

}  // namespace

std::vector<InitWeight> ReverseCumulativeTable(const Instance& instance,
                                               Index row) {
  const auto cols = instance.cols_covering(row);
  Cost lo = instance.cost(cols.front());
  Cost hi = lo;
  for (Index col : cols) {
    lo = std::min(lo, instance.cost(col));
    hi = std::max(hi, instance.cost(col));
  }
  std::vector<InitWeight> table;
  Ratio total = 0;
  for (Index col : cols) {
    const Ratio v = ToRatio(hi + lo - instance.cost(col));
    table.push_back({col, v, 0});
    total += v;
  }
  for (auto& entry : table) entry.probability = entry.value / total;
  return table;
}

std::vector<CostEfficiency> CostEfficiencyTable(const Instance& instance,
                                                const Solution& solution) {
  std::map<Index, Index> occurrences;
  for (Index col : solution.assignment) ++occurrences[col];
  std::vector<CostEfficiency> table;
  for (const auto& [col, count] : occurrences) {
    table.push_back({col, count, ToRatio(count, instance.cost(col))});
  }
  return table;
}

std::vector<RepairOption> RepairTable(const Instance& instance,
                                      const PartialSolution& partial) {
  std::map<Index, Index> coverable;
  for (Index row = 0; row < static_cast<Index>(partial.assignment.size());
       ++row) {
    if (partial.assignment[row] != kBlank) continue;
    for (Index col : instance.cols_covering(row)) ++coverable[col];
  }
  std::vector<RepairOption> table;
  Ratio total = 0;
  for (const auto& [col, count] : coverable) {
    const Ratio e = ToRatio(count, instance.cost(col));
    table.push_back({col, count, e, 0});
    total += e;
  }
  for (auto& entry : table) entry.probability = entry.efficiency / total;
  return table;
}

Solution ReverseCumulativeInit(const Instance& instance, Rng& rng) {
  Solution solution;
  solution.assignment.resize(instance.num_rows());
  for (Index row = 0; row < instance.num_rows(); ++row) {
    const auto cols = instance.cols_covering(row);
    Cost lo = instance.cost(cols.front());
    Cost hi = lo;
    for (Index col : cols) {
      lo = std::min(lo, instance.cost(col));
      hi = std::max(hi, instance.cost(col));
    }
    // Integer weights make the draw exact.
    std::uint64_t total = 0;
    for (Index col : cols) total += hi + lo - instance.cost(col);
    std::uint64_t target = rng.UniformInt(total);
    Index chosen = cols.back();
    for (Index col : cols) {
      const auto v = static_cast<std::uint64_t>(hi + lo - instance.cost(col));
      if (target < v) {
        chosen = col;
        break;
      }
      target -= v;
    }
    solution.assignment[row] = chosen;
  }
  return solution;
}

Solution RandomPickInit(const Instance& instance, Rng& rng) {
  Workspace ws(instance);
  Solution solution;
  solution.assignment.assign(instance.num_rows(), kBlank);
  std::vector<Index> rows(instance.num_rows());
  for (Index row = 0; row < instance.num_rows(); ++row) rows[row] = row;
  WorkspaceAccess::RandomPickFill(instance, solution.assignment, rows, rng, ws);
  return solution;
}

Solution PerturbationSearch(const Instance& instance, const Solution& solution,
                            Rng& rng, PerturbationTrace* trace) {
  Workspace ws(instance);
  Solution result = solution;
  WorkspaceAccess::Perturb(instance, result.assignment, rng, ws, trace);
  return result;
}

Solution RemoveRepairSearch(const Instance& instance, const Solution& solution,
                            Rng& rng) {
  Workspace ws(instance);
  Solution result = solution;
  WorkspaceAccess::RemoveRepair(instance, result.assignment, rng, ws);
  return result;
}

std::pair<Solution, Solution> Decompose(const Instance& instance,
                                        const Solution& solution, Rng& rng,
                                        Neighborhood neighborhood) {
  OperatorSet ops(instance, Initializer::kReverseCumulative, neighborhood);
  return ops.Decompose(solution, rng);
}

Solution Synthesize(const Instance& instance, const Solution& s1,
                    const Solution& s2, Rng& rng) {
  return Synthesize(s1, EvaluateCost(instance, s1), s2,
                    EvaluateCost(instance, s2), rng);
}

Solution Synthesize(const Solution& s1, Cost c1, const Solution& s2, Cost c2,
                    Rng& rng) {
  assert(s1.assignment.size() == s2.assignment.size());
  assert(c1 > 0 && c2 > 0);
  const auto total = static_cast<std::uint64_t>(c1 + c2);
  const auto keep_first = static_cast<std::uint64_t>(c2);
  Solution result;
  result.assignment.resize(s1.assignment.size());
  for (std::size_t i = 0; i < s1.assignment.size(); ++i) {
    result.assignment[i] = rng.UniformInt(total) < keep_first
                               ? s1.assignment[i]
                               : s2.assignment[i];
  }
  return result;
}

Cover GreedySolve(const Instance& instance) {
  std::vector<Index> uncovered_count(instance.num_cols());
  for (Index col = 0; col < instance.num_cols(); ++col) {
    uncovered_count[col] =
        static_cast<Index>(instance.rows_covered_by(col).size());
  }
  std::vector<char> covered(instance.num_rows(), 0);
  Index left = instance.num_rows();
  Cover cover;
  while (left > 0) {
    Index best = kBlank;
    for (Index col = 0; col < instance.num_cols(); ++col) {
      if (uncovered_count[col] == 0) continue;
      // c_col / u_col < c_best / u_best
      if (best == kBlank ||
          instance.cost(col) * uncovered_count[best] <
              instance.cost(best) * uncovered_count[col]) {
        best = col;
      }
    }
    cover.columns.push_back(best);
    for (Index row : instance.rows_covered_by(best)) {
      if (covered[row]) continue;
      covered[row] = 1;
      --left;
      for (Index col : instance.cols_covering(row)) --uncovered_count[col];
    }
  }
  std::sort(cover.columns.begin(), cover.columns.end());
  return cover;
}

OperatorSet::OperatorSet(const Instance& instance, Initializer initializer,
                         Neighborhood neighborhood)
    : instance_(&instance),
      initializer_(initializer),
      neighborhood_(neighborhood),
      workspace_(instance),
      evaluator_(instance) {}

Solution OperatorSet::Initialize(Rng& rng) {
  if (initializer_ == Initializer::kReverseCumulative) {
    return ReverseCumulativeInit(*instance_, rng);
  }
  Solution solution;
  solution.assignment.assign(instance_->num_rows(), kBlank);
  std::vector<Index> rows(instance_->num_rows());
  for (Index row = 0; row < instance_->num_rows(); ++row) rows[row] = row;
  WorkspaceAccess::RandomPickFill(*instance_, solution.assignment, rows, rng,
                                  workspace_);
  return solution;
}

void OperatorSet::NeighborInPlace(std::vector<Index>& assignment, Rng& rng) {
  if (neighborhood_ == Neighborhood::kPerturbation) {
    WorkspaceAccess::Perturb(*instance_, assignment, rng, workspace_, nullptr);
  } else {
    WorkspaceAccess::RemoveRepair(*instance_, assignment, rng, workspace_);
  }
}

Solution OperatorSet::Neighbor(const Solution& solution, Rng& rng) {
  Solution result = solution;
  NeighborInPlace(result.assignment, rng);
  return result;
}

std::pair<Solution, Solution> OperatorSet::Decompose(const Solution& solution,
                                                     Rng& rng) {
  std::pair<Solution, Solution> out{solution, solution};
  for (int t = 0; t < kDecomposeSearches; ++t) {
    NeighborInPlace(out.first.assignment, rng);
  }
  for (int t = 0; t < kDecomposeSearches; ++t) {
    NeighborInPlace(out.second.assignment, rng);
  }
  return out;
}

Solution OperatorSet::Synthesize(const Solution& s1, Cost c1,
                                 const Solution& s2, Cost c2, Rng& rng) {
  return scp::Synthesize(s1, c1, s2, c2, rng);
}

}  // namespace scp
