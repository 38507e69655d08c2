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

#include "scp/instance.h"

#include <algorithm>
#include <limits>
#include <string>

#include "scp/error.h"
#include "scp/rng.h"

namespace scp {
namespace {

// Flattens per-key lists into (start offsets, concatenated values).
void Compress(const std::vector<std::vector<Index>>& lists,
              std::vector<std::int64_t>& start, std::vector<Index>& flat) {
  start.assign(lists.size() + 1, 0);
  for (std::size_t k = 0; k < lists.size(); ++k) {
    start[k + 1] = start[k] + static_cast<std::int64_t>(lists[k].size());
  }
  flat.clear();
  flat.reserve(start.back());
  for (const auto& list : lists) flat.insert(flat.end(), list.begin(), list.end());
}

}  // namespace

Instance MakeInstance(Index num_rows, Index num_cols, std::vector<Cost> costs,
                      const std::vector<std::vector<Index>>& incidence,
                      IncidenceKind kind) {
  if (num_rows <= 0 || num_cols <= 0) {
    throw Error(ErrorCode::kBadDimension,
                "m and n must be positive (got " + std::to_string(num_rows) +
                    "x" + std::to_string(num_cols) + ")");
  }
  if (costs.size() != static_cast<std::size_t>(num_cols)) {
    throw Error(ErrorCode::kBadDimension,
                "expected " + std::to_string(num_cols) + " costs, got " +
                    std::to_string(costs.size()));
  }
  const Index outer = kind == IncidenceKind::kRows ? num_rows : num_cols;
  const Index inner = kind == IncidenceKind::kRows ? num_cols : num_rows;
  if (incidence.size() != static_cast<std::size_t>(outer)) {
    throw Error(ErrorCode::kBadDimension,
                "expected " + std::to_string(outer) + " incidence lists, got " +
                    std::to_string(incidence.size()));
  }
  for (Index j = 0; j < num_cols; ++j) {
    if (costs[j] <= 0) {
      throw Error(ErrorCode::kNonPositiveCost,
                  "column " + std::to_string(j + 1) + " has cost " +
                      std::to_string(costs[j]));
    }
  }

  std::vector<std::vector<Index>> by_row(num_rows);
  std::vector<std::vector<Index>> by_col(num_cols);
  for (Index k = 0; k < outer; ++k) {
    for (Index v : incidence[k]) {
      if (v < 0 || v >= inner) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "index " + std::to_string(v + 1) + " outside 1.." +
                        std::to_string(inner));
      }
      const Index row = kind == IncidenceKind::kRows ? k : v;
      const Index col = kind == IncidenceKind::kRows ? v : k;
      by_row[row].push_back(col);
      by_col[col].push_back(row);
    }
  }
  for (auto* lists : {&by_row, &by_col}) {
    for (auto& list : *lists) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }
  for (Index i = 0; i < num_rows; ++i) {
    if (by_row[i].empty()) {
      throw Error(ErrorCode::kUncoverableRow,
                  "row " + std::to_string(i + 1) + " has no covering column");
    }
  }

  Instance instance;
  instance.num_rows_ = num_rows;
  instance.num_cols_ = num_cols;
  instance.costs_ = std::move(costs);
  Compress(by_row, instance.row_start_, instance.row_cols_);
  Compress(by_col, instance.col_start_, instance.col_rows_);
  return instance;
}

bool Instance::Covers(Index col, Index row) const {
  const auto cols = cols_covering(row);
  return std::binary_search(cols.begin(), cols.end(), col);
}

double Instance::density() const {
  return static_cast<double>(num_nonzeros()) /
         (static_cast<double>(num_rows_) * static_cast<double>(num_cols_));
}

bool Instance::is_unicost() const {
  return std::all_of(costs_.begin(), costs_.end(),
                     [](Cost c) { return c == 1; });
}

Cost Instance::max_cost() const {
  return *std::max_element(costs_.begin(), costs_.end());
}

Cost Instance::min_cost() const {
  return *std::min_element(costs_.begin(), costs_.end());
}

bool IsValidSolution(const Instance& instance, const Solution& solution) {
  if (solution.assignment.size() !=
      static_cast<std::size_t>(instance.num_rows())) {
    return false;
  }
  for (Index i = 0; i < instance.num_rows(); ++i) {
    const Index col = solution.assignment[i];
    if (col < 0 || col >= instance.num_cols() || !instance.Covers(col, i)) {
      return false;
    }
  }
  return true;
}

Cover ToCover(const Solution& solution) {
  Cover cover{solution.assignment};
  std::sort(cover.columns.begin(), cover.columns.end());
  cover.columns.erase(std::unique(cover.columns.begin(), cover.columns.end()),
                      cover.columns.end());
  return cover;
}

Cost EvaluateCost(const Instance& instance, const Solution& solution) {
  return EvaluateCost(instance, ToCover(solution));
}

Cost EvaluateCost(const Instance& instance, const Cover& cover) {
  Cost total = 0;
  for (Index col : cover.columns) total += instance.cost(col);
  return total;
}

CostEvaluator::CostEvaluator(const Instance& instance)
    : instance_(&instance), mark_(instance.num_cols(), 0) {}

Cost CostEvaluator::operator()(const Solution& solution) {
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  Cost total = 0;
  for (Index col : solution.assignment) {
    if (mark_[col] != epoch_) {
      mark_[col] = epoch_;
      total += instance_->cost(col);
    }
  }
  return total;
}

namespace {

// Per-row count of selected columns covering it.
std::vector<Index> CoverageCounts(const Instance& instance,
                                  std::span<const Index> columns) {
  std::vector<Index> counts(instance.num_rows(), 0);
  for (Index col : columns) {
    for (Index row : instance.rows_covered_by(col)) ++counts[row];
  }
  return counts;
}

}  // namespace

bool IsFeasibleCover(const Instance& instance, std::span<const Index> columns) {
  const auto counts = CoverageCounts(instance, columns);
  return std::none_of(counts.begin(), counts.end(),
                      [](Index c) { return c == 0; });
}

bool IsPrimeCover(const Instance& instance, std::span<const Index> columns) {
  std::vector<Index> distinct(columns.begin(), columns.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const auto counts = CoverageCounts(instance, distinct);
  if (std::any_of(counts.begin(), counts.end(),
                  [](Index c) { return c == 0; })) {
    throw Error(ErrorCode::kNotACover, "column set leaves a row uncovered");
  }
  for (Index col : distinct) {
    const auto rows = instance.rows_covered_by(col);
    const bool redundant = std::all_of(
        rows.begin(), rows.end(), [&](Index row) { return counts[row] >= 2; });
    if (redundant) return false;
  }
  return true;
}

Solution RemoveRedundancy(const Instance& instance, const Solution& solution,
                          Rng& rng) {
  Solution result = solution;
  Cover cover = ToCover(result);
  std::vector<char> used(instance.num_cols(), 0);
  for (Index col : cover.columns) used[col] = 1;
  std::vector<Index> counts = CoverageCounts(instance, cover.columns);

  while (true) {
    std::vector<Index> redundant;
    Cost worst = 0;
    for (Index col : cover.columns) {
      if (!used[col]) continue;
      const auto rows = instance.rows_covered_by(col);
      if (!std::all_of(rows.begin(), rows.end(),
                       [&](Index row) { return counts[row] >= 2; })) {
        continue;
      }
      if (instance.cost(col) > worst) {
        worst = instance.cost(col);
        redundant.clear();
      }
      if (instance.cost(col) == worst) redundant.push_back(col);
    }
    if (redundant.empty()) break;

    const Index drop = redundant[rng.UniformInt(redundant.size())];
    used[drop] = 0;
    for (Index row : instance.rows_covered_by(drop)) --counts[row];
    for (Index row : instance.rows_covered_by(drop)) {
      if (result.assignment[row] != drop) continue;
      std::vector<Index> cheapest;
      Cost best = std::numeric_limits<Cost>::max();
      for (Index alt : instance.cols_covering(row)) {
        if (!used[alt]) continue;
        if (instance.cost(alt) < best) {
          best = instance.cost(alt);
          cheapest.clear();
        }
        if (instance.cost(alt) == best) cheapest.push_back(alt);
      }
      result.assignment[row] = cheapest[rng.UniformInt(cheapest.size())];
    }
  }
  return result;
}

}  // namespace scp
