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

// Set covering data model.
//
// Rows (elements) and columns (subsets) are 0-based inside the library.
// Everything that leaves the process (files, CLI output, reports) uses the
// 1-based numbering of the OR-Library files.

#ifndef SCP_INSTANCE_H_
#define SCP_INSTANCE_H_

#include <cstdint>
#include <span>
#include <vector>

namespace scp {

using Index = std::int32_t;
using Cost = std::int64_t;

// Which direction an incidence list is given in.
enum class IncidenceKind {
  kRows,     // list[i] = columns covering row i
  kColumns,  // list[j] = rows covered by column j
};

// Immutable SCP instance: an m x n 0/1 matrix plus column costs. Both
// incidence directions are stored in compressed form.
class Instance {
 public:
  Instance() = default;

  Index num_rows() const { return num_rows_; }
  Index num_cols() const { return num_cols_; }

  Cost cost(Index col) const { return costs_[col]; }
  std::span<const Cost> costs() const { return costs_; }

  // Sorted columns j with a_ij = 1.
  std::span<const Index> cols_covering(Index row) const {
    return {row_cols_.data() + row_start_[row],
            row_cols_.data() + row_start_[row + 1]};
  }
  // Sorted rows i with a_ij = 1.
  std::span<const Index> rows_covered_by(Index col) const {
    return {col_rows_.data() + col_start_[col],
            col_rows_.data() + col_start_[col + 1]};
  }

  bool Covers(Index col, Index row) const;

  std::int64_t num_nonzeros() const {
    return static_cast<std::int64_t>(row_cols_.size());
  }
  double density() const;
  bool is_unicost() const;
  Cost max_cost() const;
  Cost min_cost() const;

  bool operator==(const Instance& other) const = default;

 private:
  friend Instance MakeInstance(Index, Index, std::vector<Cost>,
                               const std::vector<std::vector<Index>>&,
                               IncidenceKind);

  Index num_rows_ = 0;
  Index num_cols_ = 0;
  std::vector<Cost> costs_;
  std::vector<std::int64_t> row_start_;
  std::vector<Index> row_cols_;
  std::vector<std::int64_t> col_start_;
  std::vector<Index> col_rows_;
};

// Builds an instance from 0-based incidence lists. Duplicate entries within a
// list are merged. Throws Error with kBadDimension, kIndexOutOfRange,
// kNonPositiveCost or kUncoverableRow.
Instance MakeInstance(Index num_rows, Index num_cols, std::vector<Cost> costs,
                      const std::vector<std::vector<Index>>& incidence,
                      IncidenceKind kind);

// Element-indexed encoding: assignment[i] is the column chosen to cover row
// i. A valid Solution has assignment[i] in cols_covering(i) for every i, so
// it always describes a feasible cover.
struct Solution {
  std::vector<Index> assignment;

  bool operator==(const Solution& other) const = default;
};

// A set of distinct columns, sorted ascending.
struct Cover {
  std::vector<Index> columns;

  bool operator==(const Cover& other) const = default;
};

bool IsValidSolution(const Instance& instance, const Solution& solution);

// Distinct columns used by the solution.
Cover ToCover(const Solution& solution);

// Sum of costs over distinct assigned columns.
Cost EvaluateCost(const Instance& instance, const Solution& solution);
Cost EvaluateCost(const Instance& instance, const Cover& cover);

// Repeated-evaluation helper that reuses an n-sized marker array, so each
// call is O(m).
class CostEvaluator {
 public:
  explicit CostEvaluator(const Instance& instance);
  Cost operator()(const Solution& solution);

 private:
  const Instance* instance_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
};

bool IsFeasibleCover(const Instance& instance, std::span<const Index> columns);

// True iff dropping any single column breaks feasibility. Throws kNotACover
// when `columns` is not a cover in the first place.
bool IsPrimeCover(const Instance& instance, std::span<const Index> columns);

class Rng;

// Drops redundant columns until the cover is prime. The most expensive
// redundant column goes first (ties uniform at random); each freed position
// moves to the cheapest remaining covering column of the cover (ties uniform
// at random). Cost never increases.
Solution RemoveRedundancy(const Instance& instance, const Solution& solution,
                          Rng& rng);

}  // namespace scp

#endif  // SCP_INSTANCE_H_
