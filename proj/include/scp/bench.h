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

// Seeded trial batches, summary statistics, reports and the exact oracle.

#ifndef SCP_BENCH_H_
#define SCP_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "scp/cro_engine.h"
#include "scp/genetic.h"
#include "scp/instance.h"
#include "scp/operators.h"
#include "scp/run_result.h"

namespace scp {

enum class Algorithm {
  kHcro,
  kHcroIr,
  kHcroNr,
  kHga,
  kGreedy,
};

// "hcro", "hcro-ir", "hcro-nr", "hga", "greedy".
Algorithm ParseAlgorithm(std::string_view name);
std::string_view AlgorithmName(Algorithm algorithm);

// (value - bks) / bks.
double Gap(double value, double bks);
Ratio GapExact(Cost value, Cost bks);

// One run of any algorithm. Greedy ignores the seed.
RunResult RunAlgorithm(const Instance& instance, Algorithm algorithm,
                       const Params& cro, const GaParams& ga,
                       std::uint64_t seed);

struct TrialConfig {
  std::string instance_name;
  Algorithm algorithm = Algorithm::kHcro;
  int trials = 1;
  std::uint64_t base_seed = 1;
  Params cro;
  GaParams ga;
  // Overrides the table entry for instance_name.
  std::optional<Cost> bks;
  // When set, a missing BKS is an error (kUnknownInstanceForBks).
  bool want_gap = true;
  int threads = 1;
};

struct TrialStats {
  std::string instance_name;
  std::string algorithm;
  std::optional<Cost> bks;
  int trials = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<Cost> costs;
  int opt_count = 0;  // trials reaching the BKS
  Cost best = 0;
  double mean = 0.0;
  Cost worst = 0;
  std::optional<double> pct_best;
  std::optional<double> pct_mean;
  std::optional<double> pct_worst;
  Cover best_cover;
};

// Folds per-trial costs (aligned with seeds) into statistics.
TrialStats Aggregate(std::string instance_name, std::string algorithm,
                     std::vector<std::uint64_t> seeds, std::vector<Cost> costs,
                     std::optional<Cost> bks);

// Runs seeds base_seed .. base_seed + trials - 1, possibly on several
// threads; the report does not depend on scheduling. Greedy is
// deterministic and always runs once.
TrialStats RunTrials(const Instance& instance, const TrialConfig& config);

nlohmann::ordered_json ToJson(const TrialStats& stats);
std::string CsvHeader();
std::string ToCsvRow(const TrialStats& stats);
// Fixed-width text table, one row per instance; the mean is printed with one
// decimal.
std::string FormatTable(const std::vector<TrialStats>& rows);

inline constexpr Index kBruteForceMaxColumns = 25;

struct Optimum {
  Cost cost = 0;
  Cover cover;
};

// Exact minimum-cost cover by depth-first enumeration with cost pruning.
// Throws Error(kTooLarge) for more than kBruteForceMaxColumns columns.
Optimum BruteForceOptimum(const Instance& instance);

}  // namespace scp

#endif  // SCP_BENCH_H_
