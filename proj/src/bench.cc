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

#include "scp/bench.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "scp/bks.h"
#include "scp/error.h"

namespace scp {

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "hcro") return Algorithm::kHcro;
  if (name == "hcro-ir") return Algorithm::kHcroIr;
  if (name == "hcro-nr") return Algorithm::kHcroNr;
  if (name == "hga") return Algorithm::kHga;
  if (name == "greedy") return Algorithm::kGreedy;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown algorithm '" + std::string(name) + "'");
}

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kHcro:
      return "hcro";
    case Algorithm::kHcroIr:
      return "hcro-ir";
    case Algorithm::kHcroNr:
      return "hcro-nr";
    case Algorithm::kHga:
      return "hga";
    case Algorithm::kGreedy:
      return "greedy";
  }
  return "?";
}

double Gap(double value, double bks) { return (value - bks) / bks; }

Ratio GapExact(Cost value, Cost bks) {
  return Ratio(value - bks) / Ratio(bks);
}

RunResult RunAlgorithm(const Instance& instance, Algorithm algorithm,
                       const Params& cro, const GaParams& ga,
                       std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kHcro:
      return RunCro(instance, cro, seed, Variant::kHcro);
    case Algorithm::kHcroIr:
      return RunCro(instance, cro, seed, Variant::kHcroIr);
    case Algorithm::kHcroNr:
      return RunCro(instance, cro, seed, Variant::kHcroNr);
    case Algorithm::kHga:
      return RunHga(instance, ga, seed);
    case Algorithm::kGreedy: {
      RunResult result;
      result.best_cover = GreedySolve(instance);
      result.best_cost = EvaluateCost(instance, result.best_cover);
      // Each row goes to the lowest-index cover column containing it.
      std::vector<char> in_cover(instance.num_cols(), 0);
      for (Index col : result.best_cover.columns) in_cover[col] = 1;
      result.best_solution.assignment.resize(instance.num_rows());
      for (Index row = 0; row < instance.num_rows(); ++row) {
        for (Index col : instance.cols_covering(row)) {
          if (in_cover[col]) {
            result.best_solution.assignment[row] = col;
            break;
          }
        }
      }
      return result;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "bad algorithm");
}

TrialStats Aggregate(std::string instance_name, std::string algorithm,
                     std::vector<std::uint64_t> seeds, std::vector<Cost> costs,
                     std::optional<Cost> bks) {
  if (costs.empty() || costs.size() != seeds.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "need one cost per seed and at least one trial");
  }
  TrialStats stats;
  stats.instance_name = std::move(instance_name);
  stats.algorithm = std::move(algorithm);
  stats.bks = bks;
  stats.trials = static_cast<int>(costs.size());
  stats.best = *std::min_element(costs.begin(), costs.end());
  stats.worst = *std::max_element(costs.begin(), costs.end());
  const Cost sum = std::accumulate(costs.begin(), costs.end(), Cost{0});
  stats.mean = static_cast<double>(sum) / static_cast<double>(costs.size());
  if (bks) {
    stats.opt_count = static_cast<int>(std::count_if(
        costs.begin(), costs.end(), [&](Cost c) { return c <= *bks; }));
    const auto b = static_cast<double>(*bks);
    stats.pct_best = Gap(static_cast<double>(stats.best), b);
    stats.pct_mean = Gap(stats.mean, b);
    stats.pct_worst = Gap(static_cast<double>(stats.worst), b);
  }
  stats.seeds = std::move(seeds);
  stats.costs = std::move(costs);
  return stats;
}

TrialStats RunTrials(const Instance& instance, const TrialConfig& config) {
  if (config.trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be at least 1");
  }
  std::optional<Cost> bks = config.bks;
  if (!bks) bks = LookupBks(config.instance_name);
  if (config.want_gap && !bks) {
    throw Error(ErrorCode::kUnknownInstanceForBks,
                "no best known value for '" + config.instance_name +
                    "'; pass --bks or disable the gap");
  }
  const int trials = config.algorithm == Algorithm::kGreedy ? 1 : config.trials;
  std::vector<RunResult> results(trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < trials; t = next++) {
      results[t] = RunAlgorithm(instance, config.algorithm, config.cro,
                                config.ga, config.base_seed + t);
    }
  };
  const int threads = std::clamp(config.threads, 1, trials);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  std::vector<std::uint64_t> seeds(trials);
  std::vector<Cost> costs(trials);
  std::size_t best_trial = 0;
  for (int t = 0; t < trials; ++t) {
    if (!IsFeasibleCover(instance, results[t].best_cover.columns)) {
      throw std::logic_error("trial produced an infeasible cover");
    }
    seeds[t] = config.base_seed + t;
    costs[t] = results[t].best_cost;
    if (costs[t] < costs[best_trial]) best_trial = t;
  }
  TrialStats stats =
      Aggregate(config.instance_name, std::string(AlgorithmName(config.algorithm)),
                std::move(seeds), std::move(costs), bks);
  stats.best_cover = results[best_trial].best_cover;
  return stats;
}

nlohmann::ordered_json ToJson(const TrialStats& stats) {
  using Json = nlohmann::ordered_json;
  auto optional = [](const auto& value) -> Json {
    return value ? Json(*value) : Json(nullptr);
  };
  std::vector<Index> cover;
  for (Index col : stats.best_cover.columns) cover.push_back(col + 1);
  Json json;
  json["instance"] = stats.instance_name;
  json["algorithm"] = stats.algorithm;
  json["bks"] = optional(stats.bks);
  json["trials"] = stats.trials;
  json["opt_count"] = stats.opt_count;
  json["best"] = stats.best;
  json["mean"] = stats.mean;
  json["worst"] = stats.worst;
  json["pct_best"] = optional(stats.pct_best);
  json["pct_mean"] = optional(stats.pct_mean);
  json["pct_worst"] = optional(stats.pct_worst);
  json["seeds"] = stats.seeds;
  json["costs"] = stats.costs;
  json["best_cover"] = cover;
  return json;
}

namespace {

std::string FormatPct(const std::optional<double>& pct) {
  if (!pct) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *pct);
  return buf;
}

std::string FormatMean(double mean) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", mean);
  return buf;
}

}  // namespace

std::string CsvHeader() {
  return "instance,bks,opt,best,pct,mean,pct,worst,pct";
}

std::string ToCsvRow(const TrialStats& stats) {
  std::ostringstream out;
  out << stats.instance_name << ','
      << (stats.bks ? std::to_string(*stats.bks) : "") << ','
      << stats.opt_count << ',' << stats.best << ','
      << FormatPct(stats.pct_best) << ',' << FormatMean(stats.mean) << ','
      << FormatPct(stats.pct_mean) << ',' << stats.worst << ','
      << FormatPct(stats.pct_worst);
  return out.str();
}

std::string FormatTable(const std::vector<TrialStats>& rows) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-8s %6s %5s %7s %7s %9s %7s %7s %7s\n",
                "Inst.", "BKS", "Opt.", "Best", "Pct.", "Mean", "Pct.",
                "Worst", "Pct.");
  out << line;
  for (const TrialStats& s : rows) {
    std::snprintf(line, sizeof(line),
                  "%-8s %6s %5d %7lld %7s %9s %7s %7lld %7s\n",
                  s.instance_name.c_str(),
                  s.bks ? std::to_string(*s.bks).c_str() : "-", s.opt_count,
                  static_cast<long long>(s.best), FormatPct(s.pct_best).c_str(),
                  FormatMean(s.mean).c_str(), FormatPct(s.pct_mean).c_str(),
                  static_cast<long long>(s.worst),
                  FormatPct(s.pct_worst).c_str());
    out << line;
  }
  return out.str();
}

namespace {

class BranchSearch {
 public:
  explicit BranchSearch(const Instance& instance)
      : instance_(instance), coverage_(instance.num_rows(), 0) {
    best_cost_ = std::accumulate(instance.costs().begin(),
                                 instance.costs().end(), Cost{0}) +
                 1;
  }

  Optimum Run() {
    Recurse(0, 0);
    std::sort(best_.begin(), best_.end());
    return {best_cost_, Cover{best_}};
  }

 private:
  void Recurse(Index first_candidate_row, Cost cost) {
    Index row = first_candidate_row;
    while (row < instance_.num_rows() && coverage_[row] > 0) ++row;
    if (row == instance_.num_rows()) {
      best_cost_ = cost;
      best_ = chosen_;
      return;
    }
    for (Index col : instance_.cols_covering(row)) {
      const Cost next = cost + instance_.cost(col);
      if (next >= best_cost_) continue;
      chosen_.push_back(col);
      for (Index r : instance_.rows_covered_by(col)) ++coverage_[r];
      Recurse(row, next);
      for (Index r : instance_.rows_covered_by(col)) --coverage_[r];
      chosen_.pop_back();
    }
  }

  const Instance& instance_;
  std::vector<Index> coverage_;
  std::vector<Index> chosen_;
  std::vector<Index> best_;
  Cost best_cost_;
};

}  // namespace

Optimum BruteForceOptimum(const Instance& instance) {
  if (instance.num_cols() > kBruteForceMaxColumns) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(instance.num_cols()) +
                    " columns exceeds the enumeration bound of " +
                    std::to_string(kBruteForceMaxColumns));
  }
  return BranchSearch(instance).Run();
}

}  // namespace scp
