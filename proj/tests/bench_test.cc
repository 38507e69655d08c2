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
#include <string>
#include <vector>

#include "doctest.h"
#include "scp/bench.h"
#include "scp/error.h"
#include "scp/instance.h"
#include "scp/orlib_io.h"
#include "test_oracles.h"

namespace scp {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kIoError;
}

TEST_CASE("gap") {
  CHECK(GapExact(52, 50) == Ratio(1, 25));
  CHECK(Gap(52, 50) == doctest::Approx(0.04));
  CHECK(Gap(789, 780) == doctest::Approx(0.011538).epsilon(1e-4));
  CHECK(GapExact(50, 50) == Ratio(0));
}

TEST_CASE("algorithm names") {
  for (auto a : {Algorithm::kHcro, Algorithm::kHcroIr, Algorithm::kHcroNr,
                 Algorithm::kHga, Algorithm::kGreedy}) {
    CHECK(ParseAlgorithm(AlgorithmName(a)) == a);
  }
  CHECK(CodeOf([] { ParseAlgorithm("sa"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("aggregate statistics") {
  const TrialStats s =
      Aggregate("X", "hcro", {1, 2, 3, 4}, {50, 52, 50, 56}, Cost{50});
  CHECK(s.trials == 4);
  CHECK(s.opt_count == 2);
  CHECK(s.best == 50);
  CHECK(s.worst == 56);
  CHECK(s.mean == doctest::Approx(52.0));
  CHECK(*s.pct_best == doctest::Approx(0.0));
  CHECK(*s.pct_mean == doctest::Approx(0.04));
  CHECK(*s.pct_worst == doctest::Approx(0.12));
  CHECK(s.best <= s.mean);
  CHECK(s.mean <= s.worst);

  const TrialStats none = Aggregate("Y", "hcro", {1}, {7}, std::nullopt);
  CHECK_FALSE(none.pct_best.has_value());
  CHECK(none.opt_count == 0);

  CHECK(CodeOf([] { Aggregate("Z", "hcro", {}, {}, std::nullopt); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Aggregate("Z", "hcro", {1, 2}, {3}, std::nullopt); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("aggregate invariants on random cost lists") {
  Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(rng.UniformInt(20));
    std::vector<Cost> costs;
    std::vector<std::uint64_t> seeds;
    for (int t = 0; t < n; ++t) {
      costs.push_back(100 + static_cast<Cost>(rng.UniformInt(50)));
      seeds.push_back(t + 1);
    }
    const Cost bks = 100 + static_cast<Cost>(rng.UniformInt(10));
    const TrialStats s = Aggregate("R", "hga", seeds, costs, bks);
    CHECK(s.best == *std::min_element(costs.begin(), costs.end()));
    CHECK(s.worst == *std::max_element(costs.begin(), costs.end()));
    CHECK(s.best <= s.mean);
    CHECK(s.mean <= s.worst);
    CHECK(s.opt_count ==
          std::count_if(costs.begin(), costs.end(),
                        [&](Cost c) { return c <= bks; }));
    CHECK(*s.pct_best <= *s.pct_mean);
    CHECK(*s.pct_mean <= *s.pct_worst);
  }
}

Instance Medium() { return GenerateRandom({30, 60, 0.1, 1, 100, 21}); }

TEST_CASE("trial batches") {
  const Instance inst = Medium();
  TrialConfig c;
  c.instance_name = "medium";
  c.trials = 4;
  c.base_seed = 7;
  c.cro.fe_limit = 3000;
  c.want_gap = false;
  const TrialStats one = RunTrials(inst, c);
  CHECK(one.seeds == std::vector<std::uint64_t>{7, 8, 9, 10});
  CHECK(one.costs.size() == 4);
  CHECK(IsFeasibleCover(inst, one.best_cover.columns));
  CHECK(EvaluateCost(inst, one.best_cover) == one.best);
  for (std::size_t t = 0; t < 4; ++t) {
    CHECK(one.costs[t] == RunCro(inst, c.cro, one.seeds[t]).best_cost);
  }

  c.threads = 3;
  const TrialStats many = RunTrials(inst, c);
  CHECK(many.costs == one.costs);
  CHECK(ToJson(many).dump() == ToJson(one).dump());

  c.algorithm = Algorithm::kGreedy;
  const TrialStats greedy = RunTrials(inst, c);
  CHECK(greedy.trials == 1);
  CHECK(greedy.best == EvaluateCost(inst, GreedySolve(inst)));

  c.want_gap = true;
  CHECK(CodeOf([&] { RunTrials(inst, c); }) ==
        ErrorCode::kUnknownInstanceForBks);
  c.bks = greedy.best;
  CHECK(RunTrials(inst, c).opt_count == 1);
}

TEST_CASE("reports") {
  TrialStats s = Aggregate("CYC.9", "hcro", {1, 2}, {789, 790}, Cost{780});
  s.best_cover = Cover{{0, 4}};
  const auto j = ToJson(s);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{
                    "instance", "algorithm", "bks", "trials", "opt_count",
                    "best", "mean", "worst", "pct_best", "pct_mean",
                    "pct_worst", "seeds", "costs", "best_cover"});
  CHECK(j["algorithm"] == "hcro");
  CHECK(j["best_cover"] == nlohmann::ordered_json::array({1, 5}));

  CHECK(CsvHeader() == "instance,bks,opt,best,pct,mean,pct,worst,pct");
  CHECK(ToCsvRow(s) ==
        "CYC.9,780,0,789,0.0115,789.5,0.0122,790,0.0128");

  const std::string table = FormatTable({s});
  CHECK(table.find("CYC.9") != std::string::npos);
  CHECK(table.find("789.5") != std::string::npos);
  CHECK(std::count(table.begin(), table.end(), '\n') == 2);
}

TEST_CASE("exact oracle agrees with exhaustive enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto plain = oracle::RandomPlain(10, 16, 0.25, seed);
    const Instance inst = oracle::FromPlain(plain);
    const Optimum opt = BruteForceOptimum(inst);
    CHECK(opt.cost == oracle::ExhaustiveOptimum(plain));
    CHECK(IsFeasibleCover(inst, opt.cover.columns));
    CHECK(EvaluateCost(inst, opt.cover) == opt.cost);
  }
  // Every column covers every row: the cheapest single column wins.
  const Instance full = GenerateRandom({5, 8, 1.0, 1, 100, 3});
  const Optimum opt = BruteForceOptimum(full);
  CHECK(opt.cover.columns.size() == 1);
  CHECK(opt.cost == full.min_cost());

  const Instance big = GenerateRandom({5, 26, 0.3, 1, 100, 3});
  CHECK(CodeOf([&] { BruteForceOptimum(big); }) == ErrorCode::kTooLarge);
}

}  // namespace
}  // namespace scp
