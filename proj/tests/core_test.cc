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

#include <set>
#include <vector>

#include "doctest.h"
#include "scp/bks.h"
#include "scp/energy.h"
#include "scp/error.h"
#include "scp/instance.h"
#include "scp/operators.h"
#include "scp/rng.h"
#include "test_oracles.h"

namespace scp {
namespace {

// 4 rows, 5 columns.
//   col 0 {0,1}  cost 3
//   col 1 {1,2}  cost 2
//   col 2 {2,3}  cost 4
//   col 3 {0,3}  cost 5
//   col 4 {0,1,2,3} cost 10
Instance Small() {
  return MakeInstance(4, 5, {3, 2, 4, 5, 10},
                      {{0, 3, 4}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}},
                      IncidenceKind::kRows);
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kIoError;
}

TEST_CASE("instance stores both incidence directions") {
  const Instance inst = Small();
  CHECK(inst.num_rows() == 4);
  CHECK(inst.num_cols() == 5);
  CHECK(inst.num_nonzeros() == 12);
  CHECK(inst.density() == doctest::Approx(12.0 / 20.0));
  CHECK(std::vector<Index>(inst.rows_covered_by(4).begin(),
                           inst.rows_covered_by(4).end()) ==
        std::vector<Index>{0, 1, 2, 3});
  CHECK(inst.Covers(3, 0));
  CHECK_FALSE(inst.Covers(1, 0));
  CHECK(inst.max_cost() == 10);
  CHECK(inst.min_cost() == 2);
  CHECK_FALSE(inst.is_unicost());
}

TEST_CASE("row and column incidence build the same instance") {
  const Instance by_col =
      MakeInstance(4, 5, {3, 2, 4, 5, 10},
                   {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 1, 2, 3}},
                   IncidenceKind::kColumns);
  CHECK(by_col == Small());
}

TEST_CASE("duplicate incidence entries collapse") {
  const Instance inst =
      MakeInstance(1, 2, {1, 1}, {{1, 0, 1, 1}}, IncidenceKind::kRows);
  CHECK(inst.num_nonzeros() == 2);
}

TEST_CASE("construction errors") {
  CHECK(CodeOf([] {
          MakeInstance(2, 2, {1, 1}, {{0}, {}}, IncidenceKind::kRows);
        }) == ErrorCode::kUncoverableRow);
  CHECK(CodeOf([] {
          MakeInstance(1, 2, {1, 0}, {{0}}, IncidenceKind::kRows);
        }) == ErrorCode::kNonPositiveCost);
  CHECK(CodeOf([] {
          MakeInstance(1, 2, {1, 1}, {{2}}, IncidenceKind::kRows);
        }) == ErrorCode::kIndexOutOfRange);
  CHECK(CodeOf([] {
          MakeInstance(0, 2, {1, 1}, {}, IncidenceKind::kRows);
        }) == ErrorCode::kBadDimension);
  CHECK(CodeOf([] {
          MakeInstance(1, 2, {1}, {{0}}, IncidenceKind::kRows);
        }) == ErrorCode::kBadDimension);
}

TEST_CASE("cost counts each distinct column once") {
  const Instance inst = Small();
  const Solution s{{0, 0, 1, 2}};
  CHECK(IsValidSolution(inst, s));
  CHECK(ToCover(s).columns == std::vector<Index>{0, 1, 2});
  CHECK(EvaluateCost(inst, s) == 9);
  CostEvaluator eval(inst);
  CHECK(eval(s) == 9);
  CHECK(eval(Solution{{4, 4, 4, 4}}) == 10);
  CHECK(eval(s) == 9);
  CHECK_FALSE(IsValidSolution(inst, Solution{{1, 0, 1, 2}}));
  CHECK_FALSE(IsValidSolution(inst, Solution{{0, 0, 1}}));
}

TEST_CASE("evaluator agrees with the reference cost on random solutions") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto plain = oracle::RandomPlain(15, 20, 0.2, seed);
    const Instance inst = oracle::FromPlain(plain);
    Rng rng(seed);
    CostEvaluator eval(inst);
    for (int k = 0; k < 20; ++k) {
      const Solution s = ReverseCumulativeInit(inst, rng);
      const std::vector<int> cols(s.assignment.begin(), s.assignment.end());
      CHECK(eval(s) == oracle::CostOf(plain, cols));
      CHECK(EvaluateCost(inst, ToCover(s)) == oracle::CostOf(plain, cols));
    }
  }
}

TEST_CASE("feasibility and primality") {
  const Instance inst = Small();
  const std::vector<Index> cover{0, 2};
  const std::vector<Index> partial{0, 1};
  const std::vector<Index> redundant{0, 2, 4};
  CHECK(IsFeasibleCover(inst, cover));
  CHECK_FALSE(IsFeasibleCover(inst, partial));
  CHECK(IsPrimeCover(inst, cover));
  CHECK_FALSE(IsPrimeCover(inst, redundant));
  CHECK(CodeOf([&] { IsPrimeCover(inst, partial); }) == ErrorCode::kNotACover);
}

TEST_CASE("primality matches exhaustive single-removal test") {
  const auto plain = oracle::RandomPlain(5, 6, 0.4, 11);
  const Instance inst = oracle::FromPlain(plain);
  for (int mask = 1; mask < 64; ++mask) {
    std::vector<Index> cols;
    for (int j = 0; j < 6; ++j) {
      if (mask >> j & 1) cols.push_back(j);
    }
    const std::vector<int> as_int(cols.begin(), cols.end());
    if (!oracle::CoversAll(plain, as_int)) continue;
    bool prime = true;
    for (std::size_t k = 0; k < as_int.size(); ++k) {
      std::vector<int> fewer = as_int;
      fewer.erase(fewer.begin() + k);
      if (oracle::CoversAll(plain, fewer)) prime = false;
    }
    CHECK(IsPrimeCover(inst, cols) == prime);
  }
}

TEST_CASE("redundancy removal drops dominated columns until prime") {
  const Instance inst = Small();
  Rng rng(1);
  const Solution s{{4, 0, 1, 2}};
  const Solution out = RemoveRedundancy(inst, s, rng);
  CHECK(IsValidSolution(inst, out));
  // Column 4 goes first (most expensive), then column 1 is redundant too.
  CHECK(EvaluateCost(inst, out) == 7);
  CHECK(ToCover(out).columns == std::vector<Index>{0, 2});
}

TEST_CASE("redundancy removal yields prime covers and never raises cost") {
  const Instance inst = oracle::FromPlain(oracle::RandomPlain(10, 20, 0.3, 5));
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    const Solution s = ReverseCumulativeInit(inst, rng);
    const Solution out = RemoveRedundancy(inst, s, rng);
    CHECK(IsValidSolution(inst, out));
    CHECK(IsPrimeCover(inst, ToCover(out).columns));
    CHECK(EvaluateCost(inst, out) <= EvaluateCost(inst, s));
  }
  const Solution prime = RemoveRedundancy(inst, ReverseCumulativeInit(inst, rng), rng);
  CHECK(RemoveRedundancy(inst, prime, rng) == prime);
}

TEST_CASE("rng streams are reproducible and in range") {
  Rng a(42);
  Rng b(42);
  for (int k = 0; k < 100; ++k) CHECK(a() == b());
  Rng r(7);
  std::vector<int> hist(7, 0);
  for (int k = 0; k < 70000; ++k) {
    const double u = r.Uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    ++hist[r.UniformInt(7)];
  }
  for (int h : hist) CHECK(h == doctest::Approx(10000).epsilon(0.05));
  std::vector<int> v{0, 1, 2, 3, 4, 5};
  r.Shuffle(std::span<int>(v));
  CHECK(std::multiset<int>(v.begin(), v.end()) ==
        std::multiset<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("energy arithmetic is exact") {
  const Energy a = Energy::FromCost(7);
  const Energy part = a.Portion(0.3);
  CHECK((part + (a - part)) == a);
  CHECK(a.Portion(0.0) == Energy());
  CHECK(a.Portion(1.0) == a);
  CHECK(a.Portion(-1.0) == Energy());
  CHECK(Energy::FromValue(1000.0) == Energy::FromCost(1000));
  CHECK(Energy::FromValue(0.5).value() == 0.5);
}

TEST_CASE("best known values and canonical names") {
  CHECK(BksTable().size() == 80);
  CHECK(LookupBks("4.1") == 429);
  CHECK(LookupBks("scp41.txt") == 429);
  CHECK(LookupBks("scp410") == 514);
  CHECK(LookupBks("scp51") == 253);
  CHECK(LookupBks("scp61") == 138);
  CHECK(LookupBks("scpnre1") == 29);
  CHECK(LookupBks("scpe1") == 5);
  CHECK(LookupBks("scpclr10") == 25);
  CHECK(LookupBks("scpcyc06") == 60);
  CHECK(LookupBks("scpcyc07") == 144);
  CHECK(LookupBks("CYC.9") == 780);
  CHECK(LookupBks("data/orlib/scpa1.txt") == 253);
  CHECK_FALSE(LookupBks("mystery").has_value());
  CHECK(CanonicalInstanceName("scpcyc06") == "CYC.6");
  CHECK(CanonicalInstanceName("nrh.5") == "NRH.5");
  CHECK(CanonicalInstanceName("foo.txt") == "foo.txt");
}

TEST_CASE("error codes have names") {
  CHECK(ErrorCodeName(ErrorCode::kUncoverableRow) == "UncoverableRow");
  const Error e(ErrorCode::kTooLarge, "x");
  CHECK(e.code() == ErrorCode::kTooLarge);
}

}  // namespace
}  // namespace scp
