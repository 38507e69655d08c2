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

#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "scp/error.h"
#include "scp/instance.h"
#include "scp/orlib_io.h"

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

std::vector<Index> Cols(const Instance& inst, Index row) {
  const auto span = inst.cols_covering(row);
  return {span.begin(), span.end()};
}

TEST_CASE("row-major layout, arbitrary line breaks") {
  const std::string text =
      "3 4\n 5 1 3\n 2\n"
      "2 1 3\n"
      "1\n 2 3 1 2 4\n";
  const Instance inst = ParseRowMajor(text);
  CHECK(inst.num_rows() == 3);
  CHECK(inst.num_cols() == 4);
  CHECK(std::vector<Cost>(inst.costs().begin(), inst.costs().end()) ==
        std::vector<Cost>{5, 1, 3, 2});
  CHECK(Cols(inst, 0) == std::vector<Index>{0, 2});
  CHECK(Cols(inst, 1) == std::vector<Index>{1});
  CHECK(Cols(inst, 2) == std::vector<Index>{0, 1, 3});
}

TEST_CASE("column-major unicost layout") {
  const std::string text = "3 2\n2 1 2\n2 2 3\n";
  const Instance inst = ParseColumnMajorUnicost(text);
  CHECK(inst.is_unicost());
  CHECK(Cols(inst, 0) == std::vector<Index>{0});
  CHECK(Cols(inst, 1) == std::vector<Index>{0, 1});
  CHECK(Cols(inst, 2) == std::vector<Index>{1});
  CHECK(ParseInstance(text, FileFormat::kColumnMajorUnicost) == inst);
}

TEST_CASE("malformed files") {
  CHECK(CodeOf([] { ParseRowMajor("2 2\n1 1\n1 1\n"); }) ==
        ErrorCode::kTruncatedFile);
  CHECK(CodeOf([] { ParseRowMajor("1 2\n1 x\n1 1\n"); }) ==
        ErrorCode::kBadToken);
  CHECK(CodeOf([] { ParseRowMajor("1 2\n1 1\n1 3\n"); }) ==
        ErrorCode::kIndexOutOfRange);
  CHECK(CodeOf([] { ParseRowMajor("1 2\n1 1\n1 0\n"); }) ==
        ErrorCode::kIndexOutOfRange);
  CHECK(CodeOf([] { ParseRowMajor("1 2\n1 1\n1 1 7\n"); }) ==
        ErrorCode::kTrailingData);
  CHECK(CodeOf([] { ParseRowMajor("0 2\n"); }) == ErrorCode::kBadDimension);
  CHECK(CodeOf([] { ParseRowMajor("1 1\n0\n1 1\n"); }) ==
        ErrorCode::kNonPositiveCost);
  CHECK(CodeOf([] { ParseRowMajor("2 1\n4\n1 1\n0\n"); }) ==
        ErrorCode::kUncoverableRow);
  CHECK(CodeOf([] { ParseRowMajor(""); }) == ErrorCode::kTruncatedFile);
}

TEST_CASE("trailing data names the format flag") {
  try {
    ParseRowMajor("1 2\n1 1\n1 1 7\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("--format") != std::string::npos);
  }
}

TEST_CASE("native round trip") {
  const std::string hand =
      "scp-native 1\n2 2\n3 4\n1 1\n2 1 2\n";
  const Instance inst = ParseNative(hand);
  CHECK(inst == MakeInstance(2, 2, {3, 4}, {{0}, {0, 1}}, IncidenceKind::kRows));
  CHECK(WriteNative(inst) == hand);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance g = GenerateRandom({12, 30, 0.2, 1, 100, seed});
    CHECK(ParseNative(WriteNative(g)) == g);
  }
}

TEST_CASE("native header checks") {
  CHECK(CodeOf([] { ParseNative("scp-nativ 1\n1 1\n1\n1 1\n"); }) ==
        ErrorCode::kVersionMismatch);
  CHECK(CodeOf([] { ParseNative("scp-native 2\n1 1\n1\n1 1\n"); }) ==
        ErrorCode::kVersionMismatch);
  CHECK(CodeOf([] { ParseNative("1 1\n1\n1 1\n"); }) ==
        ErrorCode::kVersionMismatch);
}

TEST_CASE("format names") {
  CHECK(ParseFileFormat("row") == FileFormat::kRowMajor);
  CHECK(ParseFileFormat("column") == FileFormat::kColumnMajorUnicost);
  CHECK(ParseFileFormat("native") == FileFormat::kNative);
  CHECK(FileFormatName(FileFormat::kNative) == "native");
  CHECK(CodeOf([] { ParseFileFormat("auto"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("files on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "scp_io_test";
  std::filesystem::create_directories(dir);
  const Instance g = GenerateRandom({5, 9, 0.4, 1, 100, 3});
  WriteInstanceFile(dir / "g.txt", g);
  CHECK(ReadInstanceFile(dir / "g.txt", FileFormat::kNative) == g);
  CHECK(CodeOf([&] { ReadInstanceFile(dir / "missing", FileFormat::kNative); }) ==
        ErrorCode::kIoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("generator") {
  const RandomInstanceSpec spec{8, 12, 0.3, 1, 100, 7};
  CHECK(GenerateRandom(spec) == GenerateRandom(spec));

  const Instance full = GenerateRandom({6, 5, 1.0, 1, 100, 1});
  for (Index i = 0; i < 6; ++i) CHECK(full.cols_covering(i).size() == 5);

  // Every row and column is used even at very low density.
  const Instance sparse = GenerateRandom({40, 60, 0.001, 1, 100, 2});
  for (Index j = 0; j < 60; ++j) CHECK(!sparse.rows_covered_by(j).empty());
  for (Cost c : sparse.costs()) {
    CHECK(c >= 1);
    CHECK(c <= 100);
  }

  CHECK(CodeOf([] { GenerateRandom({2, 2, 0.0, 1, 100, 1}); }) ==
        ErrorCode::kBadDensity);
  CHECK(CodeOf([] { GenerateRandom({2, 2, 1.5, 1, 100, 1}); }) ==
        ErrorCode::kBadDensity);
}

TEST_CASE("generator density before patching") {
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::int64_t sampled = 0;
    GenerateRandom({8, 12, 0.3, 1, 100, seed}, &sampled);
    sum += static_cast<double>(sampled) / 96.0;
  }
  CHECK(sum / 1000.0 == doctest::Approx(0.3).epsilon(0.05 / 0.3));
}

}  // namespace
}  // namespace scp
