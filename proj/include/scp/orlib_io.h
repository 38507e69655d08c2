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

// Readers and writers for OR-Library set covering files, the native text
// format, and a seeded random instance generator.
//
// Row-major layout (weighted OR-Library sets):
//   m n
//   c_1 ... c_n
//   for each row i: k_i  j_1 ... j_{k_i}
//
// Column-major unicost layout:
//   m n
//   for each column j: r_j  i_1 ... i_{r_j}
//
// Native layout:
//   scp-native 1
//   m n
//   c_1 ... c_n
//   for each row i: k_i  j_1 ... j_{k_i}
//
// All indices in files are 1-based. OR-Library layouts are whitespace
// separated token streams; line breaks carry no meaning.

#ifndef SCP_ORLIB_IO_H_
#define SCP_ORLIB_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "scp/instance.h"

namespace scp {

enum class FileFormat {
  kRowMajor,
  kColumnMajorUnicost,
  kNative,
};

// "row", "column" or "native". Throws kInvalidArgument otherwise.
FileFormat ParseFileFormat(std::string_view name);
std::string_view FileFormatName(FileFormat format);

Instance ParseRowMajor(std::string_view text);
Instance ParseColumnMajorUnicost(std::string_view text);
Instance ParseNative(std::string_view text);
std::string WriteNative(const Instance& instance);

Instance ParseInstance(std::string_view text, FileFormat format);
Instance ReadInstanceFile(const std::filesystem::path& path, FileFormat format);
void WriteInstanceFile(const std::filesystem::path& path,
                       const Instance& instance);

struct RandomInstanceSpec {
  Index num_rows = 0;
  Index num_cols = 0;
  double density = 0.0;
  Cost cost_lo = 1;
  Cost cost_hi = 100;
  std::uint64_t seed = 0;
};

// Sets each a_ij with probability `density`, then patches every empty row
// and every empty column with one uniformly random entry. Costs are uniform
// integers in [cost_lo, cost_hi]. `sampled_nonzeros`, when given, receives
// the entry count before patching.
Instance GenerateRandom(const RandomInstanceSpec& spec,
                        std::int64_t* sampled_nonzeros = nullptr);

}  // namespace scp

#endif  // SCP_ORLIB_IO_H_
