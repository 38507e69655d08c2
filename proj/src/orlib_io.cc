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

#include "scp/orlib_io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "scp/error.h"
#include "scp/rng.h"

namespace scp {
namespace {

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }

  std::string_view NextToken(std::string_view what) {
    SkipSpace();
    if (pos_ >= text_.size()) {
      throw Error(ErrorCode::kTruncatedFile, "file ended while reading " +
                                                 std::string(what));
    }
    const std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(begin, pos_ - begin);
  }

  std::int64_t NextInt(std::string_view what) {
    const std::string_view token = NextToken(what);
    std::int64_t value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
      throw Error(ErrorCode::kBadToken, "expected integer for " +
                                            std::string(what) + ", got '" +
                                            std::string(token) + "'");
    }
    return value;
  }

  // Reads a 1-based index in [1, bound] and returns it 0-based.
  Index NextIndex(std::string_view what, Index bound) {
    const std::int64_t value = NextInt(what);
    if (value < 1 || value > bound) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  std::string(what) + " " + std::to_string(value) +
                      " outside 1.." + std::to_string(bound));
    }
    return static_cast<Index>(value - 1);
  }

  Index NextCount(std::string_view what, Index bound) {
    const std::int64_t value = NextInt(what);
    if (value < 0 || value > bound) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  std::string(what) + " " + std::to_string(value) +
                      " outside 0.." + std::to_string(bound));
    }
    return static_cast<Index>(value);
  }

  void ExpectEnd() {
    if (!AtEnd()) {
      throw Error(ErrorCode::kTrailingData,
                  "unexpected data after instance at offset " +
                      std::to_string(pos_) +
                      " (wrong --format for this file?)");
    }
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::pair<Index, Index> ReadDimensions(TokenReader& reader) {
  const std::int64_t m = reader.NextInt("row count m");
  const std::int64_t n = reader.NextInt("column count n");
  constexpr std::int64_t kMax = 1 << 30;
  if (m <= 0 || n <= 0 || m > kMax || n > kMax) {
    throw Error(ErrorCode::kBadDimension, "bad dimensions " +
                                              std::to_string(m) + "x" +
                                              std::to_string(n));
  }
  return {static_cast<Index>(m), static_cast<Index>(n)};
}

Instance ReadRowMajorBody(TokenReader& reader, Index m, Index n) {
  std::vector<Cost> costs(n);
  for (Cost& c : costs) c = reader.NextInt("column cost");
  std::vector<std::vector<Index>> rows(m);
  for (Index i = 0; i < m; ++i) {
    const Index k = reader.NextCount("row length", n);
    rows[i].reserve(k);
    for (Index t = 0; t < k; ++t) rows[i].push_back(reader.NextIndex("column", n));
  }
  reader.ExpectEnd();
  return MakeInstance(m, n, std::move(costs), rows, IncidenceKind::kRows);
}

constexpr std::string_view kNativeMagic = "scp-native";
constexpr std::int64_t kNativeVersion = 1;

}  // namespace

FileFormat ParseFileFormat(std::string_view name) {
  if (name == "row") return FileFormat::kRowMajor;
  if (name == "column") return FileFormat::kColumnMajorUnicost;
  if (name == "native") return FileFormat::kNative;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown format '" + std::string(name) +
                  "' (expected row, column or native)");
}

std::string_view FileFormatName(FileFormat format) {
  switch (format) {
    case FileFormat::kRowMajor:
      return "row";
    case FileFormat::kColumnMajorUnicost:
      return "column";
    case FileFormat::kNative:
      return "native";
  }
  return "?";
}

Instance ParseRowMajor(std::string_view text) {
  TokenReader reader(text);
  const auto [m, n] = ReadDimensions(reader);
  return ReadRowMajorBody(reader, m, n);
}

Instance ParseColumnMajorUnicost(std::string_view text) {
  TokenReader reader(text);
  const auto [m, n] = ReadDimensions(reader);
  std::vector<std::vector<Index>> cols(n);
  for (Index j = 0; j < n; ++j) {
    const Index r = reader.NextCount("column length", m);
    cols[j].reserve(r);
    for (Index t = 0; t < r; ++t) cols[j].push_back(reader.NextIndex("row", m));
  }
  reader.ExpectEnd();
  return MakeInstance(m, n, std::vector<Cost>(n, 1), cols,
                      IncidenceKind::kColumns);
}

Instance ParseNative(std::string_view text) {
  TokenReader reader(text);
  const std::string_view magic = reader.AtEnd() ? "" : reader.NextToken("header");
  if (magic != kNativeMagic) {
    throw Error(ErrorCode::kVersionMismatch,
                "missing 'scp-native' header, found '" + std::string(magic) +
                    "'");
  }
  const std::string_view version = reader.AtEnd() ? "" : reader.NextToken("version");
  if (version != std::to_string(kNativeVersion)) {
    throw Error(ErrorCode::kVersionMismatch,
                "unsupported native version '" + std::string(version) + "'");
  }
  const auto [m, n] = ReadDimensions(reader);
  return ReadRowMajorBody(reader, m, n);
}

std::string WriteNative(const Instance& instance) {
  std::ostringstream out;
  out << kNativeMagic << ' ' << kNativeVersion << '\n';
  out << instance.num_rows() << ' ' << instance.num_cols() << '\n';
  for (Index j = 0; j < instance.num_cols(); ++j) {
    out << instance.cost(j) << (j + 1 == instance.num_cols() ? '\n' : ' ');
  }
  for (Index i = 0; i < instance.num_rows(); ++i) {
    const auto cols = instance.cols_covering(i);
    out << cols.size();
    for (Index col : cols) out << ' ' << col + 1;
    out << '\n';
  }
  return out.str();
}

Instance ParseInstance(std::string_view text, FileFormat format) {
  switch (format) {
    case FileFormat::kRowMajor:
      return ParseRowMajor(text);
    case FileFormat::kColumnMajorUnicost:
      return ParseColumnMajorUnicost(text);
    case FileFormat::kNative:
      return ParseNative(text);
  }
  throw Error(ErrorCode::kInvalidArgument, "bad format");
}

Instance ReadInstanceFile(const std::filesystem::path& path,
                          FileFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str(), format);
}

void WriteInstanceFile(const std::filesystem::path& path,
                       const Instance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
  out << WriteNative(instance);
}

Instance GenerateRandom(const RandomInstanceSpec& spec,
                        std::int64_t* sampled_nonzeros) {
  if (!(spec.density > 0.0 && spec.density <= 1.0)) {
    throw Error(ErrorCode::kBadDensity,
                "density must lie in (0, 1], got " +
                    std::to_string(spec.density));
  }
  if (spec.num_rows <= 0 || spec.num_cols <= 0) {
    throw Error(ErrorCode::kBadDimension, "m and n must be positive");
  }
  if (spec.cost_lo <= 0 || spec.cost_lo > spec.cost_hi) {
    throw Error(ErrorCode::kInvalidArgument,
                "cost range must satisfy 0 < cost_lo <= cost_hi");
  }
  Rng rng(spec.seed);
  const Index m = spec.num_rows;
  const Index n = spec.num_cols;
  std::vector<std::vector<Index>> rows(m);
  std::vector<Index> col_size(n, 0);
  std::int64_t sampled = 0;
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (rng.Bernoulli(spec.density)) {
        rows[i].push_back(j);
        ++col_size[j];
        ++sampled;
      }
    }
  }
  for (Index i = 0; i < m; ++i) {
    if (rows[i].empty()) {
      const auto j = static_cast<Index>(rng.UniformInt(n));
      rows[i].push_back(j);
      ++col_size[j];
    }
  }
  for (Index j = 0; j < n; ++j) {
    if (col_size[j] == 0) {
      rows[rng.UniformInt(m)].push_back(j);
      ++col_size[j];
    }
  }
  std::vector<Cost> costs(n);
  const auto span = static_cast<std::uint64_t>(spec.cost_hi - spec.cost_lo + 1);
  for (Cost& c : costs) c = spec.cost_lo + static_cast<Cost>(rng.UniformInt(span));
  if (sampled_nonzeros != nullptr) *sampled_nonzeros = sampled;
  return MakeInstance(m, n, std::move(costs), rows, IncidenceKind::kRows);
}

}  // namespace scp
