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

#ifndef SCP_ENERGY_H_
#define SCP_ENERGY_H_

#include <cmath>
#include <compare>
#include <cstdint>

#include "scp/instance.h"

namespace scp {

// Exact fixed-point energy: an integer count of 2^-20 cost units.
//
// Integer costs convert without loss, and energy is only ever divided by
// Portion(), which returns floor(fraction * x). The remainder is computed by
// subtraction, so every split conserves the total exactly.
class Energy {
 public:
  static constexpr std::int64_t kTicksPerUnit = std::int64_t{1} << 20;

  constexpr Energy() = default;

  static constexpr Energy FromTicks(std::int64_t ticks) {
    Energy e;
    e.ticks_ = ticks;
    return e;
  }
  static constexpr Energy FromCost(Cost cost) {
    return FromTicks(cost * kTicksPerUnit);
  }
  // Rounds to the nearest tick.
  static Energy FromValue(double value) {
    return FromTicks(std::llround(value * static_cast<double>(kTicksPerUnit)));
  }

  constexpr std::int64_t ticks() const { return ticks_; }
  double value() const {
    return static_cast<double>(ticks_) / static_cast<double>(kTicksPerUnit);
  }

  // floor(fraction * *this) for fraction in [0, 1], clamped to [0, *this].
  Energy Portion(double fraction) const {
    auto part = static_cast<std::int64_t>(
        std::floor(static_cast<double>(ticks_) * fraction));
    if (part < 0) part = 0;
    if (part > ticks_) part = ticks_;
    return FromTicks(part);
  }

  constexpr Energy operator+(Energy other) const {
    return FromTicks(ticks_ + other.ticks_);
  }
  constexpr Energy operator-(Energy other) const {
    return FromTicks(ticks_ - other.ticks_);
  }
  constexpr Energy& operator+=(Energy other) {
    ticks_ += other.ticks_;
    return *this;
  }
  constexpr Energy& operator-=(Energy other) {
    ticks_ -= other.ticks_;
    return *this;
  }
  constexpr auto operator<=>(const Energy&) const = default;

 private:
  std::int64_t ticks_ = 0;
};

}  // namespace scp

#endif  // SCP_ENERGY_H_
