// Copyright 2026 The rtbt Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace rtbt {

/// A path or heuristic cost, stored as an integer count of the problem's
/// cost quantum epsilon. Infinity is a distinguished value that absorbs
/// addition.
class Cost {
 public:
  using Units = std::int64_t;

  constexpr Cost() = default;
  constexpr explicit Cost(Units units) : units_(units) {}

  static constexpr Cost infinity() { return Cost(kInfUnits); }
  static constexpr Cost zero() { return Cost(0); }

  constexpr Units units() const { return units_; }
  constexpr bool is_infinite() const { return units_ == kInfUnits; }
  constexpr bool is_finite() const { return units_ != kInfUnits; }

  constexpr Cost operator+(Cost other) const {
    if (is_infinite() || other.is_infinite()) return infinity();
    return Cost(units_ + other.units_);
  }
  constexpr Cost& operator+=(Cost other) { return *this = *this + other; }

  // Only defined for finite operands; callers compare before subtracting.
  constexpr Cost operator-(Cost other) const { return Cost(units_ - other.units_); }

  constexpr auto operator<=>(const Cost&) const = default;

  /// Value in real units for a given quantum.
  double to_real(double epsilon) const {
    return is_infinite() ? std::numeric_limits<double>::infinity()
                         : static_cast<double>(units_) * epsilon;
  }

 private:
  static constexpr Units kInfUnits = std::numeric_limits<Units>::max();
  Units units_ = 0;
};

/// gamma * d rounded down onto the quantum grid. Rounding down keeps every
/// f-value at or below its real-valued counterpart, so heuristic updates
/// built from it stay admissible.
Cost weighted(double gamma, Cost d);

/// Converts a real value to quantum units; throws InputError unless the
/// value is a non-negative integer multiple of epsilon.
Cost quantize(double value, double epsilon, const std::string& what);

/// Number of decimal places needed to print multiples of epsilon exactly
/// (capped at 9).
int decimals_for(double epsilon);

/// Formats a cost in real units: "inf" for infinity, otherwise fixed-point
/// with decimals_for(epsilon) places.
std::string format_cost(Cost c, double epsilon);

/// Shortest decimal text that reads back as exactly the same double.
std::string format_real(double value);

}  // namespace rtbt
