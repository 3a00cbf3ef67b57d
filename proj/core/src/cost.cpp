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

#include "rtbt/cost.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "rtbt/errors.hpp"

namespace rtbt {

Cost weighted(double gamma, Cost d) {
  if (d.is_infinite()) return d;
  if (gamma == 1.0) return d;
  const double scaled = gamma * static_cast<double>(d.units());
  return Cost(static_cast<Cost::Units>(std::floor(scaled + 1e-9)));
}

Cost quantize(double value, double epsilon, const std::string& what) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (!std::isfinite(value) || value < 0.0)
    throw InputError(what + ": value must be finite and non-negative");
  const double n = std::round(value / epsilon);
  if (std::abs(n * epsilon - value) > 1e-9 * std::max(1.0, std::abs(value)))
    throw InputError(what + ": " + std::to_string(value) +
                     " is not a multiple of epsilon " + std::to_string(epsilon));
  return Cost(static_cast<Cost::Units>(n));
}

int decimals_for(double epsilon) {
  double scaled = epsilon;
  for (int p = 0; p < 9; ++p) {
    if (std::abs(scaled - std::round(scaled)) <= 1e-9 * std::max(1.0, scaled)) return p;
    scaled *= 10.0;
  }
  return 9;
}

std::string format_cost(Cost c, double epsilon) {
  if (c.is_infinite()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals_for(epsilon), c.to_real(epsilon));
  return buf;
}

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

}  // namespace rtbt
