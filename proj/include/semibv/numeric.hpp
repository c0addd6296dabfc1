/*
 * Copyright 2026 The semibv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace semibv {

/// Seeded generator with a platform-independent mapping to doubles
/// (std::uniform_real_distribution is implementation-defined).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  std::uint64_t next() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

/// Scale used by relative tolerances: max(1, larger magnitude).
inline double tolerance_scale(double a, double b) {
  return std::max({1.0, std::abs(a), std::abs(b)});
}

/// a <= b up to `rel` relative slack.
inline bool leq_rel(double a, double b, double rel) {
  return a <= b + rel * tolerance_scale(a, b);
}

inline bool near_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * tolerance_scale(a, b);
}

} // namespace semibv
