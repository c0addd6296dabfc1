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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semibv/gridfn.hpp"
#include "semibv/numeric.hpp"
#include "semibv/semigroup.hpp"
#include "semibv/variation.hpp"

namespace semibv {

/// Family configurations exercised by the property suites:
/// wiener p in {0.5, 1, 2}, riesz(2), waterman(harmonic), korenblum(alpha 0.5, p 2).
std::vector<FamilyConfig> standard_families();
/// nonneg-real, real-vector(2), interval, box(2).
std::vector<Instance> standard_instances();

/// Grid with `points` points: 0, sorted distinct uniform interior points, 1.
Grid1D random_grid(std::size_t points, Rng& rng);
/// Random-walk function on random grids of the given sizes.
GridFunction2D random_function(const Instance& inst, std::size_t nt, std::size_t ns, Rng& rng);
/// Random-walk function on the given grids.
GridFunction2D random_function(const Instance& inst, const Grid1D& t, const Grid1D& s, Rng& rng);

/// One checked property. `worst_margin` is the largest normalised value of
/// (lhs - rhs) over all cases of a relation lhs <= rhs; <= tolerance means
/// the property held.
struct SuiteCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  double worst_margin = -std::numeric_limits<double>::infinity();
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<SuiteCheck> checks;

  bool pass() const;
};

/// Runs `axioms`, `lemmas`, `semigroup` or `search-oracle` with `count`
/// cases per family/instance. `only` restricts the family list. Throws
/// ConfigError for an unknown suite or count == 0.
SuiteReport run_suite(std::string_view suite, std::uint64_t seed, std::size_t count,
                      const std::optional<FamilyConfig>& only = std::nullopt);

} // namespace semibv
