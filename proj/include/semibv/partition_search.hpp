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
#include <string>
#include <string_view>
#include <vector>

#include "semibv/gridfn.hpp"
#include "semibv/variation.hpp"

namespace semibv {

enum class Method { Auto, BruteForce, JordanFullGrid, BranchAndBound, Greedy };

/// Parses `auto|brute|bb|greedy|jordan`; throws ConfigError otherwise.
Method parse_method(std::string_view spec);
std::string method_name(Method m);

/// Largest grid (points per axis) accepted by enumerate_partitions.
inline constexpr std::size_t kEnumerateMaxPoints = 22;
/// Largest grid accepted by brute_force_sup.
inline constexpr std::size_t kBruteForceMaxPoints = 12;
/// Largest grid accepted by an explicit branch-and-bound request.
inline constexpr std::size_t kBranchAndBoundMaxPoints = 16;
/// `auto` runs branch-and-bound up to this size and greedy beyond.
inline constexpr std::size_t kAutoExactMaxPoints = 14;

/// Supremum of the (single or joint) variation total over grid subpartitions.
struct SupResult {
  double value = 0.0;
  PartitionPair argmax;
  VariationBreakdown breakdown;
  Method method = Method::Auto;
  /// True iff the method is exact.
  bool optimal = false;
};

/// All index subsets of the grid that keep both endpoints, in partition
/// order (minimal partition first). Throws SizeGuardError above
/// kEnumerateMaxPoints.
std::vector<std::vector<std::size_t>> enumerate_partitions(const Grid1D& grid);

/// Exhaustive maximum over every (Π, Π*) pair using the direct evaluator.
/// Ties go to the smallest pair in partition order.
SupResult brute_force_sup(const GridFunction2D& f, const FamilyConfig& cfg);
SupResult brute_force_sup(const GridFunction2D& f, const GridFunction2D& g, const FamilyConfig& cfg);

struct SearchOptions {
  /// Spread the row-subset frontier of branch-and-bound over OpenMP threads.
  /// Results are identical either way.
  bool parallel = true;
};

/// `auto` uses the full grid for wiener(1), branch-and-bound up to
/// kAutoExactMaxPoints and greedy local search beyond. Branch-and-bound
/// returns the same value and argmax as brute force.
SupResult solve_sup(const GridFunction2D& f, const FamilyConfig& cfg, Method method = Method::Auto,
                    SearchOptions options = {});
SupResult solve_sup(const GridFunction2D& f, const GridFunction2D& g, const FamilyConfig& cfg,
                    Method method = Method::Auto, SearchOptions options = {});

/// Decisions already taken by the search: `rows[k]` says whether interior
/// t-index k+1 is in Π, `cols[k]` likewise for Π*. Both are prefixes.
struct PartialSelection {
  std::vector<bool> rows;
  std::vector<bool> cols;
};

/// Admissible upper bound of the variation total over every completion of
/// `partial`. Row, column and mixed sums are maximised independently; the
/// mixed sum through per-column-strip row maxima.
double bb_upper_bound(const GridFunction2D& f, const FamilyConfig& cfg, const PartialSelection& partial);
double bb_upper_bound(const GridFunction2D& f, const GridFunction2D& g, const FamilyConfig& cfg,
                      const PartialSelection& partial);

namespace detail {

SupResult solve(const GridFunction2D& f, const GridFunction2D* g, const FamilyConfig& cfg,
                Method method, SearchOptions options);
SupResult brute_force(const GridFunction2D& f, const GridFunction2D* g, const FamilyConfig& cfg);
double upper_bound(const GridFunction2D& f, const GridFunction2D* g, const FamilyConfig& cfg,
                   const PartialSelection& partial);

} // namespace detail

} // namespace semibv
