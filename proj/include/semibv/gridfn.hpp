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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semibv/json_io.hpp"
#include "semibv/semigroup.hpp"

namespace semibv {

/// Strictly increasing sample points of [0, 1], starting at 0 and ending at 1.
class Grid1D {
public:
  /// Validates the invariants; throws GridEndpointError or NonMonotoneGrid.
  explicit Grid1D(std::vector<double> points);

  /// n+1 equally spaced points k/n.
  static Grid1D uniform(std::size_t intervals);

  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t k) const { return points_[k]; }
  std::span<const double> points() const { return points_; }

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

private:
  std::vector<double> points_;
};

/// Index subsets (Π of grid_t, Π* of grid_s). Both contain the first and last
/// grid index and are strictly increasing.
struct PartitionPair {
  std::vector<std::size_t> pi;
  std::vector<std::size_t> pi_star;

  /// The pair using every grid point.
  static PartitionPair full(std::size_t nt, std::size_t ns);
  /// The pair {0, last} x {0, last}.
  static PartitionPair minimal(std::size_t nt, std::size_t ns);

  /// Throws PartitionError unless both subsets are valid for the grid sizes.
  void validate(std::size_t nt, std::size_t ns) const;

  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

/// Order of partitions of one axis: lexicographic in the inclusion vector of
/// the interior points, with "excluded" before "included". The minimal
/// partition comes first and the full grid last.
bool partition_less(std::span<const std::size_t> a, std::span<const std::size_t> b);
/// Pair order: compares Π first, then Π*.
bool partition_pair_less(const PartitionPair& a, const PartitionPair& b);

/// f: I x I -> M sampled on grid_t x grid_s; values(i, j) sits at
/// (grid_t[i], grid_s[j]).
class GridFunction2D {
public:
  GridFunction2D(Grid1D grid_t, Grid1D grid_s, Instance instance,
                 std::vector<Element> values);

  const Grid1D& grid_t() const { return grid_t_; }
  const Grid1D& grid_s() const { return grid_s_; }
  const Instance& instance() const { return instance_; }
  std::size_t rows() const { return grid_t_.size(); }
  std::size_t cols() const { return grid_s_.size(); }

  const Element& operator()(std::size_t i, std::size_t j) const {
    return values_[i * grid_s_.size() + j];
  }
  std::span<const Element> values() const { return values_; }

  bool same_domain(const GridFunction2D& other) const;

  friend bool operator==(const GridFunction2D&, const GridFunction2D&) = default;

private:
  Grid1D grid_t_;
  Grid1D grid_s_;
  Instance instance_;
  std::vector<Element> values_;
};

/// Throws GridMismatch unless f and g share both grids and the instance.
void require_same_domain(const GridFunction2D& f, const GridFunction2D& g);

/// Parses the JSON function format. Errors: ParseError (malformed JSON or
/// schema), NonMonotoneGrid, GridEndpointError, DimensionMismatch,
/// InvalidElement.
GridFunction2D load_function(std::string_view bytes);
/// Canonical JSON: sorted keys, numbers with 17 significant digits.
std::string save_function(const GridFunction2D& f);

Json function_to_json(const GridFunction2D& f);
GridFunction2D function_from_json(const Json& doc);

/// Test-instance generators.
struct Generator {
  enum class Kind { Constant, SeparableAdditive, Product, RandomWalk };
  Kind kind = Kind::Constant;
  Element constant;
  double a = 0.0;
  double b = 0.0;
  double step = 0.0;

  static Generator constant_value(Element c);
  /// f(t, s) = a t + b s; for intervals [a t, a t + b s], the Minkowski sum of
  /// a point in t and [0, b s].
  static Generator separable_additive(double a, double b);
  /// f(t, s) = t s (real instances only).
  static Generator product();
  /// Row-major walk with uniform increments in [-step, step] per payload
  /// coordinate; reflected to stay inside the instance.
  static Generator random_walk(double step);
};

/// Deterministic in all arguments. Throws GeneratorError when the generator
/// cannot produce values of `instance`.
GridFunction2D synth_function(const Generator& generator, const Grid1D& grid_t,
                              const Grid1D& grid_s, const Instance& instance,
                              std::uint64_t seed);

} // namespace semibv
