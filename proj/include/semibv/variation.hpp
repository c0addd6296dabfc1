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

#include "semibv/gridfn.hpp"
#include "semibv/json_io.hpp"

namespace semibv {

enum class FamilyKind { Wiener, Riesz, Waterman, Korenblum };

/// Which bounded-variation functional to evaluate, with its parameters.
///
///  - wiener(p), p > 0: terms d^p; outer root 1/p for p >= 1, none for p < 1.
///  - riesz(p), p > 1: terms d^p / (interval length)^(p-1); outer root 1/p.
///  - waterman: terms lambda(i, j) d with i, j the 1-based positions of the
///    partition intervals; no outer root. Shipped rule: lambda = 1/(i j).
///  - korenblum(kappa, p), p > 1: terms d / kappa(length); outer root 1/p.
///    With `korenblum_dp_variant` the inner terms become d^p / kappa(length).
///    Shipped distortion: kappa(t) = t^alpha, 0 < alpha < 1.
struct FamilyConfig {
  FamilyKind family = FamilyKind::Wiener;
  double p = 1.0;
  double kappa_alpha = 0.5;
  bool korenblum_dp_variant = false;

  static FamilyConfig wiener(double p);
  static FamilyConfig riesz(double p);
  static FamilyConfig waterman_harmonic();
  static FamilyConfig korenblum_power(double alpha, double p, bool dp_variant = false);

  /// Throws ConfigError when the parameters are outside the family's range.
  void validate() const;

  /// Waterman weight for the i-th row and j-th column interval (1-based).
  double lambda(std::size_t i, std::size_t j) const;
  /// Korenblum distortion.
  double kappa(double t) const;

  /// True when the outer map applied to each summed term is the identity.
  bool linear_outer() const;
  /// The outer map: x^(1/p) or identity.
  double outer(double sum) const;
  /// True when term weights depend on the interval position (Waterman).
  bool positional() const { return family == FamilyKind::Waterman; }

  /// Weighted term of one row or column interval, before the positional
  /// factor.
  double edge_term(double d, double length) const;
  /// Weighted term of one cell, before the positional factor.
  double cell_term(double d, double dt, double ds) const;
  /// Applies lambda(i, j) for Waterman, identity otherwise.
  double place(double term, std::size_t i, std::size_t j) const {
    return positional() ? lambda(i, j) * term : term;
  }

  std::string name() const;
};

Json family_to_json(const FamilyConfig& cfg);
/// Parses the family-config JSON and validates it (ParseError / ConfigError).
FamilyConfig family_from_json(const Json& doc);

/// Row, column and mixed terms of one partition pair.
struct VariationBreakdown {
  double row = 0.0;
  double col = 0.0;
  double mixed = 0.0;
  double total = 0.0;
};

/// V of a single function over the fixed pair P. Sums run in a fixed order
/// (row and column ascending; mixed with the column index outer), so results
/// are bit-reproducible.
VariationBreakdown variation_on_partition(const GridFunction2D& f, const PartitionPair& P,
                                          const FamilyConfig& cfg);

/// Joint variation of f and g over P, built from the cross sums
/// f(t_i) + g(t_{i-1}) against f(t_{i-1}) + g(t_i). Symmetric in (f, g).
VariationBreakdown joint_variation_on_partition(const GridFunction2D& f, const GridFunction2D& g,
                                                const PartitionPair& P, const FamilyConfig& cfg);

/// d(f(0,0), g(0,0)) + joint total over P.
double rho_on_partition(const GridFunction2D& f, const GridFunction2D& g, const PartitionPair& P,
                        const FamilyConfig& cfg);

/// The metric rho: base-point distance plus the supremum over grid
/// subpartitions of the joint variation (solved with the automatic method).
double rho(const GridFunction2D& f, const GridFunction2D& g, const FamilyConfig& cfg);

namespace detail {

// Distances entering the row, column and cell terms between grid indices
// a < b (t axis) and c < e (s axis). With g == nullptr they are the
// single-function distances.
double row_distance(const GridFunction2D& f, const GridFunction2D* g, std::size_t a, std::size_t b);
double col_distance(const GridFunction2D& f, const GridFunction2D* g, std::size_t c, std::size_t e);
double cell_distance(const GridFunction2D& f, const GridFunction2D* g, std::size_t a, std::size_t b,
                     std::size_t c, std::size_t e);

VariationBreakdown evaluate(const GridFunction2D& f, const GridFunction2D* g, const PartitionPair& P,
                            const FamilyConfig& cfg);

} // namespace detail

} // namespace semibv
