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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semibv/gridfn.hpp"
#include "semibv/partition_search.hpp"
#include "semibv/variation.hpp"

namespace semibv {

/// A finite set of functions sharing grids and instance, with one label each.
struct FunctionFamily {
  std::vector<GridFunction2D> members;
  std::vector<std::string> labels;

  /// Throws DimensionMismatch / GridMismatch / ParseError on broken invariants.
  void validate() const;
  std::size_t size() const { return members.size(); }
};

/// `{"members":[function objects...], "labels":[...]}`.
FunctionFamily load_family(std::string_view bytes);
std::string save_family(const FunctionFamily& family);

/// The image T f = {f(t_i, s_j)} of a function under evaluation at the
/// nodes of a partition pair. Carries the node coordinates, which the Riesz
/// and Korenblum weights need.
struct ProductTuple {
  std::vector<double> t_nodes;
  std::vector<double> s_nodes;
  std::vector<Element> entries; // (t_nodes.size() x s_nodes.size()), row-major

  const Element& operator()(std::size_t i, std::size_t j) const {
    return entries[i * s_nodes.size() + j];
  }
};

ProductTuple partition_image(const GridFunction2D& f, const PartitionPair& P);

/// Tuple-space distance: d(xi_00, delta_00) plus the three family-weighted
/// cross sums over the tuple nodes. Throws DimensionMismatch unless both
/// tuples have the same nodes.
double product_rho_prime(const ProductTuple& xi, const ProductTuple& delta, const FamilyConfig& cfg);

/// Outcome of a witness search: `holds` iff defect <= epsilon.
struct EquivariationCertificate {
  double epsilon = 0.0;
  PartitionPair witness;
  double defect = 0.0;
  bool holds = false;
};

/// Precomputed suprema V(f, g) of every unordered pair of a family, so the
/// defect of many candidate partitions can be scored cheaply.
class PairSuprema {
public:
  PairSuprema(const FunctionFamily& family, const FamilyConfig& cfg, bool parallel = true);

  /// sup over partitions of the joint variation of members a and b.
  double sup(std::size_t a, std::size_t b) const;
  /// max over pairs of sup - joint total on P (the diagonal contributes 0).
  double defect(const PartitionPair& P, bool parallel = true) const;

  const FunctionFamily& family() const { return *family_; }
  const FamilyConfig& config() const { return cfg_; }

private:
  const FunctionFamily* family_;
  FamilyConfig cfg_;
  std::vector<double> sups_; // packed upper triangle, a < b
};

double equivariation_defect(const FunctionFamily& family, const PartitionPair& P,
                            const FamilyConfig& cfg);

/// Tries the full grid, then greedily drops the point whose removal gives
/// the smallest defect, down to the minimal pair. Returns the first
/// certificate within epsilon, otherwise the best one seen with
/// holds = false. A failed search does not show that the family is not
/// equivariated.
EquivariationCertificate find_equivariation_witness(const FunctionFamily& family, double epsilon,
                                                    const FamilyConfig& cfg);
EquivariationCertificate find_equivariation_witness(const PairSuprema& sups, double epsilon);

/// Farthest-point cover of {f(t_i, s_j) : f in family} with radius epsilon.
/// Centers are member values.
std::vector<Element> pointwise_net(const FunctionFamily& family, std::size_t i, std::size_t j,
                                   double epsilon);

struct EpsilonNet {
  std::vector<std::size_t> centers; // member indices
  EquivariationCertificate certificate;
  /// Covering radius used under the witness pseudo-metric.
  double radius = 0.0;
};

/// Finds a witness at epsilon/2, then covers the family greedily (first
/// uncovered member becomes a center) under rho on the witness with radius
/// epsilon - defect, so rho <= defect + rho_witness <= epsilon. Empty centers
/// when no witness holds.
EpsilonNet build_epsilon_net(const FunctionFamily& family, double epsilon, const FamilyConfig& cfg);

struct NetCheck {
  bool ok = false;
  double worst = 0.0;
  std::optional<std::string> offender;
};

/// Evaluates the full rho from each member to its nearest center.
NetCheck verify_epsilon_net(const FunctionFamily& family, const std::vector<std::size_t>& centers,
                            double epsilon, const FamilyConfig& cfg);

} // namespace semibv
