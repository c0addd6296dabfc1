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
#include <utility>
#include <vector>

namespace semibv {

enum class SemigroupKind { NonnegReal, RealVector, Interval, Box };

/// A concrete metric semigroup (M, d, +). `dim` is the vector or box
/// dimension and is 1 for the scalar and interval instances.
struct Instance {
  SemigroupKind kind = SemigroupKind::NonnegReal;
  std::size_t dim = 1;

  static Instance nonneg_real() { return {SemigroupKind::NonnegReal, 1}; }
  static Instance real_vector(std::size_t k);
  static Instance interval() { return {SemigroupKind::Interval, 1}; }
  static Instance box(std::size_t k);

  /// Number of doubles stored per element.
  std::size_t payload_size() const;
  /// True when sums of exactly representable payloads stay exact, so laws
  /// hold without tolerance (interval, box).
  bool exact_arithmetic() const;
  std::string name() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// A value of a metric semigroup. Interval and box payloads are stored as
/// consecutive (lo, hi) pairs.
class Element {
public:
  Element() = default;

  static Element scalar(double value);
  static Element vector(std::vector<double> values);
  static Element interval(double lo, double hi);
  static Element box(const std::vector<std::pair<double, double>>& sides);
  /// Builds an element from a raw payload, validating it against `inst`.
  static Element from_payload(const Instance& inst, std::vector<double> payload);

  const Instance& instance() const { return inst_; }
  std::span<const double> payload() const { return payload_; }
  double operator[](std::size_t k) const { return payload_[k]; }

  friend bool operator==(const Element&, const Element&) = default;

private:
  Element(Instance inst, std::vector<double> payload)
      : inst_(inst), payload_(std::move(payload)) {}

  Instance inst_;
  std::vector<double> payload_;
};

/// Semigroup addition: componentwise for scalars and vectors, Minkowski sum
/// for intervals and boxes. Throws InstanceMismatch.
Element add(const Element& a, const Element& b);

/// Translation-invariant metric: |a-b|, Euclidean norm, Hausdorff distance
/// of intervals, and the max over box sides of the interval distance.
double dist(const Element& a, const Element& b);

/// The additive identity of the instance (all payload entries zero).
Element zero(const Instance& inst);

struct LawResult {
  std::string law;
  bool pass = true;
  double worst_violation = 0.0;
};

struct LawReport {
  Instance instance;
  std::size_t samples = 0;
  std::vector<LawResult> laws;

  bool all_pass() const;
  double worst_violation() const;
};

/// Samples `samples` tuples of elements from `inst` (seeded) and checks
/// associativity, commutativity, the metric axioms, translation invariance
/// and the two cross-sum inequalities
///   d(u,v) <= d(u+u', v+v') + d(u', v')
///   d(u+u', v+v') <= d(u,v) + d(u', v').
/// Interval and box samples use integer payloads so the laws must hold
/// exactly; float-backed instances are held to 1e-12 relative.
LawReport verify_semigroup_laws(const Instance& inst, std::size_t samples,
                                std::uint64_t seed);

} // namespace semibv
