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

#include "semibv/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "semibv/error.hpp"
#include "semibv/numeric.hpp"

namespace semibv {

Instance Instance::real_vector(std::size_t k) {
  if (k == 0) throw InvalidElement("real-vector dimension must be positive");
  return {SemigroupKind::RealVector, k};
}

Instance Instance::box(std::size_t k) {
  if (k == 0) throw InvalidElement("box dimension must be positive");
  return {SemigroupKind::Box, k};
}

std::size_t Instance::payload_size() const {
  switch (kind) {
  case SemigroupKind::NonnegReal: return 1;
  case SemigroupKind::RealVector: return dim;
  case SemigroupKind::Interval: return 2;
  case SemigroupKind::Box: return 2 * dim;
  }
  return 0;
}

bool Instance::exact_arithmetic() const {
  return kind == SemigroupKind::Interval || kind == SemigroupKind::Box;
}

std::string Instance::name() const {
  switch (kind) {
  case SemigroupKind::NonnegReal: return "nonneg-real";
  case SemigroupKind::RealVector: return "real-vector(" + std::to_string(dim) + ")";
  case SemigroupKind::Interval: return "interval";
  case SemigroupKind::Box: return "box(" + std::to_string(dim) + ")";
  }
  return "?";
}

namespace {

void validate(const Instance& inst, const std::vector<double>& payload) {
  if (payload.size() != inst.payload_size()) {
    throw InvalidElement("payload of size " + std::to_string(payload.size()) +
                         " does not fit " + inst.name());
  }
  for (double x : payload) {
    if (!std::isfinite(x)) throw InvalidElement("non-finite payload");
  }
  switch (inst.kind) {
  case SemigroupKind::NonnegReal:
    if (payload[0] < 0.0) throw InvalidElement("nonneg-real value is negative");
    break;
  case SemigroupKind::RealVector:
    break;
  case SemigroupKind::Interval:
  case SemigroupKind::Box:
    for (std::size_t k = 0; k < payload.size(); k += 2) {
      if (payload[k] > payload[k + 1]) throw InvalidElement("interval with lo > hi");
    }
    break;
  }
}

void require_same(const Element& a, const Element& b) {
  if (!(a.instance() == b.instance())) {
    throw InstanceMismatch("elements of " + a.instance().name() + " and " +
                           b.instance().name());
  }
}

} // namespace

Element Element::scalar(double value) {
  return from_payload(Instance::nonneg_real(), {value});
}

Element Element::vector(std::vector<double> values) {
  const auto inst = Instance::real_vector(values.size());
  return from_payload(inst, std::move(values));
}

Element Element::interval(double lo, double hi) {
  return from_payload(Instance::interval(), {lo, hi});
}

Element Element::box(const std::vector<std::pair<double, double>>& sides) {
  std::vector<double> payload;
  payload.reserve(2 * sides.size());
  for (const auto& [lo, hi] : sides) {
    payload.push_back(lo);
    payload.push_back(hi);
  }
  return from_payload(Instance::box(sides.size()), std::move(payload));
}

Element Element::from_payload(const Instance& inst, std::vector<double> payload) {
  validate(inst, payload);
  return Element(inst, std::move(payload));
}

Element add(const Element& a, const Element& b) {
  require_same(a, b);
  // Endpoint-wise addition is the Minkowski sum for intervals and boxes.
  std::vector<double> sum(a.payload().size());
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = a[k] + b[k];
  return Element::from_payload(a.instance(), std::move(sum));
}

double dist(const Element& a, const Element& b) {
  require_same(a, b);
  const auto n = a.payload().size();
  switch (a.instance().kind) {
  case SemigroupKind::NonnegReal:
    return std::abs(a[0] - b[0]);
  case SemigroupKind::RealVector: {
    double sq = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double diff = a[k] - b[k];
      sq += diff * diff;
    }
    return std::sqrt(sq);
  }
  case SemigroupKind::Interval:
  case SemigroupKind::Box: {
    double worst = 0.0;
    for (std::size_t k = 0; k < n; k += 2) {
      worst = std::max({worst, std::abs(a[k] - b[k]), std::abs(a[k + 1] - b[k + 1])});
    }
    return worst;
  }
  }
  return 0.0;
}

Element zero(const Instance& inst) {
  return Element::from_payload(inst, std::vector<double>(inst.payload_size(), 0.0));
}

bool LawReport::all_pass() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.pass; });
}

double LawReport::worst_violation() const {
  double worst = 0.0;
  for (const auto& r : laws) worst = std::max(worst, r.worst_violation);
  return worst;
}

namespace {

Element sample_element(const Instance& inst, Rng& rng) {
  std::vector<double> payload(inst.payload_size());
  switch (inst.kind) {
  case SemigroupKind::NonnegReal:
    payload[0] = rng.uniform(0.0, 10.0);
    break;
  case SemigroupKind::RealVector:
    for (auto& x : payload) x = rng.uniform(-10.0, 10.0);
    break;
  case SemigroupKind::Interval:
  case SemigroupKind::Box:
    for (std::size_t k = 0; k < payload.size(); k += 2) {
      const auto lo = static_cast<double>(rng.integer(-1000, 1000));
      payload[k] = lo;
      payload[k + 1] = lo + static_cast<double>(rng.integer(0, 1000));
    }
    break;
  }
  return Element::from_payload(inst, std::move(payload));
}

/// Accumulates the worst violation of one law. `excess` is how far the
/// checked relation is broken (<= 0 means it holds); `magnitude` sets the
/// relative scale.
class LawTracker {
public:
  LawTracker(std::string law, bool exact) : exact_(exact) { result_.law = std::move(law); }

  void record(double excess, double magnitude) {
    const double normalized = excess > 0.0 ? excess / std::max(1.0, magnitude) : 0.0;
    result_.worst_violation = std::max(result_.worst_violation, normalized);
    const double allowed = exact_ ? 0.0 : 1e-12;
    if (normalized > allowed) result_.pass = false;
  }

  LawResult result() const { return result_; }

private:
  bool exact_;
  LawResult result_;
};

} // namespace

LawReport verify_semigroup_laws(const Instance& inst, std::size_t samples,
                                std::uint64_t seed) {
  Rng rng(seed);
  const bool exact = inst.exact_arithmetic();
  LawTracker assoc("associativity", exact), comm("commutativity", exact),
      nonneg("nonnegativity", exact), ident("identity-of-indiscernibles", exact),
      symm("symmetry", exact), tri("triangle", exact),
      transl("translation-invariance", exact), ineq1("cross-sum-lower", exact),
      ineq2("cross-sum-upper", exact);

  for (std::size_t s = 0; s < samples; ++s) {
    const Element u = sample_element(inst, rng);
    const Element v = sample_element(inst, rng);
    const Element w = sample_element(inst, rng);
    const Element ub = sample_element(inst, rng);
    const Element vb = sample_element(inst, rng);

    const Element uv_w = add(add(u, v), w);
    const Element u_vw = add(u, add(v, w));
    assoc.record(dist(uv_w, u_vw), 0.0);
    comm.record(dist(add(u, v), add(v, u)), 0.0);

    const double duv = dist(u, v);
    nonneg.record(-duv, 0.0);
    // d(x,x) = 0, and d = 0 only for equal payloads.
    ident.record(dist(u, u), 0.0);
    const bool equal = u == v;
    ident.record((duv == 0.0) != equal ? 1.0 : 0.0, 0.0);
    symm.record(std::abs(duv - dist(v, u)), duv);

    const double dvw = dist(v, w);
    const double duw = dist(u, w);
    tri.record(duw - (duv + dvw), duw);

    const double shifted = dist(add(u, w), add(v, w));
    transl.record(std::abs(shifted - duv), std::max(shifted, duv));

    const double cross = dist(add(u, ub), add(v, vb));
    const double dbar = dist(ub, vb);
    ineq1.record(duv - (cross + dbar), duv);
    ineq2.record(cross - (duv + dbar), cross);
  }

  LawReport report{inst, samples, {}};
  for (const auto* t : {&assoc, &comm, &nonneg, &ident, &symm, &tri, &transl, &ineq1, &ineq2}) {
    report.laws.push_back(t->result());
  }
  return report;
}

} // namespace semibv
