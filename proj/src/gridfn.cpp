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

#include "semibv/gridfn.hpp"

#include <algorithm>
#include <cmath>

#include "semibv/error.hpp"
#include "semibv/json_io.hpp"
#include "semibv/numeric.hpp"

namespace semibv {

Grid1D::Grid1D(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw GridEndpointError("grid needs at least the points 0 and 1");
  if (points_.front() != 0.0 || points_.back() != 1.0) {
    throw GridEndpointError("grid must start at 0 and end at 1");
  }
  for (std::size_t k = 1; k < points_.size(); ++k) {
    if (!(points_[k] > points_[k - 1])) {
      throw NonMonotoneGrid("grid is not strictly increasing at index " + std::to_string(k));
    }
  }
}

Grid1D Grid1D::uniform(std::size_t intervals) {
  if (intervals == 0) throw GridEndpointError("uniform grid needs at least one interval");
  std::vector<double> pts(intervals + 1);
  for (std::size_t k = 0; k <= intervals; ++k) {
    pts[k] = static_cast<double>(k) / static_cast<double>(intervals);
  }
  return Grid1D(std::move(pts));
}

PartitionPair PartitionPair::full(std::size_t nt, std::size_t ns) {
  PartitionPair p;
  for (std::size_t i = 0; i < nt; ++i) p.pi.push_back(i);
  for (std::size_t j = 0; j < ns; ++j) p.pi_star.push_back(j);
  return p;
}

PartitionPair PartitionPair::minimal(std::size_t nt, std::size_t ns) {
  return {{0, nt - 1}, {0, ns - 1}};
}

namespace {

void validate_axis(std::span<const std::size_t> idx, std::size_t n, const char* axis) {
  if (idx.size() < 2 || idx.front() != 0 || idx.back() != n - 1) {
    throw PartitionError(std::string(axis) + " must contain the first and last grid index");
  }
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (idx[k] <= idx[k - 1]) throw PartitionError(std::string(axis) + " is not strictly increasing");
  }
}

} // namespace

void PartitionPair::validate(std::size_t nt, std::size_t ns) const {
  validate_axis(pi, nt, "pi");
  validate_axis(pi_star, ns, "pi_star");
}

bool partition_less(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  // At the first differing position the list holding the larger index skips
  // the smaller one, so its inclusion vector is smaller.
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return a.size() < b.size();
}

bool partition_pair_less(const PartitionPair& a, const PartitionPair& b) {
  if (a.pi != b.pi) return partition_less(a.pi, b.pi);
  return partition_less(a.pi_star, b.pi_star);
}

GridFunction2D::GridFunction2D(Grid1D grid_t, Grid1D grid_s, Instance instance,
                               std::vector<Element> values)
    : grid_t_(std::move(grid_t)), grid_s_(std::move(grid_s)), instance_(instance),
      values_(std::move(values)) {
  if (values_.size() != grid_t_.size() * grid_s_.size()) {
    throw DimensionMismatch("expected " + std::to_string(grid_t_.size() * grid_s_.size()) +
                            " values, got " + std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (!(v.instance() == instance_)) {
      throw InstanceMismatch("value of " + v.instance().name() + " in a " + instance_.name() +
                             " function");
    }
  }
}

bool GridFunction2D::same_domain(const GridFunction2D& other) const {
  return grid_t_ == other.grid_t_ && grid_s_ == other.grid_s_ && instance_ == other.instance_;
}

void require_same_domain(const GridFunction2D& f, const GridFunction2D& g) {
  if (!(f.instance() == g.instance())) {
    throw InstanceMismatch("functions over " + f.instance().name() + " and " +
                           g.instance().name());
  }
  if (!(f.grid_t() == g.grid_t()) || !(f.grid_s() == g.grid_s())) {
    throw GridMismatch("functions are sampled on different grids");
  }
}

namespace {

std::vector<double> number_list(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(std::string("missing array \"") + key + "\"");
  }
  std::vector<double> out;
  for (const auto& x : doc[key]) {
    if (!x.is_number()) throw ParseError(std::string("non-numeric entry in \"") + key + "\"");
    out.push_back(x.get<double>());
  }
  return out;
}

} // namespace

GridFunction2D load_function(std::string_view bytes) { return function_from_json(parse_json(bytes)); }

GridFunction2D function_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("function file must be a JSON object");
  Grid1D grid_t(number_list(doc, "grid_t"));
  Grid1D grid_s(number_list(doc, "grid_s"));
  if (!doc.contains("semigroup")) throw ParseError("missing \"semigroup\"");
  const Instance inst = instance_from_json(doc["semigroup"]);
  if (!doc.contains("values") || !doc["values"].is_array()) {
    throw ParseError("missing array \"values\"");
  }
  const Json& rows = doc["values"];
  if (rows.size() != grid_t.size()) {
    throw DimensionMismatch("values has " + std::to_string(rows.size()) + " rows, grid_t has " +
                            std::to_string(grid_t.size()) + " points");
  }
  std::vector<Element> values;
  values.reserve(grid_t.size() * grid_s.size());
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("each entry of \"values\" must be an array");
    if (row.size() != grid_s.size()) {
      throw DimensionMismatch("values row has " + std::to_string(row.size()) +
                              " entries, grid_s has " + std::to_string(grid_s.size()) + " points");
    }
    for (const auto& v : row) values.push_back(element_from_json(inst, v));
  }
  return GridFunction2D(std::move(grid_t), std::move(grid_s), inst, std::move(values));
}

Json function_to_json(const GridFunction2D& f) {
  Json doc;
  doc["grid_t"] = Json(std::vector<double>(f.grid_t().points().begin(), f.grid_t().points().end()));
  doc["grid_s"] = Json(std::vector<double>(f.grid_s().points().begin(), f.grid_s().points().end()));
  doc["semigroup"] = instance_to_json(f.instance());
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < f.cols(); ++j) row.push_back(element_to_json(f(i, j)));
    rows.push_back(std::move(row));
  }
  doc["values"] = std::move(rows);
  return doc;
}

std::string save_function(const GridFunction2D& f) { return canonical_dump(function_to_json(f)); }

Generator Generator::constant_value(Element c) {
  Generator g;
  g.kind = Kind::Constant;
  g.constant = std::move(c);
  return g;
}

Generator Generator::separable_additive(double a, double b) {
  Generator g;
  g.kind = Kind::SeparableAdditive;
  g.a = a;
  g.b = b;
  return g;
}

Generator Generator::product() {
  Generator g;
  g.kind = Kind::Product;
  return g;
}

Generator Generator::random_walk(double step) {
  if (!(step >= 0.0)) throw GeneratorError("random-walk step must be nonnegative");
  Generator g;
  g.kind = Kind::RandomWalk;
  g.step = step;
  return g;
}

namespace {

std::vector<double> filled(const Instance& inst, double lo, double hi) {
  std::vector<double> payload(inst.payload_size());
  if (inst.kind == SemigroupKind::Interval || inst.kind == SemigroupKind::Box) {
    for (std::size_t k = 0; k < payload.size(); k += 2) {
      payload[k] = lo;
      payload[k + 1] = hi;
    }
  } else {
    std::fill(payload.begin(), payload.end(), lo);
  }
  return payload;
}

Element separable_value(const Instance& inst, double a, double b, double t, double s) {
  if (inst.kind == SemigroupKind::Interval || inst.kind == SemigroupKind::Box) {
    return Element::from_payload(inst, filled(inst, a * t, a * t + b * s));
  }
  return Element::from_payload(inst, filled(inst, a * t + b * s, 0.0));
}

Element walk_step(const Element& base, double step, Rng& rng) {
  std::vector<double> p(base.payload().begin(), base.payload().end());
  switch (base.instance().kind) {
  case SemigroupKind::NonnegReal:
    p[0] = std::abs(p[0] + step * rng.uniform(-1.0, 1.0));
    break;
  case SemigroupKind::RealVector:
    for (auto& x : p) x += step * rng.uniform(-1.0, 1.0);
    break;
  case SemigroupKind::Interval:
  case SemigroupKind::Box:
    for (std::size_t k = 0; k < p.size(); k += 2) {
      const double width = std::abs((p[k + 1] - p[k]) + step * rng.uniform(-1.0, 1.0));
      p[k] += step * rng.uniform(-1.0, 1.0);
      p[k + 1] = p[k] + width;
    }
    break;
  }
  return Element::from_payload(base.instance(), std::move(p));
}

} // namespace

GridFunction2D synth_function(const Generator& generator, const Grid1D& grid_t,
                              const Grid1D& grid_s, const Instance& instance,
                              std::uint64_t seed) {
  const bool real = instance.kind == SemigroupKind::NonnegReal ||
                    instance.kind == SemigroupKind::RealVector;
  std::vector<Element> values;
  values.reserve(grid_t.size() * grid_s.size());

  switch (generator.kind) {
  case Generator::Kind::Constant:
    if (!(generator.constant.instance() == instance)) {
      throw GeneratorError("constant of " + generator.constant.instance().name() +
                           " for a " + instance.name() + " function");
    }
    values.assign(grid_t.size() * grid_s.size(), generator.constant);
    break;
  case Generator::Kind::SeparableAdditive:
    if (instance.kind == SemigroupKind::NonnegReal && (generator.a < 0.0 || generator.b < 0.0)) {
      throw GeneratorError("separable-additive over nonneg-real needs a, b >= 0");
    }
    if (!real && generator.b < 0.0) {
      throw GeneratorError("separable-additive over intervals needs b >= 0");
    }
    for (std::size_t i = 0; i < grid_t.size(); ++i) {
      for (std::size_t j = 0; j < grid_s.size(); ++j) {
        values.push_back(separable_value(instance, generator.a, generator.b, grid_t[i], grid_s[j]));
      }
    }
    break;
  case Generator::Kind::Product:
    if (!real) throw GeneratorError("product generator needs a real instance");
    for (std::size_t i = 0; i < grid_t.size(); ++i) {
      for (std::size_t j = 0; j < grid_s.size(); ++j) {
        values.push_back(Element::from_payload(instance, filled(instance, grid_t[i] * grid_s[j], 0.0)));
      }
    }
    break;
  case Generator::Kind::RandomWalk: {
    Rng rng(seed);
    const std::size_t ns = grid_s.size();
    for (std::size_t i = 0; i < grid_t.size(); ++i) {
      for (std::size_t j = 0; j < ns; ++j) {
        if (i == 0 && j == 0) {
          values.push_back(walk_step(zero(instance), generator.step, rng));
        } else {
          const Element& base = j > 0 ? values[i * ns + j - 1] : values[(i - 1) * ns];
          values.push_back(walk_step(base, generator.step, rng));
        }
      }
    }
    break;
  }
  }
  return GridFunction2D(grid_t, grid_s, instance, std::move(values));
}

} // namespace semibv
