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

#include "semibv/precompactness.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "semibv/error.hpp"
#include "semibv/json_io.hpp"
#include "semibv/numeric.hpp"

namespace semibv {

void FunctionFamily::validate() const {
  if (members.empty()) throw ParseError("function family is empty");
  if (labels.size() != members.size()) {
    throw DimensionMismatch("family has " + std::to_string(members.size()) + " members but " +
                            std::to_string(labels.size()) + " labels");
  }
  for (const auto& f : members) require_same_domain(members.front(), f);
}

FunctionFamily load_family(std::string_view bytes) {
  const Json doc = parse_json(bytes);
  if (!doc.is_object() || !doc.contains("members") || !doc["members"].is_array()) {
    throw ParseError("family file needs an array \"members\"");
  }
  FunctionFamily family;
  for (const auto& m : doc["members"]) family.members.push_back(function_from_json(m));
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw ParseError("\"labels\" must be an array");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      family.labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t k = 0; k < family.members.size(); ++k) family.labels.push_back("f" + std::to_string(k));
  }
  family.validate();
  return family;
}

std::string save_family(const FunctionFamily& family) {
  family.validate();
  Json doc;
  doc["members"] = Json::array();
  for (const auto& f : family.members) doc["members"].push_back(function_to_json(f));
  doc["labels"] = family.labels;
  return canonical_dump(doc);
}

ProductTuple partition_image(const GridFunction2D& f, const PartitionPair& P) {
  P.validate(f.rows(), f.cols());
  ProductTuple out;
  for (auto i : P.pi) out.t_nodes.push_back(f.grid_t()[i]);
  for (auto j : P.pi_star) out.s_nodes.push_back(f.grid_s()[j]);
  for (auto i : P.pi) {
    for (auto j : P.pi_star) out.entries.push_back(f(i, j));
  }
  return out;
}

double product_rho_prime(const ProductTuple& xi, const ProductTuple& delta, const FamilyConfig& cfg) {
  cfg.validate();
  if (xi.t_nodes != delta.t_nodes || xi.s_nodes != delta.s_nodes ||
      xi.entries.size() != delta.entries.size() ||
      xi.entries.size() != xi.t_nodes.size() * xi.s_nodes.size()) {
    throw DimensionMismatch("product tuples are built on different nodes");
  }
  const auto& t = xi.t_nodes;
  const auto& s = xi.s_nodes;
  const std::size_t n = t.size();
  const std::size_t m = s.size();

  double row = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = dist(add(xi(i, 0), delta(i - 1, 0)), add(xi(i - 1, 0), delta(i, 0)));
    row += cfg.place(cfg.edge_term(d, t[i] - t[i - 1]), i, 1);
  }
  double col = 0.0;
  for (std::size_t j = 1; j < m; ++j) {
    const double d = dist(add(xi(0, j), delta(0, j - 1)), add(xi(0, j - 1), delta(0, j)));
    col += cfg.place(cfg.edge_term(d, s[j] - s[j - 1]), 1, j);
  }
  double mixed = 0.0;
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = 1; i < n; ++i) {
      const Element lhs = add(add(add(xi(i, j), xi(i - 1, j - 1)), delta(i, j - 1)), delta(i - 1, j));
      const Element rhs = add(add(add(delta(i, j), delta(i - 1, j - 1)), xi(i, j - 1)), xi(i - 1, j));
      mixed += cfg.place(cfg.cell_term(dist(lhs, rhs), t[i] - t[i - 1], s[j] - s[j - 1]), i, j);
    }
  }
  return dist(xi(0, 0), delta(0, 0)) + (cfg.outer(row) + cfg.outer(col) + cfg.outer(mixed));
}

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// (a, b) with a < b for the k-th packed pair.
std::pair<std::size_t, std::size_t> unpack(std::size_t k, std::size_t n) {
  std::size_t a = 0;
  while (k >= n - 1 - a) {
    k -= n - 1 - a;
    ++a;
  }
  return {a, a + 1 + k};
}

std::size_t pack(std::size_t a, std::size_t b, std::size_t n) {
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

} // namespace

PairSuprema::PairSuprema(const FunctionFamily& family, const FamilyConfig& cfg, bool parallel)
    : family_(&family), cfg_(cfg) {
  family.validate();
  cfg.validate();
  const std::size_t n = family.size();
  const auto pairs = static_cast<std::int64_t>(pair_count(n));
  sups_.assign(static_cast<std::size_t>(pairs), 0.0);
  // Pairs fan out over threads; each search then runs serially.
  const SearchOptions inner{.parallel = !parallel};
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const auto [a, b] = unpack(static_cast<std::size_t>(k), n);
    sups_[static_cast<std::size_t>(k)] =
        solve_sup(family.members[a], family.members[b], cfg_, Method::Auto, inner).value;
  }
}

double PairSuprema::sup(std::size_t a, std::size_t b) const {
  if (a == b) return 0.0;
  if (a > b) std::swap(a, b);
  return sups_[pack(a, b, family_->size())];
}

double PairSuprema::defect(const PartitionPair& P, bool parallel) const {
  const std::size_t n = family_->size();
  const auto pairs = static_cast<std::int64_t>(pair_count(n));
  double worst = 0.0; // diagonal pairs
#pragma omp parallel for reduction(max : worst) schedule(static) if (parallel)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const auto [a, b] = unpack(static_cast<std::size_t>(k), n);
    const double on_p =
        joint_variation_on_partition(family_->members[a], family_->members[b], P, cfg_).total;
    worst = std::max(worst, sups_[static_cast<std::size_t>(k)] - on_p);
  }
  return worst;
}

double equivariation_defect(const FunctionFamily& family, const PartitionPair& P,
                            const FamilyConfig& cfg) {
  return PairSuprema(family, cfg).defect(P);
}

EquivariationCertificate find_equivariation_witness(const PairSuprema& sups, double epsilon) {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  const auto& first = sups.family().members.front();
  PartitionPair current = PartitionPair::full(first.rows(), first.cols());

  EquivariationCertificate best{epsilon, current, sups.defect(current), false};
  if (best.defect <= epsilon) {
    best.holds = true;
    return best;
  }
  for (;;) {
    std::optional<PartitionPair> next;
    double next_defect = std::numeric_limits<double>::infinity();
    for (int axis = 0; axis < 2; ++axis) {
      const auto& idx = axis == 0 ? current.pi : current.pi_star;
      for (std::size_t k = 1; k + 1 < idx.size(); ++k) {
        PartitionPair trial = current;
        auto& trial_idx = axis == 0 ? trial.pi : trial.pi_star;
        trial_idx.erase(trial_idx.begin() + static_cast<std::ptrdiff_t>(k));
        const double d = sups.defect(trial);
        if (d < next_defect) {
          next_defect = d;
          next = std::move(trial);
        }
      }
    }
    if (!next) break;
    current = std::move(*next);
    if (next_defect < best.defect) best = {epsilon, current, next_defect, false};
    if (next_defect <= epsilon) {
      best.holds = true;
      return best;
    }
  }
  return best;
}

EquivariationCertificate find_equivariation_witness(const FunctionFamily& family, double epsilon,
                                                    const FamilyConfig& cfg) {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  return find_equivariation_witness(PairSuprema(family, cfg), epsilon);
}

std::vector<Element> pointwise_net(const FunctionFamily& family, std::size_t i, std::size_t j,
                                   double epsilon) {
  family.validate();
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  const auto& first = family.members.front();
  if (i >= first.rows() || j >= first.cols()) throw PartitionError("grid index out of range");

  std::vector<Element> values;
  for (const auto& f : family.members) values.push_back(f(i, j));
  std::vector<Element> centers{values.front()};
  std::vector<double> nearest(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) nearest[k] = dist(values[k], centers.back());
  for (;;) {
    const auto far = std::max_element(nearest.begin(), nearest.end());
    if (*far <= epsilon) break;
    centers.push_back(values[static_cast<std::size_t>(far - nearest.begin())]);
    for (std::size_t k = 0; k < values.size(); ++k) {
      nearest[k] = std::min(nearest[k], dist(values[k], centers.back()));
    }
  }
  return centers;
}

EpsilonNet build_epsilon_net(const FunctionFamily& family, double epsilon, const FamilyConfig& cfg) {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  EpsilonNet net;
  net.certificate = find_equivariation_witness(family, epsilon / 2.0, cfg);
  net.certificate.epsilon = epsilon / 2.0;
  if (!net.certificate.holds) return net;

  net.radius = epsilon - net.certificate.defect;
  const PartitionPair& witness = net.certificate.witness;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const bool covered = std::any_of(net.centers.begin(), net.centers.end(), [&](std::size_t c) {
      return rho_on_partition(family.members[k], family.members[c], witness, cfg) <= net.radius;
    });
    if (!covered) net.centers.push_back(k);
  }
  return net;
}

NetCheck verify_epsilon_net(const FunctionFamily& family, const std::vector<std::size_t>& centers,
                            double epsilon, const FamilyConfig& cfg) {
  family.validate();
  for (auto c : centers) {
    if (c >= family.size()) throw PartitionError("center index outside the family");
  }
  NetCheck out;
  if (centers.empty()) {
    out.worst = std::numeric_limits<double>::infinity();
    out.offender = family.labels.front();
    return out;
  }
  const auto members = static_cast<std::int64_t>(family.size());
  std::vector<double> nearest(family.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < members; ++k) {
    double best = std::numeric_limits<double>::infinity();
    for (auto c : centers) {
      best = std::min(best, rho(family.members[static_cast<std::size_t>(k)], family.members[c], cfg));
    }
    nearest[static_cast<std::size_t>(k)] = best;
  }
  std::size_t worst_at = 0;
  for (std::size_t k = 1; k < nearest.size(); ++k) {
    if (nearest[k] > nearest[worst_at]) worst_at = k;
  }
  out.worst = nearest[worst_at];
  out.ok = leq_rel(out.worst, epsilon, 1e-9);
  if (!out.ok) out.offender = family.labels[worst_at];
  return out;
}

} // namespace semibv
