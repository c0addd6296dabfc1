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

#include "semibv/variation.hpp"

#include <cmath>
#include <cstdio>

#include "semibv/error.hpp"

namespace semibv {

FamilyConfig FamilyConfig::wiener(double p) {
  FamilyConfig cfg;
  cfg.family = FamilyKind::Wiener;
  cfg.p = p;
  cfg.validate();
  return cfg;
}

FamilyConfig FamilyConfig::riesz(double p) {
  FamilyConfig cfg;
  cfg.family = FamilyKind::Riesz;
  cfg.p = p;
  cfg.validate();
  return cfg;
}

FamilyConfig FamilyConfig::waterman_harmonic() {
  FamilyConfig cfg;
  cfg.family = FamilyKind::Waterman;
  return cfg;
}

FamilyConfig FamilyConfig::korenblum_power(double alpha, double p, bool dp_variant) {
  FamilyConfig cfg;
  cfg.family = FamilyKind::Korenblum;
  cfg.kappa_alpha = alpha;
  cfg.p = p;
  cfg.korenblum_dp_variant = dp_variant;
  cfg.validate();
  return cfg;
}

void FamilyConfig::validate() const {
  const bool finite_p = std::isfinite(p);
  switch (family) {
  case FamilyKind::Wiener:
    if (!finite_p || !(p > 0.0)) throw ConfigError("wiener needs p > 0");
    break;
  case FamilyKind::Riesz:
    if (!finite_p || !(p > 1.0)) throw ConfigError("riesz needs p > 1");
    break;
  case FamilyKind::Waterman:
    break;
  case FamilyKind::Korenblum:
    if (!finite_p || !(p > 1.0)) throw ConfigError("korenblum needs p > 1");
    if (!(kappa_alpha > 0.0 && kappa_alpha < 1.0)) {
      throw ConfigError("korenblum power distortion needs 0 < alpha < 1");
    }
    break;
  }
}

double FamilyConfig::lambda(std::size_t i, std::size_t j) const {
  return 1.0 / (static_cast<double>(i) * static_cast<double>(j));
}

double FamilyConfig::kappa(double t) const { return std::pow(t, kappa_alpha); }

bool FamilyConfig::linear_outer() const {
  return family == FamilyKind::Waterman || (family == FamilyKind::Wiener && p <= 1.0);
}

double FamilyConfig::outer(double sum) const {
  if (linear_outer()) return sum;
  return std::pow(sum, 1.0 / p);
}

namespace {

double power(double x, double p) { return p == 1.0 ? x : std::pow(x, p); }

} // namespace

double FamilyConfig::edge_term(double d, double length) const {
  switch (family) {
  case FamilyKind::Wiener: return power(d, p);
  case FamilyKind::Riesz: return std::pow(d, p) / std::pow(length, p - 1.0);
  case FamilyKind::Waterman: return d;
  case FamilyKind::Korenblum:
    return (korenblum_dp_variant ? std::pow(d, p) : d) / kappa(length);
  }
  return 0.0;
}

double FamilyConfig::cell_term(double d, double dt, double ds) const {
  switch (family) {
  case FamilyKind::Wiener: return power(d, p);
  case FamilyKind::Riesz:
    return std::pow(d, p) / (std::pow(dt, p - 1.0) * std::pow(ds, p - 1.0));
  case FamilyKind::Waterman: return d;
  case FamilyKind::Korenblum:
    return (korenblum_dp_variant ? std::pow(d, p) : d) / (kappa(dt) * kappa(ds));
  }
  return 0.0;
}

std::string FamilyConfig::name() const {
  char buf[96];
  switch (family) {
  case FamilyKind::Wiener: std::snprintf(buf, sizeof buf, "wiener(p=%g)", p); break;
  case FamilyKind::Riesz: std::snprintf(buf, sizeof buf, "riesz(p=%g)", p); break;
  case FamilyKind::Waterman: std::snprintf(buf, sizeof buf, "waterman(harmonic)"); break;
  case FamilyKind::Korenblum:
    std::snprintf(buf, sizeof buf, "korenblum(alpha=%g,p=%g%s)", kappa_alpha, p,
                  korenblum_dp_variant ? ",dp" : "");
    break;
  }
  return buf;
}

Json family_to_json(const FamilyConfig& cfg) {
  Json doc;
  switch (cfg.family) {
  case FamilyKind::Wiener:
    doc = {{"family", "wiener"}, {"p", cfg.p}};
    break;
  case FamilyKind::Riesz:
    doc = {{"family", "riesz"}, {"p", cfg.p}};
    break;
  case FamilyKind::Waterman:
    doc = {{"family", "waterman"}, {"lambda", "harmonic"}};
    break;
  case FamilyKind::Korenblum:
    doc = {{"family", "korenblum"},
           {"p", cfg.p},
           {"kappa", {{"kind", "power"}, {"alpha", cfg.kappa_alpha}}},
           {"korenblum_dp_variant", cfg.korenblum_dp_variant}};
    break;
  }
  return doc;
}

FamilyConfig family_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("family") || !doc["family"].is_string()) {
    throw ParseError("family config must be an object with a string \"family\"");
  }
  auto number = [&](const char* key) {
    if (!doc.contains(key)) throw ConfigError(std::string("missing \"") + key + "\"");
    if (!doc[key].is_number()) throw ParseError(std::string("\"") + key + "\" must be a number");
    return doc[key].get<double>();
  };
  const auto family = doc["family"].get<std::string>();
  FamilyConfig cfg;
  if (family == "wiener") {
    cfg.family = FamilyKind::Wiener;
    cfg.p = number("p");
  } else if (family == "riesz") {
    cfg.family = FamilyKind::Riesz;
    cfg.p = number("p");
  } else if (family == "waterman") {
    cfg.family = FamilyKind::Waterman;
    if (doc.contains("lambda") && doc["lambda"] != "harmonic") {
      throw ConfigError("unsupported waterman lambda rule " + doc["lambda"].dump());
    }
  } else if (family == "korenblum") {
    cfg.family = FamilyKind::Korenblum;
    cfg.p = number("p");
    if (!doc.contains("kappa")) throw ConfigError("korenblum needs \"kappa\"");
    const Json& kappa = doc["kappa"];
    if (!kappa.is_object() || kappa.value("kind", "") != "power" || !kappa.contains("alpha") ||
        !kappa["alpha"].is_number()) {
      throw ConfigError("korenblum kappa must be {\"kind\":\"power\",\"alpha\":number}");
    }
    cfg.kappa_alpha = kappa["alpha"].get<double>();
    if (doc.contains("korenblum_dp_variant")) {
      if (!doc["korenblum_dp_variant"].is_boolean()) {
        throw ParseError("\"korenblum_dp_variant\" must be a boolean");
      }
      cfg.korenblum_dp_variant = doc["korenblum_dp_variant"].get<bool>();
    }
  } else {
    throw ConfigError("unknown family \"" + family + "\"");
  }
  cfg.validate();
  return cfg;
}

namespace detail {

double row_distance(const GridFunction2D& f, const GridFunction2D* g, std::size_t a, std::size_t b) {
  if (g == nullptr) return dist(f(b, 0), f(a, 0));
  return dist(add(f(b, 0), (*g)(a, 0)), add(f(a, 0), (*g)(b, 0)));
}

double col_distance(const GridFunction2D& f, const GridFunction2D* g, std::size_t c, std::size_t e) {
  if (g == nullptr) return dist(f(0, e), f(0, c));
  return dist(add(f(0, e), (*g)(0, c)), add(f(0, c), (*g)(0, e)));
}

double cell_distance(const GridFunction2D& f, const GridFunction2D* g, std::size_t a, std::size_t b,
                     std::size_t c, std::size_t e) {
  if (g == nullptr) return dist(add(f(b, e), f(a, c)), add(f(b, c), f(a, e)));
  const GridFunction2D& h = *g;
  return dist(add(add(add(f(b, e), f(a, c)), h(b, c)), h(a, e)),
              add(add(add(h(b, e), h(a, c)), f(b, c)), f(a, e)));
}

VariationBreakdown evaluate(const GridFunction2D& f, const GridFunction2D* g, const PartitionPair& P,
                            const FamilyConfig& cfg) {
  cfg.validate();
  if (g != nullptr) require_same_domain(f, *g);
  P.validate(f.rows(), f.cols());
  const Grid1D& t = f.grid_t();
  const Grid1D& s = f.grid_s();
  const auto& pi = P.pi;
  const auto& ps = P.pi_star;

  double row = 0.0;
  for (std::size_t i = 1; i < pi.size(); ++i) {
    const double d = row_distance(f, g, pi[i - 1], pi[i]);
    row += cfg.place(cfg.edge_term(d, t[pi[i]] - t[pi[i - 1]]), i, 1);
  }
  double col = 0.0;
  for (std::size_t j = 1; j < ps.size(); ++j) {
    const double d = col_distance(f, g, ps[j - 1], ps[j]);
    col += cfg.place(cfg.edge_term(d, s[ps[j]] - s[ps[j - 1]]), 1, j);
  }
  double mixed = 0.0;
  for (std::size_t j = 1; j < ps.size(); ++j) {
    for (std::size_t i = 1; i < pi.size(); ++i) {
      const double d = cell_distance(f, g, pi[i - 1], pi[i], ps[j - 1], ps[j]);
      mixed += cfg.place(cfg.cell_term(d, t[pi[i]] - t[pi[i - 1]], s[ps[j]] - s[ps[j - 1]]), i, j);
    }
  }

  VariationBreakdown out;
  out.row = cfg.outer(row);
  out.col = cfg.outer(col);
  out.mixed = cfg.outer(mixed);
  out.total = out.row + out.col + out.mixed;
  return out;
}

} // namespace detail

VariationBreakdown variation_on_partition(const GridFunction2D& f, const PartitionPair& P,
                                          const FamilyConfig& cfg) {
  return detail::evaluate(f, nullptr, P, cfg);
}

VariationBreakdown joint_variation_on_partition(const GridFunction2D& f, const GridFunction2D& g,
                                                const PartitionPair& P, const FamilyConfig& cfg) {
  return detail::evaluate(f, &g, P, cfg);
}

double rho_on_partition(const GridFunction2D& f, const GridFunction2D& g, const PartitionPair& P,
                        const FamilyConfig& cfg) {
  const VariationBreakdown joint = joint_variation_on_partition(f, g, P, cfg);
  return dist(f(0, 0), g(0, 0)) + joint.total;
}

} // namespace semibv
