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

#include "semibv/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "semibv/error.hpp"
#include "semibv/partition_search.hpp"

namespace semibv {

std::vector<FamilyConfig> standard_families() {
  return {FamilyConfig::wiener(0.5),         FamilyConfig::wiener(1.0),
          FamilyConfig::wiener(2.0),         FamilyConfig::riesz(2.0),
          FamilyConfig::waterman_harmonic(), FamilyConfig::korenblum_power(0.5, 2.0)};
}

std::vector<Instance> standard_instances() {
  return {Instance::nonneg_real(), Instance::real_vector(2), Instance::interval(), Instance::box(2)};
}

Grid1D random_grid(std::size_t points, Rng& rng) {
  if (points < 2) throw GridEndpointError("a grid needs at least 2 points");
  for (;;) {
    std::vector<double> pts{0.0};
    for (std::size_t k = 0; k + 2 < points; ++k) pts.push_back(rng.uniform(0.02, 0.98));
    pts.push_back(1.0);
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) == pts.end()) return Grid1D(std::move(pts));
  }
}

GridFunction2D random_function(const Instance& inst, const Grid1D& t, const Grid1D& s, Rng& rng) {
  return synth_function(Generator::random_walk(1.0), t, s, inst, rng.next());
}

GridFunction2D random_function(const Instance& inst, std::size_t nt, std::size_t ns, Rng& rng) {
  const Grid1D t = random_grid(nt, rng);
  const Grid1D s = random_grid(ns, rng);
  return random_function(inst, t, s, rng);
}

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SuiteCheck& c) { return c.violations == 0; });
}

namespace {

class Checks {
public:
  /// Records lhs <= rhs with relative tolerance `tol`.
  void leq(const std::string& name, double lhs, double rhs, double tol) {
    auto& c = slot(name);
    const double margin = (lhs - rhs) / tolerance_scale(lhs, rhs);
    ++c.cases;
    c.worst_margin = std::max(c.worst_margin, margin);
    if (margin > tol || std::isnan(margin)) ++c.violations;
  }
  /// Records a boolean property; margin 1 on failure, 0 otherwise.
  void holds(const std::string& name, bool ok) {
    auto& c = slot(name);
    ++c.cases;
    c.worst_margin = std::max(c.worst_margin, ok ? 0.0 : 1.0);
    if (!ok) ++c.violations;
  }

  std::vector<SuiteCheck> take() { return std::move(checks_); }

private:
  SuiteCheck& slot(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, checks_.size()).first;
      checks_.push_back(SuiteCheck{name});
    }
    return checks_[it->second];
  }

  std::vector<SuiteCheck> checks_;
  std::map<std::string, std::size_t> index_;
};

constexpr std::size_t kAxiomGrid = 4;
constexpr std::size_t kOracleMaxGrid = 6;

void semigroup_suite(std::uint64_t seed, std::size_t count, Checks& checks) {
  for (const auto& inst : standard_instances()) {
    const LawReport report = verify_semigroup_laws(inst, count, seed);
    for (const auto& law : report.laws) {
      // Worst violations are already normalised; the law's own tolerance
      // decides pass/fail.
      checks.holds(inst.name() + "/" + law.law, law.pass);
    }
  }
}

void axioms_suite(const std::vector<FamilyConfig>& families, std::uint64_t seed, std::size_t count,
                  Checks& checks) {
  for (const auto& cfg : families) {
    for (const auto& inst : standard_instances()) {
      Rng rng(seed);
      const std::string tag = cfg.name() + "/" + inst.name();
      for (std::size_t k = 0; k < count; ++k) {
        const Grid1D t = random_grid(kAxiomGrid, rng);
        const Grid1D s = random_grid(kAxiomGrid, rng);
        const GridFunction2D f = random_function(inst, t, s, rng);
        const GridFunction2D g = random_function(inst, t, s, rng);
        const GridFunction2D h = random_function(inst, t, s, rng);
        const double fg = rho(f, g, cfg);
        const double gf = rho(g, f, cfg);
        checks.holds(tag + "/symmetry", fg == gf);
        checks.holds(tag + "/identity", rho(f, f, cfg) == 0.0);
        checks.holds(tag + "/separation", f == g || fg > 0.0);
        checks.leq(tag + "/triangle", fg, rho(f, h, cfg) + rho(h, g, cfg), 1e-9);
      }
    }
  }
}

void lemmas_suite(const std::vector<FamilyConfig>& families, std::uint64_t seed, std::size_t count,
                  Checks& checks) {
  const auto instances = standard_instances();
  for (const auto& cfg : families) {
    Rng rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
      const Instance& inst = instances[k % instances.size()];
      const Grid1D t = random_grid(kAxiomGrid, rng);
      const Grid1D s = random_grid(kAxiomGrid, rng);
      const GridFunction2D f = random_function(inst, t, s, rng);
      const GridFunction2D g = random_function(inst, t, s, rng);
      const double vf = solve_sup(f, cfg).value;
      const double vg = solve_sup(g, cfg).value;
      const double vfg = solve_sup(f, g, cfg).value;
      checks.leq(cfg.name() + "/joint<=sum", vfg, vf + vg, 1e-9);
      checks.leq(cfg.name() + "/|V(f)-V(g)|<=V(f,g)", std::abs(vf - vg), vfg, 1e-9);

      const PartitionPair P = PartitionPair::full(t.size(), s.size());
      checks.leq(cfg.name() + "/joint<=sum-on-partition",
                 joint_variation_on_partition(f, g, P, cfg).total,
                 variation_on_partition(f, P, cfg).total + variation_on_partition(g, P, cfg).total,
                 1e-9);
    }
  }
}

GridFunction2D coarse_optimum_function() {
  const Grid1D t({0.0, 0.5, 1.0});
  const Grid1D s({0.0, 1.0});
  std::vector<Element> v;
  for (double x : {0.0, 1.0, 2.0}) {
    v.push_back(Element::scalar(x));
    v.push_back(Element::scalar(x));
  }
  return GridFunction2D(t, s, Instance::nonneg_real(), std::move(v));
}

void oracle_suite(const std::vector<FamilyConfig>& families, std::uint64_t seed, std::size_t count,
                  Checks& checks) {
  const auto instances = standard_instances();
  for (const auto& cfg : families) {
    Rng rng(seed);
    const std::string tag = cfg.name();
    {
      const GridFunction2D f = coarse_optimum_function();
      checks.leq(tag + "/auto==brute", std::abs(solve_sup(f, cfg).value - brute_force_sup(f, cfg).value),
                 0.0, 1e-12);
    }
    for (std::size_t k = 0; k < count; ++k) {
      const Instance& inst = instances[k % instances.size()];
      const auto nt = static_cast<std::size_t>(rng.integer(2, kOracleMaxGrid));
      const auto ns = static_cast<std::size_t>(rng.integer(2, kOracleMaxGrid));
      const Grid1D t = random_grid(nt, rng);
      const Grid1D s = random_grid(ns, rng);
      const GridFunction2D f = random_function(inst, t, s, rng);
      SupResult fast, exact;
      if (k % 2 == 0) {
        fast = solve_sup(f, cfg);
        exact = brute_force_sup(f, cfg);
      } else {
        const GridFunction2D g = random_function(inst, t, s, rng);
        fast = solve_sup(f, g, cfg);
        exact = brute_force_sup(f, g, cfg);
      }
      checks.leq(tag + "/auto==brute", std::abs(fast.value - exact.value), 0.0, 1e-12);
      checks.leq(tag + "/argmax-certificate", std::abs(fast.breakdown.total - fast.value), 0.0, 1e-12);
    }
  }
}

} // namespace

SuiteReport run_suite(std::string_view suite, std::uint64_t seed, std::size_t count,
                      const std::optional<FamilyConfig>& only) {
  if (count == 0) throw ConfigError("suite count must be at least 1");
  const std::vector<FamilyConfig> families =
      only ? std::vector<FamilyConfig>{*only} : standard_families();
  Checks checks;
  if (suite == "semigroup") {
    semigroup_suite(seed, count, checks);
  } else if (suite == "axioms") {
    axioms_suite(families, seed, count, checks);
  } else if (suite == "lemmas") {
    lemmas_suite(families, seed, count, checks);
  } else if (suite == "search-oracle") {
    oracle_suite(families, seed, count, checks);
  } else {
    throw ConfigError("unknown suite \"" + std::string(suite) +
                      "\" (axioms|lemmas|semigroup|search-oracle)");
  }
  return SuiteReport{std::string(suite), seed, count, checks.take()};
}

} // namespace semibv
