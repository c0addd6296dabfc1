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

// Acceptance gate: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "semibv/partition_search.hpp"
#include "semibv/precompactness.hpp"
#include "semibv/suites.hpp"

namespace semibv {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome from_suite(const SuiteReport& r) {
  Outcome o;
  std::size_t cases = 0, bad = 0;
  double worst = -INFINITY;
  for (const auto& c : r.checks) {
    cases += c.cases;
    bad += c.violations;
    worst = std::max(worst, c.worst_margin);
    if (c.violations && o.detail.size() < 200) o.detail += c.name + " ";
  }
  o.pass = r.pass();
  o.detail = std::to_string(r.checks.size()) + " checks, " + std::to_string(cases) + " cases, " +
             std::to_string(bad) + " violations, worst margin " + fmt(worst) +
             (o.detail.empty() ? "" : "; failing: " + o.detail);
  return o;
}

Outcome semigroup_laws() {
  Outcome o;
  for (const auto& inst : {Instance::nonneg_real(), Instance::real_vector(3), Instance::interval(),
                           Instance::box(3)}) {
    const LawReport r = verify_semigroup_laws(inst, 1000, 2026);
    const bool ok = r.all_pass() && (!inst.exact_arithmetic() || r.worst_violation() == 0.0) &&
                    r.worst_violation() <= 1e-12;
    o.pass &= ok;
    o.detail += inst.name() + " worst " + fmt(r.worst_violation()) + (ok ? "" : " FAIL") + "; ";
  }
  return o;
}

Outcome search_oracle() {
  Outcome o;
  std::size_t n = 0;
  double worst = 0;
  const auto f = oracle::scalar_fn({0, 0.5, 1}, {0, 1}, {{0, 0}, {1, 1}, {2, 2}});
  const SupResult coarse = brute_force_sup(f, FamilyConfig::wiener(2));
  const SupResult coarse_auto = solve_sup(f, FamilyConfig::wiener(2));
  o.pass &= coarse.value == 2.0 && coarse.argmax.pi == std::vector<std::size_t>{0, 2} &&
            coarse_auto.value == 2.0 && coarse_auto.argmax == coarse.argmax;
  for (const auto& cfg : standard_families()) {
    Rng rng(4000);
    o.pass &= oracle::near(solve_sup(f, cfg).value, brute_force_sup(f, cfg).value, 1e-12);
    for (int k = 0; k < 100; ++k) {
      const Instance inst = standard_instances()[k % 4];
      const auto nt = static_cast<std::size_t>(rng.integer(2, 6));
      const auto ns = static_cast<std::size_t>(rng.integer(2, 6));
      const auto a = random_function(inst, nt, ns, rng);
      const auto b = random_function(inst, a.grid_t(), a.grid_s(), rng);
      const GridFunction2D* g = k % 2 ? &b : nullptr;
      const double fast = g ? solve_sup(a, *g, cfg).value : solve_sup(a, cfg).value;
      const double exact = g ? brute_force_sup(a, *g, cfg).value : brute_force_sup(a, cfg).value;
      const double independent = oracle::sup(a, g, cfg);
      const double scale = std::max({1.0, std::abs(fast), std::abs(exact)});
      worst = std::max({worst, std::abs(fast - exact) / scale, std::abs(fast - independent) / scale});
      ++n;
    }
  }
  o.pass &= worst <= 1e-12;
  o.detail = std::to_string(n) + " instances + coarse-optimum (sup " + fmt(coarse.value) +
             "), worst relative gap " + fmt(worst);
  return o;
}

Outcome group_case() {
  Rng rng(5000);
  const FamilyConfig cfg = FamilyConfig::wiener(1);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    const auto f = random_function(Instance::real_vector(1), static_cast<std::size_t>(rng.integer(2, 8)),
                                   static_cast<std::size_t>(rng.integer(2, 8)), rng);
    const auto g = random_function(Instance::real_vector(1), f.grid_t(), f.grid_s(), rng);
    const double want = std::abs(f(0, 0)[0] - g(0, 0)[0]) + oracle::difference_v1(f, g);
    const double got = rho(f, g, cfg);
    worst = std::max(worst, std::abs(got - want) / std::max({1.0, got, want}));
  }
  return {worst <= 1e-12, "200 pairs, worst relative gap " + fmt(worst)};
}

Grid1D dyadic_grid(Rng& rng) {
  std::vector<double> pts{0.0};
  for (int k = 1; k < 16; ++k)
    if (rng.integer(0, 3) == 0 && pts.size() < 4) pts.push_back(k / 16.0);
  pts.push_back(1.0);
  return Grid1D(std::move(pts));
}

Outcome separable_kill() {
  Rng rng(6000);
  std::size_t evaluations = 0;
  bool ok = true;
  for (int k = 0; k < 100; ++k) {
    const Instance inst = standard_instances()[k % 4];
    const bool signed_ok = inst.kind == SemigroupKind::RealVector || inst.kind == SemigroupKind::Interval ||
                           inst.kind == SemigroupKind::Box;
    const double a = static_cast<double>(rng.integer(signed_ok ? -4 : 0, 4));
    const double b = static_cast<double>(rng.integer(0, 4));
    const Grid1D t = dyadic_grid(rng), s = dyadic_grid(rng);
    const auto f = synth_function(Generator::separable_additive(a, b), t, s, inst, 0);
    for (const auto& cfg : standard_families())
      for (const auto& pi : oracle::subsets(t.size()))
        for (const auto& ps : oracle::subsets(s.size())) {
          ok &= variation_on_partition(f, PartitionPair{pi, ps}, cfg).mixed == 0.0;
          ++evaluations;
        }
  }
  return {ok, "100 instances, " + std::to_string(evaluations) + " (family, partition) evaluations"};
}

Outcome isometry() {
  std::size_t n = 0;
  bool ok = true;
  for (const auto& cfg : standard_families()) {
    Rng rng(7000);
    for (int k = 0; k < 200; ++k) {
      const Instance inst = standard_instances()[k % 4];
      const auto f = random_function(inst, static_cast<std::size_t>(rng.integer(2, 6)),
                                     static_cast<std::size_t>(rng.integer(2, 6)), rng);
      const auto g = random_function(inst, f.grid_t(), f.grid_s(), rng);
      const auto pis = oracle::subsets(f.rows());
      const auto pss = oracle::subsets(f.cols());
      const PartitionPair P{pis[rng.integer(0, static_cast<std::int64_t>(pis.size()) - 1)],
                            pss[rng.integer(0, static_cast<std::int64_t>(pss.size()) - 1)]};
      ok &= product_rho_prime(partition_image(f, P), partition_image(g, P), cfg) ==
            rho_on_partition(f, g, P, cfg);
      ++n;
    }
  }
  return {ok, std::to_string(n) + " (f, g, P) triples, exact equality"};
}

Outcome theta_net() {
  const Grid1D grid = Grid1D::uniform(4);
  FunctionFamily fam;
  for (int k = 0; k <= 100; ++k) {
    const double theta = k / 100.0;
    std::vector<Element> v;
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = 0; j < grid.size(); ++j) v.push_back(Element::scalar(theta * grid[i] * grid[j]));
    fam.members.emplace_back(grid, grid, Instance::nonneg_real(), std::move(v));
    fam.labels.push_back("theta" + std::to_string(k));
  }
  const FamilyConfig cfg = FamilyConfig::wiener(1);
  const EpsilonNet net = build_epsilon_net(fam, 0.1, cfg);
  const NetCheck check = verify_epsilon_net(fam, net.centers, 0.1, cfg);
  const bool ok = net.certificate.holds && net.centers.size() <= 11 && check.ok;
  return {ok, std::to_string(net.centers.size()) + " centers, defect " + fmt(net.certificate.defect) +
                  ", worst full-rho distance to a center " + fmt(check.worst)};
}

Outcome completeness_smoke() {
  Outcome o;
  for (const auto& cfg : standard_families()) {
    // Degree of homogeneity of the variation part in the group case.
    double degree = 1.0;
    if (cfg.family == FamilyKind::Wiener && cfg.p < 1) degree = cfg.p;
    if (cfg.family == FamilyKind::Korenblum && !cfg.korenblum_dp_variant) degree = 1.0 / cfg.p;
    Rng rng(8000);
    double worst = 0;
    bool monotone = true;
    for (int k = 0; k < 20; ++k) {
      const auto f = random_function(Instance::real_vector(1), 4, 4, rng);
      const auto g = random_function(Instance::real_vector(1), f.grid_t(), f.grid_s(), rng);
      auto f_u = [&](double u) {
        std::vector<Element> v;
        for (std::size_t i = 0; i < f.values().size(); ++i)
          v.push_back(Element::vector({f.values()[i][0] + g.values()[i][0] / u}));
        return GridFunction2D(f.grid_t(), f.grid_s(), f.instance(), std::move(v));
      };
      const double base = std::abs(g(0, 0)[0]);
      const double rho1 = rho(f_u(1), f, cfg);
      double prev = INFINITY;
      for (double u : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        const double r = rho(f_u(u), f, cfg);
        monotone &= r <= prev;
        prev = r;
        // Base-point term scales by 1/u, the variation part by u^-degree.
        const double want = base / u + (rho1 - base) * std::pow(u, -degree);
        worst = std::max(worst, std::abs(r - want) / std::max({1.0, r, want}));
      }
    }
    const bool ok = monotone && worst <= 1e-9;
    o.pass &= ok;
    o.detail += cfg.name() + " deg " + fmt(degree) + " gap " + fmt(worst) + (ok ? "" : " FAIL") + "; ";
  }
  return o;
}

} // namespace
} // namespace semibv

int main() {
  using namespace semibv;
  const std::vector<Criterion> criteria{
      {1, "semigroup laws, 1000 samples per instance", 10,
       [] { return semigroup_laws(); }},
      {2, "metric axioms of rho, 200 triples per family and instance", 120,
       [] { return from_suite(run_suite("axioms", 42, 200)); }},
      {3, "joint variation subadditivity and reverse triangle, 500 pairs per family", 120,
       [] { return from_suite(run_suite("lemmas", 2026, 500)); }},
      {4, "auto search equals exhaustive search on grids up to 6x6", 300,
       [] { return search_oracle(); }},
      {5, "group case: rho = |f00 - g00| + V1(f - g), 200 pairs", 60,
       [] { return group_case(); }},
      {6, "separable functions have zero mixed term, 100 instances", 60,
       [] { return separable_kill(); }},
      {7, "evaluation map is an isometry, 200 triples per family", 60,
       [] { return isometry(); }},
      {8, "epsilon-net of the theta family at eps 0.1 under wiener(1)", 60,
       [] { return theta_net(); }},
      {9, "rho(f + g/u, f) decreases with the expected scaling", 60,
       [] { return completeness_smoke(); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s criterion %d: %s [%s] (%.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id,
                c.title, o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", over time");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
