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

#include <gtest/gtest.h>

#include <omp.h>

#include <cmath>

#include "oracles.hpp"
#include "semibv/error.hpp"
#include "semibv/partition_search.hpp"
#include "semibv/suites.hpp"

namespace semibv {
namespace {

using Idx = std::vector<std::size_t>;

GridFunction2D row_profile(std::vector<double> values) {
  std::vector<std::vector<double>> rows;
  for (double v : values) rows.push_back({v, v});
  return oracle::scalar_fn({0, 0.5, 1}, {0, 1}, rows);
}

TEST(Enumerate, CountsAndOrder) {
  EXPECT_EQ(enumerate_partitions(Grid1D::uniform(1)).size(), 1u);
  EXPECT_EQ(enumerate_partitions(Grid1D::uniform(2)).size(), 2u);
  const auto five = enumerate_partitions(Grid1D::uniform(4));
  ASSERT_EQ(five.size(), 8u);
  EXPECT_EQ(five.front(), (Idx{0, 4}));
  EXPECT_EQ(five.back(), (Idx{0, 1, 2, 3, 4}));
  for (std::size_t k = 1; k < five.size(); ++k) EXPECT_TRUE(partition_less(five[k - 1], five[k]));
  EXPECT_EQ(enumerate_partitions(Grid1D::uniform(11)).size(), 1024u);
  EXPECT_THROW(enumerate_partitions(Grid1D::uniform(22)), SizeGuardError);
}

TEST(Method, Parse) {
  EXPECT_EQ(parse_method("auto"), Method::Auto);
  EXPECT_EQ(parse_method("brute"), Method::BruteForce);
  EXPECT_EQ(parse_method("bb"), Method::BranchAndBound);
  EXPECT_EQ(parse_method("greedy"), Method::Greedy);
  EXPECT_EQ(parse_method("jordan"), Method::JordanFullGrid);
  EXPECT_THROW(parse_method("simplex"), ConfigError);
  EXPECT_EQ(method_name(Method::BruteForce), "brute-force");
}

TEST(BruteForce, WienerTwoPeak) {
  const auto r = brute_force_sup(row_profile({0, 1, 0}), FamilyConfig::wiener(2));
  EXPECT_DOUBLE_EQ(r.value, std::sqrt(2.0));
  EXPECT_EQ(r.argmax.pi, (Idx{0, 1, 2}));
  EXPECT_TRUE(r.optimal);
}

TEST(BruteForce, WienerTwoCoarseOptimum) {
  const auto f = row_profile({0, 1, 2});
  const auto r = brute_force_sup(f, FamilyConfig::wiener(2));
  EXPECT_EQ(r.value, 2.0);
  EXPECT_EQ(r.argmax.pi, (Idx{0, 2}));
  const auto fine = variation_on_partition(f, PartitionPair::full(3, 2), FamilyConfig::wiener(2));
  EXPECT_DOUBLE_EQ(fine.total, std::sqrt(2.0));
}

TEST(BruteForce, ConstantPicksMinimalPartition) {
  const auto f = synth_function(Generator::constant_value(Element::scalar(1)), Grid1D::uniform(4),
                                Grid1D::uniform(3), Instance::nonneg_real(), 0);
  for (const auto& cfg : standard_families()) {
    for (Method m : {Method::Auto, Method::BruteForce, Method::BranchAndBound}) {
      if (m == Method::Auto && cfg.family == FamilyKind::Wiener && cfg.p == 1.0) continue;
      const auto r = solve_sup(f, cfg, m);
      EXPECT_EQ(r.value, 0.0);
      EXPECT_EQ(r.argmax, PartitionPair::minimal(5, 4)) << cfg.name();
    }
  }
}

TEST(BruteForce, SizeGuard) {
  const auto f = synth_function(Generator::product(), Grid1D::uniform(12), Grid1D::uniform(2),
                                Instance::nonneg_real(), 0);
  EXPECT_THROW(brute_force_sup(f, FamilyConfig::wiener(2)), SizeGuardError);
}

TEST(Solve, AutoMatchesIndependentOracle) {
  Rng rng(1234);
  for (const auto& cfg : standard_families()) {
    for (int k = 0; k < 12; ++k) {
      const Instance inst = standard_instances()[k % 4];
      const auto f = random_function(inst, 2 + k % 4, 2 + (k / 4) % 4, rng);
      const auto g = random_function(inst, f.grid_t(), f.grid_s(), rng);
      const auto single = solve_sup(f, cfg);
      EXPECT_TRUE(oracle::near(single.value, oracle::sup(f, nullptr, cfg), 1e-12)) << cfg.name();
      const auto joint = solve_sup(f, g, cfg);
      EXPECT_TRUE(oracle::near(joint.value, oracle::sup(f, &g, cfg), 1e-12)) << cfg.name();
      EXPECT_TRUE(single.optimal);
    }
  }
}

TEST(Solve, BranchAndBoundIsBitIdenticalToBruteForce) {
  Rng rng(77);
  for (const auto& cfg : standard_families()) {
    for (int k = 0; k < 15; ++k) {
      const Instance inst = standard_instances()[k % 4];
      const auto f = random_function(inst, 2 + k % 6, 2 + (k * 7) % 6, rng);
      const auto g = random_function(inst, f.grid_t(), f.grid_s(), rng);
      const auto bb = solve_sup(f, g, cfg, Method::BranchAndBound);
      const auto bf = brute_force_sup(f, g, cfg);
      EXPECT_EQ(bb.value, bf.value) << cfg.name();
      EXPECT_EQ(bb.argmax, bf.argmax) << cfg.name();
      EXPECT_EQ(bb.method, Method::BranchAndBound);
    }
  }
}

TEST(Solve, TiesResolveToSmallestPair) {
  // Values 0,1,2,3 along t: wiener(1) row variation is 3 on every partition.
  std::vector<std::vector<double>> rows{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  const auto f = oracle::scalar_fn({0, 0.2, 0.6, 1}, {0, 1}, rows);
  const FamilyConfig cfg = FamilyConfig::wiener(1);
  EXPECT_EQ(brute_force_sup(f, cfg).argmax.pi, (Idx{0, 3}));
  EXPECT_EQ(solve_sup(f, cfg, Method::BranchAndBound).argmax.pi, (Idx{0, 3}));
}

TEST(Solve, SerialAndParallelAgree) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  Rng rng(5);
  for (const auto& cfg : standard_families()) {
    const auto f = random_function(Instance::interval(), 9, 8, rng);
    const auto g = random_function(Instance::interval(), f.grid_t(), f.grid_s(), rng);
    const auto a = solve_sup(f, g, cfg, Method::BranchAndBound, SearchOptions{true});
    const auto b = solve_sup(f, g, cfg, Method::BranchAndBound, SearchOptions{false});
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.argmax, b.argmax);
    EXPECT_EQ(a.breakdown.total, b.breakdown.total);
  }
  omp_set_num_threads(saved);
}

TEST(Solve, ArgmaxCertificate) {
  Rng rng(6);
  for (const auto& cfg : standard_families()) {
    for (Method m : {Method::Auto, Method::BruteForce, Method::BranchAndBound, Method::Greedy}) {
      const auto f = random_function(Instance::box(2), 5, 6, rng);
      const auto r = solve_sup(f, cfg, m);
      const auto again = variation_on_partition(f, r.argmax, cfg);
      EXPECT_TRUE(oracle::near(again.total, r.value, 1e-12));
      EXPECT_EQ(r.breakdown.total, r.value);
    }
  }
}

TEST(Solve, JordanOnlyForWienerOne) {
  const auto f = row_profile({0, 1, 2});
  EXPECT_THROW(solve_sup(f, FamilyConfig::wiener(2), Method::JordanFullGrid), ConfigError);
  EXPECT_THROW(solve_sup(f, FamilyConfig::waterman_harmonic(), Method::JordanFullGrid), ConfigError);
  const auto r = solve_sup(f, FamilyConfig::wiener(1), Method::JordanFullGrid);
  EXPECT_EQ(r.argmax, PartitionPair::full(3, 2));
  EXPECT_TRUE(r.optimal);
  EXPECT_EQ(solve_sup(f, FamilyConfig::wiener(1)).method, Method::JordanFullGrid);
}

TEST(Solve, WienerOneFullGridEqualsBruteForce) {
  Rng rng(12);
  for (int k = 0; k < 40; ++k) {
    const Instance inst = standard_instances()[k % 4];
    const auto f = random_function(inst, 2 + k % 5, 2 + (k / 5) % 5, rng);
    const auto g = random_function(inst, f.grid_t(), f.grid_s(), rng);
    const FamilyConfig cfg = FamilyConfig::wiener(1);
    EXPECT_TRUE(oracle::near(solve_sup(f, cfg).value, brute_force_sup(f, cfg).value, 1e-12));
    EXPECT_TRUE(oracle::near(solve_sup(f, g, cfg).value, brute_force_sup(f, g, cfg).value, 1e-12));
  }
}

TEST(Solve, WienerOneRefinementMonotone) {
  Rng rng(13);
  const FamilyConfig cfg = FamilyConfig::wiener(1);
  for (int k = 0; k < 30; ++k) {
    const Instance inst = standard_instances()[k % 4];
    const auto f = random_function(inst, 5, 5, rng);
    const auto g = random_function(inst, f.grid_t(), f.grid_s(), rng);
    for (const auto& pi : oracle::subsets(5)) {
      const PartitionPair P{pi, {0, 2, 4}};
      const double base = joint_variation_on_partition(f, g, P, cfg).total;
      for (std::size_t extra = 1; extra < 4; ++extra) {
        if (std::find(pi.begin(), pi.end(), extra) != pi.end()) continue;
        Idx finer = pi;
        finer.insert(std::upper_bound(finer.begin(), finer.end(), extra), extra);
        const double refined = joint_variation_on_partition(f, g, PartitionPair{finer, P.pi_star}, cfg).total;
        EXPECT_GE(refined, base - 1e-12 * std::max(1.0, base));
      }
    }
  }
}

TEST(Solve, WienerFiveTenthsOnFiveByFive) {
  Rng rng(55);
  const FamilyConfig cfg = FamilyConfig::wiener(0.5);
  for (int k = 0; k < 10; ++k) {
    const auto f = random_function(Instance::nonneg_real(), 5, 5, rng);
    const auto r = solve_sup(f, cfg);
    EXPECT_EQ(r.method, Method::BranchAndBound);
    EXPECT_EQ(r.value, brute_force_sup(f, cfg).value);
  }
}

TEST(Greedy, NeverExceedsExact) {
  Rng rng(21);
  for (const auto& cfg : standard_families()) {
    for (int k = 0; k < 6; ++k) {
      const auto f = random_function(Instance::real_vector(2), 7, 6, rng);
      const auto greedy = solve_sup(f, cfg, Method::Greedy);
      EXPECT_FALSE(greedy.optimal);
      EXPECT_EQ(greedy.method, Method::Greedy);
      EXPECT_TRUE(leq_rel(greedy.value, brute_force_sup(f, cfg).value, 1e-12));
    }
  }
}

TEST(Greedy, LargeGridFallsBack) {
  Rng rng(22);
  const auto f = random_function(Instance::nonneg_real(), 20, 20, rng);
  const auto r = solve_sup(f, FamilyConfig::wiener(2));
  EXPECT_EQ(r.method, Method::Greedy);
  EXPECT_FALSE(r.optimal);
  EXPECT_TRUE(oracle::near(variation_on_partition(f, r.argmax, FamilyConfig::wiener(2)).total,
                           r.value, 1e-12));
  EXPECT_THROW(solve_sup(f, FamilyConfig::wiener(2), Method::BranchAndBound), SizeGuardError);
  EXPECT_THROW(solve_sup(f, FamilyConfig::wiener(2), Method::BruteForce), SizeGuardError);
  EXPECT_EQ(solve_sup(f, FamilyConfig::wiener(1)).method, Method::JordanFullGrid);
}

TEST(UpperBound, EmptyPartialWienerOneIsFullGrid) {
  Rng rng(31);
  for (int k = 0; k < 10; ++k) {
    const auto f = random_function(Instance::interval(), 5, 5, rng);
    const double full = variation_on_partition(f, PartitionPair::full(5, 5), FamilyConfig::wiener(1)).total;
    EXPECT_TRUE(oracle::near(bb_upper_bound(f, FamilyConfig::wiener(1), {}), full, 1e-12));
  }
}

PartitionPair from_selection(const PartialSelection& s, std::size_t nt, std::size_t ns) {
  PartitionPair P;
  P.pi.push_back(0);
  for (std::size_t k = 0; k < s.rows.size(); ++k)
    if (s.rows[k]) P.pi.push_back(k + 1);
  P.pi.push_back(nt - 1);
  P.pi_star.push_back(0);
  for (std::size_t k = 0; k < s.cols.size(); ++k)
    if (s.cols[k]) P.pi_star.push_back(k + 1);
  P.pi_star.push_back(ns - 1);
  return P;
}

TEST(UpperBound, CompleteSelectionIsExact) {
  Rng rng(32);
  for (const auto& cfg : standard_families()) {
    const auto f = random_function(Instance::box(2), 5, 5, rng);
    const auto g = random_function(Instance::box(2), f.grid_t(), f.grid_s(), rng);
    const PartialSelection s{{true, false, true}, {false, true, true}};
    const double want = joint_variation_on_partition(f, g, from_selection(s, 5, 5), cfg).total;
    EXPECT_TRUE(oracle::near(bb_upper_bound(f, g, cfg, s), want, 1e-12)) << cfg.name();
  }
}

TEST(UpperBound, AdmissibleOnFiveByFive) {
  Rng rng(33);
  for (const auto& cfg : standard_families()) {
    for (int k = 0; k < 4; ++k) {
      const Instance inst = standard_instances()[k];
      const auto f = random_function(inst, 5, 5, rng);
      for (std::size_t rows_fixed = 0; rows_fixed <= 3; ++rows_fixed) {
        for (std::size_t cols_fixed = 0; cols_fixed <= 3; ++cols_fixed) {
          for (std::size_t mask = 0; mask < (1u << (rows_fixed + cols_fixed)); ++mask) {
            PartialSelection s;
            for (std::size_t b = 0; b < rows_fixed; ++b) s.rows.push_back(mask >> b & 1);
            for (std::size_t b = 0; b < cols_fixed; ++b) s.cols.push_back(mask >> (rows_fixed + b) & 1);
            double best = 0;
            for (const auto& pi : oracle::subsets(5))
              for (const auto& ps : oracle::subsets(5)) {
                bool ok = true;
                for (std::size_t b = 0; b < rows_fixed; ++b)
                  ok &= (std::find(pi.begin(), pi.end(), b + 1) != pi.end()) == s.rows[b];
                for (std::size_t b = 0; b < cols_fixed; ++b)
                  ok &= (std::find(ps.begin(), ps.end(), b + 1) != ps.end()) == s.cols[b];
                if (ok) best = std::max(best, oracle::variation(f, nullptr, {pi, ps}, cfg).total());
              }
            EXPECT_TRUE(leq_rel(best, bb_upper_bound(f, cfg, s), 1e-12)) << cfg.name();
          }
        }
      }
    }
  }
}

} // namespace
} // namespace semibv
