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

#include "semibv/partition_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "search_internal.hpp"
#include "semibv/error.hpp"

namespace semibv {

Method parse_method(std::string_view spec) {
  if (spec == "auto") return Method::Auto;
  if (spec == "brute") return Method::BruteForce;
  if (spec == "bb") return Method::BranchAndBound;
  if (spec == "greedy") return Method::Greedy;
  if (spec == "jordan") return Method::JordanFullGrid;
  throw ConfigError("unknown method \"" + std::string(spec) + "\" (auto|brute|bb|greedy|jordan)");
}

std::string method_name(Method m) {
  switch (m) {
  case Method::Auto: return "auto";
  case Method::BruteForce: return "brute-force";
  case Method::JordanFullGrid: return "jordan-full-grid";
  case Method::BranchAndBound: return "branch-and-bound";
  case Method::Greedy: return "greedy";
  }
  return "?";
}

std::vector<std::vector<std::size_t>> enumerate_partitions(const Grid1D& grid) {
  const std::size_t n = grid.size();
  if (n > kEnumerateMaxPoints) {
    throw SizeGuardError("cannot enumerate partitions of a " + std::to_string(n) +
                         "-point grid (limit " + std::to_string(kEnumerateMaxPoints) + ")");
  }
  const std::size_t count = std::size_t{1} << (n - 2);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) out.push_back(detail::indices_from_mask(n, mask));
  return out;
}

namespace detail {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_inputs(const GridFunction2D& f, const GridFunction2D* g, const FamilyConfig& cfg) {
  cfg.validate();
  if (g != nullptr) require_same_domain(f, *g);
}

SupResult finish(const GridFunction2D& f, const GridFunction2D* g, const FamilyConfig& cfg,
                 PartitionPair argmax, Method method, bool optimal) {
  SupResult r;
  r.breakdown = evaluate(f, g, argmax, cfg);
  r.value = r.breakdown.total;
  r.argmax = std::move(argmax);
  r.method = method;
  r.optimal = optimal;
  return r;
}

void toggle(std::vector<std::size_t>& idx, std::size_t k) {
  auto it = std::lower_bound(idx.begin(), idx.end(), k);
  if (it != idx.end() && *it == k) {
    idx.erase(it);
  } else {
    idx.insert(it, k);
  }
}

/// Steepest-ascent over single-point toggles from `start`.
std::pair<PartitionPair, double> local_search(const GridFunction2D& f, const GridFunction2D* g,
                                              const FamilyConfig& cfg, PartitionPair start) {
  PartitionPair current = std::move(start);
  double value = evaluate(f, g, current, cfg).total;
  for (;;) {
    PartitionPair best_move;
    double best_value = value;
    for (int axis = 0; axis < 2; ++axis) {
      const std::size_t n = axis == 0 ? f.rows() : f.cols();
      for (std::size_t k = 1; k + 1 < n; ++k) {
        PartitionPair trial = current;
        toggle(axis == 0 ? trial.pi : trial.pi_star, k);
        const double v = evaluate(f, g, trial, cfg).total;
        if (v > best_value) {
          best_value = v;
          best_move = std::move(trial);
        }
      }
    }
    if (!(best_value > value)) break;
    current = std::move(best_move);
    value = best_value;
  }
  return {std::move(current), value};
}

SupResult greedy(const GridFunction2D& f, const GridFunction2D* g, const FamilyConfig& cfg) {
  auto [coarse, coarse_value] = local_search(f, g, cfg, PartitionPair::minimal(f.rows(), f.cols()));
  auto [fine, fine_value] = local_search(f, g, cfg, PartitionPair::full(f.rows(), f.cols()));
  const bool take_fine =
      fine_value > coarse_value || (fine_value == coarse_value && partition_pair_less(fine, coarse));
  return finish(f, g, cfg, take_fine ? std::move(fine) : std::move(coarse), Method::Greedy, false);
}

} // namespace

SupResult brute_force(const GridFunction2D& f, const GridFunction2D* g, const FamilyConfig& cfg) {
  check_inputs(f, g, cfg);
  if (f.rows() > kBruteForceMaxPoints || f.cols() > kBruteForceMaxPoints) {
    throw SizeGuardError("brute force is limited to " + std::to_string(kBruteForceMaxPoints) +
                         " points per axis");
  }
  const auto rows = enumerate_partitions(f.grid_t());
  const auto cols = enumerate_partitions(f.grid_s());
  double best = kNegInf;
  PartitionPair argmax;
  for (const auto& pi : rows) {
    for (const auto& ps : cols) {
      PartitionPair P{pi, ps};
      const double v = evaluate(f, g, P, cfg).total;
      if (v > best) {
        best = v;
        argmax = std::move(P);
      }
    }
  }
  return finish(f, g, cfg, std::move(argmax), Method::BruteForce, true);
}

SupResult solve(const GridFunction2D& f, const GridFunction2D* g, const FamilyConfig& cfg,
                Method method, SearchOptions options) {
  check_inputs(f, g, cfg);
  const bool jordan_family = cfg.family == FamilyKind::Wiener && cfg.p == 1.0;
  if (method == Method::Auto) {
    if (jordan_family) {
      method = Method::JordanFullGrid;
    } else if (f.rows() <= kAutoExactMaxPoints && f.cols() <= kAutoExactMaxPoints) {
      method = Method::BranchAndBound;
    } else {
      method = Method::Greedy;
    }
  }

  switch (method) {
  case Method::JordanFullGrid:
    if (!jordan_family) {
      throw ConfigError("jordan-full-grid is exact only for wiener(1), not " + cfg.name());
    }
    return finish(f, g, cfg, PartitionPair::full(f.rows(), f.cols()), Method::JordanFullGrid, true);
  case Method::BruteForce:
    return brute_force(f, g, cfg);
  case Method::BranchAndBound: {
    if (f.rows() > kBranchAndBoundMaxPoints || f.cols() > kBranchAndBoundMaxPoints) {
      throw SizeGuardError("branch-and-bound is limited to " +
                           std::to_string(kBranchAndBoundMaxPoints) + " points per axis");
    }
    const TermTables tables(f, g, cfg);
    SearchHit hit = branch_and_bound(tables, options.parallel);
    return finish(f, g, cfg, PartitionPair{std::move(hit.pi), std::move(hit.pi_star)},
                  Method::BranchAndBound, true);
  }
  case Method::Greedy:
    return greedy(f, g, cfg);
  case Method::Auto:
    break;
  }
  throw ConfigError("unresolved search method");
}

namespace {

/// Decided prefix of one axis: kept indices so far and the first undecided
/// index boundary.
struct AxisPrefix {
  std::vector<std::size_t> kept;
  std::size_t decided = 0; // interior indices 1..decided are fixed
};

AxisPrefix axis_prefix(const std::vector<bool>& choices, std::size_t n, const char* axis) {
  if (choices.size() > n - 2) {
    throw PartitionError(std::string(axis) + " prefix decides more points than the grid has");
  }
  AxisPrefix p;
  p.kept.push_back(0);
  for (std::size_t k = 0; k < choices.size(); ++k) {
    if (choices[k]) p.kept.push_back(k + 1);
  }
  p.decided = choices.size();
  return p;
}

/// Max over completions of a path from `start` (after `used` intervals) to
/// index n-1 through undecided indices, scoring interval (a, b) at position
/// pos with weight(a, b, pos).
template <class Weight>
double best_completion(std::size_t n, std::size_t decided, std::size_t start, std::size_t used,
                       Weight&& weight) {
  std::vector<double> memo(n * (n + 1), std::numeric_limits<double>::quiet_NaN());
  auto rec = [&](auto&& self, std::size_t node, std::size_t k) -> double {
    if (node == n - 1) return 0.0;
    double& slot = memo[node * (n + 1) + k];
    if (!std::isnan(slot)) return slot;
    double best = kNegInf;
    for (std::size_t next = std::max(node, decided) + 1; next < n; ++next) {
      best = std::max(best, weight(node, next, k + 1) + self(self, next, k + 1));
    }
    slot = best;
    return best;
  };
  return rec(rec, start, used);
}

} // namespace

double upper_bound(const GridFunction2D& f, const GridFunction2D* g, const FamilyConfig& cfg,
                   const PartialSelection& partial) {
  check_inputs(f, g, cfg);
  const std::size_t n = f.rows();
  const std::size_t m = f.cols();
  const AxisPrefix rp = axis_prefix(partial.rows, n, "row");
  const AxisPrefix cp = axis_prefix(partial.cols, m, "column");
  const TermTables t(f, g, cfg);
  const std::size_t row_used = rp.kept.size() - 1;
  const std::size_t col_used = cp.kept.size() - 1;

  double max_row = 0.0;
  for (std::size_t i = 1; i < rp.kept.size(); ++i) max_row += t.row(rp.kept[i - 1], rp.kept[i], i);
  max_row += best_completion(n, rp.decided, rp.kept.back(), row_used,
                             [&](std::size_t a, std::size_t b, std::size_t pos) { return t.row(a, b, pos); });

  // Column strip (c, e) at position j: its mixed sum maximised over row
  // completions on its own.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, double> strips;
  auto strip = [&](std::size_t c, std::size_t e, std::size_t j) {
    const auto key = std::make_tuple(c, e, cfg.positional() ? j : 0);
    if (auto it = strips.find(key); it != strips.end()) return it->second;
    double v = 0.0;
    for (std::size_t i = 1; i < rp.kept.size(); ++i) v += t.cell(rp.kept[i - 1], rp.kept[i], c, e, i, j);
    v += best_completion(n, rp.decided, rp.kept.back(), row_used,
                         [&](std::size_t a, std::size_t b, std::size_t pos) { return t.cell(a, b, c, e, pos, j); });
    strips.emplace(key, v);
    return v;
  };

  auto column_total = [&](auto&& weight) {
    double v = 0.0;
    for (std::size_t j = 1; j < cp.kept.size(); ++j) v += weight(cp.kept[j - 1], cp.kept[j], j);
    return v + best_completion(m, cp.decided, cp.kept.back(), col_used, weight);
  };

  if (cfg.linear_outer()) {
    return max_row + column_total([&](std::size_t c, std::size_t e, std::size_t j) {
             return t.col(c, e, j) + strip(c, e, j);
           });
  }
  const double max_col =
      column_total([&](std::size_t c, std::size_t e, std::size_t j) { return t.col(c, e, j); });
  const double max_mixed =
      column_total([&](std::size_t c, std::size_t e, std::size_t j) { return strip(c, e, j); });
  return cfg.outer(max_row) + cfg.outer(max_col) + cfg.outer(max_mixed);
}

} // namespace detail

SupResult brute_force_sup(const GridFunction2D& f, const FamilyConfig& cfg) {
  return detail::brute_force(f, nullptr, cfg);
}

SupResult brute_force_sup(const GridFunction2D& f, const GridFunction2D& g, const FamilyConfig& cfg) {
  return detail::brute_force(f, &g, cfg);
}

SupResult solve_sup(const GridFunction2D& f, const FamilyConfig& cfg, Method method,
                    SearchOptions options) {
  return detail::solve(f, nullptr, cfg, method, options);
}

SupResult solve_sup(const GridFunction2D& f, const GridFunction2D& g, const FamilyConfig& cfg,
                    Method method, SearchOptions options) {
  return detail::solve(f, &g, cfg, method, options);
}

double bb_upper_bound(const GridFunction2D& f, const FamilyConfig& cfg, const PartialSelection& partial) {
  return detail::upper_bound(f, nullptr, cfg, partial);
}

double bb_upper_bound(const GridFunction2D& f, const GridFunction2D& g, const FamilyConfig& cfg,
                      const PartialSelection& partial) {
  return detail::upper_bound(f, &g, cfg, partial);
}

double rho(const GridFunction2D& f, const GridFunction2D& g, const FamilyConfig& cfg) {
  const SupResult sup = solve_sup(f, g, cfg);
  return dist(f(0, 0), g(0, 0)) + sup.value;
}

} // namespace semibv
