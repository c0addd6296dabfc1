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

// Internal to the partition search; not installed.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "semibv/gridfn.hpp"
#include "semibv/variation.hpp"

namespace semibv::detail {

/// Weighted row, column and cell terms for every index pair, so a search can
/// score any partition pair without touching semigroup elements. Entries are
/// bit-identical to the terms of the direct evaluator.
class TermTables {
public:
  TermTables(const GridFunction2D& f, const GridFunction2D* g, const FamilyConfig& cfg);

  std::size_t rows() const { return n_; }
  std::size_t cols() const { return m_; }
  const FamilyConfig& config() const { return cfg_; }

  /// Row interval (a, b) at position `pos` of Π.
  double row(std::size_t a, std::size_t b, std::size_t pos) const {
    return cfg_.place(row_[a * n_ + b], pos, 1);
  }
  /// Column interval (c, e) at position `pos` of Π*.
  double col(std::size_t c, std::size_t e, std::size_t pos) const {
    return cfg_.place(col_[c * m_ + e], 1, pos);
  }
  /// Cell (a, b) x (c, e) at positions (i, j).
  double cell(std::size_t a, std::size_t b, std::size_t c, std::size_t e, std::size_t i,
              std::size_t j) const {
    return cfg_.place(mixed_[((a * n_ + b) * m_ + c) * m_ + e], i, j);
  }

private:
  std::size_t n_;
  std::size_t m_;
  FamilyConfig cfg_;
  std::vector<double> row_;
  std::vector<double> col_;
  std::vector<double> mixed_;
};

/// Indices of Π encoded by `mask` (bit n-2-k set <=> interior index k kept),
/// so ascending masks walk partitions in partition order.
std::vector<std::size_t> indices_from_mask(std::size_t n, std::size_t mask);

struct SearchHit {
  bool found = false;
  double value = 0.0;
  std::vector<std::size_t> pi;
  std::vector<std::size_t> pi_star;
};

/// Exact branch-and-bound over all partition pairs. `parallel` spreads the
/// row-subset frontier over OpenMP threads; the hit is identical either way.
SearchHit branch_and_bound(const TermTables& tables, bool parallel);

} // namespace semibv::detail
