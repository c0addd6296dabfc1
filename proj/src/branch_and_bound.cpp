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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "search_internal.hpp"
#include "semibv/numeric.hpp"

namespace semibv::detail {

TermTables::TermTables(const GridFunction2D& f, const GridFunction2D* g, const FamilyConfig& cfg)
    : n_(f.rows()), m_(f.cols()), cfg_(cfg), row_(n_ * n_, 0.0), col_(m_ * m_, 0.0),
      mixed_(n_ * n_ * m_ * m_, 0.0) {
  const Grid1D& t = f.grid_t();
  const Grid1D& s = f.grid_s();
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      row_[a * n_ + b] = cfg_.edge_term(row_distance(f, g, a, b), t[b] - t[a]);
    }
  }
  for (std::size_t c = 0; c < m_; ++c) {
    for (std::size_t e = c + 1; e < m_; ++e) {
      col_[c * m_ + e] = cfg_.edge_term(col_distance(f, g, c, e), s[e] - s[c]);
    }
  }
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      for (std::size_t c = 0; c < m_; ++c) {
        for (std::size_t e = c + 1; e < m_; ++e) {
          mixed_[((a * n_ + b) * m_ + c) * m_ + e] =
              cfg_.cell_term(cell_distance(f, g, a, b, c, e), t[b] - t[a], s[e] - s[c]);
        }
      }
    }
  }
}

std::vector<std::size_t> indices_from_mask(std::size_t n, std::size_t mask) {
  std::vector<std::size_t> idx{0};
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (mask >> (n - 2 - k) & 1U) idx.push_back(k);
  }
  idx.push_back(n - 1);
  return idx;
}

namespace {

constexpr double kPruneSlack = 1e-9;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void atomic_max(std::atomic<double>& target, double value) {
  double current = target.load(std::memory_order_relaxed);
  while (value > current &&
         !target.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
  }
}

double prune_threshold(double best) {
  if (best == kNegInf) return kNegInf;
  return best - kPruneSlack * std::max(1.0, std::abs(best));
}

/// Exact search over Π* for one fixed Π. Walks column subsets depth first in
/// partition order and keeps the first strict maximum, so ties resolve to
/// the smallest Π*. Accumulates sums in the direct evaluator's order.
class ColumnSearch {
public:
  ColumnSearch(const TermTables& tables, std::span<const std::size_t> pi)
      : t_(tables), cfg_(tables.config()), pi_(pi.begin(), pi.end()), m_(tables.cols()) {
    double row_sum = 0.0;
    for (std::size_t i = 1; i < pi_.size(); ++i) row_sum += t_.row(pi_[i - 1], pi_[i], i);
    row_value_ = cfg_.outer(row_sum);
    build_strips();
    build_tails();
  }

  void run(std::atomic<double>& global_best, SearchHit& hit) {
    global_ = &global_best;
    hit_ = &hit;
    path_.assign(1, 0);
    dfs(0, 0, 0.0, 0.0);
  }

private:
  std::size_t strip_index(std::size_t c, std::size_t e, std::size_t j) const {
    return cfg_.positional() ? (c * m_ + e) * m_ + j : c * m_ + e;
  }

  // Mixed contribution of column interval (c, e) at position j, summed over Π.
  void build_strips() {
    const std::size_t positions = cfg_.positional() ? m_ : 1;
    strip_.assign(m_ * m_ * positions, 0.0);
    for (std::size_t c = 0; c < m_; ++c) {
      for (std::size_t e = c + 1; e < m_; ++e) {
        for (std::size_t j = cfg_.positional() ? 1 : 0; j < (cfg_.positional() ? m_ : 1); ++j) {
          double sum = 0.0;
          for (std::size_t i = 1; i < pi_.size(); ++i) {
            sum += t_.cell(pi_[i - 1], pi_[i], c, e, i, std::max<std::size_t>(j, 1));
          }
          strip_[strip_index(c, e, j)] = sum;
        }
      }
    }
  }

  double strip(std::size_t c, std::size_t e, std::size_t j) const {
    return strip_[strip_index(c, e, cfg_.positional() ? j : 0)];
  }

  // Best achievable column and mixed sums from column c after `used`
  // intervals, maximised separately (tail_c_, tail_m_) and jointly
  // (tail_cm_).
  void build_tails() {
    tail_c_.assign(m_ * m_, kNegInf);
    tail_m_.assign(m_ * m_, kNegInf);
    tail_cm_.assign(m_ * m_, kNegInf);
    for (std::size_t used = 0; used < m_; ++used) {
      tail_c_[(m_ - 1) * m_ + used] = 0.0;
      tail_m_[(m_ - 1) * m_ + used] = 0.0;
      tail_cm_[(m_ - 1) * m_ + used] = 0.0;
    }
    for (std::size_t c = m_ - 1; c-- > 0;) {
      for (std::size_t used = 0; used <= c; ++used) {
        double bc = kNegInf, bm = kNegInf, bcm = kNegInf;
        for (std::size_t e = c + 1; e < m_; ++e) {
          const std::size_t next = e * m_ + used + 1;
          const double cw = t_.col(c, e, used + 1);
          const double mw = strip(c, e, used + 1);
          bc = std::max(bc, cw + tail_c_[next]);
          bm = std::max(bm, mw + tail_m_[next]);
          bcm = std::max(bcm, cw + mw + tail_cm_[next]);
        }
        tail_c_[c * m_ + used] = bc;
        tail_m_[c * m_ + used] = bm;
        tail_cm_[c * m_ + used] = bcm;
      }
    }
  }

  double bound(std::size_t c, std::size_t used, double col_acc, double mixed_acc) const {
    const std::size_t k = c * m_ + used;
    if (cfg_.linear_outer()) return row_value_ + col_acc + mixed_acc + tail_cm_[k];
    return row_value_ + cfg_.outer(col_acc + tail_c_[k]) + cfg_.outer(mixed_acc + tail_m_[k]);
  }

  void dfs(std::size_t c, std::size_t used, double col_acc, double mixed_acc) {
    if (c == m_ - 1) {
      const double value = row_value_ + cfg_.outer(col_acc) + cfg_.outer(mixed_acc);
      if (!hit_->found || value > hit_->value) {
        hit_->found = true;
        hit_->value = value;
        hit_->pi_star = path_;
        atomic_max(*global_, value);
      }
      return;
    }
    const double best = std::max(hit_->found ? hit_->value : kNegInf,
                                 global_->load(std::memory_order_relaxed));
    if (bound(c, used, col_acc, mixed_acc) < prune_threshold(best)) return;

    // Next kept column, largest first: skipping points comes first in
    // partition order.
    const std::size_t pos = used + 1;
    for (std::size_t e = m_ - 1; e > c; --e) {
      const double next_col = col_acc + t_.col(c, e, pos);
      double next_mixed = mixed_acc;
      for (std::size_t i = 1; i < pi_.size(); ++i) {
        next_mixed += t_.cell(pi_[i - 1], pi_[i], c, e, i, pos);
      }
      path_.push_back(e);
      dfs(e, pos, next_col, next_mixed);
      path_.pop_back();
    }
  }

  const TermTables& t_;
  const FamilyConfig& cfg_;
  std::vector<std::size_t> pi_;
  std::size_t m_;
  double row_value_ = 0.0;
  std::vector<double> strip_;
  std::vector<double> tail_c_, tail_m_, tail_cm_;

  std::atomic<double>* global_ = nullptr;
  SearchHit* hit_ = nullptr;
  std::vector<std::size_t> path_;
};

SearchHit search_row_subset(const TermTables& tables, std::size_t mask,
                            std::atomic<double>& global_best) {
  SearchHit hit;
  hit.pi = indices_from_mask(tables.rows(), mask);
  ColumnSearch search(tables, hit.pi);
  search.run(global_best, hit);
  return hit;
}

SearchHit merge_in_order(std::vector<SearchHit>& hits) {
  SearchHit best;
  for (auto& h : hits) {
    if (h.found && (!best.found || h.value > best.value)) best = std::move(h);
  }
  return best;
}

} // namespace

SearchHit branch_and_bound(const TermTables& tables, bool parallel) {
  const std::size_t n = tables.rows();
  const auto masks = static_cast<std::int64_t>(std::size_t{1} << (n - 2));
  std::vector<SearchHit> hits(static_cast<std::size_t>(masks));
  std::atomic<double> global_best{kNegInf};

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t mask = 0; mask < masks; ++mask) {
      hits[static_cast<std::size_t>(mask)] =
          search_row_subset(tables, static_cast<std::size_t>(mask), global_best);
    }
  } else {
    for (std::int64_t mask = 0; mask < masks; ++mask) {
      hits[static_cast<std::size_t>(mask)] =
          search_row_subset(tables, static_cast<std::size_t>(mask), global_best);
    }
  }
  // Ascending masks are ascending Π, so the first strict maximum is the
  // smallest pair among ties.
  return merge_in_order(hits);
}

} // namespace semibv::detail
