// Copyright 2026 The capopt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "capopt/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "capopt/error.h"

namespace capopt {

std::string LpModel::ToString() const {
  std::ostringstream out;
  out << "maximize";
  for (std::size_t j = 0; j < num_vars; ++j) {
    out << (j == 0 ? " " : " + ") << 'x' << (j + 1);
  }
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      out << (k == 0 ? "" : " + ") << 'x' << (rows[i][k] + 1);
    }
    if (rows[i].empty()) out << '0';
    out << " <= " << rhs[i] << '\n';
  }
  out << "0 <= x <= 1\n";
  return out.str();
}

LpModel BuildLp(const AuthorshipInstance& inst, int limit,
                const BuildLpOptions& options) {
  if (limit < 0) {
    throw Error(ErrorKind::kConfig, "submission limit must be >= 0");
  }
  LpModel model;
  model.num_vars = inst.num_papers();
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    const auto ai = static_cast<AuthorIndex>(i);
    if (!options.keep_redundant_rows &&
        inst.paper_count(ai) <= static_cast<std::size_t>(limit)) {
      continue;
    }
    auto papers = inst.papers_of(ai);
    model.rows.emplace_back(papers.begin(), papers.end());
    model.rhs.push_back(static_cast<double>(limit));
  }
  return model;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Bounded-variable primal simplex on
//   max sum_j x_j  s.t.  A x + s = rhs,  0 <= x <= 1,  s >= 0
// with A a 0/1 matrix given column-wise. Variables 0..cols-1 are
// structural, cols..cols+rows-1 are slacks. The basis inverse is kept in
// product form: B^-1 = E_k ... E_1, each E an eta column at a basis
// position. Starts from the all-slack basis (x = 0).
class BoundedSimplex {
 public:
  BoundedSimplex(std::vector<std::vector<int>> col_rows,
                 std::vector<double> rhs, const LpOptions& options)
      : num_cols_(static_cast<int>(col_rows.size())),
        num_rows_(static_cast<int>(rhs.size())),
        col_rows_(std::move(col_rows)),
        rhs_(std::move(rhs)),
        options_(options),
        basic_at_(num_rows_),
        position_(num_cols_ + num_rows_, -1),
        at_upper_(num_cols_ + num_rows_, 0),
        x_basic_(num_rows_, 0.0),
        work_(num_rows_, 0.0),
        duals_(num_rows_, 0.0) {
    for (int i = 0; i < num_rows_; ++i) {
      basic_at_[i] = num_cols_ + i;
      position_[num_cols_ + i] = i;
      x_basic_[i] = rhs_[i];
    }
  }

  void Solve() {
    const std::size_t limit =
        options_.max_iterations > 0
            ? options_.max_iterations
            : 200 * static_cast<std::size_t>(num_cols_ + num_rows_) + 10000;
    std::size_t degenerate_run = 0;
    bool bland = false;
    while (true) {
      if (iterations_ >= limit) {
        throw Error(ErrorKind::kIterationLimitExceeded,
                    "simplex exceeded " + std::to_string(limit) +
                        " iterations on a block with " +
                        std::to_string(num_rows_) + " rows and " +
                        std::to_string(num_cols_) + " columns");
      }
      if (etas_.size() - etas_at_refactor_ >= options_.refactor_interval) {
        Refactor();
      }
      ComputeDuals();
      double reduced_cost = 0.0;
      const int entering = SelectEntering(bland, &reduced_cost);
      if (entering < 0) {
        if (etas_.size() == etas_at_refactor_ && fresh_) break;
        // Confirm optimality against a freshly factored basis.
        Refactor();
        continue;
      }
      fresh_ = false;
      ++iterations_;
      const double step = Pivot(entering, reduced_cost, bland);
      if (step <= options_.pivot_tol) {
        if (++degenerate_run >= options_.stall_threshold) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }
    }
  }

  std::vector<double> Values() const {
    std::vector<double> values(num_cols_);
    for (int j = 0; j < num_cols_; ++j) {
      values[j] = position_[j] >= 0 ? x_basic_[position_[j]]
                                    : (at_upper_[j] ? 1.0 : 0.0);
    }
    return values;
  }

  std::size_t iterations() const { return iterations_; }

 private:
  struct Eta {
    int pivot;
    double pivot_value;
    std::vector<std::pair<int, double>> others;
  };

  bool IsStructural(int v) const { return v < num_cols_; }

  // Loads column v of [A I] into work_ (dense, by row).
  void LoadColumn(int v) {
    std::fill(work_.begin(), work_.end(), 0.0);
    if (IsStructural(v)) {
      for (int i : col_rows_[v]) work_[i] = 1.0;
    } else {
      work_[v - num_cols_] = 1.0;
    }
  }

  void Ftran(std::vector<double>& v) const {
    for (const Eta& eta : etas_) {
      double& vp = v[eta.pivot];
      if (vp == 0.0) continue;
      const double t = vp / eta.pivot_value;
      vp = t;
      for (const auto& [k, a] : eta.others) v[k] -= a * t;
    }
  }

  void Btran(std::vector<double>& u) const {
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double sum = u[it->pivot];
      for (const auto& [k, a] : it->others) sum -= u[k] * a;
      u[it->pivot] = sum / it->pivot_value;
    }
  }

  void AppendEta(int pivot, const std::vector<double>& alpha) {
    Eta eta{pivot, alpha[pivot], {}};
    for (int k = 0; k < num_rows_; ++k) {
      if (k != pivot && std::abs(alpha[k]) > 1e-13) {
        eta.others.emplace_back(k, alpha[k]);
      }
    }
    etas_.push_back(std::move(eta));
  }

  void ComputeDuals() {
    for (int p = 0; p < num_rows_; ++p) {
      duals_[p] = IsStructural(basic_at_[p]) ? 1.0 : 0.0;
    }
    Btran(duals_);
  }

  double ReducedCost(int v) const {
    if (!IsStructural(v)) return -duals_[v - num_cols_];
    double d = 1.0;
    for (int i : col_rows_[v]) d -= duals_[i];
    return d;
  }

  // Returns the entering variable or -1 at optimality.
  int SelectEntering(bool bland, double* reduced_cost) const {
    const double tol = options_.pivot_tol;
    int best = -1;
    double best_score = 0.0;
    for (int v = 0; v < num_cols_ + num_rows_; ++v) {
      if (position_[v] >= 0) continue;
      const double d = ReducedCost(v);
      const bool improving = at_upper_[v] ? d < -tol : d > tol;
      if (!improving) continue;
      if (bland) {
        *reduced_cost = d;
        return v;
      }
      if (std::abs(d) > best_score) {
        best_score = std::abs(d);
        best = v;
        *reduced_cost = d;
      }
    }
    return best;
  }

  // Performs one simplex step on `entering`; returns the step length.
  double Pivot(int entering, double reduced_cost, bool bland) {
    const double tol = options_.pivot_tol;
    const double dir = reduced_cost > 0 ? 1.0 : -1.0;
    LoadColumn(entering);
    Ftran(work_);
    const std::vector<double>& alpha = work_;

    double step = IsStructural(entering) ? 1.0 : kInf;
    int leave = -1;
    double leave_alpha = 0.0;
    for (int p = 0; p < num_rows_; ++p) {
      const double delta = dir * alpha[p];
      if (std::abs(delta) <= tol) continue;
      const int v = basic_at_[p];
      double ratio;
      if (delta > 0) {
        ratio = std::max(0.0, x_basic_[p]) / delta;
      } else {
        if (!IsStructural(v)) continue;
        ratio = std::max(0.0, 1.0 - x_basic_[p]) / -delta;
      }
      bool take = false;
      if (ratio < step - tol) {
        take = true;
      } else if (leave >= 0 && ratio <= step + tol) {
        take = bland ? v < basic_at_[leave]
                     : std::abs(alpha[p]) > std::abs(leave_alpha);
      }
      if (take) {
        step = std::min(step, ratio);
        leave = p;
        leave_alpha = alpha[p];
      }
    }
    if (step == kInf) {
      throw Error(ErrorKind::kIterationLimitExceeded,
                  "unbounded direction in a bounded LP; numerical failure");
    }

    for (int p = 0; p < num_rows_; ++p) {
      if (alpha[p] != 0.0) x_basic_[p] -= dir * step * alpha[p];
    }
    if (leave < 0) {
      // Bound flip: the entering variable reaches its other bound first.
      at_upper_[entering] = !at_upper_[entering];
      return step;
    }

    const int leaving = basic_at_[leave];
    const double entering_value =
        at_upper_[entering] ? 1.0 - step : step;
    at_upper_[leaving] = dir * alpha[leave] < 0 ? 1 : 0;
    position_[leaving] = -1;
    at_upper_[entering] = 0;
    position_[entering] = leave;
    basic_at_[leave] = entering;
    x_basic_[leave] = entering_value;
    AppendEta(leave, alpha);
    return step;
  }

  // Rebuilds the eta file from the current basis and recomputes the basic
  // values. Structural columns are placed sparsest-first with partial
  // pivoting; a column that turns out dependent is dropped in favour of a
  // slack.
  void Refactor() {
    etas_.clear();
    std::vector<int> structurals;
    std::vector<char> taken(num_rows_, 0);
    for (int p = 0; p < num_rows_; ++p) {
      const int v = basic_at_[p];
      if (IsStructural(v)) {
        structurals.push_back(v);
      } else {
        taken[v - num_cols_] = 1;
      }
    }
    std::stable_sort(structurals.begin(), structurals.end(), [&](int a, int b) {
      return col_rows_[a].size() < col_rows_[b].size();
    });
    std::vector<std::pair<int, bool>> dropped;
    std::vector<int> new_basic_at(num_rows_, -1);
    for (int i = 0; i < num_rows_; ++i) {
      if (taken[i]) new_basic_at[i] = num_cols_ + i;
    }
    for (int v : structurals) {
      LoadColumn(v);
      Ftran(work_);
      int best = -1;
      double best_abs = 1e-9;
      for (int p = 0; p < num_rows_; ++p) {
        if (!taken[p] && std::abs(work_[p]) > best_abs) {
          best_abs = std::abs(work_[p]);
          best = p;
        }
      }
      if (best < 0) {
        dropped.emplace_back(v, x_basic_[position_[v]] > 0.5);
        continue;
      }
      taken[best] = 1;
      new_basic_at[best] = v;
      AppendEta(best, work_);
    }
    for (int p = 0; p < num_rows_; ++p) {
      if (new_basic_at[p] < 0) new_basic_at[p] = num_cols_ + p;
    }
    for (int v = 0; v < num_cols_ + num_rows_; ++v) position_[v] = -1;
    for (int p = 0; p < num_rows_; ++p) {
      basic_at_[p] = new_basic_at[p];
      position_[new_basic_at[p]] = p;
      at_upper_[new_basic_at[p]] = 0;
    }
    for (const auto& [v, upper] : dropped) at_upper_[v] = upper ? 1 : 0;

    std::vector<double> residual = rhs_;
    for (int j = 0; j < num_cols_; ++j) {
      if (position_[j] < 0 && at_upper_[j]) {
        for (int i : col_rows_[j]) residual[i] -= 1.0;
      }
    }
    Ftran(residual);
    x_basic_ = std::move(residual);
    etas_at_refactor_ = etas_.size();
    fresh_ = true;
  }

  int num_cols_;
  int num_rows_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<double> rhs_;
  LpOptions options_;

  std::vector<int> basic_at_;   // basis position -> variable
  std::vector<int> position_;   // variable -> basis position, -1 if nonbasic
  std::vector<char> at_upper_;  // nonbasic structural sits at 1
  std::vector<double> x_basic_;
  std::vector<double> work_;
  std::vector<double> duals_;
  std::vector<Eta> etas_;
  std::size_t etas_at_refactor_ = 0;
  bool fresh_ = true;
  std::size_t iterations_ = 0;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FractionalSolution SolveLp(const LpModel& model, const LpOptions& options) {
  const std::size_t m = model.num_vars;
  if (model.rhs.size() != model.rows.size()) {
    throw Error(ErrorKind::kLengthMismatch, "rhs/rows size mismatch");
  }
  std::vector<char> constrained(m, 0);
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    if (model.rhs[i] < 0) {
      throw Error(ErrorKind::kConfig,
                  "row " + std::to_string(i + 1) + " has negative rhs");
    }
    for (PaperIndex j : model.rows[i]) {
      if (j < 0 || static_cast<std::size_t>(j) >= m) {
        throw Error(ErrorKind::kConfig,
                    "row " + std::to_string(i + 1) + " references column " +
                        std::to_string(j + 1) + " out of range");
      }
      constrained[j] = 1;
    }
  }

  // Group rows into blocks that share no columns.
  DisjointSets sets(m);
  if (options.decompose) {
    for (const auto& row : model.rows) {
      for (std::size_t k = 1; k < row.size(); ++k) sets.Union(row[0], row[k]);
    }
  } else {
    std::size_t first = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (!constrained[j]) continue;
      if (first == m) first = j;
      sets.Union(first, j);
    }
  }
  std::vector<int> block_of(m, -1);
  std::vector<std::vector<PaperIndex>> block_cols;
  for (std::size_t j = 0; j < m; ++j) {
    if (!constrained[j]) continue;
    const std::size_t root = sets.Find(j);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(block_cols.size());
      block_cols.emplace_back();
    }
    block_of[j] = block_of[root];
    block_cols[block_of[j]].push_back(static_cast<PaperIndex>(j));
  }
  std::vector<std::vector<std::size_t>> block_rows(block_cols.size());
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    if (model.rows[i].empty()) continue;
    block_rows[block_of[model.rows[i][0]]].push_back(i);
  }

  FractionalSolution solution;
  solution.values.assign(m, 1.0);
  std::vector<int> local(m, -1);
  for (std::size_t b = 0; b < block_cols.size(); ++b) {
    const auto& cols = block_cols[b];
    for (std::size_t k = 0; k < cols.size(); ++k) {
      local[cols[k]] = static_cast<int>(k);
    }
    std::vector<std::vector<int>> col_rows(cols.size());
    std::vector<double> rhs;
    rhs.reserve(block_rows[b].size());
    for (std::size_t r = 0; r < block_rows[b].size(); ++r) {
      const std::size_t i = block_rows[b][r];
      rhs.push_back(model.rhs[i]);
      std::vector<PaperIndex> row = model.rows[i];
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
      for (PaperIndex j : row) col_rows[local[j]].push_back(static_cast<int>(r));
    }
    BoundedSimplex simplex(std::move(col_rows), std::move(rhs), options);
    simplex.Solve();
    solution.iterations += simplex.iterations();
    const std::vector<double> values = simplex.Values();
    for (std::size_t k = 0; k < cols.size(); ++k) {
      solution.values[cols[k]] = values[k];
    }
  }

  for (std::size_t j = 0; j < m; ++j) {
    double& v = solution.values[j];
    v = std::clamp(v, 0.0, 1.0);
    if (v <= options.snap_tol) v = 0.0;
    if (v >= 1.0 - options.snap_tol) v = 1.0;
    if (v > 0.0 && v < 1.0) solution.fractional.push_back(static_cast<PaperIndex>(j));
    solution.objective += v;
  }
  return solution;
}

}  // namespace capopt
