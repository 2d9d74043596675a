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

// LP relaxation of the maximum desk-acceptance problem:
//
//   maximize sum_j x_j  subject to  sum_{j in P_i} x_j <= rhs_i,  0 <= x_j <= 1
//
// solved with a bounded-variable primal simplex (Dantzig pricing, Bland's
// rule after a run of degenerate pivots) over a product-form basis inverse.

#ifndef CAPOPT_LP_H_
#define CAPOPT_LP_H_

#include <cstddef>
#include <string>
#include <vector>

#include "capopt/instance.h"

namespace capopt {

// All constraint coefficients are 1; rows[i] holds the columns of row i.
struct LpModel {
  std::size_t num_vars = 0;
  std::vector<std::vector<PaperIndex>> rows;
  std::vector<double> rhs;

  std::size_t num_rows() const { return rows.size(); }
  // One inequality per line, e.g. "x1 + x2 + x3 <= 2". Variables are
  // printed with 1-based ordinals.
  std::string ToString() const;
};

struct BuildLpOptions {
  // Keep rows of authors with at most `limit` papers; they can never bind.
  bool keep_redundant_rows = false;
};

LpModel BuildLp(const AuthorshipInstance& inst, int limit,
                const BuildLpOptions& options = {});

struct LpOptions {
  double pivot_tol = 1e-9;
  double snap_tol = 1e-7;
  // Consecutive degenerate pivots before switching to Bland's rule.
  std::size_t stall_threshold = 50;
  // Eta vectors accumulated before the basis is refactored.
  std::size_t refactor_interval = 64;
  // 0 picks a limit proportional to the block size.
  std::size_t max_iterations = 0;
  // Solve independent row/column blocks separately.
  bool decompose = true;
};

struct FractionalSolution {
  std::vector<double> values;  // clamped to [0,1] and snapped near 0 and 1
  double objective = 0.0;
  std::vector<PaperIndex> fractional;  // indices with value in (0,1)
  std::size_t iterations = 0;
};

// Throws Error(kIterationLimitExceeded) if the pivot budget runs out and
// Error(kConfig) for a negative right-hand side or out-of-range column.
FractionalSolution SolveLp(const LpModel& model, const LpOptions& options = {});

}  // namespace capopt

#endif  // CAPOPT_LP_H_
