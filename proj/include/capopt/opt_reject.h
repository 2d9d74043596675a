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

// LP-relaxation-and-rounding desk rejection: reduce the instance to its
// at-risk part, solve the LP relaxation, round with MaxRounding and lift
// the result back to the original papers.

#ifndef CAPOPT_OPT_REJECT_H_
#define CAPOPT_OPT_REJECT_H_

#include <cstddef>
#include <span>

#include "capopt/instance.h"
#include "capopt/lp.h"
#include "capopt/policies.h"

namespace capopt {

struct RoundingOptions {
  // Snap distance to 0/1 and slack allowed on fractional loads.
  double tolerance = 1e-7;
  // Allowed constraint violation of the input before it is rejected.
  double feasibility_tolerance = 1e-6;
};

// Converts a feasible fractional point into a feasible 0/1 decision.
//
// Repeatedly promotes the largest fractional value to 1 (ties: smallest
// paper index). For each author of the promoted paper, in ascending author
// index, whose load now exceeds the limit, fractional papers of that author
// are demoted to 0 in ascending value order (ties: largest paper index)
// until the load is back within the limit. Entries that are already 0 or 1
// are never changed.
//
// Throws Error(kInfeasibleInput) if `values` violates a constraint by more
// than options.feasibility_tolerance, and Error(kLengthMismatch) on a size
// mismatch.
DecisionVector MaxRounding(std::span<const double> values,
                           const AuthorshipInstance& inst, int limit,
                           const RoundingOptions& options = {});

struct OptRejectResult {
  DecisionVector decision;
  // LP upper bound on accepted papers for the full instance.
  double lp_objective = 0.0;
  std::size_t at_risk_papers = 0;
  std::size_t over_limit_authors = 0;
  std::size_t fractional_papers = 0;
  std::size_t simplex_iterations = 0;
};

OptRejectResult RunOptReject(const AuthorshipInstance& inst, int limit,
                             const LpOptions& lp_options = {});

inline DecisionVector OptReject(const AuthorshipInstance& inst, int limit) {
  return RunOptReject(inst, limit).decision;
}

// Dispatches to the policy implementation.
DecisionVector ApplyPolicy(PolicyKind kind, const AuthorshipInstance& inst,
                           int limit);

}  // namespace capopt

#endif  // CAPOPT_OPT_REJECT_H_
