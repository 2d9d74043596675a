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

#include "capopt/opt_reject.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "capopt/error.h"

namespace capopt {

DecisionVector MaxRounding(std::span<const double> values,
                           const AuthorshipInstance& inst, int limit,
                           const RoundingOptions& options) {
  const std::size_t m = inst.num_papers();
  if (values.size() != m) {
    throw Error(ErrorKind::kLengthMismatch,
                "fractional solution has " + std::to_string(values.size()) +
                    " entries, instance has " + std::to_string(m) + " papers");
  }
  const double tol = options.tolerance;
  const double b = static_cast<double>(limit);

  std::vector<double> x(values.begin(), values.end());
  for (std::size_t j = 0; j < m; ++j) {
    if (!(x[j] >= -tol && x[j] <= 1.0 + tol)) {
      throw Error(ErrorKind::kInfeasibleInput,
                  "value of paper " + std::to_string(j + 1) +
                      " is outside [0,1]");
    }
  }
  std::vector<double> load(inst.num_authors(), 0.0);
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    for (PaperIndex j : inst.papers_of(static_cast<AuthorIndex>(i))) {
      load[i] += x[j];
    }
    if (load[i] > b + options.feasibility_tolerance) {
      throw Error(ErrorKind::kInfeasibleInput,
                  "author " + inst.author_label(static_cast<AuthorIndex>(i)) +
                      " has fractional load " + std::to_string(load[i]) +
                      " > " + std::to_string(limit));
    }
  }

  // Snap, then rebuild loads from the snapped values.
  std::vector<char> in_s(m, 0);
  std::vector<PaperIndex> order;
  for (std::size_t j = 0; j < m; ++j) {
    x[j] = std::clamp(x[j], 0.0, 1.0);
    if (x[j] <= tol) x[j] = 0.0;
    if (x[j] >= 1.0 - tol) x[j] = 1.0;
    if (x[j] > 0.0 && x[j] < 1.0) {
      in_s[j] = 1;
      order.push_back(static_cast<PaperIndex>(j));
    }
  }
  std::fill(load.begin(), load.end(), 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    if (x[j] == 0.0) continue;
    for (AuthorIndex i : inst.authors_of(static_cast<PaperIndex>(j))) {
      load[i] += x[j];
    }
  }

  // Values of S members never change while they remain in S, so one sort
  // gives the argmax order for the whole loop.
  std::stable_sort(order.begin(), order.end(), [&x](PaperIndex a, PaperIndex c) {
    return x[a] > x[c];
  });

  auto set_value = [&](PaperIndex j, double value) {
    const double delta = value - x[j];
    x[j] = value;
    in_s[j] = 0;
    for (AuthorIndex i : inst.authors_of(j)) load[i] += delta;
  };

  std::vector<PaperIndex> candidates;
  for (PaperIndex l : order) {
    if (!in_s[l]) continue;
    set_value(l, 1.0);
    for (AuthorIndex i : inst.authors_of(l)) {
      if (load[i] <= b + tol) continue;
      candidates.clear();
      for (PaperIndex j : inst.papers_of(i)) {
        if (in_s[j]) candidates.push_back(j);
      }
      std::sort(candidates.begin(), candidates.end(),
                [&x](PaperIndex a, PaperIndex c) {
                  return x[a] != x[c] ? x[a] < x[c] : a > c;
                });
      for (PaperIndex j : candidates) {
        if (load[i] <= b + tol) break;
        set_value(j, 0.0);
      }
    }
  }

  DecisionVector out(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    out.set(static_cast<PaperIndex>(j), x[j] > 0.5);
  }
  if (!CheckFeasible(inst, limit, out)) {
    throw Error(ErrorKind::kInfeasibleOutput,
                "rounded decision violates the submission limit");
  }
  return out;
}

OptRejectResult RunOptReject(const AuthorshipInstance& inst, int limit,
                             const LpOptions& lp_options) {
  const ReducedInstance reduced = ReduceInstance(inst, limit);
  const LpModel model = BuildLp(reduced.inner, limit);
  const FractionalSolution frac = SolveLp(model, lp_options);
  const DecisionVector inner_x =
      MaxRounding(frac.values, reduced.inner, limit);

  OptRejectResult result;
  result.decision = LiftDecision(reduced, inner_x);
  result.lp_objective =
      static_cast<double>(reduced.fixed_accepted.size()) + frac.objective;
  result.at_risk_papers = reduced.inner.num_papers();
  result.over_limit_authors = reduced.inner.num_authors();
  result.fractional_papers = frac.fractional.size();
  result.simplex_iterations = frac.iterations;
  return result;
}

DecisionVector ApplyPolicy(PolicyKind kind, const AuthorshipInstance& inst,
                           int limit) {
  switch (kind) {
    case PolicyKind::kAllReject: return AllReject(inst, limit);
    case PolicyKind::kForwardReject: return ForwardReject(inst, limit);
    case PolicyKind::kBackwardReject: return BackwardReject(inst, limit);
    case PolicyKind::kOptReject: return OptReject(inst, limit);
  }
  throw Error(ErrorKind::kConfig, "unknown policy");
}

}  // namespace capopt
