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

// Exact solvers for the 0/1 maximum desk-acceptance problem on small
// instances. They serve as ground truth for the heuristics.

#ifndef CAPOPT_EXACT_H_
#define CAPOPT_EXACT_H_

#include <cstddef>

#include "capopt/instance.h"

namespace capopt {

struct ExactOptions {
  std::size_t node_budget = 1'000'000;
  // Largest at-risk paper count accepted without complaint.
  std::size_t max_papers = 40;
};

struct ExactResult {
  DecisionVector decision;
  std::size_t accepted = 0;
  // False when the node budget ran out before optimality was proven; the
  // decision is then the best incumbent found.
  bool certified = false;
  // True when the decision is the lexicographically largest optimum
  // (earlier papers preferred). Can be false only if the budget ran out.
  bool lexicographic = false;
  std::size_t nodes = 0;
};

// Branch-and-bound over paper variables after the safe-author reduction.
// Every node is bounded by the LP relaxation of the residual problem and
// branches on the free paper with the largest LP value, accept branch
// first. A second pass fixes papers in submission order to recover the
// lexicographically largest optimal decision.
//
// Throws Error(kTooLarge) when the reduced instance has more than
// options.max_papers papers.
ExactResult ExactOptimum(const AuthorshipInstance& inst, int limit,
                         const ExactOptions& options = {});

struct BruteForceResult {
  std::size_t accepted = 0;
  DecisionVector decision;  // lexicographically largest optimum
};

// Enumerates all 2^m decisions. Throws Error(kTooLarge) when m > 22.
BruteForceResult BruteForceSolve(const AuthorshipInstance& inst, int limit);

inline std::size_t BruteForceOptimum(const AuthorshipInstance& inst,
                                     int limit) {
  return BruteForceSolve(inst, limit).accepted;
}

}  // namespace capopt

#endif  // CAPOPT_EXACT_H_
