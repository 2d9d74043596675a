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

#include "capopt/exact.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capopt/error.h"
#include "capopt/lp.h"
#include "capopt/policies.h"

namespace capopt {
namespace {

constexpr double kBoundSlack = 1e-6;

enum class Fix : std::int8_t { kFree, kReject, kAccept };

class BranchAndBound {
 public:
  BranchAndBound(const AuthorshipInstance& inst, int limit,
                 std::size_t node_budget)
      : inst_(inst),
        limit_(limit),
        budget_(node_budget),
        fix_(inst.num_papers(), Fix::kFree),
        capacity_(inst.num_authors(), limit) {}

  std::size_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

  // Searches the subtree of the current fixing for a decision with more
  // than `floor` (or, when `first_reaching` is set, at least `floor`)
  // accepted papers. Returns the best decision found.
  std::optional<DecisionVector> Search(std::size_t floor, bool first_reaching) {
    target_ = floor;
    first_reaching_ = first_reaching;
    done_ = false;
    best_.reset();
    Visit();
    return best_;
  }

  bool CanAccept(PaperIndex j) const {
    for (AuthorIndex i : inst_.authors_of(j)) {
      if (capacity_[i] < 1) return false;
    }
    return true;
  }

  void Set(PaperIndex j, Fix value) {
    if (fix_[j] == Fix::kAccept) {
      for (AuthorIndex i : inst_.authors_of(j)) ++capacity_[i];
      --fixed_accepted_;
    }
    fix_[j] = value;
    if (value == Fix::kAccept) {
      for (AuthorIndex i : inst_.authors_of(j)) --capacity_[i];
      ++fixed_accepted_;
    }
  }

 private:
  bool Improves(std::size_t count) const {
    return first_reaching_ ? count >= target_ : count > target_;
  }

  void Visit() {
    if (done_ || exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }

    // Residual LP over the free papers.
    std::vector<PaperIndex> free_papers;
    std::vector<int> local(inst_.num_papers(), -1);
    for (std::size_t j = 0; j < inst_.num_papers(); ++j) {
      if (fix_[j] == Fix::kFree) {
        local[j] = static_cast<int>(free_papers.size());
        free_papers.push_back(static_cast<PaperIndex>(j));
      }
    }
    LpModel model;
    model.num_vars = free_papers.size();
    for (std::size_t i = 0; i < inst_.num_authors(); ++i) {
      std::vector<PaperIndex> row;
      for (PaperIndex j : inst_.papers_of(static_cast<AuthorIndex>(i))) {
        if (local[j] >= 0) row.push_back(local[j]);
      }
      if (static_cast<int>(row.size()) <= capacity_[i]) continue;
      model.rows.push_back(std::move(row));
      model.rhs.push_back(static_cast<double>(capacity_[i]));
    }
    const FractionalSolution frac = SolveLp(model);
    const double bound = static_cast<double>(fixed_accepted_) + frac.objective;
    const auto bound_count =
        static_cast<std::size_t>(std::floor(bound + kBoundSlack));
    if (!Improves(bound_count)) return;

    if (frac.fractional.empty()) {
      DecisionVector x(inst_.num_papers(), false);
      std::size_t count = 0;
      for (std::size_t j = 0; j < inst_.num_papers(); ++j) {
        const bool on = fix_[j] == Fix::kAccept ||
                        (fix_[j] == Fix::kFree && frac.values[local[j]] > 0.5);
        x.set(static_cast<PaperIndex>(j), on);
        count += on ? 1 : 0;
      }
      if (Improves(count) && CheckFeasible(inst_, limit_, x)) {
        best_ = std::move(x);
        target_ = count;
        if (first_reaching_) done_ = true;
      }
      return;
    }

    PaperIndex branch = -1;
    double branch_value = -1.0;
    for (int k : frac.fractional) {
      if (frac.values[k] > branch_value) {
        branch_value = frac.values[k];
        branch = free_papers[k];
      }
    }
    if (CanAccept(branch)) {
      Set(branch, Fix::kAccept);
      Visit();
      Set(branch, Fix::kFree);
    }
    if (done_) return;
    Set(branch, Fix::kReject);
    Visit();
    Set(branch, Fix::kFree);
  }

  const AuthorshipInstance& inst_;
  int limit_;
  std::size_t budget_;
  std::vector<Fix> fix_;
  std::vector<int> capacity_;
  std::size_t fixed_accepted_ = 0;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::size_t target_ = 0;
  bool first_reaching_ = false;
  bool done_ = false;
  std::optional<DecisionVector> best_;
};

}  // namespace

ExactResult ExactOptimum(const AuthorshipInstance& inst, int limit,
                         const ExactOptions& options) {
  const ReducedInstance reduced = ReduceInstance(inst, limit);
  const AuthorshipInstance& inner = reduced.inner;
  if (inner.num_papers() > options.max_papers) {
    throw Error(ErrorKind::kTooLarge,
                std::to_string(inner.num_papers()) +
                    " at-risk papers exceed the oracle cap of " +
                    std::to_string(options.max_papers));
  }

  // ForwardReject seeds the incumbent.
  DecisionVector incumbent = ForwardReject(inner, limit);
  std::size_t best = incumbent.AcceptedCount();

  BranchAndBound search(inner, limit, options.node_budget);
  if (auto found = search.Search(best, /*first_reaching=*/false)) {
    incumbent = std::move(*found);
    best = incumbent.AcceptedCount();
  }

  ExactResult result;
  result.certified = !search.exhausted();
  result.lexicographic = result.certified;
  if (result.certified) {
    // Walk papers in submission order and keep each one accepted whenever
    // an optimum remains reachable. `incumbent` stays consistent with the
    // fixed prefix throughout.
    for (std::size_t j = 0; j < inner.num_papers(); ++j) {
      const auto pj = static_cast<PaperIndex>(j);
      if (incumbent.accepted(pj)) {
        search.Set(pj, Fix::kAccept);
        continue;
      }
      if (search.CanAccept(pj)) {
        search.Set(pj, Fix::kAccept);
        if (auto witness = search.Search(best, /*first_reaching=*/true)) {
          incumbent = std::move(*witness);
          continue;
        }
        if (search.exhausted()) {
          result.lexicographic = false;
          break;
        }
      }
      search.Set(pj, Fix::kReject);
    }
  }

  result.decision = LiftDecision(reduced, incumbent);
  result.accepted = result.decision.AcceptedCount();
  result.nodes = search.nodes();
  return result;
}

BruteForceResult BruteForceSolve(const AuthorshipInstance& inst, int limit) {
  const std::size_t m = inst.num_papers();
  if (m > 22) {
    throw Error(ErrorKind::kTooLarge,
                "brute force supports at most 22 papers, got " +
                    std::to_string(m));
  }
  if (limit < 0) {
    throw Error(ErrorKind::kConfig, "submission limit must be >= 0");
  }
  // Paper j sits at bit (m - 1 - j): a larger mask means a
  // lexicographically larger acceptance vector.
  std::vector<std::uint32_t> masks(inst.num_authors(), 0);
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    for (PaperIndex j : inst.papers_of(static_cast<AuthorIndex>(i))) {
      masks[i] |= std::uint32_t{1} << (m - 1 - j);
    }
  }
  std::size_t best = 0;
  std::uint32_t best_mask = 0;
  const std::uint32_t end = std::uint32_t{1} << m;
  for (std::uint32_t x = 0; x < end; ++x) {
    const auto count = static_cast<std::size_t>(std::popcount(x));
    if (count < best) continue;
    bool ok = true;
    for (std::uint32_t mask : masks) {
      if (std::popcount(mask & x) > limit) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best = count;
      best_mask = x;
    }
  }
  BruteForceResult result;
  result.accepted = best;
  result.decision = DecisionVector(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    result.decision.set(static_cast<PaperIndex>(j),
                        (best_mask >> (m - 1 - j)) & 1U);
  }
  return result;
}

}  // namespace capopt
