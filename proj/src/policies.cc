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

#include "capopt/policies.h"

#include <vector>

#include "capopt/error.h"

namespace capopt {
namespace {

void CheckLimit(int limit) {
  if (limit < 0) {
    throw Error(ErrorKind::kConfig, "submission limit must be >= 0");
  }
}

}  // namespace

std::string_view PolicyShortName(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kAllReject: return "all";
    case PolicyKind::kForwardReject: return "forward";
    case PolicyKind::kBackwardReject: return "backward";
    case PolicyKind::kOptReject: return "opt";
  }
  return "?";
}

std::string_view PolicyDisplayName(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kAllReject: return "AllReject";
    case PolicyKind::kForwardReject: return "ForwardReject";
    case PolicyKind::kBackwardReject: return "BackwardReject";
    case PolicyKind::kOptReject: return "OptReject";
  }
  return "?";
}

std::optional<PolicyKind> ParsePolicy(std::string_view name) {
  for (PolicyKind kind :
       {PolicyKind::kAllReject, PolicyKind::kForwardReject,
        PolicyKind::kBackwardReject, PolicyKind::kOptReject}) {
    if (name == PolicyShortName(kind) || name == PolicyDisplayName(kind)) {
      return kind;
    }
  }
  return std::nullopt;
}

bool IsBaseline(PolicyKind kind) { return kind != PolicyKind::kOptReject; }

DecisionVector AllReject(const AuthorshipInstance& inst, int limit) {
  CheckLimit(limit);
  DecisionVector x(inst.num_papers(), true);
  const auto b = static_cast<std::size_t>(limit);
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    auto papers = inst.papers_of(static_cast<AuthorIndex>(i));
    // papers_of is ascending, so the excess is the tail.
    for (std::size_t k = std::min(b, papers.size()); k < papers.size(); ++k) {
      x.set(papers[k], false);
    }
  }
  return x;
}

DecisionVector ForwardReject(const AuthorshipInstance& inst, int limit) {
  CheckLimit(limit);
  DecisionVector x(inst.num_papers(), false);
  std::vector<int> accepted(inst.num_authors(), 0);
  for (std::size_t j = 0; j < inst.num_papers(); ++j) {
    const auto pj = static_cast<PaperIndex>(j);
    auto authors = inst.authors_of(pj);
    bool safe = true;
    for (AuthorIndex i : authors) {
      if (accepted[i] >= limit) {
        safe = false;
        break;
      }
    }
    if (!safe) continue;
    x.set(pj, true);
    for (AuthorIndex i : authors) ++accepted[i];
  }
  return x;
}

DecisionVector BackwardReject(const AuthorshipInstance& inst, int limit) {
  CheckLimit(limit);
  DecisionVector x(inst.num_papers(), true);
  std::vector<int> held(inst.num_authors());
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    held[i] = static_cast<int>(inst.paper_count(static_cast<AuthorIndex>(i)));
  }
  for (std::size_t j = inst.num_papers(); j-- > 0;) {
    const auto pj = static_cast<PaperIndex>(j);
    auto authors = inst.authors_of(pj);
    bool over = false;
    for (AuthorIndex i : authors) {
      if (held[i] > limit) {
        over = true;
        break;
      }
    }
    if (!over) continue;
    x.set(pj, false);
    for (AuthorIndex i : authors) --held[i];
  }
  return x;
}

}  // namespace capopt
