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

// Desk-rejection policies in current conference use. All three resolve
// conflicts by submission order: earlier papers (smaller index) are kept.

#ifndef CAPOPT_POLICIES_H_
#define CAPOPT_POLICIES_H_

#include <optional>
#include <string_view>

#include "capopt/instance.h"

namespace capopt {

enum class PolicyKind {
  kAllReject,
  kForwardReject,
  kBackwardReject,
  kOptReject,
};

// Short names used on the command line and in CSV headers:
// "all", "forward", "backward", "opt".
std::string_view PolicyShortName(PolicyKind kind);
std::string_view PolicyDisplayName(PolicyKind kind);
std::optional<PolicyKind> ParsePolicy(std::string_view name);
bool IsBaseline(PolicyKind kind);

// Each over-limit author independently rejects their |P_i| - b latest
// papers; the union of those sets is rejected.
DecisionVector AllReject(const AuthorshipInstance& inst, int limit);

// Scans papers first to last and accepts a paper iff every author still has
// fewer than `limit` accepted papers.
DecisionVector ForwardReject(const AuthorshipInstance& inst, int limit);

// Starts from every paper accepted, scans last to first and rejects a paper
// iff one of its authors still holds more than `limit` papers.
DecisionVector BackwardReject(const AuthorshipInstance& inst, int limit);

}  // namespace capopt

#endif  // CAPOPT_POLICIES_H_
