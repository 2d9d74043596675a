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

// Benchmark harness: timed policy runs, limit sweeps with CSV reports,
// submission-frequency histograms and small-instance gap reports.

#ifndef CAPOPT_BENCH_H_
#define CAPOPT_BENCH_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capopt/exact.h"
#include "capopt/instance.h"
#include "capopt/policies.h"

namespace capopt {

struct PolicyRun {
  PolicyKind policy = PolicyKind::kAllReject;
  DecisionVector decision;
  std::size_t rejections = 0;
  double seconds = 0.0;  // wall clock around the policy call only
};

// Runs and times one policy, then re-verifies the submission limit in
// integer arithmetic. Throws Error(kInfeasibleOutput) if it does not hold.
PolicyRun RunPolicy(const AuthorshipInstance& inst, PolicyKind policy,
                    int limit);

// 100 * (min_baseline - ours) / min_baseline; nullopt when min_baseline is
// zero (no author exceeds the limit).
std::optional<double> RelativeImprovementPct(std::size_t min_baseline,
                                             std::size_t ours);

// Two decimals, or "N/A".
std::string FormatPct(std::optional<double> pct);

struct SweepRow {
  std::string dataset;
  int limit = 0;
  std::map<PolicyKind, std::size_t> rejections;
  std::optional<double> relative_improvement_pct;
  std::map<PolicyKind, double> runtime_seconds;
};

struct SweepReport {
  std::string dataset;
  std::size_t num_papers = 0;
  std::vector<PolicyKind> policies;
  std::vector<SweepRow> rows;

  // Columns: dataset, b, one rejection count per policy,
  // relative_improvement_pct, then runtime_<policy> when requested.
  // Without runtimes the output depends only on the inputs.
  std::string ToCsv(bool with_runtime = false) const;
  // Wall-clock data kept out of the main CSV: generation time and one
  // runtime line per (b, policy).
  std::string MetadataCsv() const;
};

// One row per limit, in the order given. The relative improvement compares
// OptReject with the lowest-rejection baseline among `policies`; it is N/A
// when either side is missing or that baseline rejects nothing.
SweepReport Sweep(const AuthorshipInstance& inst, std::string dataset,
                  std::span<const int> limits,
                  std::span<const PolicyKind> policies);

// "A..B" (step 1), "A..B,S", or a comma list "a,b,c". Throws
// Error(kConfig) on malformed or negative input.
std::vector<int> ParseLimits(std::string_view text);

// Comma list of policy names ("all,forward,opt"); "every" expands to all
// four. Throws Error(kConfig) on unknown names.
std::vector<PolicyKind> ParsePolicies(std::string_view text);

// One line per paper: "<paper id>\t<0|1>".
std::string FormatDecisions(const AuthorshipInstance& inst,
                            const DecisionVector& x);

struct FrequencyRow {
  std::size_t submissions = 0;
  std::size_t authors = 0;
  friend bool operator==(const FrequencyRow&, const FrequencyRow&) = default;
};

// Number of authors per realized submission count, ascending by count.
std::vector<FrequencyRow> SubmissionHistogram(const AuthorshipInstance& inst);
std::string HistogramCsv(std::span<const FrequencyRow> rows);
// Bar chart with log-scaled bar heights.
std::string HistogramSvg(std::span<const FrequencyRow> rows,
                         std::string_view title);

// Least-squares slope of log(authors) against log(submissions) over rows
// with at least `min_authors` authors. nullopt with fewer than two rows.
std::optional<double> PowerLawSlope(std::span<const FrequencyRow> rows,
                                    std::size_t min_authors);

struct OracleGapReport {
  std::size_t num_papers = 0;
  int limit = 0;
  double lp_objective = 0.0;
  std::size_t exact_accepted = 0;
  bool exact_certified = false;
  std::size_t opt_reject_accepted = 0;

  double integrality_gap() const {
    return lp_objective - static_cast<double>(exact_accepted);
  }
  std::size_t rounding_gap() const {
    return exact_accepted - opt_reject_accepted;
  }
  std::string ToText() const;
};

OracleGapReport OracleGap(const AuthorshipInstance& inst, int limit,
                          const ExactOptions& options = {});

// Known ICLR statistics and rejection counts, used to validate fetched
// snapshots.
struct IclrReferenceStats {
  int year;
  std::size_t num_authors;
  std::size_t num_papers;
  std::size_t nnz;
  std::size_t max_papers_per_author;
};

struct IclrReferenceRejections {
  int year;
  int limit;
  std::size_t all_reject;
  std::size_t forward_reject;
  std::size_t opt_reject;
};

std::span<const IclrReferenceStats> IclrReferenceStatsTable();
std::span<const IclrReferenceRejections> IclrReferenceRejectionTable();

struct ReferenceCheck {
  bool has_reference = false;
  bool stats_match = false;
  // Human-readable notes: stat drift and count differences.
  std::vector<std::string> notes;
  // Only meaningful when stats_match: baselines exact, OptReject within
  // opt_tolerance papers.
  bool counts_match = false;
};

ReferenceCheck CompareWithReference(int year, const InstanceStats& stats,
                                    const SweepReport& report,
                                    std::size_t opt_tolerance = 2);

}  // namespace capopt

#endif  // CAPOPT_BENCH_H_
