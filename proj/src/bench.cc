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

#include "capopt/bench.h"

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>

#include "capopt/error.h"
#include "capopt/opt_reject.h"

namespace capopt {
namespace {

int ParseInt(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::kConfig,
                fmt::format("bad {} '{}'", what, text));
  }
  return value;
}

std::vector<std::string_view> SplitComma(std::string_view text) {
  std::vector<std::string_view> parts;
  while (true) {
    const std::size_t comma = text.find(',');
    parts.push_back(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return parts;
}

constexpr std::array<IclrReferenceStats, 11> kReferenceStats{{
    {2013, 161, 67, 190, 7},
    {2014, 187, 69, 217, 7},
    {2017, 1474, 490, 1825, 8},
    {2018, 2820, 935, 3512, 12},
    {2019, 4388, 1419, 5619, 23},
    {2020, 6963, 2213, 9117, 26},
    {2021, 7964, 2594, 10854, 30},
    {2022, 8507, 2617, 11572, 23},
    {2023, 12451, 3793, 17375, 24},
    {2024, 23382, 7404, 35912, 35},
    {2025, 38495, 11672, 61992, 42},
}};

// Rejections at b = 4, 7, ..., 25 for AllReject, ForwardReject, OptReject.
struct ReferenceYear {
  int year;
  std::array<std::array<std::size_t, 8>, 3> counts;
};

constexpr std::array<ReferenceYear, 11> kReferenceYears{{
    {2013, {{{5, 0, 0, 0, 0, 0, 0, 0},
             {5, 0, 0, 0, 0, 0, 0, 0},
             {5, 0, 0, 0, 0, 0, 0, 0}}}},
    {2014, {{{3, 0, 0, 0, 0, 0, 0, 0},
             {3, 0, 0, 0, 0, 0, 0, 0},
             {3, 0, 0, 0, 0, 0, 0, 0}}}},
    {2017, {{{24, 1, 0, 0, 0, 0, 0, 0},
             {22, 1, 0, 0, 0, 0, 0, 0},
             {21, 1, 0, 0, 0, 0, 0, 0}}}},
    {2018, {{{56, 18, 5, 0, 0, 0, 0, 0},
             {53, 18, 5, 0, 0, 0, 0, 0},
             {51, 17, 5, 0, 0, 0, 0, 0}}}},
    {2019, {{{127, 43, 18, 11, 7, 4, 1, 0},
             {115, 39, 18, 11, 7, 4, 1, 0},
             {106, 37, 18, 11, 7, 4, 1, 0}}}},
    {2020, {{{206, 62, 33, 21, 14, 8, 4, 1},
             {189, 60, 33, 21, 14, 8, 4, 1},
             {177, 56, 29, 18, 11, 7, 4, 1}}}},
    {2021, {{{363, 140, 70, 37, 21, 13, 8, 5},
             {328, 129, 65, 35, 21, 13, 8, 5},
             {303, 120, 65, 35, 21, 13, 8, 5}}}},
    {2022, {{{363, 141, 61, 24, 13, 7, 1, 0},
             {326, 132, 59, 24, 13, 7, 1, 0},
             {296, 124, 56, 23, 13, 7, 1, 0}}}},
    {2023, {{{572, 196, 98, 50, 27, 11, 2, 0},
             {506, 181, 91, 45, 22, 8, 2, 0},
             {460, 166, 84, 43, 20, 8, 2, 0}}}},
    {2024, {{{1797, 811, 384, 186, 104, 58, 30, 16},
             {1553, 720, 342, 170, 95, 53, 26, 13},
             {1393, 637, 303, 149, 83, 44, 21, 12}}}},
    {2025, {{{3464, 1807, 995, 554, 294, 158, 89, 51},
             {2984, 1577, 889, 499, 273, 151, 83, 47},
             {2668, 1379, 773, 438, 238, 132, 74, 43}}}},
}};

std::vector<IclrReferenceRejections> FlattenReference() {
  std::vector<IclrReferenceRejections> rows;
  for (const auto& y : kReferenceYears) {
    for (std::size_t k = 0; k < 8; ++k) {
      rows.push_back({y.year, static_cast<int>(4 + 3 * k), y.counts[0][k],
                      y.counts[1][k], y.counts[2][k]});
    }
  }
  return rows;
}

}  // namespace

PolicyRun RunPolicy(const AuthorshipInstance& inst, PolicyKind policy,
                    int limit) {
  PolicyRun run;
  run.policy = policy;
  const auto start = std::chrono::steady_clock::now();
  run.decision = ApplyPolicy(policy, inst, limit);
  run.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (!CheckFeasible(inst, limit, run.decision)) {
    throw Error(ErrorKind::kInfeasibleOutput,
                fmt::format("{} produced an infeasible decision at b={}",
                            PolicyDisplayName(policy), limit));
  }
  run.rejections = run.decision.RejectedCount();
  return run;
}

std::optional<double> RelativeImprovementPct(std::size_t min_baseline,
                                             std::size_t ours) {
  if (min_baseline == 0) return std::nullopt;
  return 100.0 *
         (static_cast<double>(min_baseline) - static_cast<double>(ours)) /
         static_cast<double>(min_baseline);
}

std::string FormatPct(std::optional<double> pct) {
  if (!pct) return "N/A";
  return fmt::format("{:.2f}", *pct);
}

std::string SweepReport::ToCsv(bool with_runtime) const {
  std::string out = "dataset,b";
  for (PolicyKind p : policies) out += fmt::format(",{}", PolicyShortName(p));
  out += ",relative_improvement_pct";
  if (with_runtime) {
    for (PolicyKind p : policies) {
      out += fmt::format(",runtime_{}", PolicyShortName(p));
    }
  }
  out += '\n';
  for (const SweepRow& row : rows) {
    out += fmt::format("{},{}", row.dataset, row.limit);
    for (PolicyKind p : policies) out += fmt::format(",{}", row.rejections.at(p));
    out += ',' + FormatPct(row.relative_improvement_pct);
    if (with_runtime) {
      for (PolicyKind p : policies) {
        out += fmt::format(",{:.2f}", row.runtime_seconds.at(p));
      }
    }
    out += '\n';
  }
  return out;
}

std::string SweepReport::MetadataCsv() const {
  const std::time_t now = std::time(nullptr);
  std::string out = fmt::format("generated_at,{:%Y-%m-%dT%H:%M:%SZ}\n",
                                fmt::gmtime(now));
  out += "dataset,b,policy,seconds\n";
  for (const SweepRow& row : rows) {
    for (PolicyKind p : policies) {
      out += fmt::format("{},{},{},{:.2f}\n", row.dataset, row.limit,
                         PolicyShortName(p), row.runtime_seconds.at(p));
    }
  }
  return out;
}

SweepReport Sweep(const AuthorshipInstance& inst, std::string dataset,
                  std::span<const int> limits,
                  std::span<const PolicyKind> policies) {
  if (limits.empty()) throw Error(ErrorKind::kConfig, "no limits to sweep");
  if (policies.empty()) throw Error(ErrorKind::kConfig, "no policies to run");
  SweepReport report;
  report.dataset = std::move(dataset);
  report.num_papers = inst.num_papers();
  report.policies.assign(policies.begin(), policies.end());
  for (int limit : limits) {
    SweepRow row;
    row.dataset = report.dataset;
    row.limit = limit;
    std::optional<std::size_t> best_baseline;
    std::optional<std::size_t> ours;
    for (PolicyKind p : policies) {
      const PolicyRun run = RunPolicy(inst, p, limit);
      row.rejections[p] = run.rejections;
      row.runtime_seconds[p] = run.seconds;
      if (IsBaseline(p)) {
        best_baseline = std::min(best_baseline.value_or(run.rejections),
                                 run.rejections);
      } else {
        ours = run.rejections;
      }
    }
    if (best_baseline && ours) {
      row.relative_improvement_pct = RelativeImprovementPct(*best_baseline, *ours);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<int> ParseLimits(std::string_view text) {
  std::vector<int> limits;
  if (const std::size_t dots = text.find(".."); dots != std::string_view::npos) {
    const int lo = ParseInt(text.substr(0, dots), "limit");
    std::string_view rest = text.substr(dots + 2);
    int step = 1;
    if (const std::size_t comma = rest.find(','); comma != std::string_view::npos) {
      step = ParseInt(rest.substr(comma + 1), "step");
      rest = rest.substr(0, comma);
    }
    const int hi = ParseInt(rest, "limit");
    if (step <= 0) throw Error(ErrorKind::kConfig, "step must be positive");
    if (hi < lo) throw Error(ErrorKind::kConfig, "empty limit range");
    for (int b = lo; b <= hi; b += step) limits.push_back(b);
  } else {
    for (std::string_view part : SplitComma(text)) {
      limits.push_back(ParseInt(part, "limit"));
    }
  }
  for (int b : limits) {
    if (b < 0) throw Error(ErrorKind::kConfig, "limits must be >= 0");
  }
  return limits;
}

std::vector<PolicyKind> ParsePolicies(std::string_view text) {
  if (text == "every") {
    return {PolicyKind::kAllReject, PolicyKind::kForwardReject,
            PolicyKind::kBackwardReject, PolicyKind::kOptReject};
  }
  std::vector<PolicyKind> out;
  for (std::string_view part : SplitComma(text)) {
    auto kind = ParsePolicy(part);
    if (!kind) {
      throw Error(ErrorKind::kConfig, fmt::format("unknown policy '{}'", part));
    }
    if (std::find(out.begin(), out.end(), *kind) == out.end()) {
      out.push_back(*kind);
    }
  }
  return out;
}

std::string FormatDecisions(const AuthorshipInstance& inst,
                            const DecisionVector& x) {
  if (x.size() != inst.num_papers()) {
    throw Error(ErrorKind::kLengthMismatch, "decision/instance size mismatch");
  }
  std::string out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto pj = static_cast<PaperIndex>(j);
    out += inst.paper_id(pj);
    out += x.accepted(pj) ? "\t1\n" : "\t0\n";
  }
  return out;
}

std::vector<FrequencyRow> SubmissionHistogram(const AuthorshipInstance& inst) {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    ++counts[inst.paper_count(static_cast<AuthorIndex>(i))];
  }
  std::vector<FrequencyRow> rows;
  for (const auto& [submissions, authors] : counts) {
    rows.push_back({submissions, authors});
  }
  return rows;
}

std::string HistogramCsv(std::span<const FrequencyRow> rows) {
  std::string out = "submissions,authors\n";
  for (const auto& row : rows) {
    out += fmt::format("{},{}\n", row.submissions, row.authors);
  }
  return out;
}

std::string HistogramSvg(std::span<const FrequencyRow> rows,
                         std::string_view title) {
  constexpr double kWidth = 800, kHeight = 400, kMargin = 50;
  const std::size_t max_count =
      rows.empty() ? 1
                   : std::max_element(rows.begin(), rows.end(),
                                      [](const auto& a, const auto& b) {
                                        return a.submissions < b.submissions;
                                      })->submissions;
  std::size_t max_authors = 1;
  for (const auto& row : rows) max_authors = std::max(max_authors, row.authors);
  const double top = std::log10(static_cast<double>(max_authors)) + 1.0;
  const double slot = (kWidth - 2 * kMargin) / static_cast<double>(max_count);
  const double plot_h = kHeight - 2 * kMargin;

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\" "
      "text-anchor=\"middle\">{3}</text>\n",
      kWidth, kHeight, kWidth / 2, title);
  out += fmt::format(
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n",
      kMargin, kHeight - kMargin, kWidth - kMargin);
  for (const auto& row : rows) {
    // log10(authors) + 1 keeps single-author bars visible.
    const double h =
        plot_h * (std::log10(static_cast<double>(row.authors)) + 1.0) / top;
    const double x = kMargin + slot * static_cast<double>(row.submissions - 1);
    out += fmt::format(
        "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
        "fill=\"steelblue\"><title>{} submissions: {} authors</title></rect>\n",
        x, kHeight - kMargin - h, std::max(slot * 0.8, 0.5), h,
        row.submissions, row.authors);
  }
  out += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" "
      "text-anchor=\"middle\">submissions per author (bar height: log10 "
      "authors + 1)</text>\n</svg>\n",
      kWidth / 2, kHeight - 15);
  return out;
}

std::optional<double> PowerLawSlope(std::span<const FrequencyRow> rows,
                                    std::size_t min_authors) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (const auto& row : rows) {
    if (row.submissions == 0 || row.authors < min_authors) continue;
    const double x = std::log(static_cast<double>(row.submissions));
    const double y = std::log(static_cast<double>(row.authors));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  if (k < 2) return std::nullopt;
  const double n = static_cast<double>(k);
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

std::string OracleGapReport::ToText() const {
  return fmt::format(
      "papers                 {}\n"
      "limit                  {}\n"
      "lp_objective           {:.6f}\n"
      "exact_accepted         {}{}\n"
      "opt_reject_accepted    {}\n"
      "integrality_gap        {:.6f}\n"
      "rounding_gap           {}\n",
      num_papers, limit, lp_objective, exact_accepted,
      exact_certified ? "" : " (not certified: node budget exhausted)",
      opt_reject_accepted, integrality_gap(), rounding_gap());
}

OracleGapReport OracleGap(const AuthorshipInstance& inst, int limit,
                          const ExactOptions& options) {
  OracleGapReport report;
  report.num_papers = inst.num_papers();
  report.limit = limit;
  const ExactResult exact = ExactOptimum(inst, limit, options);
  report.exact_accepted = exact.accepted;
  report.exact_certified = exact.certified;
  const OptRejectResult ours = RunOptReject(inst, limit);
  report.lp_objective = ours.lp_objective;
  report.opt_reject_accepted = ours.decision.AcceptedCount();
  return report;
}

std::span<const IclrReferenceStats> IclrReferenceStatsTable() {
  return kReferenceStats;
}

std::span<const IclrReferenceRejections> IclrReferenceRejectionTable() {
  static const std::vector<IclrReferenceRejections> rows = FlattenReference();
  return rows;
}

ReferenceCheck CompareWithReference(int year, const InstanceStats& stats,
                                    const SweepReport& report,
                                    std::size_t opt_tolerance) {
  ReferenceCheck check;
  const auto ref_stats = std::find_if(
      kReferenceStats.begin(), kReferenceStats.end(),
      [year](const IclrReferenceStats& s) { return s.year == year; });
  if (ref_stats == kReferenceStats.end()) {
    check.notes.push_back(fmt::format("no reference data for {}", year));
    return check;
  }
  check.has_reference = true;
  check.stats_match = stats.num_authors == ref_stats->num_authors &&
                      stats.num_papers == ref_stats->num_papers &&
                      stats.nnz == ref_stats->nnz;
  if (!check.stats_match) {
    check.notes.push_back(fmt::format(
        "snapshot drift: (n, m, nnz) = ({}, {}, {}), reference ({}, {}, {}); "
        "counts are reported but not compared",
        stats.num_authors, stats.num_papers, stats.nnz, ref_stats->num_authors,
        ref_stats->num_papers, ref_stats->nnz));
  }

  bool all_ok = true;
  std::size_t compared = 0;
  for (const auto& ref : IclrReferenceRejectionTable()) {
    if (ref.year != year) continue;
    auto row = std::find_if(report.rows.begin(), report.rows.end(),
                            [&ref](const SweepRow& r) { return r.limit == ref.limit; });
    if (row == report.rows.end()) continue;
    auto compare = [&](PolicyKind p, std::size_t expected, std::size_t tol) {
      auto it = row->rejections.find(p);
      if (it == row->rejections.end()) return;
      ++compared;
      const std::size_t got = it->second;
      const std::size_t diff = got > expected ? got - expected : expected - got;
      if (diff > tol) {
        all_ok = false;
        check.notes.push_back(fmt::format("b={} {}: {} rejections, reference {}",
                                          ref.limit, PolicyDisplayName(p), got,
                                          expected));
      }
    };
    compare(PolicyKind::kAllReject, ref.all_reject, 0);
    compare(PolicyKind::kForwardReject, ref.forward_reject, 0);
    compare(PolicyKind::kOptReject, ref.opt_reject, opt_tolerance);
  }
  check.counts_match = check.stats_match && all_ok && compared > 0;
  return check;
}

}  // namespace capopt
