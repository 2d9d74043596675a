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

// capopt: desk-rejection policies under per-author submission limits.
//
//   capopt ingest --year 2024 --api v2 --out iclr2024.capopt
//   capopt stats iclr2024.capopt
//   capopt run iclr2024.capopt --policy opt --limit 7 --decisions out.tsv
//   capopt sweep iclr2024.capopt --limits 4..25,3 --csv sweep.csv
//   capopt hist iclr2024.capopt --svg hist.svg
//   capopt gen --authors 38495 --papers 11672 --alpha 2.6 --seed 7 --out g.capopt
//   capopt oracle small.capopt --limit 2
//
// Exit codes: 0 success, 2 parse/config error, 3 internal infeasible
// output, 4 network error.

#include <fmt/format.h>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "capopt/bench.h"
#include "capopt/error.h"
#include "capopt/exact.h"
#include "capopt/generator.h"
#include "capopt/instance.h"
#include "capopt/instance_io.h"
#include "capopt/lp.h"
#include "capopt/openreview.h"
#include "capopt/opt_reject.h"
#include "capopt/policies.h"

namespace {

using namespace capopt;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitNetwork = 4;

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kHttp:
    case ErrorKind::kPaginationStall:
      return kExitNetwork;
    case ErrorKind::kInfeasibleOutput:
    case ErrorKind::kInfeasibleInput:
    case ErrorKind::kIterationLimitExceeded:
      return kExitInfeasible;
    default:
      return kExitConfig;
  }
}

AuthorshipInstance LoadInstance(const std::string& path, bool drop_empty) {
  const std::vector<PaperRecord> records = ReadInstance(path);
  BuildReport report;
  AuthorshipInstance inst =
      BuildInstance(records, BuildOptions{drop_empty}, &report);
  if (!report.dropped_papers.empty()) {
    std::cerr << fmt::format("warning: dropped {} paper(s) without authors\n",
                             report.dropped_papers.size());
  }
  return inst;
}

std::string DatasetName(const std::string& path) {
  std::filesystem::path p(path);
  while (p.has_extension()) p = p.stem();
  return p.filename().string();
}

void PrintStats(const InstanceStats& s) {
  std::cout << fmt::format(
      "authors (n)                          {}\n"
      "papers (m)                           {}\n"
      "nnz(A)                               {}\n"
      "max papers per author (k1, MSPA)     {}\n"
      "max authors per paper (k2)           {}\n"
      "mean papers per author (nnz/n)       {:.2f}\n",
      s.num_authors, s.num_papers, s.nnz, s.max_papers_per_author,
      s.max_authors_per_paper, s.mean_papers_per_author);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-rejection optimization under per-author submission limits"};
  app.require_subcommand(1);
  bool drop_empty = false;
  app.add_flag("--drop-empty", drop_empty,
               "Drop papers without authors instead of failing");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Fetch an ICLR year from OpenReview");
  int ingest_year = 0;
  std::string ingest_api;
  std::string ingest_out;
  std::string ingest_url;
  std::size_t ingest_page = 1000;
  ingest->add_option("--year", ingest_year, "Conference year")->required();
  ingest->add_option("--api", ingest_api, "OpenReview API version")
      ->check(CLI::IsMember({"v1", "v2"}));
  ingest->add_option("--out", ingest_out, "Snapshot file (.gz compresses)")->required();
  ingest->add_option("--base-url", ingest_url,
                     "Override the API base URL (default: $CAPOPT_OPENREVIEW_URL)");
  ingest->add_option("--page-size", ingest_page, "Notes per request");

  // stats
  auto* stats = app.add_subcommand("stats", "Print instance statistics");
  std::string stats_file;
  stats->add_option("file", stats_file)->required();

  // run
  auto* run = app.add_subcommand("run", "Run one policy at one limit");
  std::string run_file, run_policy, run_decisions, run_dump_lp;
  int run_limit = 0;
  run->add_option("file", run_file)->required();
  run->add_option("--policy", run_policy, "all | forward | backward | opt")->required();
  run->add_option("--limit", run_limit, "Submission limit b")->required()->check(
      CLI::NonNegativeNumber);
  run->add_option("--decisions", run_decisions, "Write '<id>\\t<0|1>' lines here");
  run->add_option("--dump-lp", run_dump_lp,
                  "Write the LP over at-risk papers as inequalities");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Sweep limits across policies");
  std::string sweep_file, sweep_limits, sweep_policies = "all,forward,opt",
                          sweep_csv, sweep_dataset;
  bool sweep_runtime = false;
  int sweep_reference_year = 0;
  sweep->add_option("file", sweep_file)->required();
  sweep->add_option("--limits", sweep_limits, "A..B[,step] or a,b,c")->required();
  sweep->add_option("--policies", sweep_policies, "Comma list or 'every'");
  sweep->add_option("--csv", sweep_csv, "Report path")->required();
  sweep->add_option("--dataset", sweep_dataset, "Dataset column (default: file stem)");
  sweep->add_flag("--with-runtime", sweep_runtime,
                  "Append runtime columns to the main CSV");
  sweep->add_option("--reference-year", sweep_reference_year,
                    "Compare against reference ICLR counts for this year");

  // hist
  auto* hist = app.add_subcommand("hist", "Submission-frequency histogram");
  std::string hist_file, hist_svg, hist_csv;
  hist->add_option("file", hist_file)->required();
  hist->add_option("--svg", hist_svg, "Write an SVG bar chart");
  hist->add_option("--csv", hist_csv, "Write CSV here instead of stdout");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a synthetic instance");
  GeneratorConfig gen_config;
  std::string gen_out;
  std::size_t gen_target_nnz = 0;
  gen->add_option("--authors", gen_config.num_authors)->required();
  gen->add_option("--papers", gen_config.num_papers)->required();
  gen->add_option("--alpha", gen_config.alpha, "Productivity power-law exponent");
  gen->add_option("--seed", gen_config.seed);
  gen->add_option("--out", gen_out)->required();
  gen->add_option("--mean-authors", gen_config.authors_per_paper_mean,
                  "Mean authors per paper (0: derived from productivity)");
  gen->add_option("--max-per-author", gen_config.max_papers_per_author,
                  "Productivity cap (default: paper count)");
  gen->add_option("--target-nnz", gen_target_nnz,
                  "Choose alpha so the expected nnz matches this");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "LP bound, exact optimum and OptReject");
  std::string oracle_file;
  int oracle_limit = 0;
  ExactOptions oracle_options;
  oracle->add_option("file", oracle_file)->required();
  oracle->add_option("--limit", oracle_limit)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--max-papers", oracle_options.max_papers,
                     "Largest at-risk paper count to attempt");
  oracle->add_option("--node-budget", oracle_options.node_budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*ingest) {
      const ApiVersion api = ingest_api.empty()
                                 ? ApiVersionForYear(ingest_year)
                                 : *ParseApiVersion(ingest_api);
      FetchOptions options;
      options.base_url = ingest_url;
      options.page_size = ingest_page;
      FetchReport fetch_report;
      const auto raws = FetchYear(ingest_year, api, options, &fetch_report);
      NormalizeReport norm_report;
      const auto records = Normalize(raws, &norm_report);
      if (records.empty()) {
        throw Error(ErrorKind::kParse, "no submissions with authors were returned");
      }
      WriteInstance(ingest_out, records);
      std::cerr << fmt::format(
          "fetched {} notes in {} pages; dropped {} without authors, {} after "
          "normalization; {} duplicate labels collapsed\n",
          fetch_report.notes, fetch_report.pages,
          fetch_report.dropped_without_authors, norm_report.dropped_papers,
          norm_report.duplicate_labels);
      PrintStats(ComputeStats(BuildInstance(records)));
    } else if (*stats) {
      PrintStats(ComputeStats(LoadInstance(stats_file, drop_empty)));
    } else if (*run) {
      const auto policy = ParsePolicy(run_policy);
      if (!policy) throw Error(ErrorKind::kConfig, "unknown policy '" + run_policy + "'");
      const AuthorshipInstance inst = LoadInstance(run_file, drop_empty);
      if (!run_dump_lp.empty()) {
        const ReducedInstance reduced = ReduceInstance(inst, run_limit);
        WriteFileBytes(run_dump_lp, BuildLp(reduced.inner, run_limit).ToString());
      }
      const PolicyRun result = RunPolicy(inst, *policy, run_limit);
      if (!run_decisions.empty()) {
        WriteFileBytes(run_decisions, FormatDecisions(inst, result.decision));
      }
      std::cout << fmt::format(
          "policy={} b={} papers={} accepted={} rejections={} runtime_s={:.2f}\n",
          PolicyDisplayName(*policy), run_limit, inst.num_papers(),
          result.decision.AcceptedCount(), result.rejections, result.seconds);
    } else if (*sweep) {
      const AuthorshipInstance inst = LoadInstance(sweep_file, drop_empty);
      const auto limits = ParseLimits(sweep_limits);
      const auto policies = ParsePolicies(sweep_policies);
      const SweepReport report =
          Sweep(inst, sweep_dataset.empty() ? DatasetName(sweep_file) : sweep_dataset,
                limits, policies);
      WriteFileBytes(sweep_csv, report.ToCsv(sweep_runtime));
      WriteFileBytes(sweep_csv + ".meta.csv", report.MetadataCsv());
      std::cout << report.ToCsv(sweep_runtime);
      if (sweep_reference_year != 0) {
        const ReferenceCheck check = CompareWithReference(
            sweep_reference_year, ComputeStats(inst), report);
        for (const auto& note : check.notes) std::cout << "reference: " << note << '\n';
        if (check.has_reference && check.stats_match) {
          std::cout << "reference: counts "
                    << (check.counts_match ? "match" : "differ") << '\n';
        }
      }
    } else if (*hist) {
      const AuthorshipInstance inst = LoadInstance(hist_file, drop_empty);
      const auto rows = SubmissionHistogram(inst);
      if (hist_csv.empty()) {
        std::cout << HistogramCsv(rows);
      } else {
        WriteFileBytes(hist_csv, HistogramCsv(rows));
      }
      if (!hist_svg.empty()) {
        WriteFileBytes(hist_svg,
                       HistogramSvg(rows, "Submission frequency: " + DatasetName(hist_file)));
      }
    } else if (*gen) {
      if (gen_target_nnz > 0) {
        const std::size_t cap = gen_config.max_papers_per_author > 0
                                    ? gen_config.max_papers_per_author
                                    : gen_config.num_papers;
        gen_config.alpha = TuneAlpha(gen_config.num_authors, gen_target_nnz, cap);
        std::cerr << fmt::format("alpha tuned to {:.4f}\n", gen_config.alpha);
      }
      const auto records = Generate(gen_config);
      WriteInstance(gen_out, records);
      PrintStats(ComputeStats(BuildInstance(records)));
    } else if (*oracle) {
      const AuthorshipInstance inst = LoadInstance(oracle_file, drop_empty);
      std::cout << OracleGap(inst, oracle_limit, oracle_options).ToText();
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}
