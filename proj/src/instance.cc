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

#include "capopt/instance.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "capopt/error.h"

namespace capopt {

DecisionVector::DecisionVector(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

std::size_t DecisionVector::AcceptedCount() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<PaperIndex> DecisionVector::AcceptedPapers() const {
  std::vector<PaperIndex> out;
  for (std::size_t j = 0; j < bits_.size(); ++j) {
    if (bits_[j]) out.push_back(static_cast<PaperIndex>(j));
  }
  return out;
}

std::vector<PaperIndex> DecisionVector::RejectedPapers() const {
  std::vector<PaperIndex> out;
  for (std::size_t j = 0; j < bits_.size(); ++j) {
    if (!bits_[j]) out.push_back(static_cast<PaperIndex>(j));
  }
  return out;
}

AuthorshipInstance::AuthorshipInstance(
    std::vector<std::vector<AuthorIndex>> authors_of,
    std::vector<std::string> author_labels,
    std::vector<std::string> paper_ids)
    : author_labels_(std::move(author_labels)),
      paper_ids_(std::move(paper_ids)) {
  const std::size_t m = authors_of.size();
  const std::size_t n = author_labels_.size();
  if (paper_ids_.empty()) {
    paper_ids_.reserve(m);
    for (std::size_t j = 0; j < m; ++j) paper_ids_.push_back(std::to_string(j + 1));
  }
  if (paper_ids_.size() != m) {
    throw Error(ErrorKind::kLengthMismatch,
                "paper id count " + std::to_string(paper_ids_.size()) +
                    " != paper count " + std::to_string(m));
  }

  std::vector<std::size_t> author_degree(n, 0);
  paper_offsets_.reserve(m + 1);
  for (std::size_t j = 0; j < m; ++j) {
    auto& list = authors_of[j];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (list.empty()) {
      throw Error(ErrorKind::kEmptyPaper,
                  "paper " + std::to_string(j + 1) + " has no authors");
    }
    for (AuthorIndex i : list) {
      if (i < 0 || static_cast<std::size_t>(i) >= n) {
        throw Error(ErrorKind::kConfig, "author index " + std::to_string(i) +
                                            " out of range on paper " +
                                            std::to_string(j + 1));
      }
      paper_authors_.push_back(i);
      ++author_degree[i];
    }
    paper_offsets_.push_back(paper_authors_.size());
  }

  author_offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    author_offsets_[i + 1] = author_offsets_[i] + author_degree[i];
  }
  // Papers are visited in ascending order, so each row comes out sorted.
  author_papers_.resize(paper_authors_.size());
  std::vector<std::size_t> cursor(author_offsets_.begin(),
                                  author_offsets_.end() - 1);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = paper_offsets_[j]; k < paper_offsets_[j + 1]; ++k) {
      author_papers_[cursor[paper_authors_[k]]++] = static_cast<PaperIndex>(j);
    }
  }
}

std::vector<PaperRecord> AuthorshipInstance::ToRecords() const {
  std::vector<PaperRecord> records;
  records.reserve(num_papers());
  for (std::size_t j = 0; j < num_papers(); ++j) {
    PaperRecord rec{paper_ids_[j], {}};
    for (AuthorIndex i : authors_of(static_cast<PaperIndex>(j))) {
      rec.authors.push_back(author_labels_[i]);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

namespace {

AuthorshipInstance BuildFromLists(
    std::span<const std::vector<std::string>> lists,
    std::span<const std::string> ids, const BuildOptions& options,
    BuildReport* report) {
  std::unordered_map<std::string, AuthorIndex> index_of;
  std::vector<std::string> labels;
  std::vector<std::vector<AuthorIndex>> authors_of;
  std::vector<std::string> kept_ids;
  authors_of.reserve(lists.size());

  for (std::size_t j = 0; j < lists.size(); ++j) {
    if (lists[j].empty()) {
      if (!options.drop_empty_papers) {
        throw Error(ErrorKind::kEmptyPaper,
                    "paper " + std::to_string(j + 1) + " has no authors");
      }
      if (report != nullptr) report->dropped_papers.push_back(j);
      continue;
    }
    std::vector<AuthorIndex> row;
    row.reserve(lists[j].size());
    for (const std::string& label : lists[j]) {
      auto [it, inserted] =
          index_of.try_emplace(label, static_cast<AuthorIndex>(labels.size()));
      if (inserted) labels.push_back(label);
      row.push_back(it->second);
    }
    authors_of.push_back(std::move(row));
    kept_ids.push_back(ids.empty() ? std::to_string(j + 1) : ids[j]);
  }
  return AuthorshipInstance(std::move(authors_of), std::move(labels),
                            std::move(kept_ids));
}

}  // namespace

AuthorshipInstance BuildInstance(
    std::span<const std::vector<std::string>> paper_author_lists,
    const BuildOptions& options, BuildReport* report) {
  return BuildFromLists(paper_author_lists, {}, options, report);
}

AuthorshipInstance BuildInstance(std::span<const PaperRecord> records,
                                 const BuildOptions& options,
                                 BuildReport* report) {
  std::vector<std::vector<std::string>> lists;
  std::vector<std::string> ids;
  lists.reserve(records.size());
  ids.reserve(records.size());
  for (const PaperRecord& rec : records) {
    lists.push_back(rec.authors);
    ids.push_back(rec.id);
  }
  return BuildFromLists(lists, ids, options, report);
}

InstanceStats ComputeStats(const AuthorshipInstance& inst) {
  InstanceStats stats;
  stats.num_authors = inst.num_authors();
  stats.num_papers = inst.num_papers();
  stats.nnz = inst.nnz();
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    stats.max_papers_per_author = std::max(
        stats.max_papers_per_author, inst.paper_count(static_cast<AuthorIndex>(i)));
  }
  for (std::size_t j = 0; j < inst.num_papers(); ++j) {
    stats.max_authors_per_paper =
        std::max(stats.max_authors_per_paper,
                 inst.authors_of(static_cast<PaperIndex>(j)).size());
  }
  if (stats.num_authors > 0) {
    stats.mean_papers_per_author =
        static_cast<double>(stats.nnz) / static_cast<double>(stats.num_authors);
  }
  return stats;
}

std::vector<int> AuthorLoads(const AuthorshipInstance& inst,
                             const DecisionVector& x) {
  if (x.size() != inst.num_papers()) {
    throw Error(ErrorKind::kLengthMismatch,
                "decision has " + std::to_string(x.size()) +
                    " entries, instance has " +
                    std::to_string(inst.num_papers()) + " papers");
  }
  std::vector<int> load(inst.num_authors(), 0);
  for (std::size_t j = 0; j < inst.num_papers(); ++j) {
    if (!x.accepted(static_cast<PaperIndex>(j))) continue;
    for (AuthorIndex i : inst.authors_of(static_cast<PaperIndex>(j))) ++load[i];
  }
  return load;
}

bool CheckFeasible(const AuthorshipInstance& inst, int limit,
                   const DecisionVector& x) {
  const std::vector<int> load = AuthorLoads(inst, x);
  return std::all_of(load.begin(), load.end(),
                     [limit](int l) { return l <= limit; });
}

ReducedInstance ReduceInstance(const AuthorshipInstance& inst, int limit) {
  if (limit < 0) {
    throw Error(ErrorKind::kConfig, "submission limit must be >= 0");
  }
  ReducedInstance red;
  red.limit = limit;
  red.original_papers = inst.num_papers();

  const std::size_t n = inst.num_authors();
  std::vector<AuthorIndex> inner_author(n, -1);
  std::vector<std::string> inner_labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.paper_count(static_cast<AuthorIndex>(i)) >
        static_cast<std::size_t>(limit)) {
      inner_author[i] = static_cast<AuthorIndex>(inner_labels.size());
      inner_labels.push_back(inst.author_label(static_cast<AuthorIndex>(i)));
    }
  }

  std::vector<std::vector<AuthorIndex>> inner_authors_of;
  std::vector<std::string> inner_ids;
  for (std::size_t j = 0; j < inst.num_papers(); ++j) {
    const auto pj = static_cast<PaperIndex>(j);
    std::vector<AuthorIndex> row;
    for (AuthorIndex i : inst.authors_of(pj)) {
      if (inner_author[i] >= 0) row.push_back(inner_author[i]);
    }
    if (row.empty()) {
      red.fixed_accepted.push_back(pj);
    } else {
      red.paper_map.push_back(pj);
      inner_authors_of.push_back(std::move(row));
      inner_ids.push_back(inst.paper_id(pj));
    }
  }
  red.inner = AuthorshipInstance(std::move(inner_authors_of),
                                 std::move(inner_labels), std::move(inner_ids));
  return red;
}

DecisionVector LiftDecision(const ReducedInstance& reduced,
                            const DecisionVector& inner_x) {
  if (inner_x.size() != reduced.inner.num_papers()) {
    throw Error(ErrorKind::kLengthMismatch,
                "inner decision has " + std::to_string(inner_x.size()) +
                    " entries, reduced instance has " +
                    std::to_string(reduced.inner.num_papers()));
  }
  DecisionVector x(reduced.original_papers, true);
  for (std::size_t k = 0; k < reduced.paper_map.size(); ++k) {
    x.set(reduced.paper_map[k], inner_x.accepted(static_cast<PaperIndex>(k)));
  }
  return x;
}

}  // namespace capopt
