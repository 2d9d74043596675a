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

// Author-paper incidence model: the 0/1 authorship matrix stored in both
// orientations, decision vectors over papers, and the safe-author reduction.
//
// Papers and authors are addressed by 0-based indices. The 1-based ordinals
// used in files and reports are index + 1; paper order is submission order,
// so a smaller index always means an earlier submission.

#ifndef CAPOPT_INSTANCE_H_
#define CAPOPT_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace capopt {

using PaperIndex = std::int32_t;
using AuthorIndex = std::int32_t;

// One paper as it appears in an instance file: an external id and the raw
// author labels in listed order.
struct PaperRecord {
  std::string id;
  std::vector<std::string> authors;

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

// Binary accept(1) / reject(0) assignment over the papers of an instance.
class DecisionVector {
 public:
  DecisionVector() = default;
  DecisionVector(std::size_t num_papers, bool accept)
      : bits_(num_papers, accept ? 1 : 0) {}
  explicit DecisionVector(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  bool accepted(PaperIndex j) const { return bits_[j] != 0; }
  void set(PaperIndex j, bool accept) { bits_[j] = accept ? 1 : 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::size_t AcceptedCount() const;
  std::size_t RejectedCount() const { return size() - AcceptedCount(); }
  std::vector<PaperIndex> AcceptedPapers() const;
  std::vector<PaperIndex> RejectedPapers() const;

  friend bool operator==(const DecisionVector&, const DecisionVector&) =
      default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Immutable sparse 0/1 authorship matrix. Rows (papers_of) and columns
// (authors_of) are both kept sorted and always describe the same matrix.
class AuthorshipInstance {
 public:
  AuthorshipInstance() = default;

  // authors_of[j] lists the authors of paper j; duplicates are collapsed.
  // Every paper must have at least one author and every index must be
  // below labels.size(). paper_ids may be empty, in which case ids default
  // to the 1-based paper ordinal.
  AuthorshipInstance(std::vector<std::vector<AuthorIndex>> authors_of,
                     std::vector<std::string> author_labels,
                     std::vector<std::string> paper_ids = {});

  std::size_t num_authors() const { return author_labels_.size(); }
  std::size_t num_papers() const { return paper_ids_.size(); }
  std::size_t nnz() const { return paper_authors_.size(); }

  std::span<const AuthorIndex> authors_of(PaperIndex j) const {
    return {paper_authors_.data() + paper_offsets_[j],
            paper_authors_.data() + paper_offsets_[j + 1]};
  }
  std::span<const PaperIndex> papers_of(AuthorIndex i) const {
    return {author_papers_.data() + author_offsets_[i],
            author_papers_.data() + author_offsets_[i + 1]};
  }
  std::size_t paper_count(AuthorIndex i) const {
    return author_offsets_[i + 1] - author_offsets_[i];
  }

  const std::string& author_label(AuthorIndex i) const {
    return author_labels_[i];
  }
  const std::string& paper_id(PaperIndex j) const { return paper_ids_[j]; }

  // Re-serializes to records with authors in ascending author index.
  std::vector<PaperRecord> ToRecords() const;

 private:
  std::vector<std::size_t> paper_offsets_{0};
  std::vector<AuthorIndex> paper_authors_;
  std::vector<std::size_t> author_offsets_{0};
  std::vector<PaperIndex> author_papers_;
  std::vector<std::string> author_labels_;
  std::vector<std::string> paper_ids_;
};

struct BuildOptions {
  // Drop papers that have no authors instead of failing with EmptyPaper.
  bool drop_empty_papers = false;
};

struct BuildReport {
  // Input positions (0-based) of papers removed under drop_empty_papers.
  std::vector<std::size_t> dropped_papers;
};

// Author indices are assigned by first appearance; paper order follows the
// input. Throws Error(kEmptyPaper) naming the offending paper unless
// options.drop_empty_papers is set.
AuthorshipInstance BuildInstance(
    std::span<const std::vector<std::string>> paper_author_lists,
    const BuildOptions& options = {}, BuildReport* report = nullptr);
AuthorshipInstance BuildInstance(std::span<const PaperRecord> records,
                                 const BuildOptions& options = {},
                                 BuildReport* report = nullptr);

struct InstanceStats {
  std::size_t num_authors = 0;
  std::size_t num_papers = 0;
  std::size_t nnz = 0;
  std::size_t max_papers_per_author = 0;  // k1, reported as MSPA
  std::size_t max_authors_per_paper = 0;  // k2
  double mean_papers_per_author = 0.0;    // nnz / n

  friend bool operator==(const InstanceStats&, const InstanceStats&) = default;
};

InstanceStats ComputeStats(const AuthorshipInstance& inst);

// True iff every author has at most `limit` accepted papers.
// Throws Error(kLengthMismatch) if x.size() != m.
bool CheckFeasible(const AuthorshipInstance& inst, int limit,
                   const DecisionVector& x);

// Per-author accepted-paper counts under x.
std::vector<int> AuthorLoads(const AuthorshipInstance& inst,
                             const DecisionVector& x);

// Instance restricted to at-risk papers (some author over the limit) and
// over-limit authors. Papers with no over-limit author can always be
// accepted and are listed in fixed_accepted.
struct ReducedInstance {
  AuthorshipInstance inner;
  std::vector<PaperIndex> paper_map;  // inner paper -> original paper
  std::vector<PaperIndex> fixed_accepted;
  std::size_t original_papers = 0;
  int limit = 0;
};

ReducedInstance ReduceInstance(const AuthorshipInstance& inst, int limit);

// Expands an inner decision to the original papers; fixed papers accept.
DecisionVector LiftDecision(const ReducedInstance& reduced,
                            const DecisionVector& inner_x);

}  // namespace capopt

#endif  // CAPOPT_INSTANCE_H_
