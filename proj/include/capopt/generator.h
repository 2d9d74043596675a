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

// Synthetic authorship instances with power-law author productivity.

#ifndef CAPOPT_GENERATOR_H_
#define CAPOPT_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "capopt/instance.h"

namespace capopt {

struct GeneratorConfig {
  std::size_t num_authors = 0;
  std::size_t num_papers = 0;
  // P(author writes k papers) proportional to k^-alpha on [1, cap].
  double alpha = 2.0;
  // 0: every author's drawn productivity is consumed exactly (paper sizes
  // then average total/num_papers). Positive: paper sizes are truncated
  // geometric with this mean and productivities act as sampling weights.
  double authors_per_paper_mean = 0.0;
  // Productivity cap; 0 means num_papers.
  std::size_t max_papers_per_author = 0;
  std::uint64_t seed = 1;
};

// Deterministic for a fixed config (same seed, same bytes). Authors are
// labelled "a<k>", papers "p<j>". Authors that end up without papers do
// not appear, so the realized author count can be slightly below
// num_authors. Throws Error(kConfig) on invalid configs.
std::vector<PaperRecord> Generate(const GeneratorConfig& config);

// Mean of the truncated power law on [1, cap].
double PowerLawMean(double alpha, std::size_t cap);

// Exponent whose mean productivity makes num_authors * mean equal
// target_nnz (bisection on [1.05, 8]).
double TuneAlpha(std::size_t num_authors, std::size_t target_nnz,
                 std::size_t cap);

}  // namespace capopt

#endif  // CAPOPT_GENERATOR_H_
