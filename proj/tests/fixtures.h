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

// Shared fixtures for the test suites.

#ifndef CAPOPT_TESTS_FIXTURES_H_
#define CAPOPT_TESTS_FIXTURES_H_

#include <random>
#include <string>
#include <vector>

#include "capopt/instance.h"

namespace capopt::testing {

using Lists = std::vector<std::vector<std::string>>;

// Author A on papers 1..3, author B on papers 3..5.
inline Lists T1Lists() { return {{"A"}, {"A"}, {"A", "B"}, {"B"}, {"B"}}; }
inline AuthorshipInstance T1() { return BuildInstance(T1Lists()); }

// T1 plus author C on paper 4 only.
inline AuthorshipInstance T1WithC() {
  return BuildInstance(Lists{{"A"}, {"A"}, {"A", "B"}, {"B", "C"}, {"B"}});
}

// Papers {a,b}, {b,c}, {a,c}.
inline AuthorshipInstance Triangle() {
  return BuildInstance(Lists{{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline AuthorshipInstance SingleAuthorThreePapers() {
  return BuildInstance(Lists{{"x"}, {"x"}, {"x"}});
}

// Random instance: 1..max_papers papers, author pool of 1..max_authors,
// each paper gets 1..max_per_paper distinct authors.
inline Lists RandomLists(std::mt19937_64& rng, int max_papers, int max_authors,
                         int max_per_paper = 3) {
  std::uniform_int_distribution<int> papers(1, max_papers);
  std::uniform_int_distribution<int> pool(1, max_authors);
  const int m = papers(rng);
  const int n = pool(rng);
  std::uniform_int_distribution<int> size(1, std::min(max_per_paper, n));
  std::uniform_int_distribution<int> who(0, n - 1);
  Lists lists(m);
  for (auto& list : lists) {
    const int k = size(rng);
    while (static_cast<int>(list.size()) < k) {
      std::string label = "u" + std::to_string(who(rng));
      bool dup = false;
      for (const auto& l : list) dup = dup || l == label;
      if (!dup) list.push_back(label);
    }
  }
  return lists;
}

inline AuthorshipInstance RandomInstance(std::mt19937_64& rng, int max_papers,
                                         int max_authors, int max_per_paper = 3) {
  return BuildInstance(RandomLists(rng, max_papers, max_authors, max_per_paper));
}

inline DecisionVector FromAccepted(std::size_t m, std::vector<int> ordinals) {
  DecisionVector x(m, false);
  for (int o : ordinals) x.set(o - 1, true);
  return x;
}

}  // namespace capopt::testing

#endif  // CAPOPT_TESTS_FIXTURES_H_
