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

#include "capopt/generator.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "capopt/bench.h"
#include "capopt/error.h"
#include "capopt/instance.h"

namespace capopt {
namespace {

// Direct summation for the truncated power-law mean.
double ReferenceMean(double alpha, std::size_t cap) {
  double z = 0, s = 0;
  for (std::size_t k = 1; k <= cap; ++k) {
    const double w = std::pow(static_cast<double>(k), -alpha);
    z += w;
    s += static_cast<double>(k) * w;
  }
  return s / z;
}

TEST(PowerLawMeanTest, SmallCaps) {
  EXPECT_DOUBLE_EQ(PowerLawMean(2.0, 1), 1.0);
  // (1 + 2/4) / (1 + 1/4)
  EXPECT_NEAR(PowerLawMean(2.0, 2), 1.2, 1e-12);
  for (double alpha : {1.5, 2.0, 2.65, 4.0}) {
    for (std::size_t cap : {5, 50, 5000}) {
      EXPECT_NEAR(PowerLawMean(alpha, cap), ReferenceMean(alpha, cap), 1e-9);
    }
  }
}

TEST(GenerateTest, Deterministic) {
  GeneratorConfig cfg{.num_authors = 500, .num_papers = 200, .alpha = 2.2, .seed = 9};
  EXPECT_EQ(Generate(cfg), Generate(cfg));
  cfg.authors_per_paper_mean = 3.0;
  EXPECT_EQ(Generate(cfg), Generate(cfg));
  GeneratorConfig other = cfg;
  other.seed = 10;
  EXPECT_NE(Generate(cfg), Generate(other));
}

TEST(GenerateTest, WellFormed) {
  for (double mean : {0.0, 2.5}) {
    GeneratorConfig cfg{.num_authors = 800, .num_papers = 300, .alpha = 2.0,
                        .authors_per_paper_mean = mean, .seed = 3};
    const auto records = Generate(cfg);
    ASSERT_EQ(records.size(), 300u);
    for (std::size_t j = 0; j < records.size(); ++j) {
      EXPECT_EQ(records[j].id, "p" + std::to_string(j + 1));
      ASSERT_FALSE(records[j].authors.empty());
      std::set<std::string> distinct(records[j].authors.begin(),
                                     records[j].authors.end());
      EXPECT_EQ(distinct.size(), records[j].authors.size());
    }
    const auto inst = BuildInstance(records);
    EXPECT_LE(inst.num_authors(), 800u);
  }
}

TEST(GenerateTest, ProductivityCap) {
  GeneratorConfig cfg{.num_authors = 2000, .num_papers = 1000, .alpha = 1.5,
                      .max_papers_per_author = 6, .seed = 4};
  const auto inst = BuildInstance(Generate(cfg));
  EXPECT_LE(ComputeStats(inst).max_papers_per_author, 6u);
}

TEST(GenerateTest, InvalidConfigs) {
  auto expect_config_error = [](GeneratorConfig cfg) {
    try {
      Generate(cfg);
      ADD_FAILURE() << "no error";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kConfig);
    }
  };
  expect_config_error({.num_authors = 10, .num_papers = 0});
  expect_config_error({.num_authors = 0, .num_papers = 10});
  expect_config_error({.num_authors = 10, .num_papers = 10, .alpha = 0.0});
  expect_config_error({.num_authors = 10, .num_papers = 10,
                       .authors_per_paper_mean = -1.0});
  // Ten authors capped at one paper each cannot cover 20 papers.
  expect_config_error({.num_authors = 10, .num_papers = 20,
                       .max_papers_per_author = 1});
}

TEST(GenerateTest, HistogramSlopeFollowsAlpha) {
  GeneratorConfig cfg{.num_authors = 40000, .num_papers = 20000, .alpha = 2.0,
                      .seed = 12};
  const auto inst = BuildInstance(Generate(cfg));
  const auto slope = PowerLawSlope(SubmissionHistogram(inst), 10);
  ASSERT_TRUE(slope.has_value());
  EXPECT_NEAR(*slope, -2.0, 0.2);
}

TEST(TuneAlphaTest, IclrScale) {
  const std::size_t n = 38495, m = 11672, target = 61992;
  const double alpha = TuneAlpha(n, target, m);
  EXPECT_NEAR(n * PowerLawMean(alpha, m), static_cast<double>(target), 0.01 * target);
  GeneratorConfig cfg{.num_authors = n, .num_papers = m, .alpha = alpha, .seed = 7};
  const auto stats = ComputeStats(BuildInstance(Generate(cfg)));
  EXPECT_EQ(stats.num_papers, m);
  EXPECT_NEAR(static_cast<double>(stats.nnz), static_cast<double>(target), 0.1 * target);
}

}  // namespace
}  // namespace capopt
