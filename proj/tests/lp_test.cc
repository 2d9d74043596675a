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

#include "capopt/lp.h"

#include <gtest/gtest.h>

#include <random>

#include "capopt/error.h"
#include "capopt/exact.h"
#include "fixtures.h"
#include "lp_oracle.h"

namespace capopt {
namespace {

constexpr double kTol = 1e-6;

bool RowsHold(const LpModel& model, const std::vector<double>& x) {
  for (std::size_t r = 0; r < model.num_rows(); ++r) {
    double s = 0.0;
    for (PaperIndex j : model.rows[r]) s += x[j];
    if (s > model.rhs[r] + kTol) return false;
  }
  for (double v : x) {
    if (v < -kTol || v > 1.0 + kTol) return false;
  }
  return true;
}

TEST(BuildLpTest, SkipsRowsAtOrBelowLimit) {
  const auto inst = testing::T1WithC();
  const LpModel model = BuildLp(inst, 2);
  ASSERT_EQ(model.num_rows(), 2u);
  EXPECT_EQ(model.rows[0], (std::vector<PaperIndex>{0, 1, 2}));
  EXPECT_EQ(model.rows[1], (std::vector<PaperIndex>{2, 3, 4}));
  EXPECT_EQ(BuildLp(inst, 2, {.keep_redundant_rows = true}).num_rows(), 3u);
}

TEST(BuildLpTest, NegativeLimit) {
  EXPECT_THROW(BuildLp(testing::T1(), -1), Error);
}

TEST(BuildLpTest, Dump) {
  EXPECT_EQ(BuildLp(testing::T1(), 2).ToString(),
            "maximize x1 + x2 + x3 + x4 + x5\n"
            "x1 + x2 + x3 <= 2\n"
            "x3 + x4 + x5 <= 2\n"
            "0 <= x <= 1\n");
}

TEST(SolveLpTest, T1) {
  const auto sol = SolveLp(BuildLp(testing::T1(), 2));
  EXPECT_NEAR(sol.objective, 4.0, kTol);
  EXPECT_NEAR(testing::VertexEnumerationMax(BuildLp(testing::T1(), 2)), 4.0, kTol);
}

TEST(SolveLpTest, TriangleHalfIntegral) {
  const LpModel model = BuildLp(testing::Triangle(), 1);
  const auto sol = SolveLp(model);
  EXPECT_NEAR(testing::VertexEnumerationMax(model), 1.5, kTol);
  EXPECT_NEAR(sol.objective, 1.5, kTol);
  for (double v : sol.values) EXPECT_NEAR(v, 0.5, kTol);
  EXPECT_EQ(sol.fractional, (std::vector<PaperIndex>{0, 1, 2}));
}

TEST(SolveLpTest, NoRows) {
  LpModel model;
  model.num_vars = 7;
  const auto sol = SolveLp(model);
  EXPECT_NEAR(sol.objective, 7.0, kTol);
  EXPECT_TRUE(sol.fractional.empty());
}

TEST(SolveLpTest, ZeroRhs) {
  const auto sol = SolveLp(BuildLp(testing::T1(), 0));
  EXPECT_NEAR(sol.objective, 0.0, kTol);
}

TEST(SolveLpTest, MatchesVertexEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = testing::RandomInstance(rng, 7, 5, 3);
    for (int b = 1; b <= 2; ++b) {
      const LpModel model = BuildLp(inst, b, {.keep_redundant_rows = true});
      if (model.num_vars > 7) continue;
      const auto sol = SolveLp(model);
      ASSERT_NEAR(sol.objective, testing::VertexEnumerationMax(model), kTol)
          << "trial " << trial << "\n" << model.ToString();
      ASSERT_TRUE(RowsHold(model, sol.values));
    }
  }
}

TEST(SolveLpTest, RedundantRowsDoNotChangeOptimum) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::RandomInstance(rng, 25, 10, 4);
    for (int b = 1; b <= 3; ++b) {
      const auto lean = SolveLp(BuildLp(inst, b));
      const LpModel full_model = BuildLp(inst, b, {.keep_redundant_rows = true});
      const auto full = SolveLp(full_model);
      ASSERT_NEAR(lean.objective, full.objective, kTol);
      ASSERT_TRUE(RowsHold(full_model, lean.values));
    }
  }
}

TEST(SolveLpTest, BoundsIntegerOptimum) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = testing::RandomInstance(rng, 14, 8, 3);
    for (int b = 1; b <= 3; ++b) {
      const LpModel model = BuildLp(inst, b);
      const auto sol = SolveLp(model);
      ASSERT_GE(sol.objective + kTol,
                static_cast<double>(BruteForceOptimum(inst, b)));
      ASSERT_TRUE(RowsHold(model, sol.values));
    }
  }
}

TEST(SolveLpTest, DecompositionAgrees) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::RandomInstance(rng, 60, 30, 3);
    const LpModel model = BuildLp(inst, 2);
    const auto split = SolveLp(model);
    const auto whole = SolveLp(model, {.decompose = false});
    ASSERT_NEAR(split.objective, whole.objective, kTol);
  }
}

TEST(SolveLpTest, SmallRefactorIntervalAgrees) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testing::RandomInstance(rng, 80, 25, 4);
    const LpModel model = BuildLp(inst, 2);
    const auto base = SolveLp(model);
    const auto tight = SolveLp(model, {.refactor_interval = 2, .decompose = false});
    ASSERT_NEAR(base.objective, tight.objective, kTol);
    ASSERT_TRUE(RowsHold(model, tight.values));
  }
}

TEST(SolveLpTest, Deterministic) {
  std::mt19937_64 rng(26);
  const auto inst = testing::RandomInstance(rng, 200, 60, 4);
  const LpModel model = BuildLp(inst, 2);
  const auto a = SolveLp(model);
  const auto b = SolveLp(model);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(SolveLpTest, IterationLimit) {
  std::mt19937_64 rng(27);
  const auto inst = testing::RandomInstance(rng, 200, 40, 4);
  try {
    SolveLp(BuildLp(inst, 1), {.max_iterations = 1, .decompose = false});
    FAIL() << "expected IterationLimitExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIterationLimitExceeded);
  }
}

}  // namespace
}  // namespace capopt
