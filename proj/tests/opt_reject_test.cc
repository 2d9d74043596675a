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

#include "capopt/opt_reject.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "capopt/error.h"
#include "capopt/exact.h"
#include "capopt/lp.h"
#include "fixtures.h"

namespace capopt {
namespace {

using testing::FromAccepted;

// Random vector in [0,1]^m scaled down until every author fits within b,
// with a share of entries forced to exactly 0 or 1 where that stays feasible.
std::vector<double> RandomFeasibleFractional(std::mt19937_64& rng,
                                             const AuthorshipInstance& inst,
                                             int b) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t m = inst.num_papers();
  std::vector<double> x(m);
  for (double& v : x) v = unit(rng);
  double scale = 1.0;
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    double load = 0.0;
    for (PaperIndex j : inst.papers_of(static_cast<AuthorIndex>(i))) load += x[j];
    if (load > b) scale = std::min(scale, b / load);
  }
  for (double& v : x) v *= scale;
  for (std::size_t j = 0; j < m; ++j) {
    const double r = unit(rng);
    if (r < 0.2) {
      x[j] = 0.0;
    } else if (r < 0.35) {
      std::vector<double> y = x;
      y[j] = 1.0;
      bool ok = true;
      for (AuthorIndex i : inst.authors_of(static_cast<PaperIndex>(j))) {
        double load = 0.0;
        for (PaperIndex k : inst.papers_of(i)) load += y[k];
        ok = ok && load <= b;
      }
      if (ok) x = std::move(y);
    }
  }
  return x;
}

TEST(MaxRoundingTest, TriangleHalves) {
  const std::vector<double> half{0.5, 0.5, 0.5};
  EXPECT_EQ(MaxRounding(half, testing::Triangle(), 1), FromAccepted(3, {1}));
}

TEST(MaxRoundingTest, IntegralInputUnchanged) {
  const std::vector<double> x{1, 1, 0, 1, 1};
  EXPECT_EQ(MaxRounding(x, testing::T1(), 2), FromAccepted(5, {1, 2, 4, 5}));
}

TEST(MaxRoundingTest, LargestValuePromotedFirst) {
  // a on {1,2}, b=1: paper 2 carries more mass and wins.
  const auto inst = BuildInstance(testing::Lists{{"a"}, {"a"}});
  const std::vector<double> x{0.3, 0.7};
  EXPECT_EQ(MaxRounding(x, inst, 1), FromAccepted(2, {2}));
}

TEST(MaxRoundingTest, DemotesSmallestValueFirst) {
  // a on {1,2,3}, b=2. Promoting paper 2 pushes the load to 2.2 and
  // paper 3 is the only fractional one left to drop.
  const auto inst = BuildInstance(testing::Lists{{"a"}, {"a"}, {"a"}});
  const std::vector<double> x{0.9, 0.8, 0.2};
  EXPECT_EQ(MaxRounding(x, inst, 2), FromAccepted(3, {1, 2}));
}

TEST(MaxRoundingTest, InfeasibleInput) {
  const std::vector<double> x{1, 1, 1, 0, 0};
  try {
    MaxRounding(x, testing::T1(), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasibleInput);
  }
  const std::vector<double> out_of_box{1.5, 0, 0, 0, 0};
  EXPECT_THROW(MaxRounding(out_of_box, testing::T1(), 2), Error);
}

TEST(MaxRoundingTest, SlackWithinToleranceAccepted) {
  const std::vector<double> x{1, 0.5 + 5e-7, 0.5, 0, 0};
  EXPECT_NO_THROW(MaxRounding(x, testing::T1(), 2));
}

TEST(MaxRoundingTest, LengthMismatch) {
  const std::vector<double> x{1, 1};
  EXPECT_THROW(MaxRounding(x, testing::T1(), 2), Error);
}

TEST(MaxRoundingTest, RandomFeasibleVectors) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto inst = testing::RandomInstance(rng, 25, 10, 4);
    for (int b = 1; b <= 3; ++b) {
      const std::vector<double> x = RandomFeasibleFractional(rng, inst, b);
      const DecisionVector out = MaxRounding(x, inst, b);
      ASSERT_TRUE(CheckFeasible(inst, b, out));
      for (std::size_t j = 0; j < x.size(); ++j) {
        const auto pj = static_cast<PaperIndex>(j);
        if (x[j] == 1.0) {
          ASSERT_TRUE(out.accepted(pj));
        } else if (x[j] == 0.0) {
          ASSERT_FALSE(out.accepted(pj));
        }
      }
    }
  }
}

TEST(MaxRoundingTest, LpOutputs) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = testing::RandomInstance(rng, 40, 15, 4);
    for (int b = 1; b <= 3; ++b) {
      const auto sol = SolveLp(BuildLp(inst, b));
      ASSERT_TRUE(CheckFeasible(inst, b, MaxRounding(sol.values, inst, b)));
    }
  }
}

TEST(OptRejectTest, T1) {
  const auto r = RunOptReject(testing::T1(), 2);
  EXPECT_EQ(r.decision.AcceptedCount(), 4u);
  EXPECT_NEAR(r.lp_objective, 4.0, 1e-6);
  EXPECT_EQ(r.at_risk_papers, 5u);
  EXPECT_EQ(r.over_limit_authors, 2u);
}

TEST(OptRejectTest, Triangle) {
  const auto r = RunOptReject(testing::Triangle(), 1);
  EXPECT_EQ(r.decision, FromAccepted(3, {1}));
  EXPECT_NEAR(r.lp_objective, 1.5, 1e-6);
  EXPECT_EQ(r.fractional_papers, 3u);
}

TEST(OptRejectTest, LooseLimitAcceptsAll) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::RandomInstance(rng, 20, 8);
    const int k1 = static_cast<int>(ComputeStats(inst).max_papers_per_author);
    const auto r = RunOptReject(inst, k1);
    EXPECT_EQ(r.decision, DecisionVector(inst.num_papers(), true));
    EXPECT_EQ(r.at_risk_papers, 0u);
  }
}

TEST(OptRejectTest, Sandwich) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = testing::RandomInstance(rng, 14, 8);
    for (int b = 1; b <= 3; ++b) {
      const auto r = RunOptReject(inst, b);
      const std::size_t exact = BruteForceOptimum(inst, b);
      ASSERT_TRUE(CheckFeasible(inst, b, r.decision));
      ASSERT_LE(r.decision.AcceptedCount(), exact);
      ASSERT_LE(static_cast<double>(exact), r.lp_objective + 1e-6);
    }
  }
}

TEST(ApplyPolicyTest, Dispatch) {
  const auto inst = testing::T1();
  EXPECT_EQ(ApplyPolicy(PolicyKind::kAllReject, inst, 2), FromAccepted(5, {1, 2, 4}));
  EXPECT_EQ(ApplyPolicy(PolicyKind::kForwardReject, inst, 2),
            FromAccepted(5, {1, 2, 4, 5}));
  EXPECT_EQ(ApplyPolicy(PolicyKind::kBackwardReject, inst, 2),
            FromAccepted(5, {1, 2, 4}));
  EXPECT_EQ(ApplyPolicy(PolicyKind::kOptReject, inst, 2).AcceptedCount(), 4u);
}

}  // namespace
}  // namespace capopt
