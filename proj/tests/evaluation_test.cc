// Copyright 2026 The ncwalk Authors
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

#include "ncwalk/evaluation.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ncwalk/errors.h"
#include "ncwalk/isomorphism.h"
#include "test_graphs.h"

namespace ncwalk {
namespace {

GramMatrix FromRows(const std::vector<std::vector<double>>& rows) {
  GramMatrix gram(rows.size(), GraphKernelSpec{});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) gram.Set(i, j, rows[i][j]);
  }
  return gram;
}

TEST(CompletenessRatioTest, IdentityFeatures) {
  EXPECT_EQ(CompletenessRatio(FromRows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
            1.0);
}

TEST(CompletenessRatioTest, ConstantKernel) {
  EXPECT_EQ(CompletenessRatio(FromRows({{3, 3, 3}, {3, 3, 3}, {3, 3, 3}})),
            0.0);
}

TEST(CompletenessRatioTest, PartialSeparation) {
  // Graphs 0 and 1 share a feature vector, graph 2 differs.
  EXPECT_NEAR(CompletenessRatio(FromRows({{1, 1, 0}, {1, 1, 0}, {0, 0, 4}})),
              1.0 / 3.0, 1e-15);
}

TEST(CompletenessRatioTest, RelativeTolerance) {
  // d^2 = 1e-4 is below 1e-9 * (K_00 + K_11); d^2 = 1 is not.
  const double big = 1e6;
  EXPECT_EQ(CompletenessRatio(FromRows({{big, big}, {big, big + 1e-4}})), 0.0);
  EXPECT_EQ(CompletenessRatio(FromRows({{big, big}, {big, big + 1.0}})), 1.0);
}

TEST(CompletenessRatioTest, MonotoneForWlAndNcw) {
  std::mt19937_64 rng(81);
  GraphCollection c;
  for (int i = 0; i < 40; ++i) {
    c.graphs.push_back(testing::RandomGraph(rng, 3, 9, 1 + i % 2));
  }
  const GraphCollection dedup = DedupIsomorphic(c).collection;
  GraphKernelSpec ncw;
  ncw.max_length = 5;
  ncw.alpha = Alpha::Finite(1000);
  ncw.beta = 0;
  GraphKernelSpec wl = ncw;
  wl.kind = KernelKind::kWlSubtree;
  for (const GraphKernelSpec& spec : {ncw, wl}) {
    const auto grams = ComputeGramMatricesByLength(dedup, spec);
    for (std::size_t l = 1; l < grams.size(); ++l) {
      EXPECT_GE(CompletenessRatio(grams[l]), CompletenessRatio(grams[l - 1]));
    }
  }
}

TEST(NormalizeGramTest, Examples) {
  const GramMatrix n = NormalizeGram(FromRows({{4, 2}, {2, 1}}));
  EXPECT_EQ(n.at(0, 0), 1.0);
  EXPECT_EQ(n.at(1, 1), 1.0);
  EXPECT_EQ(n.at(0, 1), 1.0);
  EXPECT_EQ(n.at(1, 0), 1.0);
}

TEST(NormalizeGramTest, Idempotent) {
  std::mt19937_64 rng(82);
  GraphCollection c;
  for (int i = 0; i < 8; ++i) c.graphs.push_back(testing::RandomGraph(rng, 2, 8, 2));
  GraphKernelSpec spec;
  spec.kind = KernelKind::kRandomWalk;
  spec.max_length = 3;
  const GramMatrix once = NormalizeGram(ComputeGramMatrix(c, spec));
  const GramMatrix twice = NormalizeGram(once);
  for (std::size_t i = 0; i < once.size(); ++i) {
    EXPECT_EQ(once.at(i, i), 1.0);
    for (std::size_t j = 0; j < once.size(); ++j) {
      EXPECT_NEAR(twice.at(i, j), once.at(i, j), 1e-12);
      EXPECT_LE(std::abs(once.at(i, j)), 1.0 + 1e-9);
    }
  }
}

TEST(NormalizeGramTest, ZeroDiagonalNamesGraph) {
  try {
    NormalizeGram(FromRows({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    FAIL() << "expected ContractViolation";
  } catch (const ContractViolation& e) {
    EXPECT_NE(std::string(e.what()).find("graph 2"), std::string::npos);
  }
}

}  // namespace
}  // namespace ncwalk
