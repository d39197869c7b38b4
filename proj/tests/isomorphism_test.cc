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

#include "ncwalk/isomorphism.h"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "ncwalk/log.h"
#include "ncwalk/tudataset.h"
#include "test_graphs.h"

namespace ncwalk {
namespace {

using ::ncwalk::testing::Cycle;
using ::ncwalk::testing::Path;
using ::ncwalk::testing::RandomGraph;
using ::ncwalk::testing::Shuffled;
using ::ncwalk::testing::Star3;
using ::ncwalk::testing::Triangle;
using ::ncwalk::testing::TwoTriangles;

GraphCollection Collect(std::vector<LabeledGraph> graphs) {
  GraphCollection c;
  c.graphs = std::move(graphs);
  return c;
}

TEST(ValidateIsomorphismTest, ChecksEdgesAndLabels) {
  const LabeledGraph g = Path(3, {0, 1, 2});
  const LabeledGraph h = Path(3, {2, 1, 0});
  EXPECT_TRUE(ValidateIsomorphism(g, h, std::vector<NodeId>{2, 1, 0}));
  EXPECT_FALSE(ValidateIsomorphism(g, h, std::vector<NodeId>{0, 1, 2}));
  EXPECT_FALSE(ValidateIsomorphism(g, h, std::vector<NodeId>{2, 2, 0}));
  EXPECT_FALSE(ValidateIsomorphism(Path(3), Triangle(),
                                   std::vector<NodeId>{0, 1, 2}));
}

TEST(FindIsomorphismTest, ShuffledCopies) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const LabeledGraph g = RandomGraph(rng, 1, 25, 1 + trial % 3);
    const LabeledGraph h = Shuffled(rng, g);
    const IsomorphismSearch search = FindIsomorphism(g, h);
    ASSERT_EQ(search.outcome, IsomorphismOutcome::kIsomorphic);
    EXPECT_TRUE(ValidateIsomorphism(g, h, search.mapping));
  }
}

TEST(FindIsomorphismTest, CycleVersusTwoTriangles) {
  const IsomorphismSearch search = FindIsomorphism(Cycle(6), TwoTriangles());
  EXPECT_EQ(search.outcome, IsomorphismOutcome::kNotIsomorphic);
  EXPECT_GT(search.steps, 0);
}

TEST(FindIsomorphismTest, DifferentLabelsOrSizes) {
  EXPECT_EQ(FindIsomorphism(Path(3, {0, 0, 1}), Path(3, {0, 1, 0})).outcome,
            IsomorphismOutcome::kNotIsomorphic);
  EXPECT_EQ(FindIsomorphism(Path(3), Path(4)).outcome,
            IsomorphismOutcome::kNotIsomorphic);
}

TEST(FindIsomorphismTest, BudgetGivesUndecided) {
  const IsomorphismSearch search = FindIsomorphism(Cycle(12), Cycle(12), 3);
  EXPECT_EQ(search.outcome, IsomorphismOutcome::kUndecided);
}

TEST(DedupTest, RelabeledPathCollapses) {
  const Edge reordered[] = {{2, 0}, {0, 1}};
  const GraphCollection c = Collect(
      {Path(3), LabeledGraph::Unlabeled(3, reordered), Triangle()});
  const DedupResult r = DedupIsomorphic(c);
  EXPECT_EQ(r.collection.size(), 2u);
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{0, 2}));
  ASSERT_EQ(r.certificates.size(), 1u);
  EXPECT_EQ(r.certificates[0].representative, 0u);
  EXPECT_EQ(r.certificates[0].duplicate, 1u);
  EXPECT_TRUE(r.certificates[0].Validate(c));
}

TEST(DedupTest, DifferentDegreeSequencesSurvive) {
  const DedupResult r = DedupIsomorphic(Collect({Path(4), Star3()}));
  EXPECT_EQ(r.collection.size(), 2u);
  EXPECT_TRUE(r.certificates.empty());
}

TEST(DedupTest, CycleAndTwoTrianglesSurvive) {
  const DedupResult r = DedupIsomorphic(Collect({Cycle(6), TwoTriangles()}));
  EXPECT_EQ(r.collection.size(), 2u);
  EXPECT_EQ(r.undecided_pairs, 0u);
}

TEST(DedupTest, KeepsClassLabelsAligned) {
  GraphCollection c = Collect({Triangle(), Path(3), Triangle()});
  c.class_labels = std::vector<int>{5, 6, 7};
  const DedupResult r = DedupIsomorphic(c);
  EXPECT_EQ(*r.collection.class_labels, (std::vector<int>{5, 6}));
}

TEST(DedupTest, BudgetKeepsGraphsAndWarns) {
  std::vector<std::string> warnings;
  WarningSink previous =
      SetWarningSink([&](std::string_view m) { warnings.emplace_back(m); });
  DedupOptions options;
  options.backtrack_budget = 2;
  const DedupResult r =
      DedupIsomorphic(Collect({Cycle(10), Cycle(10)}), options);
  SetWarningSink(previous);
  EXPECT_EQ(r.collection.size(), 2u);
  EXPECT_EQ(r.undecided_pairs, 1u);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(DedupTest, IdempotentAndCertificatesValidate) {
  std::mt19937_64 rng(72);
  std::vector<LabeledGraph> graphs;
  for (int i = 0; i < 30; ++i) {
    const LabeledGraph g = RandomGraph(rng, 1, 7, 2);
    graphs.push_back(g);
    if (i % 3 == 0) graphs.push_back(Shuffled(rng, g));
  }
  const GraphCollection c = Collect(graphs);
  const DedupResult once = DedupIsomorphic(c);
  EXPECT_GE(once.certificates.size(), 10u);
  for (const auto& cert : once.certificates) EXPECT_TRUE(cert.Validate(c));
  const DedupResult twice = DedupIsomorphic(once.collection);
  EXPECT_EQ(twice.collection.size(), once.collection.size());
  EXPECT_TRUE(twice.certificates.empty());
  // No two survivors are isomorphic.
  for (std::size_t i = 0; i < once.collection.size(); ++i) {
    for (std::size_t j = i + 1; j < once.collection.size(); ++j) {
      EXPECT_NE(FindIsomorphism(once.collection.graphs[i],
                                once.collection.graphs[j])
                    .outcome,
                IsomorphismOutcome::kIsomorphic);
    }
  }
}

TEST(DedupTest, Mutag) {
  const GraphCollection c = ParseTuDataset(
      ResolveDatasetDirectory(NCWALK_DATA_DIR, "MUTAG"), "MUTAG");
  const DedupResult r = DedupIsomorphic(c);
  EXPECT_EQ(r.undecided_pairs, 0u);
  EXPECT_EQ(r.kept.size() + r.certificates.size(), c.size());
  for (const auto& cert : r.certificates) EXPECT_TRUE(cert.Validate(c));
}

}  // namespace
}  // namespace ncwalk
