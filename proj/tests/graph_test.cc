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

#include "ncwalk/graph.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "ncwalk/errors.h"
#include "test_graphs.h"

namespace ncwalk {
namespace {

using ::ncwalk::testing::Path;
using ::ncwalk::testing::RandomGraph;
using ::ncwalk::testing::Triangle;

TEST(LabeledGraphTest, DeduplicatesEdgesInBothOrientations) {
  const Edge edges[] = {{0, 1}, {1, 0}, {0, 1}};
  const LabeledGraph g = LabeledGraph::Unlabeled(2, edges);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_TRUE(g.HasEdge(1, 0));
}

TEST(LabeledGraphTest, SelfLoopStoredOnce) {
  const Edge edges[] = {{0, 0}, {0, 1}};
  const LabeledGraph g = LabeledGraph::Unlabeled(2, edges);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_TRUE(g.HasEdge(0, 0));
  EXPECT_FALSE(g.HasEdge(1, 1));
}

TEST(LabeledGraphTest, RejectsBadInput) {
  const Edge out_of_range[] = {{0, 2}};
  EXPECT_THROW(LabeledGraph::Unlabeled(2, out_of_range), ContractViolation);
  EXPECT_THROW(LabeledGraph({0, -1}, {}), ContractViolation);
}

TEST(LabeledGraphTest, AlphabetAndUniformity) {
  const LabeledGraph g = Path(3, {2, 0, 2});
  EXPECT_EQ(g.Alphabet(), (std::vector<LabelId>{0, 2}));
  EXPECT_FALSE(g.IsUniformlyLabeled());
  EXPECT_TRUE(Path(3).IsUniformlyLabeled());
  EXPECT_TRUE(LabeledGraph().IsUniformlyLabeled());
}

TEST(LabeledGraphTest, NeighborsSorted) {
  const Edge edges[] = {{2, 0}, {2, 3}, {2, 1}};
  const LabeledGraph g = LabeledGraph::Unlabeled(4, edges);
  const auto n = g.neighbors(2);
  EXPECT_EQ(std::vector<NodeId>(n.begin(), n.end()),
            (std::vector<NodeId>{0, 1, 3}));
}

TEST(LabelDictionaryTest, InternsConsistently) {
  LabelDictionary dict;
  EXPECT_EQ(dict.Intern(7), 0);
  EXPECT_EQ(dict.Intern(-3), 1);
  EXPECT_EQ(dict.Intern(7), 0);
  EXPECT_EQ(dict.Raw(1), -3);
  EXPECT_EQ(dict.Find(-3), 1);
  EXPECT_FALSE(dict.Find(5).has_value());
  EXPECT_EQ(dict.size(), 2u);
}

TEST(GraphCollectionTest, CheckAlignedAndSelect) {
  GraphCollection c;
  c.graphs = {Path(2), Path(3), Triangle()};
  c.class_labels = std::vector<int>{1, -1, 1};
  EXPECT_NO_THROW(c.CheckAligned());
  const std::size_t picks[] = {2, 0};
  const GraphCollection s = c.Select(picks);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.graphs[0], Triangle());
  EXPECT_EQ(*s.class_labels, (std::vector<int>{1, 1}));
  c.class_labels->pop_back();
  EXPECT_THROW(c.CheckAligned(), ContractViolation);
}

TEST(DisjointUnionTest, TwoPaths) {
  const auto [u, offset] = DisjointUnion(Path(2), Path(2));
  EXPECT_EQ(u.node_count(), 4);
  EXPECT_EQ(u.edge_count(), 2u);
  EXPECT_EQ(offset, 2);
  EXPECT_TRUE(u.HasEdge(2, 3));
  EXPECT_FALSE(u.HasEdge(1, 2));
}

TEST(DisjointUnionTest, WithEmptyGraph) {
  const LabeledGraph g = Path(3, {0, 1, 2});
  const auto [u, offset] = DisjointUnion(g, LabeledGraph());
  EXPECT_EQ(u, g);
  EXPECT_EQ(offset, 3);
}

TEST(DisjointUnionTest, TriangleAndPath) {
  const auto [u, offset] = DisjointUnion(Triangle(), Path(3, {1, 1, 2}));
  EXPECT_EQ(u.node_count(), 6);
  EXPECT_EQ(u.edge_count(), 5u);
  EXPECT_EQ(u.label(offset + 2), 2);
}

TEST(AdjacencyMatvecTest, PathExamples) {
  const LabeledGraph p3 = Path(3);
  const std::vector<double> ones(3, 1.0);
  const std::vector<double> deg = AdjacencyMatvec(p3, ones);
  EXPECT_EQ(deg, (std::vector<double>{1, 2, 1}));
  EXPECT_EQ(AdjacencyMatvec(p3, deg), (std::vector<double>{2, 2, 2}));
  EXPECT_EQ(AdjacencyMatvec(p3, std::vector<double>(3, 0.0)),
            std::vector<double>(3, 0.0));
}

TEST(AdjacencyMatvecTest, LengthMismatch) {
  EXPECT_THROW(AdjacencyMatvec(Path(3), std::vector<double>(2, 1.0)),
               ContractViolation);
}

TEST(AdjacencyMatvecTest, Linear) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> value(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const LabeledGraph g = RandomGraph(rng, 1, 15, 2);
    const std::size_t n = g.node_count();
    std::vector<double> x(n), y(n), z(n);
    const double a = value(rng), b = value(rng);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = value(rng);
      y[i] = value(rng);
      z[i] = a * x[i] + b * y[i];
    }
    const auto az = AdjacencyMatvec(g, z);
    const auto ax = AdjacencyMatvec(g, x);
    const auto ay = AdjacencyMatvec(g, y);
    for (std::size_t i = 0; i < n; ++i) {
      const double expected = a * ax[i] + b * ay[i];
      EXPECT_NEAR(az[i], expected, 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(AdjacencyMatvecTest, DegreeSumIsTwiceEdgeCount) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const LabeledGraph g = RandomGraph(rng, 0, 20, 1);
    const auto d = AdjacencyMatvec(g, std::vector<double>(g.node_count(), 1));
    double sum = 0;
    for (double v : d) sum += v;
    EXPECT_EQ(sum, 2.0 * g.edge_count());
  }
}

TEST(AdjacencyMatvecTest, UnionIsBlockwise) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> value(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    const LabeledGraph g = RandomGraph(rng, 0, 10, 3);
    const LabeledGraph h = RandomGraph(rng, 0, 10, 3);
    const auto [u, offset] = DisjointUnion(g, h);
    std::vector<double> x(u.node_count());
    for (double& v : x) v = value(rng);
    const auto whole = AdjacencyMatvec(u, x);
    const auto left = AdjacencyMatvec(
        g, std::vector<double>(x.begin(), x.begin() + offset));
    const auto right = AdjacencyMatvec(
        h, std::vector<double>(x.begin() + offset, x.end()));
    for (NodeId i = 0; i < g.node_count(); ++i) EXPECT_EQ(whole[i], left[i]);
    for (NodeId i = 0; i < h.node_count(); ++i) {
      EXPECT_EQ(whole[offset + i], right[i]);
    }
  }
}

}  // namespace
}  // namespace ncwalk
