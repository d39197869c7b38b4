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

#include "ncwalk/refinement.h"

#include <gtest/gtest.h>

#include <random>

#include "ncwalk/errors.h"
#include "ncwalk/labeling.h"
#include "test_graphs.h"

namespace ncwalk {
namespace {

using ::ncwalk::testing::Path;
using ::ncwalk::testing::RandomGraph;
using ::ncwalk::testing::Star3;
using ::ncwalk::testing::Triangle;

using Ec = std::vector<std::int64_t>;

// WL labeling after i iterations; the partition stays put once stable.
Labeling WlAt(const LabeledGraph& g, int i) {
  const RefinementSequence seq = WlRefine(g, i);
  return seq.steps.back();
}

Labeling FromEc(const Ec& ec) { return Labeling::FromValues<std::int64_t>(ec); }

TEST(LabelingTest, CanonicalAndClasses) {
  const Labeling a(std::vector<LabelId>{7, 3, 7, 9});
  EXPECT_EQ(a.NumClasses(), 3u);
  EXPECT_EQ(a.Canonical(), Labeling(std::vector<LabelId>{0, 1, 0, 2}));
  EXPECT_TRUE(Equivalent(a, Labeling(std::vector<LabelId>{1, 0, 1, 5})));
}

TEST(LabelingTest, Refines) {
  const Labeling singletons(std::vector<LabelId>{0, 1, 2});
  const Labeling anything(std::vector<LabelId>{0, 0, 1});
  EXPECT_TRUE(Refines(singletons, anything));
  EXPECT_FALSE(Refines(Labeling(std::vector<LabelId>{0, 0}),
                       Labeling(std::vector<LabelId>{0, 1})));
  EXPECT_THROW(Refines(singletons, Labeling(std::vector<LabelId>{0})),
               ContractViolation);
}

TEST(WlRefineTest, PathConvergesAfterOneIteration) {
  const RefinementSequence seq = WlRefine(Path(3));
  EXPECT_TRUE(seq.converged);
  ASSERT_EQ(seq.steps.size(), 3u);
  EXPECT_TRUE(Equivalent(seq.steps[1], Labeling(std::vector<LabelId>{0, 1, 0})));
  EXPECT_TRUE(Equivalent(seq.steps[2], seq.steps[1]));
}

TEST(WlRefineTest, TriangleSingleClass) {
  const RefinementSequence seq = WlRefine(Triangle());
  EXPECT_TRUE(seq.converged);
  for (const Labeling& step : seq.steps) EXPECT_EQ(step.NumClasses(), 1u);
}

TEST(WlRefineTest, LabeledPathOneStep) {
  const RefinementSequence seq = WlRefine(Path(3, {0, 0, 1}), 1);
  ASSERT_EQ(seq.steps.size(), 2u);
  EXPECT_EQ(seq.steps[1].NumClasses(), 3u);
}

TEST(WlRefineTest, StepsRefine) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const LabeledGraph g = RandomGraph(rng, 1, 20, 3);
    const RefinementSequence seq = WlRefine(g);
    EXPECT_TRUE(seq.converged);
    for (std::size_t i = 0; i + 1 < seq.steps.size(); ++i) {
      EXPECT_TRUE(Refines(seq.steps[i + 1], seq.steps[i]));
    }
    EXPECT_TRUE(Equivalent(seq.steps.front(), InitialLabeling(g)));
  }
}

TEST(WlRefineJointTest, MatchesDisjointUnion) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const LabeledGraph g = RandomGraph(rng, 1, 10, 2);
    const LabeledGraph h = RandomGraph(rng, 1, 10, 2);
    const LabeledGraph both[] = {g, h};
    const auto [u, offset] = DisjointUnion(g, h);
    const JointRefinement joint = WlRefineJoint(both, 4, false);
    ASSERT_EQ(joint.steps.size(), 5u);
    for (int i = 0; i <= 4; ++i) {
      std::vector<LabelId> ids(joint.steps[i][0].ids().begin(),
                               joint.steps[i][0].ids().end());
      ids.insert(ids.end(), joint.steps[i][1].ids().begin(),
                 joint.steps[i][1].ids().end());
      EXPECT_TRUE(Equivalent(Labeling(ids), WlAt(u, i)));
    }
  }
}

TEST(MorganTest, Path) {
  const MorganResult r = MorganExtendedConnectivity(Path(3));
  EXPECT_EQ(r.history, (std::vector<Ec>{{1, 2, 1}, {2, 2, 2}}));
  EXPECT_EQ(r.final_ec, (Ec{1, 2, 1}));
}

TEST(MorganTest, Star) {
  const MorganResult r = MorganExtendedConnectivity(Star3());
  EXPECT_EQ(r.history, (std::vector<Ec>{{3, 1, 1, 1}, {3, 3, 3, 3}}));
  EXPECT_EQ(r.final_ec, (Ec{3, 1, 1, 1}));
}

TEST(MorganTest, SingleNode) {
  const MorganResult r =
      MorganExtendedConnectivity(LabeledGraph::Unlabeled(1, {}));
  EXPECT_EQ(r.final_ec, (Ec{0}));
}

TEST(MorganTest, HistoryMatchesWalkPartitionColumns) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const LabeledGraph g = RandomGraph(rng, 1, 12, 1);
    const MorganResult r = MorganExtendedConnectivity(g);
    const WalkPartitionMatrix w =
        WalkPartition(g, static_cast<int>(r.history.size()));
    for (std::size_t i = 0; i < r.history.size(); ++i) {
      EXPECT_EQ(r.history[i], w.column(static_cast<int>(i) + 1));
    }
    const auto seq = ExtendedConnectivitySequence(g, 5);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(seq[i], WalkPartition(g, 5).column(i + 1));
  }
}

TEST(MorganTest, WalkLabelsRefineExtendedConnectivity) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const int labels = trial % 2 == 0 ? 1 : 3;
    const LabeledGraph g = RandomGraph(rng, 1, 8, labels);
    const auto ec = ExtendedConnectivitySequence(g, 4);
    for (int i = 1; i <= 4; ++i) {
      const Labeling wc = WalkLabelsOracle(g, i, false);
      const Labeling partition = FromEc(ec[i - 1]);
      EXPECT_TRUE(Refines(wc, partition));
      if (labels == 1) EXPECT_TRUE(Equivalent(wc, partition));
    }
  }
}

TEST(WalkPartitionTest, PathRows) {
  const WalkPartitionMatrix w = WalkPartition(Path(3), 2);
  EXPECT_EQ(std::vector<std::int64_t>(w.row(0).begin(), w.row(0).end()),
            (Ec{1, 1, 2}));
  EXPECT_EQ(std::vector<std::int64_t>(w.row(1).begin(), w.row(1).end()),
            (Ec{1, 2, 2}));
  EXPECT_EQ(w.ToLabeling().NumClasses(), 2u);
}

TEST(WalkPartitionTest, StarRows) {
  const WalkPartitionMatrix w = WalkPartition(Star3(), 2);
  EXPECT_EQ(std::vector<std::int64_t>(w.row(0).begin(), w.row(0).end()),
            (Ec{1, 3, 3}));
  for (NodeId v = 1; v < 4; ++v) {
    EXPECT_EQ(std::vector<std::int64_t>(w.row(v).begin(), w.row(v).end()),
              (Ec{1, 1, 3}));
  }
}

TEST(WalkPartitionTest, LengthZeroIsOneClass) {
  std::mt19937_64 rng(35);
  const LabeledGraph g = RandomGraph(rng, 5, 10, 3);
  const WalkPartitionMatrix w = WalkPartition(g, 0);
  EXPECT_EQ(w.ToLabeling().NumClasses(), 1u);
  for (NodeId v = 0; v < g.node_count(); ++v) EXPECT_EQ(w.at(v, 0), 1);
}

TEST(WalkPartitionTest, CumulativeWalkLabelsRefineRows) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 60; ++trial) {
    const int labels = trial % 2 == 0 ? 1 : 3;
    const LabeledGraph g = RandomGraph(rng, 1, 8, labels);
    const WalkPartitionMatrix w = WalkPartition(g, 4);
    for (int i = 0; i <= 4; ++i) {
      const Labeling wc_plus = WalkLabelsOracle(g, i, true);
      const Labeling rows = w.ToLabeling(i + 1);
      EXPECT_TRUE(Refines(wc_plus, rows));
      if (labels == 1) EXPECT_TRUE(Equivalent(wc_plus, rows));
    }
  }
}

TEST(WalkLabelsOracleTest, StarWitness) {
  const LabeledGraph star = Star3();
  EXPECT_NE(WalkLabelsOracle(star, 1, false)[0],
            WalkLabelsOracle(star, 1, false)[1]);
  const Labeling two = WalkLabelsOracle(star, 2, false);
  EXPECT_EQ(two.NumClasses(), 1u);
  EXPECT_FALSE(Refines(two, WalkLabelsOracle(star, 1, false)));
}

TEST(WalkLabelsOracleTest, LengthZeroIsInitialLabels) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const LabeledGraph g = RandomGraph(rng, 1, 8, 3);
    EXPECT_TRUE(Equivalent(WalkLabelsOracle(g, 0, false), InitialLabeling(g)));
    EXPECT_TRUE(Equivalent(WalkLabelsOracle(g, 0, true), InitialLabeling(g)));
  }
}

TEST(WalkLabelsOracleTest, BudgetExceeded) {
  EXPECT_THROW(WalkLabelsOracle(Triangle(), 12, true, 1000), BudgetExceeded);
}

TEST(HierarchyTest, RecodingAgreesForShortLengths) {
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 60; ++trial) {
    const LabeledGraph g = RandomGraph(rng, 1, 8, 1 + trial % 3);
    bool isolated = false;
    for (NodeId v = 0; v < g.node_count(); ++v) isolated |= g.degree(v) == 0;
    for (int i = 0; i <= 1; ++i) {
      const Labeling wl = WlAt(g, i);
      EXPECT_TRUE(Equivalent(wl, WalkLabelsOracle(g, i, true)));
      // An isolated node has no walk of length 1, so its exact-length label
      // drops its own label.
      if (i == 0 || !isolated) {
        EXPECT_TRUE(Equivalent(wl, WalkLabelsOracle(g, i, false)));
      }
    }
  }
}

TEST(HierarchyTest, ExactLengthForgetsLabelsOfIsolatedNodes) {
  const LabeledGraph g({0, 1}, std::vector<Edge>{});
  const Labeling exact = WalkLabelsOracle(g, 1, false);
  EXPECT_EQ(exact.ids()[0], exact.ids()[1]);
  const Labeling wl = WlAt(g, 1);
  EXPECT_NE(wl.ids()[0], wl.ids()[1]);
}

TEST(HierarchyTest, WlRefinesCumulativeRefinesExact) {
  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 60; ++trial) {
    const LabeledGraph g = RandomGraph(rng, 1, 8, 1 + trial % 3);
    for (int l = 0; l <= 4; ++l) {
      const Labeling wl = WlAt(g, l);
      const Labeling plus = WalkLabelsOracle(g, l, true);
      const Labeling exact = WalkLabelsOracle(g, l, false);
      EXPECT_TRUE(Refines(wl, plus));
      EXPECT_TRUE(Refines(plus, exact));
    }
  }
}

TEST(RefinesTest, StarWlVersusCumulativeWalkLabels) {
  EXPECT_TRUE(Refines(WlAt(Star3(), 2), WalkLabelsOracle(Star3(), 2, true)));
}

TEST(UnfoldingTreeTest, PathMiddle) {
  const LabeledGraph p3 = Path(3, {0, 1, 2});
  const UnfoldingTree t = BuildUnfoldingTree(p3, 1, 1);
  ASSERT_EQ(t.vertices.size(), 3u);
  EXPECT_EQ(t.root().origin, 1);
  std::vector<NodeId> children;
  for (std::size_t c : t.root().children) children.push_back(t.vertices[c].origin);
  std::sort(children.begin(), children.end());
  EXPECT_EQ(children, (std::vector<NodeId>{0, 2}));
  EXPECT_EQ(RootToLeafSequences(t),
            (std::vector<LabelSequence>{{1, 0}, {1, 2}}));
}

TEST(UnfoldingTreeTest, TriangleDepthTwo) {
  const UnfoldingTree t = BuildUnfoldingTree(Triangle(), 0, 2);
  EXPECT_EQ(t.root().children.size(), 2u);
  std::size_t leaves = 0;
  for (const auto& v : t.vertices) {
    if (v.depth < 2) {
      EXPECT_EQ(v.children.size(), 2u);
    } else {
      EXPECT_TRUE(v.children.empty());
      ++leaves;
    }
  }
  EXPECT_EQ(leaves, 4u);
  EXPECT_EQ(RootToLeafSequences(t),
            std::vector<LabelSequence>(4, LabelSequence{0, 0, 0}));
}

TEST(UnfoldingTreeTest, DepthZero) {
  const LabeledGraph g = Path(2, {3, 4});
  const UnfoldingTree t = BuildUnfoldingTree(g, 1, 0);
  EXPECT_EQ(t.vertices.size(), 1u);
  EXPECT_EQ(RootToLeafSequences(t), (std::vector<LabelSequence>{{4}}));
}

TEST(UnfoldingTreeTest, BudgetExceeded) {
  EXPECT_THROW(BuildUnfoldingTree(Triangle(), 0, 20, 1000), BudgetExceeded);
}

TEST(UnfoldingTreeTest, PathsEqualWalks) {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 40; ++trial) {
    const LabeledGraph g = RandomGraph(rng, 1, 8, 3);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      for (int l = 0; l <= 4; ++l) {
        std::vector<LabelSequence> walks;
        for (const auto& [seq, count] : WalkLabelSequences(g, v, l, false)) {
          walks.insert(walks.end(), count, seq);
        }
        EXPECT_EQ(RootToLeafSequences(BuildUnfoldingTree(g, v, l)), walks);
      }
    }
  }
}

}  // namespace
}  // namespace ncwalk
