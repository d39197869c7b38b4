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

#ifndef NCWALK_REFINEMENT_H_
#define NCWALK_REFINEMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ncwalk/graph.h"
#include "ncwalk/labeling.h"
#include "ncwalk/walks.h"

namespace ncwalk {

// Labelings produced by an iterative refinement. steps[0] is the input
// labeling. When `converged` is set, the last two steps induce the same
// partition.
struct RefinementSequence {
  std::vector<Labeling> steps;
  bool converged = false;
};

// Weisfeiler-Leman color refinement: the new color of v interns the pair
// (old color of v, sorted multiset of old neighbor colors). Runs until
// `max_iterations` steps have been made or the partition stops changing,
// whichever comes first; nullopt means no iteration limit.
RefinementSequence WlRefine(const LabeledGraph& g,
                            std::optional<int> max_iterations = std::nullopt);

// WL on several graphs at once with one color dictionary per iteration, which
// is the same as refining their disjoint union. steps[i][k] is the labeling
// of graphs[k] after i iterations; color ids are comparable across graphs.
// Convergence is decided on the union.
struct JointRefinement {
  std::vector<std::vector<Labeling>> steps;
  bool converged = false;
};
JointRefinement WlRefineJoint(std::span<const LabeledGraph> graphs,
                              std::optional<int> max_iterations,
                              bool stop_at_convergence = true);

// Morgan's extended connectivity. ec^(1) is the degree and ec^(i) sums
// ec^(i-1) over the neighbors. Iteration continues while the number of
// distinct values strictly increases; `final_ec` is the vector at the last
// increase and `history` holds every computed vector, including the one that
// failed to increase the class count.
struct MorganResult {
  std::vector<std::int64_t> final_ec;
  std::vector<std::vector<std::int64_t>> history;
};
MorganResult MorganExtendedConnectivity(const LabeledGraph& g);

// ec^(1), ..., ec^(count) without the stopping rule. Throws
// std::overflow_error if a value leaves the int64 range.
std::vector<std::vector<std::int64_t>> ExtendedConnectivitySequence(
    const LabeledGraph& g, int count);

// Rows (1, (A1)_v, ..., (A^l 1)_v): walk counts by length per node.
class WalkPartitionMatrix {
 public:
  WalkPartitionMatrix(std::size_t node_count, int max_length)
      : columns_(max_length + 1), values_(node_count * columns_, 0) {}

  std::size_t node_count() const { return values_.size() / columns_; }
  int max_length() const { return static_cast<int>(columns_) - 1; }

  std::span<const std::int64_t> row(NodeId v) const {
    return {values_.data() + v * columns_, columns_};
  }
  std::int64_t at(NodeId v, int k) const { return values_[v * columns_ + k]; }
  std::int64_t& at(NodeId v, int k) { return values_[v * columns_ + k]; }
  std::vector<std::int64_t> column(int k) const;

  // Nodes with equal rows share a class. Only the first `columns` entries of
  // each row are compared (all by default).
  Labeling ToLabeling(std::optional<int> columns = std::nullopt) const;

 private:
  std::size_t columns_;
  std::vector<std::int64_t> values_;
};

// Computed by repeated AdjacencyMatvec from the all-ones vector. Throws
// std::overflow_error beyond 2^53.
WalkPartitionMatrix WalkPartition(const LabeledGraph& g, int max_length);

// Walk labels by explicit enumeration: nodes share a class iff their multisets
// of walk label sequences (length exactly `length`, or at most `length` when
// `cumulative`) coincide. Throws BudgetExceeded past `budget` walks in total.
Labeling WalkLabelsOracle(const LabeledGraph& g, int length, bool cumulative,
                          std::int64_t budget = kDefaultWalkBudget);

// Unfolding tree of depth `depth` rooted at a node: the children of a tree
// vertex copy the neighbors of the graph node it stands for. Stored as a flat
// arena with the root at index 0.
struct UnfoldingTree {
  struct Vertex {
    NodeId origin;
    LabelId label;
    int depth;
    std::vector<std::size_t> children;
  };
  std::vector<Vertex> vertices;
  int depth = 0;

  const Vertex& root() const { return vertices.front(); }
};

// Throws BudgetExceeded if the tree would have more than `budget` vertices.
UnfoldingTree BuildUnfoldingTree(const LabeledGraph& g, NodeId root, int depth,
                                 std::int64_t budget = kDefaultWalkBudget);

// Label sequences of all root-to-leaf paths, sorted (a multiset).
std::vector<LabelSequence> RootToLeafSequences(const UnfoldingTree& tree);

}  // namespace ncwalk

#endif  // NCWALK_REFINEMENT_H_
