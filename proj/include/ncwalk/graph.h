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

#ifndef NCWALK_GRAPH_H_
#define NCWALK_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ncwalk {

using NodeId = std::int32_t;
using LabelId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

// Undirected node-labeled graph with 0-based dense node ids. Edges are stored
// once as (min, max) pairs; self-loops are allowed and appear once in the
// neighbor list of their node. Immutable after construction.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  // Throws ContractViolation on out-of-range endpoints or negative labels.
  // Duplicate edges (in either orientation) are dropped.
  LabeledGraph(std::vector<LabelId> labels, std::span<const Edge> edges);

  // Unlabeled graph: every node receives label 0.
  static LabeledGraph Unlabeled(NodeId node_count, std::span<const Edge> edges);

  NodeId node_count() const { return static_cast<NodeId>(labels_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  LabelId label(NodeId u) const { return labels_[u]; }
  std::span<const LabelId> labels() const { return labels_; }

  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId u) const {
    return {neighbors_.data() + offsets_[u],
            neighbors_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  // Sorted (min, max) pairs.
  std::span<const Edge> edges() const { return edges_; }

  bool HasEdge(NodeId u, NodeId v) const;

  // Distinct labels, ascending.
  std::vector<LabelId> Alphabet() const;

  // True if all nodes carry the same label (vacuously true when empty).
  bool IsUniformlyLabeled() const;

  // Copy with the same structure and new labels.
  LabeledGraph Relabeled(std::vector<LabelId> labels) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<LabelId> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
};

// Interns raw integer labels from input files to dense LabelIds, so that
// equal raw labels in different graphs share one id.
class LabelDictionary {
 public:
  LabelId Intern(std::int64_t raw);
  std::optional<LabelId> Find(std::int64_t raw) const;
  std::int64_t Raw(LabelId id) const { return raw_[id]; }
  std::size_t size() const { return raw_.size(); }

 private:
  std::unordered_map<std::int64_t, LabelId> ids_;
  std::vector<std::int64_t> raw_;
};

struct GraphCollection {
  std::vector<LabeledGraph> graphs;
  // Aligned index-for-index with graphs when present.
  std::optional<std::vector<int>> class_labels;
  std::vector<std::string> names;
  LabelDictionary dictionary;

  std::size_t size() const { return graphs.size(); }

  // Throws ContractViolation if class_labels or names are misaligned.
  void CheckAligned() const;

  // Sub-collection with the given graphs, in the given order.
  GraphCollection Select(std::span<const std::size_t> indices) const;
};

// Disjoint union of g and h. Node i of h becomes offset + i with
// offset = g.node_count().
struct UnionResult {
  LabeledGraph graph;
  NodeId offset = 0;
};
UnionResult DisjointUnion(const LabeledGraph& g, const LabeledGraph& h);

// result[u] = sum of x[v] over neighbors v of u.
std::vector<double> AdjacencyMatvec(const LabeledGraph& g,
                                    std::span<const double> x);

}  // namespace ncwalk

#endif  // NCWALK_GRAPH_H_
