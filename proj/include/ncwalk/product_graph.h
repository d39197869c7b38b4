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

#ifndef NCWALK_PRODUCT_GRAPH_H_
#define NCWALK_PRODUCT_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ncwalk/graph.h"

namespace ncwalk {

// Direct product G x H: one node per label-matched pair (u, u'), and an edge
// between (u, u') and (v, v') iff (u, v) is an edge of G and (u', v') is an
// edge of H. Nodes are ordered lexicographically by (u, u').
//
// The adjacency may optionally carry per-arc weights and a start vector, the
// extension point for non-Dirac node/edge similarities. Only the Dirac
// instantiation (unit weights, all-ones start) is built by DirectProduct.
class ProductGraph {
 public:
  struct Pair {
    NodeId left;
    NodeId right;
    friend bool operator==(const Pair&, const Pair&) = default;
  };

  ProductGraph() = default;

  std::size_t node_count() const { return nodes_.size(); }
  std::span<const Pair> nodes() const { return nodes_; }
  const Pair& node(std::size_t i) const { return nodes_[i]; }

  NodeId left_count() const { return left_count_; }
  NodeId right_count() const { return right_count_; }

  // Index of the product node (u, v), if the pair is label-matched.
  std::optional<std::size_t> IndexOf(NodeId u, NodeId v) const;

  // Sorted ascending. A self-loop appears once.
  std::span<const std::uint32_t> neighbors(std::size_t i) const {
    return {adjacency_.data() + offsets_[i],
            adjacency_.data() + offsets_[i + 1]};
  }
  // Number of undirected edges.
  std::size_t edge_count() const;

  // True when built from a graph with itself. Then (u, v) <-> (v, u) is an
  // automorphism and mirror(i) is the index of the swapped pair.
  bool is_self_product() const { return self_; }
  std::size_t mirror(std::size_t i) const { return mirror_[i]; }

  bool is_weighted() const { return !weights_.empty(); }
  std::span<const double> arc_weights() const { return weights_; }
  // Empty means all ones.
  std::span<const double> start_vector() const { return start_; }

  // Copy with per-arc weights (aligned with the concatenated neighbor lists)
  // and a start vector of length node_count(). Throws ContractViolation on
  // size mismatch.
  ProductGraph WithWeights(std::vector<double> arc_weights,
                           std::vector<double> start) const;

  // y = A x.
  void Multiply(std::span<const double> x, std::span<double> y) const;

  // y = A x for a self product and a mirror-symmetric x: only rows with
  // left <= right are computed, the rest are copied from their mirror.
  void MultiplySymmetric(std::span<const double> x, std::span<double> y) const;

 private:
  friend ProductGraph DirectProduct(const LabeledGraph& g,
                                    const LabeledGraph& h);

  NodeId left_count_ = 0;
  NodeId right_count_ = 0;
  std::vector<Pair> nodes_;
  std::vector<std::size_t> row_begin_{0};  // per left node, into nodes_
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> adjacency_;
  bool self_ = false;
  std::vector<std::size_t> mirror_;
  std::vector<double> weights_;
  std::vector<double> start_;
};

ProductGraph DirectProduct(const LabeledGraph& g, const LabeledGraph& h);

// |V(G x H)| from the label histograms, without building the product.
std::size_t ProductNodeCount(const LabeledGraph& g, const LabeledGraph& h);

// w[k][i] is the number of length-k walks starting at product node i (the
// weighted sum for weighted products); sums[k] adds up w[k]. A warning is
// emitted once if an entry exceeds 2^52, where integer exactness ends soon.
struct WalkCounts {
  std::vector<std::vector<double>> w;
  std::vector<double> sums;
};
WalkCounts CountWalks(const ProductGraph& p, int max_length);

// Components of (G u H) x (G u H) that matter: G x G, G x H and H x H. The
// H x G part mirrors G x H and is left out.
struct UnionProduct {
  ProductGraph gg;
  ProductGraph gh;
  ProductGraph hh;
};
UnionProduct UnionProductParts(const LabeledGraph& g, const LabeledGraph& h);

}  // namespace ncwalk

#endif  // NCWALK_PRODUCT_GRAPH_H_
