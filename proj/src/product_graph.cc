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

#include "ncwalk/product_graph.h"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "ncwalk/errors.h"
#include "ncwalk/log.h"

namespace ncwalk {
namespace {

constexpr double kWarnThreshold = 4503599627370496.0;  // 2^52

std::map<LabelId, std::size_t> LabelHistogram(const LabeledGraph& g) {
  std::map<LabelId, std::size_t> histogram;
  for (LabelId l : g.labels()) ++histogram[l];
  return histogram;
}

}  // namespace

std::optional<std::size_t> ProductGraph::IndexOf(NodeId u, NodeId v) const {
  if (u < 0 || u >= left_count_) return std::nullopt;
  const auto first = nodes_.begin() + row_begin_[u];
  const auto last = nodes_.begin() + row_begin_[u + 1];
  const auto it = std::lower_bound(
      first, last, v, [](const Pair& p, NodeId x) { return p.right < x; });
  if (it == last || it->right != v) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t ProductGraph::edge_count() const {
  std::size_t loops = 0;
  for (std::size_t i = 0; i < node_count(); ++i) {
    const auto nbrs = neighbors(i);
    if (std::binary_search(nbrs.begin(), nbrs.end(),
                           static_cast<std::uint32_t>(i))) {
      ++loops;
    }
  }
  return (adjacency_.size() - loops) / 2 + loops;
}

ProductGraph ProductGraph::WithWeights(std::vector<double> arc_weights,
                                       std::vector<double> start) const {
  if (arc_weights.size() != adjacency_.size()) {
    throw ContractViolation("arc weight count " +
                            std::to_string(arc_weights.size()) +
                            " != arc count " +
                            std::to_string(adjacency_.size()));
  }
  if (start.size() != node_count()) {
    throw ContractViolation("start vector length != product node count");
  }
  ProductGraph out = *this;
  out.weights_ = std::move(arc_weights);
  out.start_ = std::move(start);
  return out;
}

void ProductGraph::Multiply(std::span<const double> x,
                            std::span<double> y) const {
  if (x.size() != node_count() || y.size() != node_count()) {
    throw ContractViolation("product matvec: length mismatch");
  }
  for (std::size_t i = 0; i < node_count(); ++i) {
    double sum = 0.0;
    if (weights_.empty()) {
      for (std::uint32_t j : neighbors(i)) sum += x[j];
    } else {
      for (std::size_t a = offsets_[i]; a < offsets_[i + 1]; ++a) {
        sum += weights_[a] * x[adjacency_[a]];
      }
    }
    y[i] = sum;
  }
}

void ProductGraph::MultiplySymmetric(std::span<const double> x,
                                     std::span<double> y) const {
  if (!is_self_product() || is_weighted()) {
    Multiply(x, y);
    return;
  }
  if (x.size() != node_count() || y.size() != node_count()) {
    throw ContractViolation("product matvec: length mismatch");
  }
  for (std::size_t i = 0; i < node_count(); ++i) {
    if (nodes_[i].left > nodes_[i].right) continue;
    double sum = 0.0;
    for (std::uint32_t j : neighbors(i)) sum += x[j];
    y[i] = sum;
  }
  for (std::size_t i = 0; i < node_count(); ++i) {
    if (nodes_[i].left > nodes_[i].right) y[i] = y[mirror_[i]];
  }
}

ProductGraph DirectProduct(const LabeledGraph& g, const LabeledGraph& h) {
  ProductGraph p;
  p.left_count_ = g.node_count();
  p.right_count_ = h.node_count();

  std::map<LabelId, std::vector<NodeId>> right_by_label;
  for (NodeId v = 0; v < h.node_count(); ++v) {
    right_by_label[h.label(v)].push_back(v);
  }
  p.row_begin_.assign(g.node_count() + 1, 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    p.row_begin_[u] = p.nodes_.size();
    auto it = right_by_label.find(g.label(u));
    if (it == right_by_label.end()) continue;
    for (NodeId v : it->second) p.nodes_.push_back({u, v});
  }
  p.row_begin_[g.node_count()] = p.nodes_.size();
  if (p.nodes_.size() >
      static_cast<std::size_t>(std::numeric_limits<std::uint32_t>::max())) {
    throw BudgetExceeded("product graph too large for 32-bit node ids");
  }

  // Neighbors of each right node ordered by (label, id), so the candidates
  // (v, v') for a left neighbor v form one contiguous range.
  std::vector<std::vector<NodeId>> right_neighbors(h.node_count());
  for (NodeId v = 0; v < h.node_count(); ++v) {
    const auto nbrs = h.neighbors(v);
    right_neighbors[v].assign(nbrs.begin(), nbrs.end());
    std::sort(right_neighbors[v].begin(), right_neighbors[v].end(),
              [&h](NodeId a, NodeId b) {
                return std::pair(h.label(a), a) < std::pair(h.label(b), b);
              });
  }

  p.offsets_.assign(p.nodes_.size() + 1, 0);
  for (std::size_t i = 0; i < p.nodes_.size(); ++i) {
    const auto [u, u2] = p.nodes_[i];
    const auto& candidates = right_neighbors[u2];
    for (NodeId v : g.neighbors(u)) {
      const LabelId label = g.label(v);
      auto first = std::lower_bound(
          candidates.begin(), candidates.end(), label,
          [&h](NodeId a, LabelId l) { return h.label(a) < l; });
      for (; first != candidates.end() && h.label(*first) == label; ++first) {
        p.adjacency_.push_back(
            static_cast<std::uint32_t>(*p.IndexOf(v, *first)));
      }
    }
    p.offsets_[i + 1] = p.adjacency_.size();
  }

  if (&g == &h || g == h) {
    p.self_ = true;
    p.mirror_.resize(p.nodes_.size());
    for (std::size_t i = 0; i < p.nodes_.size(); ++i) {
      p.mirror_[i] = *p.IndexOf(p.nodes_[i].right, p.nodes_[i].left);
    }
  }
  return p;
}

std::size_t ProductNodeCount(const LabeledGraph& g, const LabeledGraph& h) {
  const auto hg = LabelHistogram(g);
  const auto hh = LabelHistogram(h);
  std::size_t total = 0;
  for (const auto& [label, count] : hg) {
    auto it = hh.find(label);
    if (it != hh.end()) total += count * it->second;
  }
  return total;
}

WalkCounts CountWalks(const ProductGraph& p, int max_length) {
  if (max_length < 0) throw ContractViolation("walk length must be >= 0");
  WalkCounts counts;
  counts.w.reserve(max_length + 1);
  if (p.start_vector().empty()) {
    counts.w.emplace_back(p.node_count(), 1.0);
  } else {
    counts.w.emplace_back(p.start_vector().begin(), p.start_vector().end());
  }
  for (int k = 1; k <= max_length; ++k) {
    std::vector<double> next(p.node_count());
    p.Multiply(counts.w.back(), next);
    counts.w.push_back(std::move(next));
  }
  bool warned = false;
  for (const auto& w : counts.w) {
    double sum = 0.0;
    for (double x : w) {
      sum += x;
      if (!warned && x > kWarnThreshold) {
        Warn("walk count exceeds 2^52; integer exactness may be lost");
        warned = true;
      }
    }
    counts.sums.push_back(sum);
  }
  return counts;
}

UnionProduct UnionProductParts(const LabeledGraph& g, const LabeledGraph& h) {
  return {DirectProduct(g, g), DirectProduct(g, h), DirectProduct(h, h)};
}

}  // namespace ncwalk
