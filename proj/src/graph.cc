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

#include <algorithm>
#include <string>

#include "ncwalk/errors.h"

namespace ncwalk {

LabeledGraph::LabeledGraph(std::vector<LabelId> labels,
                           std::span<const Edge> edges)
    : labels_(std::move(labels)) {
  const NodeId n = node_count();
  for (NodeId u = 0; u < n; ++u) {
    if (labels_[u] < 0) {
      throw ContractViolation("negative label at node " + std::to_string(u));
    }
  }
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ContractViolation("edge (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") out of range for " +
                              std::to_string(n) + " nodes");
    }
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::size_t> degree(n, 0);
  for (const auto& [a, b] : edges_) {
    ++degree[a];
    if (a != b) ++degree[b];
  }
  offsets_.assign(n + 1, 0);
  for (NodeId u = 0; u < n; ++u) offsets_[u + 1] = offsets_[u] + degree[u];
  neighbors_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges_) {
    neighbors_[fill[a]++] = b;
    if (a != b) neighbors_[fill[b]++] = a;
  }
  for (NodeId u = 0; u < n; ++u) {
    std::sort(neighbors_.begin() + offsets_[u],
              neighbors_.begin() + offsets_[u + 1]);
  }
}

LabeledGraph LabeledGraph::Unlabeled(NodeId node_count,
                                     std::span<const Edge> edges) {
  return LabeledGraph(std::vector<LabelId>(node_count, 0), edges);
}

bool LabeledGraph::HasEdge(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<LabelId> LabeledGraph::Alphabet() const {
  std::vector<LabelId> alphabet(labels_.begin(), labels_.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()),
                 alphabet.end());
  return alphabet;
}

bool LabeledGraph::IsUniformlyLabeled() const {
  return std::adjacent_find(labels_.begin(), labels_.end(),
                            std::not_equal_to<>()) == labels_.end();
}

LabeledGraph LabeledGraph::Relabeled(std::vector<LabelId> labels) const {
  if (labels.size() != labels_.size()) {
    throw ContractViolation("relabeling has wrong length");
  }
  return LabeledGraph(std::move(labels), edges_);
}

LabelId LabelDictionary::Intern(std::int64_t raw) {
  auto [it, inserted] =
      ids_.try_emplace(raw, static_cast<LabelId>(raw_.size()));
  if (inserted) raw_.push_back(raw);
  return it->second;
}

std::optional<LabelId> LabelDictionary::Find(std::int64_t raw) const {
  auto it = ids_.find(raw);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void GraphCollection::CheckAligned() const {
  if (class_labels && class_labels->size() != graphs.size()) {
    throw ContractViolation("class_labels has " +
                            std::to_string(class_labels->size()) +
                            " entries for " + std::to_string(graphs.size()) +
                            " graphs");
  }
  if (!names.empty() && names.size() != graphs.size()) {
    throw ContractViolation("names misaligned with graphs");
  }
}

GraphCollection GraphCollection::Select(
    std::span<const std::size_t> indices) const {
  GraphCollection out;
  out.dictionary = dictionary;
  if (class_labels) out.class_labels.emplace();
  for (std::size_t i : indices) {
    out.graphs.push_back(graphs.at(i));
    if (class_labels) out.class_labels->push_back(class_labels->at(i));
    if (!names.empty()) out.names.push_back(names.at(i));
  }
  return out;
}

UnionResult DisjointUnion(const LabeledGraph& g, const LabeledGraph& h) {
  const NodeId offset = g.node_count();
  std::vector<LabelId> labels(g.labels().begin(), g.labels().end());
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& [a, b] : h.edges()) {
    edges.emplace_back(a + offset, b + offset);
  }
  return {LabeledGraph(std::move(labels), edges), offset};
}

std::vector<double> AdjacencyMatvec(const LabeledGraph& g,
                                    std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.node_count())) {
    throw ContractViolation("matvec: vector length " +
                            std::to_string(x.size()) + " != node count " +
                            std::to_string(g.node_count()));
  }
  std::vector<double> result(x.size(), 0.0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    double sum = 0.0;
    for (NodeId v : g.neighbors(u)) sum += x[v];
    result[u] = sum;
  }
  return result;
}

}  // namespace ncwalk
