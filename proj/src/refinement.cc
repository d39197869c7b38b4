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

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "ncwalk/errors.h"

namespace ncwalk {
namespace {

struct SignatureHash {
  std::size_t operator()(const std::vector<LabelId>& key) const {
    std::size_t seed = key.size();
    for (LabelId x : key) {
      seed ^= std::hash<LabelId>()(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
              (seed >> 2);
    }
    return seed;
  }
};

Labeling Concatenate(std::span<const Labeling> parts) {
  std::vector<LabelId> ids;
  for (const Labeling& part : parts) {
    ids.insert(ids.end(), part.ids().begin(), part.ids().end());
  }
  return Labeling(std::move(ids));
}

std::size_t DistinctValues(std::span<const std::int64_t> values) {
  return std::unordered_set<std::int64_t>(values.begin(), values.end()).size();
}

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("extended connectivity exceeds int64 range");
  }
  return out;
}

std::vector<std::int64_t> NeighborSums(const LabeledGraph& g,
                                       std::span<const std::int64_t> values) {
  std::vector<std::int64_t> out(values.size(), 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) out[u] = CheckedAdd(out[u], values[v]);
  }
  return out;
}

}  // namespace

JointRefinement WlRefineJoint(std::span<const LabeledGraph> graphs,
                              std::optional<int> max_iterations,
                              bool stop_at_convergence) {
  if (!max_iterations && !stop_at_convergence) {
    throw ContractViolation("WL refinement needs an iteration limit or a "
                            "convergence stop");
  }
  if (max_iterations && *max_iterations < 0) {
    throw ContractViolation("iteration count must be >= 0");
  }
  JointRefinement result;
  std::vector<Labeling> current;
  current.reserve(graphs.size());
  for (const LabeledGraph& g : graphs) current.push_back(InitialLabeling(g));
  result.steps.push_back(current);

  std::vector<LabelId> signature;
  for (int iteration = 1; !max_iterations || iteration <= *max_iterations;
       ++iteration) {
    std::unordered_map<std::vector<LabelId>, LabelId, SignatureHash> colors;
    std::vector<Labeling> next;
    next.reserve(graphs.size());
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      const LabeledGraph& g = graphs[k];
      const Labeling& old = current[k];
      std::vector<LabelId> ids(g.node_count());
      for (NodeId v = 0; v < g.node_count(); ++v) {
        signature.clear();
        for (NodeId w : g.neighbors(v)) signature.push_back(old[w]);
        std::sort(signature.begin(), signature.end());
        signature.insert(signature.begin(), old[v]);
        ids[v] = colors
                     .try_emplace(signature,
                                  static_cast<LabelId>(colors.size()))
                     .first->second;
      }
      next.emplace_back(std::move(ids));
    }
    const bool stable = Equivalent(Concatenate(current), Concatenate(next));
    result.steps.push_back(next);
    current = std::move(next);
    if (stable) {
      result.converged = true;
      if (stop_at_convergence) break;
    }
  }
  return result;
}

RefinementSequence WlRefine(const LabeledGraph& g,
                            std::optional<int> max_iterations) {
  JointRefinement joint =
      WlRefineJoint(std::span<const LabeledGraph>(&g, 1), max_iterations);
  RefinementSequence result;
  result.converged = joint.converged;
  for (auto& step : joint.steps) result.steps.push_back(std::move(step[0]));
  return result;
}

std::vector<std::vector<std::int64_t>> ExtendedConnectivitySequence(
    const LabeledGraph& g, int count) {
  std::vector<std::vector<std::int64_t>> history;
  if (count <= 0) return history;
  std::vector<std::int64_t> ec(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    ec[v] = static_cast<std::int64_t>(g.degree(v));
  }
  history.push_back(ec);
  while (static_cast<int>(history.size()) < count) {
    history.push_back(NeighborSums(g, history.back()));
  }
  return history;
}

MorganResult MorganExtendedConnectivity(const LabeledGraph& g) {
  MorganResult result;
  result.history = ExtendedConnectivitySequence(g, 1);
  std::size_t classes = DistinctValues(result.history.back());
  std::size_t accepted = 0;
  for (;;) {
    result.history.push_back(NeighborSums(g, result.history.back()));
    const std::size_t next_classes = DistinctValues(result.history.back());
    if (next_classes <= classes) break;
    classes = next_classes;
    accepted = result.history.size() - 1;
  }
  result.final_ec = result.history[accepted];
  return result;
}

std::vector<std::int64_t> WalkPartitionMatrix::column(int k) const {
  std::vector<std::int64_t> out(node_count());
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = at(static_cast<NodeId>(v), k);
  }
  return out;
}

Labeling WalkPartitionMatrix::ToLabeling(std::optional<int> columns) const {
  const std::size_t width =
      columns ? static_cast<std::size_t>(std::clamp(*columns, 0,
                                                    max_length() + 1))
              : columns_;
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(node_count());
  for (std::size_t v = 0; v < node_count(); ++v) {
    const auto r = row(static_cast<NodeId>(v));
    rows.emplace_back(r.begin(), r.begin() + width);
  }
  return Labeling::FromValues<std::vector<std::int64_t>>(rows);
}

WalkPartitionMatrix WalkPartition(const LabeledGraph& g, int max_length) {
  if (max_length < 0) throw ContractViolation("walk length must be >= 0");
  constexpr double kExact = 9007199254740992.0;  // 2^53
  WalkPartitionMatrix matrix(g.node_count(), max_length);
  std::vector<double> x(g.node_count(), 1.0);
  for (int k = 0; k <= max_length; ++k) {
    if (k > 0) x = AdjacencyMatvec(g, x);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (x[v] > kExact) {
        throw std::overflow_error("walk count exceeds 2^53 at length " +
                                  std::to_string(k));
      }
      matrix.at(v, k) = static_cast<std::int64_t>(x[v]);
    }
  }
  return matrix;
}

Labeling WalkLabelsOracle(const LabeledGraph& g, int length, bool cumulative,
                          std::int64_t budget) {
  std::vector<SequenceCounts> per_node;
  per_node.reserve(g.node_count());
  std::int64_t remaining = budget;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    per_node.push_back(
        WalkLabelSequences(g, v, length, cumulative, remaining));
    remaining -= TotalCount(per_node.back());
  }
  return Labeling::FromValues<SequenceCounts>(per_node);
}

UnfoldingTree BuildUnfoldingTree(const LabeledGraph& g, NodeId root,
                                 int depth, std::int64_t budget) {
  if (depth < 0) throw ContractViolation("tree depth must be >= 0");
  if (root < 0 || root >= g.node_count()) {
    throw ContractViolation("root " + std::to_string(root) + " out of range");
  }
  UnfoldingTree tree;
  tree.depth = depth;
  tree.vertices.push_back({root, g.label(root), 0, {}});
  // Breadth-first: vertices of one level are contiguous in the arena.
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
    if (tree.vertices[i].depth == depth) continue;
    const NodeId origin = tree.vertices[i].origin;
    const int child_depth = tree.vertices[i].depth + 1;
    for (NodeId w : g.neighbors(origin)) {
      if (static_cast<std::int64_t>(tree.vertices.size()) >= budget) {
        throw BudgetExceeded("unfolding tree exceeds " +
                             std::to_string(budget) + " vertices");
      }
      tree.vertices[i].children.push_back(tree.vertices.size());
      tree.vertices.push_back({w, g.label(w), child_depth, {}});
    }
  }
  return tree;
}

std::vector<LabelSequence> RootToLeafSequences(const UnfoldingTree& tree) {
  std::vector<LabelSequence> out;
  if (tree.vertices.empty()) return out;
  LabelSequence path;
  // Only paths reaching full depth count: an isolated root at depth < n has
  // no walk of length n.
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    const auto& vertex = tree.vertices[i];
    path.push_back(vertex.label);
    if (vertex.depth == tree.depth) {
      out.push_back(path);
    } else {
      for (std::size_t child : vertex.children) visit(child);
    }
    path.pop_back();
  };
  visit(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncwalk
