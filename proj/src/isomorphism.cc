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

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <tuple>

#include "ncwalk/errors.h"
#include "ncwalk/log.h"
#include "ncwalk/refinement.h"

namespace ncwalk {
namespace {

std::vector<std::pair<LabelId, std::size_t>> ColorHistogram(
    std::span<const LabelId> colors) {
  std::map<LabelId, std::size_t> counts;
  for (LabelId c : colors) ++counts[c];
  return {counts.begin(), counts.end()};
}

class Matcher {
 public:
  Matcher(const LabeledGraph& g, const LabeledGraph& h,
          std::span<const LabelId> g_colors, std::span<const LabelId> h_colors,
          std::int64_t budget)
      : g_(g),
        h_(h),
        g_colors_(g_colors),
        h_colors_(h_colors),
        budget_(budget),
        map_(g.node_count(), -1),
        used_(h.node_count(), false) {
    for (NodeId x = 0; x < h.node_count(); ++x) {
      by_color_[h_colors[x]].push_back(x);
    }
    BuildOrder();
  }

  IsomorphismSearch Run() {
    IsomorphismSearch result;
    try {
      if (Extend(0)) {
        result.outcome = IsomorphismOutcome::kIsomorphic;
        result.mapping = map_;
      }
    } catch (const BudgetExceeded&) {
      result.outcome = IsomorphismOutcome::kUndecided;
    }
    result.steps = steps_;
    return result;
  }

 private:
  // Breadth-first from the nodes of the rarest colors, so that most nodes
  // have a mapped neighbor that restricts their candidates.
  void BuildOrder() {
    std::map<LabelId, std::size_t> class_size;
    for (LabelId c : g_colors_) ++class_size[c];
    std::vector<NodeId> roots(g_.node_count());
    for (NodeId u = 0; u < g_.node_count(); ++u) roots[u] = u;
    std::stable_sort(roots.begin(), roots.end(), [&](NodeId a, NodeId b) {
      return class_size[g_colors_[a]] < class_size[g_colors_[b]];
    });
    std::vector<bool> seen(g_.node_count(), false);
    anchor_.assign(g_.node_count(), -1);
    for (NodeId root : roots) {
      if (seen[root]) continue;
      seen[root] = true;
      std::queue<NodeId> queue;
      queue.push(root);
      while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop();
        order_.push_back(u);
        for (NodeId w : g_.neighbors(u)) {
          if (seen[w]) continue;
          seen[w] = true;
          anchor_[w] = u;
          queue.push(w);
        }
      }
    }
  }

  bool Consistent(NodeId u, NodeId x) const {
    if (g_.HasEdge(u, u) != h_.HasEdge(x, x)) return false;
    std::size_t mapped_g = 0;
    for (NodeId w : g_.neighbors(u)) {
      if (w == u || map_[w] < 0) continue;
      ++mapped_g;
      if (!h_.HasEdge(x, map_[w])) return false;
    }
    std::size_t mapped_h = 0;
    for (NodeId y : h_.neighbors(x)) {
      if (y != x && used_[y]) ++mapped_h;
    }
    return mapped_g == mapped_h;
  }

  bool Extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const NodeId u = order_[depth];
    const LabelId color = g_colors_[u];
    std::span<const NodeId> candidates;
    if (anchor_[u] >= 0) {
      candidates = h_.neighbors(map_[anchor_[u]]);
    } else {
      auto it = by_color_.find(color);
      if (it == by_color_.end()) return false;
      candidates = it->second;
    }
    for (NodeId x : candidates) {
      if (used_[x] || h_colors_[x] != color) continue;
      if (++steps_ > budget_) throw BudgetExceeded("isomorphism search");
      if (!Consistent(u, x)) continue;
      map_[u] = x;
      used_[x] = true;
      if (Extend(depth + 1)) return true;
      map_[u] = -1;
      used_[x] = false;
    }
    return false;
  }

  const LabeledGraph& g_;
  const LabeledGraph& h_;
  std::span<const LabelId> g_colors_;
  std::span<const LabelId> h_colors_;
  const std::int64_t budget_;
  std::int64_t steps_ = 0;
  std::map<LabelId, std::vector<NodeId>> by_color_;
  std::vector<NodeId> order_;
  std::vector<NodeId> anchor_;
  std::vector<NodeId> map_;
  std::vector<bool> used_;
};

}  // namespace

bool ValidateIsomorphism(const LabeledGraph& g, const LabeledGraph& h,
                         std::span<const NodeId> mapping) {
  const NodeId n = g.node_count();
  if (h.node_count() != n || mapping.size() != static_cast<std::size_t>(n) ||
      g.edge_count() != h.edge_count()) {
    return false;
  }
  std::vector<bool> hit(n, false);
  for (NodeId u = 0; u < n; ++u) {
    const NodeId x = mapping[u];
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = true;
    if (g.label(u) != h.label(x)) return false;
  }
  // Equal edge counts plus every edge mapping onto an edge gives <=>.
  for (const auto& [u, v] : g.edges()) {
    if (!h.HasEdge(mapping[u], mapping[v])) return false;
  }
  return true;
}

IsomorphismSearch FindIsomorphism(const LabeledGraph& g, const LabeledGraph& h,
                                  std::span<const LabelId> g_colors,
                                  std::span<const LabelId> h_colors,
                                  std::int64_t budget) {
  if (g_colors.size() != static_cast<std::size_t>(g.node_count()) ||
      h_colors.size() != static_cast<std::size_t>(h.node_count())) {
    throw ContractViolation("coloring length does not match node count");
  }
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count() ||
      ColorHistogram(g_colors) != ColorHistogram(h_colors)) {
    return {};
  }
  IsomorphismSearch result =
      Matcher(g, h, g_colors, h_colors, budget).Run();
  if (result.outcome == IsomorphismOutcome::kIsomorphic &&
      !ValidateIsomorphism(g, h, result.mapping)) {
    throw std::logic_error("isomorphism search produced an invalid mapping");
  }
  return result;
}

IsomorphismSearch FindIsomorphism(const LabeledGraph& g, const LabeledGraph& h,
                                  std::int64_t budget) {
  const LabeledGraph pair[] = {g, h};
  const JointRefinement joint = WlRefineJoint(pair, std::nullopt);
  const auto& stable = joint.steps.back();
  return FindIsomorphism(g, h, stable[0].ids(), stable[1].ids(), budget);
}

bool IsomorphismCertificate::Validate(const GraphCollection& collection) const {
  return mapping && ValidateIsomorphism(collection.graphs.at(representative),
                                        collection.graphs.at(duplicate),
                                        *mapping);
}

DedupResult DedupIsomorphic(const GraphCollection& collection,
                            const DedupOptions& options) {
  const auto& graphs = collection.graphs;
  const JointRefinement joint = WlRefineJoint(graphs, std::nullopt);
  const std::vector<Labeling>& stable = joint.steps.back();

  using Key = std::tuple<NodeId, std::size_t, std::vector<std::size_t>,
                         std::vector<std::pair<LabelId, std::size_t>>>;
  std::map<Key, std::vector<std::size_t>> representatives;

  DedupResult result;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const LabeledGraph& g = graphs[k];
    std::vector<std::size_t> degrees(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) degrees[u] = g.degree(u);
    std::sort(degrees.begin(), degrees.end());
    Key key{g.node_count(), g.edge_count(), std::move(degrees),
            ColorHistogram(stable[k].ids())};
    auto& bucket = representatives[key];

    bool duplicate = false;
    for (std::size_t rep : bucket) {
      const IsomorphismSearch search =
          FindIsomorphism(graphs[rep], g, stable[rep].ids(), stable[k].ids(),
                          options.backtrack_budget);
      if (search.outcome == IsomorphismOutcome::kIsomorphic) {
        result.certificates.push_back({rep, k, search.mapping});
        duplicate = true;
        break;
      }
      if (search.outcome == IsomorphismOutcome::kUndecided) {
        ++result.undecided_pairs;
        Warn("isomorphism search between graphs " + std::to_string(rep) +
             " and " + std::to_string(k) +
             " exceeded its budget; keeping both");
      }
    }
    if (!duplicate) {
      bucket.push_back(k);
      result.kept.push_back(k);
    }
  }
  result.collection = collection.Select(result.kept);
  return result;
}

}  // namespace ncwalk
