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

#include "ncwalk/graph_kernel.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "ncwalk/errors.h"
#include "ncwalk/refinement.h"

namespace ncwalk {
namespace {

using Histogram = std::vector<std::pair<std::int64_t, double>>;

// k^beta for a pair inside the product graph; 0^0 is 1 there.
double PowBeta(double k, double beta) {
  if (beta == 0.0) return 1.0;
  if (beta == 1.0) return k;
  return std::pow(k, beta);
}

double Dot(const Histogram& a, const Histogram& b) {
  double total = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      total += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return total;
}

template <typename Keys>
Histogram MakeHistogram(const Keys& keys) {
  std::map<std::int64_t, double> counts;
  for (const auto& key : keys) counts[static_cast<std::int64_t>(key)] += 1.0;
  return Histogram(counts.begin(), counts.end());
}

Histogram EdgeLabelHistogram(const LabeledGraph& g) {
  std::vector<std::int64_t> keys;
  keys.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    const std::int64_t a = std::min(g.label(u), g.label(v));
    const std::int64_t b = std::max(g.label(u), g.label(v));
    keys.push_back((a << 31) | b);
  }
  return MakeHistogram(keys);
}

// w+_uu per node after each iteration 0..l of the walk iteration on G x G.
std::vector<std::vector<double>> SelfDiagonals(const ProductGraph& self,
                                               const NodeKernelParams& params) {
  ProductWalkIteration walk(self, params);
  std::vector<std::vector<double>> diagonals;
  diagonals.push_back(walk.Diagonal());
  for (int i = 1; i <= params.max_length; ++i) {
    walk.Advance();
    diagonals.push_back(walk.Diagonal());
    if (params.wl_mode) {
      walk.ComputeGaussian(diagonals.back(), diagonals.back());
      walk.ReEncode();
    }
  }
  return diagonals;
}

// Per-length contributions sum_{(u,v) in G x H} khat_i * k_i^beta.
std::vector<double> NcwTerms(const ProductGraph& cross,
                             const std::vector<std::vector<double>>& left,
                             const std::vector<std::vector<double>>& right,
                             const NodeKernelParams& params, double beta) {
  ProductWalkIteration walk(cross, params);
  std::vector<double> terms;
  terms.reserve(params.max_length + 1);
  for (int i = 0; i <= params.max_length; ++i) {
    if (i > 0) walk.Advance();
    walk.ComputeGaussian(left[i], right[i]);
    const auto w = walk.w();
    const auto gaussian = walk.gaussian();
    double term = 0.0;
    for (std::size_t p = 0; p < w.size(); ++p) {
      term += gaussian[p] * PowBeta(w[p], beta);
    }
    terms.push_back(term);
    if (params.wl_mode && i > 0) walk.ReEncode();
  }
  return terms;
}

// c_i = A^i 1 for i = 0..l.
std::vector<std::vector<double>> WalkProfile(const LabeledGraph& g,
                                             int max_length) {
  std::vector<std::vector<double>> profile;
  profile.emplace_back(g.node_count(), 1.0);
  for (int i = 1; i <= max_length; ++i) {
    profile.push_back(AdjacencyMatvec(g, profile.back()));
  }
  return profile;
}

std::vector<double> UnlabeledTerms(const std::vector<std::vector<double>>& pg,
                                   const std::vector<std::vector<double>>& ph,
                                   const GraphKernelSpec& spec) {
  const std::size_t n = pg.front().size();
  const std::size_t m = ph.front().size();
  std::vector<double> distance(n * m, 0.0);
  std::vector<double> terms;
  for (int i = 0; i <= spec.max_length; ++i) {
    double term = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      const double cu = pg[i][u];
      for (std::size_t v = 0; v < m; ++v) {
        const double cv = ph[i][v];
        double& d = distance[u * m + v];
        d += (cu - cv) * (cu - cv);
        term += GaussianOfDistance(d, spec.alpha, 0.0) *
                PowBeta(cu * cv, spec.beta);
      }
    }
    terms.push_back(term);
  }
  return terms;
}

bool SharesOneLabel(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.node_count() == 0 || h.node_count() == 0) return true;
  return g.IsUniformlyLabeled() && h.IsUniformlyLabeled() &&
         g.label(0) == h.label(0);
}

double Sum(const std::vector<double>& terms) {
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

void CheckProductBudget(const LabeledGraph& g, const LabeledGraph& h,
                        std::size_t i, std::size_t j, std::size_t budget) {
  const std::size_t nodes = ProductNodeCount(g, h);
  if (nodes > budget) {
    throw BudgetExceeded("product graph of graphs " + std::to_string(i) +
                         " and " + std::to_string(j) + " has " +
                         std::to_string(nodes) + " nodes, above the budget of " +
                         std::to_string(budget));
  }
}

// Runs fn(k) for k in [0, count) on `threads` workers; rethrows the first
// exception after all workers stop.
template <typename Fn>
void ParallelFor(std::size_t count, int threads, Fn fn) {
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k; !failed && (k = next++) < count;) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& thread : pool) thread.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::string_view KernelKindName(KernelKind kind) {
  switch (kind) {
    case KernelKind::kNodeCentricWalk:
      return "ncw";
    case KernelKind::kNodeCentricWalkWl:
      return "ncwwl";
    case KernelKind::kRandomWalk:
      return "rw";
    case KernelKind::kWlSubtree:
      return "wl";
    case KernelKind::kVertexLabel:
      return "vl";
    case KernelKind::kEdgeLabel:
      return "el";
  }
  return "?";
}

std::optional<KernelKind> ParseKernelKind(std::string_view name) {
  for (KernelKind kind :
       {KernelKind::kNodeCentricWalk, KernelKind::kNodeCentricWalkWl,
        KernelKind::kRandomWalk, KernelKind::kWlSubtree,
        KernelKind::kVertexLabel, KernelKind::kEdgeLabel}) {
    if (KernelKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

void GraphKernelSpec::Validate() const {
  if (max_length < 0) throw ContractViolation("l must be >= 0");
  if (!(beta >= 0.0) || std::isinf(beta)) {
    throw ContractViolation("beta must be a finite value >= 0");
  }
  if (!lambda.empty() &&
      lambda.size() != static_cast<std::size_t>(max_length) + 1) {
    throw ContractViolation("lambda needs l + 1 = " +
                            std::to_string(max_length + 1) + " weights, got " +
                            std::to_string(lambda.size()));
  }
  for (double x : lambda) {
    if (!(x >= 0.0)) throw ContractViolation("lambda weights must be >= 0");
  }
  if (kind == KernelKind::kNodeCentricWalkWl) NodeParams().Validate();
}

NodeKernelParams GraphKernelSpec::NodeParams() const {
  return {max_length, alpha, kind == KernelKind::kNodeCentricWalkWl};
}

std::string GraphKernelSpec::Describe() const {
  std::ostringstream out;
  out << KernelKindName(kind) << " l=" << max_length;
  if (kind == KernelKind::kNodeCentricWalk ||
      kind == KernelKind::kNodeCentricWalkWl) {
    out << " alpha=";
    if (alpha.is_infinite()) {
      out << "inf";
    } else {
      out << alpha.value();
    }
    out << " beta=" << beta;
  }
  return out.str();
}

double NcwKernel(const LabeledGraph& g, const LabeledGraph& h,
                 const GraphKernelSpec& spec) {
  spec.Validate();
  if (spec.kind != KernelKind::kNodeCentricWalk &&
      spec.kind != KernelKind::kNodeCentricWalkWl) {
    throw ContractViolation("NcwKernel needs kind ncw or ncwwl");
  }
  const NodeKernelParams params = spec.NodeParams();
  const UnionProduct parts = UnionProductParts(g, h);
  return Sum(NcwTerms(parts.gh, SelfDiagonals(parts.gg, params),
                      SelfDiagonals(parts.hh, params), params, spec.beta));
}

double RandomWalkKernel(const LabeledGraph& g, const LabeledGraph& h,
                        const GraphKernelSpec& spec) {
  spec.Validate();
  const WalkCounts counts = CountWalks(DirectProduct(g, h), spec.max_length);
  double total = 0.0;
  for (int k = 0; k <= spec.max_length; ++k) {
    total += spec.LambdaAt(k) * counts.sums[k];
  }
  return total;
}

double WlSubtreeKernel(const LabeledGraph& g, const LabeledGraph& h,
                       int iterations) {
  const LabeledGraph pair[] = {g, h};
  const JointRefinement joint =
      WlRefineJoint(pair, iterations, /*stop_at_convergence=*/false);
  double total = 0.0;
  for (const auto& step : joint.steps) {
    total += Dot(MakeHistogram(step[0].ids()), MakeHistogram(step[1].ids()));
  }
  return total;
}

double LabelHistogramKernel(const LabeledGraph& g, const LabeledGraph& h,
                            HistogramMode mode) {
  if (mode == HistogramMode::kNode) {
    return Dot(MakeHistogram(g.labels()), MakeHistogram(h.labels()));
  }
  return Dot(EdgeLabelHistogram(g), EdgeLabelHistogram(h));
}

double NcwUnlabeledFast(const LabeledGraph& g, const LabeledGraph& h,
                        const GraphKernelSpec& spec) {
  spec.Validate();
  if (spec.kind != KernelKind::kNodeCentricWalk) {
    throw ContractViolation("unlabeled fast path supports ncw only");
  }
  if (!g.IsUniformlyLabeled() || !h.IsUniformlyLabeled()) {
    throw ContractViolation("unlabeled fast path called on multi-label input");
  }
  if (!SharesOneLabel(g, h)) return 0.0;
  return Sum(UnlabeledTerms(WalkProfile(g, spec.max_length),
                            WalkProfile(h, spec.max_length), spec));
}

double GraphKernel(const LabeledGraph& g, const LabeledGraph& h,
                   const GraphKernelSpec& spec) {
  switch (spec.kind) {
    case KernelKind::kNodeCentricWalk:
    case KernelKind::kNodeCentricWalkWl:
      return NcwKernel(g, h, spec);
    case KernelKind::kRandomWalk:
      return RandomWalkKernel(g, h, spec);
    case KernelKind::kWlSubtree:
      spec.Validate();
      return WlSubtreeKernel(g, h, spec.max_length);
    case KernelKind::kVertexLabel:
      return LabelHistogramKernel(g, h, HistogramMode::kNode);
    case KernelKind::kEdgeLabel:
      return LabelHistogramKernel(g, h, HistogramMode::kEdge);
  }
  throw ContractViolation("unknown kernel kind");
}

std::vector<GramMatrix> ComputeGramMatricesByLength(
    const GraphCollection& collection, const GraphKernelSpec& spec,
    const GramOptions& options) {
  spec.Validate();
  const auto& graphs = collection.graphs;
  const std::size_t n = graphs.size();
  const int levels = spec.max_length + 1;

  bool all_one_label = true;
  for (const LabeledGraph& g : graphs) {
    if (!SharesOneLabel(g, graphs.front())) all_one_label = false;
  }
  const bool unlabeled_path = spec.kind == KernelKind::kNodeCentricWalk &&
                              options.unlabeled_fast_path && all_one_label;
  const bool needs_product =
      !unlabeled_path && (spec.kind == KernelKind::kNodeCentricWalk ||
                          spec.kind == KernelKind::kNodeCentricWalkWl ||
                          spec.kind == KernelKind::kRandomWalk);
  const NodeKernelParams params = spec.NodeParams();

  // Pass 1: per-graph data, read-only afterwards.
  std::vector<std::vector<std::vector<double>>> per_graph(n);
  std::vector<std::vector<Histogram>> histograms(n);
  switch (spec.kind) {
    case KernelKind::kNodeCentricWalk:
    case KernelKind::kNodeCentricWalkWl:
      ParallelFor(n, options.threads, [&](std::size_t k) {
        if (unlabeled_path) {
          per_graph[k] = WalkProfile(graphs[k], spec.max_length);
        } else {
          CheckProductBudget(graphs[k], graphs[k], k, k,
                             options.product_node_budget);
          per_graph[k] =
              SelfDiagonals(DirectProduct(graphs[k], graphs[k]), params);
        }
      });
      break;
    case KernelKind::kWlSubtree: {
      const JointRefinement joint = WlRefineJoint(
          graphs, spec.max_length, /*stop_at_convergence=*/false);
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& step : joint.steps) {
          histograms[k].push_back(MakeHistogram(step[k].ids()));
        }
      }
      break;
    }
    case KernelKind::kVertexLabel:
      for (std::size_t k = 0; k < n; ++k) {
        histograms[k].push_back(MakeHistogram(graphs[k].labels()));
      }
      break;
    case KernelKind::kEdgeLabel:
      for (std::size_t k = 0; k < n; ++k) {
        histograms[k].push_back(EdgeLabelHistogram(graphs[k]));
      }
      break;
    case KernelKind::kRandomWalk:
      break;
  }

  // Pass 2: all pairs i <= j.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::vector<double>> terms(pairs.size());
  ParallelFor(pairs.size(), options.threads, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    if (needs_product) {
      CheckProductBudget(graphs[i], graphs[j], i, j,
                         options.product_node_budget);
    }
    std::vector<double> t;
    switch (spec.kind) {
      case KernelKind::kNodeCentricWalk:
      case KernelKind::kNodeCentricWalkWl:
        if (unlabeled_path) {
          t = UnlabeledTerms(per_graph[i], per_graph[j], spec);
        } else {
          t = NcwTerms(DirectProduct(graphs[i], graphs[j]), per_graph[i],
                       per_graph[j], params, spec.beta);
        }
        break;
      case KernelKind::kRandomWalk: {
        const WalkCounts counts =
            CountWalks(DirectProduct(graphs[i], graphs[j]), spec.max_length);
        for (int l = 0; l < levels; ++l) {
          t.push_back(spec.LambdaAt(l) * counts.sums[l]);
        }
        break;
      }
      case KernelKind::kWlSubtree:
        for (int l = 0; l < levels; ++l) {
          t.push_back(Dot(histograms[i][l], histograms[j][l]));
        }
        break;
      case KernelKind::kVertexLabel:
      case KernelKind::kEdgeLabel:
        t.assign(levels, 0.0);
        t[0] = Dot(histograms[i][0], histograms[j][0]);
        break;
    }
    terms[k] = std::move(t);
  });

  std::vector<GramMatrix> out;
  for (int l = 0; l < levels; ++l) {
    GraphKernelSpec level_spec = spec;
    level_spec.max_length = l;
    if (!spec.lambda.empty()) level_spec.lambda.resize(l + 1);
    out.emplace_back(n, std::move(level_spec));
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    double running = 0.0;
    for (int l = 0; l < levels; ++l) {
      running += terms[k][l];
      out[l].Set(pairs[k].first, pairs[k].second, running);
    }
  }
  return out;
}

GramMatrix ComputeGramMatrix(const GraphCollection& collection,
                             const GraphKernelSpec& spec,
                             const GramOptions& options) {
  std::vector<GramMatrix> by_length =
      ComputeGramMatricesByLength(collection, spec, options);
  return std::move(by_length.back());
}

}  // namespace ncwalk
