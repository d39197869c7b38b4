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

#ifndef NCWALK_GRAPH_KERNEL_H_
#define NCWALK_GRAPH_KERNEL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncwalk/graph.h"
#include "ncwalk/node_kernel.h"
#include "ncwalk/product_graph.h"

namespace ncwalk {

enum class KernelKind {
  kNodeCentricWalk,    // ncw
  kNodeCentricWalkWl,  // ncwwl: with WL re-encoding
  kRandomWalk,         // rw: l-step random walk kernel
  kWlSubtree,          // wl
  kVertexLabel,        // vl: node label histogram dot product
  kEdgeLabel,          // el: edge label histogram dot product
};

std::string_view KernelKindName(KernelKind kind);
std::optional<KernelKind> ParseKernelKind(std::string_view name);

struct GraphKernelSpec {
  KernelKind kind = KernelKind::kNodeCentricWalk;
  int max_length = 1;
  Alpha alpha = Alpha::Finite(0.0);  // ncw, ncwwl
  double beta = 1.0;                 // ncw, ncwwl
  // rw weights for lengths 0..max_length; empty means all ones.
  std::vector<double> lambda;

  // Throws ContractViolation on negative parameters, a lambda of the wrong
  // length or ncwwl with max_length 0.
  void Validate() const;

  double LambdaAt(int k) const { return lambda.empty() ? 1.0 : lambda[k]; }
  NodeKernelParams NodeParams() const;
  std::string Describe() const;
};

// Node-centric l-walk graph kernel:
//   sum_{i<=l} sum_{u in G, v in H} khat+_i(u, v; alpha) * k_i(u, v)^beta
// over the label-matched pairs, computed from the self products G x G and
// H x H (for the self-similarities) and the cross product G x H.
// A zero walk count raised to beta = 0 counts as 1.
double NcwKernel(const LabeledGraph& g, const LabeledGraph& h,
                 const GraphKernelSpec& spec);

// l-step random walk kernel: sum_k lambda_k * (number of common-label walk
// pairs of length k), via walk counts in G x H.
double RandomWalkKernel(const LabeledGraph& g, const LabeledGraph& h,
                        const GraphKernelSpec& spec);

// WL subtree kernel with l iterations on the joint refinement of g and h.
double WlSubtreeKernel(const LabeledGraph& g, const LabeledGraph& h,
                       int iterations);

enum class HistogramMode { kNode, kEdge };
double LabelHistogramKernel(const LabeledGraph& g, const LabeledGraph& h,
                            HistogramMode mode);

// NCW for graphs whose nodes all share one label, from the per-graph walk
// counts c_i = A^i 1 (k_i(u, v) = c_i(u) c_i(v)) without a product graph.
// Throws ContractViolation for multi-label input or wl re-encoding.
double NcwUnlabeledFast(const LabeledGraph& g, const LabeledGraph& h,
                        const GraphKernelSpec& spec);

// Dispatches on spec.kind.
double GraphKernel(const LabeledGraph& g, const LabeledGraph& h,
                   const GraphKernelSpec& spec);

// Symmetric matrix of kernel values over a collection.
class GramMatrix {
 public:
  GramMatrix() = default;
  GramMatrix(std::size_t size, GraphKernelSpec spec)
      : size_(size), spec_(std::move(spec)), values_(size * size, 0.0) {}

  std::size_t size() const { return size_; }
  const GraphKernelSpec& spec() const { return spec_; }
  double at(std::size_t i, std::size_t j) const {
    return values_[i * size_ + j];
  }
  // Writes both (i, j) and (j, i).
  void Set(std::size_t i, std::size_t j, double value) {
    values_[i * size_ + j] = value;
    values_[j * size_ + i] = value;
  }
  std::span<const double> values() const { return values_; }

 private:
  std::size_t size_ = 0;
  GraphKernelSpec spec_;
  std::vector<double> values_;
};

struct GramOptions {
  int threads = 1;
  // Largest product graph (in nodes) that may be built; larger pairs are
  // refused with BudgetExceeded naming the pair.
  std::size_t product_node_budget = 10'000'000;
  // Use NcwUnlabeledFast for ncw when every graph carries one common label.
  bool unlabeled_fast_path = true;
};

// Self-similarities are computed once per graph before the pair pass. Values
// do not depend on the thread count.
GramMatrix ComputeGramMatrix(const GraphCollection& collection,
                             const GraphKernelSpec& spec,
                             const GramOptions& options = {});

// Gram matrices for every length 0..spec.max_length at the cost of one run,
// using that all kernels here sum per-length contributions.
std::vector<GramMatrix> ComputeGramMatricesByLength(
    const GraphCollection& collection, const GraphKernelSpec& spec,
    const GramOptions& options = {});

}  // namespace ncwalk

#endif  // NCWALK_GRAPH_KERNEL_H_
