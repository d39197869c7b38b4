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

#ifndef NCWALK_NODE_KERNEL_H_
#define NCWALK_NODE_KERNEL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ncwalk/graph.h"
#include "ncwalk/labeling.h"
#include "ncwalk/product_graph.h"
#include "ncwalk/walks.h"

namespace ncwalk {

// Bandwidth of the Gaussian node kernel exp(-alpha * d). The infinite value
// is evaluated as the exact indicator [d == 0] instead of relying on
// exp() underflow.
class Alpha {
 public:
  // Throws ContractViolation for negative or NaN values.
  static Alpha Finite(double value);
  static Alpha Infinite() { return Alpha(0.0, true); }

  bool is_infinite() const { return infinite_; }
  // +inf for the infinite sentinel.
  double value() const;

  friend bool operator==(const Alpha&, const Alpha&) = default;

 private:
  Alpha(double value, bool infinite) : value_(value), infinite_(infinite) {}
  double value_;
  bool infinite_;
};

struct NodeKernelParams {
  int max_length = 1;
  Alpha alpha = Alpha::Finite(0.0);
  // Feed the Gaussian values back as the next walk vector, which lifts the
  // kernel to Weisfeiler-Leman expressiveness for infinite alpha.
  bool wl_mode = false;

  // Throws ContractViolation for max_length < 0, or wl_mode with
  // max_length == 0.
  void Validate() const;
};

// exp(-alpha * distance), or the indicator distance <= tolerance for infinite
// alpha. Negative rounding noise in `distance` is clamped to zero.
double GaussianOfDistance(double distance, Alpha alpha, double tolerance);

// One run of the walk-vector iteration over a product graph:
//   w <- 1, w+ <- w
//   repeat: w <- A w; w+ <- w+ + w;
//           khat_uv <- gauss(w+_uu + w+_vv - 2 w+_uv);
//           [wl_mode] w <- khat
// The self-similarities w+_uu and w+_vv come from the self products of the
// factor graphs; a self product supplies its own through Diagonal().
class ProductWalkIteration {
 public:
  ProductWalkIteration(const ProductGraph& product,
                       const NodeKernelParams& params);

  int iteration() const { return iteration_; }

  // w <- A w, w+ <- w+ + w.
  void Advance();

  // khat for every product node from the current w+ and the per-node
  // self-similarities of the left and right factor (indexed by node id).
  void ComputeGaussian(std::span<const double> left_diagonal,
                       std::span<const double> right_diagonal);

  // w <- khat.
  void ReEncode();

  // w+_uu per node of a self product. Throws ContractViolation otherwise.
  std::vector<double> Diagonal() const;

  std::span<const double> w() const { return w_; }
  std::span<const double> w_plus() const { return w_plus_; }
  std::span<const double> gaussian() const { return gaussian_; }

 private:
  const ProductGraph& product_;
  NodeKernelParams params_;
  bool integer_regime_;
  int iteration_ = 0;
  std::vector<double> w_;
  std::vector<double> w_plus_;
  std::vector<double> gaussian_;
  std::vector<double> scratch_;
  std::vector<std::size_t> diagonal_index_;
};

// Per-iteration node pair kernels of one graph, stored over the nodes of
// G x G. Iteration 0 holds k_0 (1 on label-matched pairs) and a Gaussian of 1.
class NodePairKernels {
 public:
  NodePairKernels(ProductGraph product, NodeKernelParams params)
      : product_(std::move(product)), params_(params) {}

  const ProductGraph& product() const { return product_; }
  const NodeKernelParams& params() const { return params_; }
  int max_length() const { return static_cast<int>(walk_.size()) - 1; }
  NodeId node_count() const { return product_.left_count(); }

  // k_i(u, v) before any re-encoding of iteration i. 0 off the product.
  double WalkKernel(int i, NodeId u, NodeId v) const;
  // Gaussian node kernel at iteration i. 0 off the product.
  double GaussianKernel(int i, NodeId u, NodeId v) const;
  // k+_i(u, v) as accumulated by the iteration.
  double CumulativeKernel(int i, NodeId u, NodeId v) const;

  std::span<const double> walk_kernel(int i) const { return walk_[i]; }
  std::span<const double> gaussian_kernel(int i) const { return gaussian_[i]; }
  std::span<const double> cumulative_kernel(int i) const {
    return cumulative_[i];
  }

  void Record(std::span<const double> walk, std::span<const double> gaussian,
              std::span<const double> cumulative);

 private:
  double Lookup(const std::vector<std::vector<double>>& values, int i,
                NodeId u, NodeId v) const;

  ProductGraph product_;
  NodeKernelParams params_;
  std::vector<std::vector<double>> walk_;
  std::vector<std::vector<double>> gaussian_;
  std::vector<std::vector<double>> cumulative_;
};

// Node pair kernels k_i and the generalized walk node kernel for i <= l on
// g x g (g may be a disjoint union). Only pairs with left <= right are
// computed; the rest mirror them.
NodePairKernels WalkNodeKernels(const LabeledGraph& g,
                                const NodeKernelParams& params);

// k_l(u, v) and k+_l(u, v) with Dirac node comparison, by enumerating and
// matching the label sequences of the walks from u and from v.
struct NodeKernelValues {
  double k = 0.0;
  double k_plus = 0.0;
};
NodeKernelValues NodeKernelOracle(const LabeledGraph& g, NodeId u, NodeId v,
                                  int length,
                                  std::int64_t budget = kDefaultWalkBudget);

// Classes of the relation GaussianKernel(i, u, v) == 1. Throws
// ContractViolation when the relation is not an equivalence, which can only
// happen for finite alpha.
Labeling NodePartitionFromKernels(const NodePairKernels& kernels, int i);

}  // namespace ncwalk

#endif  // NCWALK_NODE_KERNEL_H_
