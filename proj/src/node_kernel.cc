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

#include "ncwalk/node_kernel.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ncwalk/errors.h"

namespace ncwalk {
namespace {

// Relative tolerance for the indicator once re-encoding with a finite alpha
// has made the walk vectors non-integer.
constexpr double kRelativeTolerance = 1e-9;

}  // namespace

Alpha Alpha::Finite(double value) {
  if (!(value >= 0.0)) {
    throw ContractViolation("alpha must be >= 0, got " + std::to_string(value));
  }
  if (std::isinf(value)) return Infinite();
  return Alpha(value, false);
}

double Alpha::value() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

void NodeKernelParams::Validate() const {
  if (max_length < 0) {
    throw ContractViolation("walk length must be >= 0");
  }
  if (wl_mode && max_length == 0) {
    throw ContractViolation("WL re-encoding requires walk length >= 1");
  }
}

double GaussianOfDistance(double distance, Alpha alpha, double tolerance) {
  distance = std::max(distance, 0.0);
  if (alpha.is_infinite()) return distance <= tolerance ? 1.0 : 0.0;
  return std::exp(-alpha.value() * distance);
}

ProductWalkIteration::ProductWalkIteration(const ProductGraph& product,
                                           const NodeKernelParams& params)
    : product_(product),
      params_(params),
      integer_regime_(!(params.wl_mode && !params.alpha.is_infinite())),
      w_(product.node_count(), 1.0),
      w_plus_(w_),
      gaussian_(product.node_count(), 1.0),
      scratch_(product.node_count()) {
  params_.Validate();
  if (product.is_self_product()) {
    diagonal_index_.resize(product.left_count());
    for (NodeId u = 0; u < product.left_count(); ++u) {
      diagonal_index_[u] = *product.IndexOf(u, u);
    }
  }
}

void ProductWalkIteration::Advance() {
  product_.MultiplySymmetric(w_, scratch_);
  w_.swap(scratch_);
  for (std::size_t i = 0; i < w_.size(); ++i) w_plus_[i] += w_[i];
  ++iteration_;
}

void ProductWalkIteration::ComputeGaussian(
    std::span<const double> left_diagonal,
    std::span<const double> right_diagonal) {
  const auto nodes = product_.nodes();
  const bool symmetric = product_.is_self_product();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto [u, v] = nodes[i];
    if (symmetric && u > v) continue;
    const double self = left_diagonal[u] + right_diagonal[v];
    const double distance = self - 2.0 * w_plus_[i];
    const double tolerance =
        integer_regime_ ? 0.0 : kRelativeTolerance * std::max(1.0, self);
    gaussian_[i] = GaussianOfDistance(distance, params_.alpha, tolerance);
  }
  if (symmetric) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].left > nodes[i].right) {
        gaussian_[i] = gaussian_[product_.mirror(i)];
      }
    }
  }
}

void ProductWalkIteration::ReEncode() { w_ = gaussian_; }

std::vector<double> ProductWalkIteration::Diagonal() const {
  if (!product_.is_self_product()) {
    throw ContractViolation("diagonal requested from a non-self product");
  }
  std::vector<double> diagonal(diagonal_index_.size());
  for (std::size_t u = 0; u < diagonal.size(); ++u) {
    diagonal[u] = w_plus_[diagonal_index_[u]];
  }
  return diagonal;
}

double NodePairKernels::Lookup(const std::vector<std::vector<double>>& values,
                               int i, NodeId u, NodeId v) const {
  if (i < 0 || i > max_length()) {
    throw ContractViolation("iteration " + std::to_string(i) +
                            " not available");
  }
  const auto index = product_.IndexOf(u, v);
  return index ? values[i][*index] : 0.0;
}

double NodePairKernels::WalkKernel(int i, NodeId u, NodeId v) const {
  return Lookup(walk_, i, u, v);
}

double NodePairKernels::GaussianKernel(int i, NodeId u, NodeId v) const {
  return Lookup(gaussian_, i, u, v);
}

double NodePairKernels::CumulativeKernel(int i, NodeId u, NodeId v) const {
  return Lookup(cumulative_, i, u, v);
}

void NodePairKernels::Record(std::span<const double> walk,
                             std::span<const double> gaussian,
                             std::span<const double> cumulative) {
  walk_.emplace_back(walk.begin(), walk.end());
  gaussian_.emplace_back(gaussian.begin(), gaussian.end());
  cumulative_.emplace_back(cumulative.begin(), cumulative.end());
}

NodePairKernels WalkNodeKernels(const LabeledGraph& g,
                                const NodeKernelParams& params) {
  params.Validate();
  NodePairKernels kernels(DirectProduct(g, g), params);
  ProductWalkIteration walk(kernels.product(), params);
  kernels.Record(walk.w(), walk.gaussian(), walk.w_plus());
  for (int i = 1; i <= params.max_length; ++i) {
    walk.Advance();
    const std::vector<double> diagonal = walk.Diagonal();
    walk.ComputeGaussian(diagonal, diagonal);
    kernels.Record(walk.w(), walk.gaussian(), walk.w_plus());
    if (params.wl_mode) walk.ReEncode();
  }
  return kernels;
}

NodeKernelValues NodeKernelOracle(const LabeledGraph& g, NodeId u, NodeId v,
                                  int length, std::int64_t budget) {
  if (length < 0) throw ContractViolation("walk length must be >= 0");
  NodeKernelValues values;
  std::int64_t remaining = budget;
  for (int i = 0; i <= length; ++i) {
    const SequenceCounts from_u =
        WalkLabelSequences(g, u, i, /*cumulative=*/false, remaining);
    remaining -= TotalCount(from_u);
    const SequenceCounts from_v =
        WalkLabelSequences(g, v, i, /*cumulative=*/false, remaining);
    remaining -= TotalCount(from_v);
    values.k = static_cast<double>(CommonSequencePairs(from_u, from_v));
    values.k_plus += values.k;
  }
  return values;
}

Labeling NodePartitionFromKernels(const NodePairKernels& kernels, int i) {
  const NodeId n = kernels.node_count();
  std::vector<LabelId> ids(n, -1);
  LabelId next = 0;
  for (NodeId u = 0; u < n; ++u) {
    if (ids[u] >= 0) continue;
    ids[u] = next++;
    for (NodeId v = u + 1; v < n; ++v) {
      if (ids[v] < 0 && kernels.GaussianKernel(i, u, v) == 1.0) {
        ids[v] = ids[u];
      }
    }
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const bool related = kernels.GaussianKernel(i, u, v) == 1.0;
      if (related != (ids[u] == ids[v])) {
        throw ContractViolation(
            "kernel value 1 is not an equivalence relation at iteration " +
            std::to_string(i) + " (nodes " + std::to_string(u) + ", " +
            std::to_string(v) + "); use an infinite alpha");
      }
    }
  }
  return Labeling(std::move(ids));
}

}  // namespace ncwalk
