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

#ifndef NCWALK_EVALUATION_H_
#define NCWALK_EVALUATION_H_

#include "ncwalk/graph_kernel.h"

namespace ncwalk {

// Feature-space squared distance K_ii + K_jj - 2 K_ij.
double SquaredDistance(const GramMatrix& gram, std::size_t i, std::size_t j);

// Fraction of graphs whose feature vector differs from that of every other
// graph. Graphs i and j count as different when
//   SquaredDistance(i, j) > relative_tol * max(K_ii + K_jj, 1).
double CompletenessRatio(const GramMatrix& gram, double relative_tol = 1e-9);

// K_ij / sqrt(K_ii K_jj). Throws ContractViolation naming the first graph
// with a non-positive diagonal entry.
GramMatrix NormalizeGram(const GramMatrix& gram);

}  // namespace ncwalk

#endif  // NCWALK_EVALUATION_H_
