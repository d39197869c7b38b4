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

#include "ncwalk/evaluation.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ncwalk/errors.h"

namespace ncwalk {

double SquaredDistance(const GramMatrix& gram, std::size_t i, std::size_t j) {
  return gram.at(i, i) + gram.at(j, j) - 2.0 * gram.at(i, j);
}

double CompletenessRatio(const GramMatrix& gram, double relative_tol) {
  const std::size_t n = gram.size();
  if (n == 0) return 0.0;
  std::vector<bool> distinguished(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = std::max(gram.at(i, i) + gram.at(j, j), 1.0);
      if (SquaredDistance(gram, i, j) <= relative_tol * scale) {
        distinguished[i] = false;
        distinguished[j] = false;
      }
    }
  }
  const auto count = std::count(distinguished.begin(), distinguished.end(),
                                true);
  return static_cast<double>(count) / static_cast<double>(n);
}

GramMatrix NormalizeGram(const GramMatrix& gram) {
  const std::size_t n = gram.size();
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(gram.at(i, i) > 0.0)) {
      throw ContractViolation("cannot normalize: graph " + std::to_string(i) +
                              " has non-positive self-similarity");
    }
    root[i] = std::sqrt(gram.at(i, i));
  }
  GramMatrix result(n, gram.spec());
  for (std::size_t i = 0; i < n; ++i) {
    result.Set(i, i, 1.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      result.Set(i, j, gram.at(i, j) / (root[i] * root[j]));
    }
  }
  return result;
}

}  // namespace ncwalk
