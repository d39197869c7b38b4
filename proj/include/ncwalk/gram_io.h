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

#ifndef NCWALK_GRAM_IO_H_
#define NCWALK_GRAM_IO_H_

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "ncwalk/graph_kernel.h"

namespace ncwalk {

// Dense CSV: a header row "0,1,...,N-1" of graph indices, then one row of N
// values per graph. Values use the shortest representation that reads back
// to the same double.
void WriteGramCsv(std::ostream& out, const GramMatrix& gram);

// Precomputed-kernel text, one line per graph:
//   <class_label> 0:<row> 1:<K_row,1> 2:<K_row,2> ... N:<K_row,N>
// with a 1-based row index in field 0. Missing class labels are written as 0.
void WritePrecomputedKernel(std::ostream& out, const GramMatrix& gram,
                            std::span<const int> class_labels = {});

// Readers for the two formats above, used to check exported files. Throw
// ParseError on malformed input.
struct DenseMatrix {
  std::size_t size = 0;
  std::vector<double> values;  // row-major
  double at(std::size_t i, std::size_t j) const {
    return values[i * size + j];
  }
};
DenseMatrix ReadGramCsv(std::istream& in);

struct PrecomputedKernel {
  DenseMatrix matrix;
  std::vector<int> class_labels;
};
PrecomputedKernel ReadPrecomputedKernel(std::istream& in);

}  // namespace ncwalk

#endif  // NCWALK_GRAM_IO_H_
