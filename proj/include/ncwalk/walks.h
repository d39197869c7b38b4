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

#ifndef NCWALK_WALKS_H_
#define NCWALK_WALKS_H_

#include <cstdint>
#include <map>
#include <vector>

#include "ncwalk/graph.h"

namespace ncwalk {

// Explicit walk enumeration. Cost grows like max_degree^length per node, so
// these routines are meant for small graphs and serve as oracles for the
// algebraic (product graph) computations.

using LabelSequence = std::vector<LabelId>;

// Multiset of label sequences: sequence -> multiplicity.
using SequenceCounts = std::map<LabelSequence, std::int64_t>;

inline constexpr std::int64_t kDefaultWalkBudget = 10'000'000;

// Label sequences of the walks of exactly `length` steps starting at v, or of
// all walks with at most `length` steps when `cumulative` is set. Throws
// BudgetExceeded once more than `budget` walks would be visited.
SequenceCounts WalkLabelSequences(const LabeledGraph& g, NodeId v, int length,
                                  bool cumulative,
                                  std::int64_t budget = kDefaultWalkBudget);

// Label sequences of all walks of exactly `length` steps in g.
SequenceCounts AllWalkLabelSequences(const LabeledGraph& g, int length,
                                     std::int64_t budget = kDefaultWalkBudget);

// Number of pairs (w, w') with lambda(w) == lambda(w'): the inner product of
// two sequence multisets.
std::int64_t CommonSequencePairs(const SequenceCounts& a,
                                 const SequenceCounts& b);

// Total multiplicity.
std::int64_t TotalCount(const SequenceCounts& counts);

}  // namespace ncwalk

#endif  // NCWALK_WALKS_H_
