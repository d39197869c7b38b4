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

#include "ncwalk/walks.h"

#include <string>

#include "ncwalk/errors.h"

namespace ncwalk {
namespace {

class WalkEnumerator {
 public:
  WalkEnumerator(const LabeledGraph& g, int length, bool cumulative,
                 std::int64_t budget, SequenceCounts& out)
      : g_(g),
        length_(length),
        cumulative_(cumulative),
        budget_(budget),
        out_(out) {}

  void From(NodeId v) {
    sequence_.clear();
    Visit(v);
  }

 private:
  void Visit(NodeId u) {
    sequence_.push_back(g_.label(u));
    const int steps = static_cast<int>(sequence_.size()) - 1;
    if (steps == length_ || cumulative_) {
      if (++visited_ > budget_) {
        throw BudgetExceeded("walk enumeration exceeded budget of " +
                             std::to_string(budget_) + " walks");
      }
      ++out_[sequence_];
    }
    if (steps < length_) {
      for (NodeId w : g_.neighbors(u)) Visit(w);
    }
    sequence_.pop_back();
  }

  const LabeledGraph& g_;
  const int length_;
  const bool cumulative_;
  const std::int64_t budget_;
  SequenceCounts& out_;
  LabelSequence sequence_;
  std::int64_t visited_ = 0;
};

void CheckLength(int length) {
  if (length < 0) throw ContractViolation("walk length must be >= 0");
}

}  // namespace

SequenceCounts WalkLabelSequences(const LabeledGraph& g, NodeId v, int length,
                                  bool cumulative, std::int64_t budget) {
  CheckLength(length);
  SequenceCounts counts;
  WalkEnumerator(g, length, cumulative, budget, counts).From(v);
  return counts;
}

SequenceCounts AllWalkLabelSequences(const LabeledGraph& g, int length,
                                     std::int64_t budget) {
  CheckLength(length);
  SequenceCounts counts;
  WalkEnumerator enumerator(g, length, /*cumulative=*/false, budget, counts);
  for (NodeId v = 0; v < g.node_count(); ++v) enumerator.From(v);
  return counts;
}

std::int64_t CommonSequencePairs(const SequenceCounts& a,
                                 const SequenceCounts& b) {
  std::int64_t total = 0;
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

std::int64_t TotalCount(const SequenceCounts& counts) {
  std::int64_t total = 0;
  for (const auto& [sequence, count] : counts) total += count;
  return total;
}

}  // namespace ncwalk
