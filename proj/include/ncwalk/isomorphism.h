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

#ifndef NCWALK_ISOMORPHISM_H_
#define NCWALK_ISOMORPHISM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ncwalk/graph.h"

namespace ncwalk {

// mapping[u] = psi(u). True iff psi is a label-preserving bijection with
// (u, v) in E(g) <=> (psi(u), psi(v)) in E(h).
bool ValidateIsomorphism(const LabeledGraph& g, const LabeledGraph& h,
                         std::span<const NodeId> mapping);

enum class IsomorphismOutcome { kIsomorphic, kNotIsomorphic, kUndecided };

struct IsomorphismSearch {
  IsomorphismOutcome outcome = IsomorphismOutcome::kNotIsomorphic;
  std::vector<NodeId> mapping;  // set when isomorphic
  std::int64_t steps = 0;
};

// Backtracking search that only maps nodes of equal color. The colorings must
// be comparable across the two graphs and invariant under isomorphism (for
// example stable WL colors of a joint refinement). Gives up with kUndecided
// after `budget` assignment attempts.
IsomorphismSearch FindIsomorphism(const LabeledGraph& g, const LabeledGraph& h,
                                  std::span<const LabelId> g_colors,
                                  std::span<const LabelId> h_colors,
                                  std::int64_t budget);

// Same, seeded with stable colors of a joint WL refinement of g and h.
IsomorphismSearch FindIsomorphism(const LabeledGraph& g, const LabeledGraph& h,
                                  std::int64_t budget = 1'000'000);

// A duplicate found during deduplication: graph `duplicate` is isomorphic to
// the kept graph `representative` via mapping (representative -> duplicate).
struct IsomorphismCertificate {
  std::size_t representative = 0;
  std::size_t duplicate = 0;
  std::optional<std::vector<NodeId>> mapping;

  bool Validate(const GraphCollection& collection) const;
};

struct DedupOptions {
  std::int64_t backtrack_budget = 1'000'000;
};

struct DedupResult {
  GraphCollection collection;
  // Input indices of the kept graphs, ascending.
  std::vector<std::size_t> kept;
  std::vector<IsomorphismCertificate> certificates;
  // Pairs whose search ran out of budget; both graphs were kept.
  std::size_t undecided_pairs = 0;
};

// Keeps the first graph of every isomorphism class in input order. Graphs
// are bucketed by (nodes, edges, degree sequence, stable WL color histogram)
// and compared by backtracking only within a bucket.
DedupResult DedupIsomorphic(const GraphCollection& collection,
                            const DedupOptions& options = {});

}  // namespace ncwalk

#endif  // NCWALK_ISOMORPHISM_H_
