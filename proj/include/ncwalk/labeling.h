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

#ifndef NCWALK_LABELING_H_
#define NCWALK_LABELING_H_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ncwalk/graph.h"

namespace ncwalk {

// Node -> class id. Only equality of ids is meaningful.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<LabelId> ids) : ids_(std::move(ids)) {}

  // Interns arbitrary ordered values, numbering classes by first appearance.
  template <typename T>
  static Labeling FromValues(std::span<const T> values) {
    std::map<T, LabelId> ids;
    std::vector<LabelId> out;
    out.reserve(values.size());
    for (const T& value : values) {
      out.push_back(
          ids.try_emplace(value, static_cast<LabelId>(ids.size())).first->second);
    }
    return Labeling(std::move(out));
  }

  std::size_t size() const { return ids_.size(); }
  LabelId operator[](std::size_t i) const { return ids_[i]; }
  std::span<const LabelId> ids() const { return ids_; }

  std::size_t NumClasses() const;

  // Same partition with classes renumbered 0, 1, ... by first appearance.
  // Two labelings induce the same partition iff their canonical forms match.
  Labeling Canonical() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<LabelId> ids_;
};

// a refines b: a(u) == a(v) implies b(u) == b(v). Throws ContractViolation on
// length mismatch.
bool Refines(const Labeling& a, const Labeling& b);

// Same partition.
bool Equivalent(const Labeling& a, const Labeling& b);

// The node labels of g as a labeling.
Labeling InitialLabeling(const LabeledGraph& g);

}  // namespace ncwalk

#endif  // NCWALK_LABELING_H_
