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

#include "ncwalk/labeling.h"

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "ncwalk/errors.h"

namespace ncwalk {

std::size_t Labeling::NumClasses() const {
  return std::unordered_set<LabelId>(ids_.begin(), ids_.end()).size();
}

Labeling Labeling::Canonical() const {
  std::unordered_map<LabelId, LabelId> renumber;
  std::vector<LabelId> out;
  out.reserve(ids_.size());
  for (LabelId id : ids_) {
    out.push_back(
        renumber.try_emplace(id, static_cast<LabelId>(renumber.size()))
            .first->second);
  }
  return Labeling(std::move(out));
}

bool Refines(const Labeling& a, const Labeling& b) {
  if (a.size() != b.size()) {
    throw ContractViolation("refines: labelings of length " +
                            std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
  // a refines b iff each a-class maps into a single b-class.
  std::unordered_map<LabelId, LabelId> image;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it, inserted] = image.try_emplace(a[i], b[i]);
    if (!inserted && it->second != b[i]) return false;
  }
  return true;
}

bool Equivalent(const Labeling& a, const Labeling& b) {
  return Refines(a, b) && Refines(b, a);
}

Labeling InitialLabeling(const LabeledGraph& g) {
  return Labeling(std::vector<LabelId>(g.labels().begin(), g.labels().end()));
}

}  // namespace ncwalk
