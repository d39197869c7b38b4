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

#ifndef NCWALK_TUDATASET_H_
#define NCWALK_TUDATASET_H_

#include <filesystem>
#include <string>

#include "ncwalk/graph.h"

namespace ncwalk {

// Reads a dataset in the TUDataset text layout from `directory`:
//   <name>_A.txt               "row, col" per line, 1-based global node ids
//   <name>_graph_indicator.txt 1-based graph id per node line
//   <name>_node_labels.txt     optional, one integer per node line
//   <name>_graph_labels.txt    optional, one integer per graph line
// Nodes are renumbered from 0 inside each graph in order of appearance.
// Without a node label file every node gets raw label 0.
//
// Throws ParseError for malformed lines and StructuralError for edges that
// cross graphs, out-of-range node ids or misaligned record counts.
GraphCollection ParseTuDataset(const std::filesystem::path& directory,
                               const std::string& name);

// Writes `collection` in the same layout (both edge directions, raw labels
// taken from the collection dictionary). Graph labels are written only if
// present.
void WriteTuDataset(const GraphCollection& collection,
                    const std::filesystem::path& directory,
                    const std::string& name);

// Resolves a dataset given either a directory that holds the files directly
// or a root containing a <name>/ subdirectory.
std::filesystem::path ResolveDatasetDirectory(
    const std::filesystem::path& root, const std::string& name);

}  // namespace ncwalk

#endif  // NCWALK_TUDATASET_H_
