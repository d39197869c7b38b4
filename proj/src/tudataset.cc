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

#include "ncwalk/tudataset.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <string_view>
#include <vector>

#include "ncwalk/errors.h"

namespace ncwalk {
namespace {

namespace fs = std::filesystem;

struct Line {
  long number;
  std::string text;
};

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Trailing blank lines are dropped; interior blank lines are errors because
// they would shift the node numbering.
std::vector<Line> ReadLines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  std::vector<Line> lines;
  std::string raw;
  long number = 0;
  while (std::getline(in, raw)) {
    ++number;
    lines.push_back({number, std::string(Trim(raw))});
  }
  while (!lines.empty() && lines.back().text.empty()) lines.pop_back();
  for (const Line& line : lines) {
    if (line.text.empty()) {
      throw ParseError(path.string(), line.number, "blank line");
    }
  }
  return lines;
}

std::int64_t ParseInt(std::string_view token, const fs::path& path,
                      long line) {
  token = Trim(token);
  std::int64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(path.string(), line,
                     "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

GraphCollection ParseTuDataset(const fs::path& directory,
                               const std::string& name) {
  const fs::path a_path = directory / (name + "_A.txt");
  const fs::path indicator_path = directory / (name + "_graph_indicator.txt");
  const fs::path node_labels_path = directory / (name + "_node_labels.txt");
  const fs::path graph_labels_path = directory / (name + "_graph_labels.txt");

  // Graph membership and local index of each global node.
  const std::vector<Line> indicator = ReadLines(indicator_path);
  const std::size_t total_nodes = indicator.size();
  std::vector<std::size_t> graph_of(total_nodes);
  std::vector<NodeId> local_of(total_nodes);
  std::vector<NodeId> graph_sizes;
  for (std::size_t i = 0; i < total_nodes; ++i) {
    const std::int64_t id =
        ParseInt(indicator[i].text, indicator_path, indicator[i].number);
    if (id < 1) {
      throw StructuralError(indicator_path.string() + ":" +
                            std::to_string(indicator[i].number) +
                            ": graph id must be >= 1");
    }
    const std::size_t g = static_cast<std::size_t>(id - 1);
    if (g >= graph_sizes.size()) graph_sizes.resize(g + 1, 0);
    graph_of[i] = g;
    local_of[i] = graph_sizes[g]++;
  }
  const std::size_t graph_count = graph_sizes.size();

  GraphCollection collection;
  std::vector<std::vector<LabelId>> labels(graph_count);
  for (std::size_t g = 0; g < graph_count; ++g) labels[g].reserve(graph_sizes[g]);
  if (fs::exists(node_labels_path)) {
    const std::vector<Line> lines = ReadLines(node_labels_path);
    if (lines.size() != total_nodes) {
      throw StructuralError(node_labels_path.string() + ": " +
                            std::to_string(lines.size()) + " labels for " +
                            std::to_string(total_nodes) + " nodes");
    }
    for (std::size_t i = 0; i < total_nodes; ++i) {
      // TUDataset files may carry extra comma-separated columns; the first
      // is the label.
      std::string_view text = lines[i].text;
      text = text.substr(0, text.find(','));
      const LabelId id = collection.dictionary.Intern(
          ParseInt(text, node_labels_path, lines[i].number));
      labels[graph_of[i]].push_back(id);
    }
  } else {
    const LabelId uniform = collection.dictionary.Intern(0);
    for (std::size_t g = 0; g < graph_count; ++g) {
      labels[g].assign(graph_sizes[g], uniform);
    }
  }

  std::vector<std::vector<Edge>> edges(graph_count);
  for (const Line& line : ReadLines(a_path)) {
    const auto comma = line.text.find(',');
    if (comma == std::string::npos) {
      throw ParseError(a_path.string(), line.number,
                       "expected 'row, col', got '" + line.text + "'");
    }
    const std::string_view text = line.text;
    const std::int64_t a = ParseInt(text.substr(0, comma), a_path, line.number);
    const std::int64_t b =
        ParseInt(text.substr(comma + 1), a_path, line.number);
    for (std::int64_t node : {a, b}) {
      if (node < 1 || static_cast<std::size_t>(node) > total_nodes) {
        throw StructuralError(a_path.string() + ":" +
                              std::to_string(line.number) + ": node " +
                              std::to_string(node) + " out of range 1.." +
                              std::to_string(total_nodes));
      }
    }
    const std::size_t ga = graph_of[a - 1];
    const std::size_t gb = graph_of[b - 1];
    if (ga != gb) {
      throw StructuralError(a_path.string() + ":" +
                            std::to_string(line.number) + ": edge joins graph " +
                            std::to_string(ga + 1) + " and graph " +
                            std::to_string(gb + 1));
    }
    edges[ga].emplace_back(local_of[a - 1], local_of[b - 1]);
  }

  collection.graphs.reserve(graph_count);
  for (std::size_t g = 0; g < graph_count; ++g) {
    collection.graphs.emplace_back(std::move(labels[g]), edges[g]);
  }

  if (fs::exists(graph_labels_path)) {
    const std::vector<Line> lines = ReadLines(graph_labels_path);
    if (lines.size() != graph_count) {
      throw StructuralError(graph_labels_path.string() + ": " +
                            std::to_string(lines.size()) + " labels for " +
                            std::to_string(graph_count) + " graphs");
    }
    collection.class_labels.emplace();
    for (const Line& line : lines) {
      collection.class_labels->push_back(static_cast<int>(
          ParseInt(line.text, graph_labels_path, line.number)));
    }
  }
  return collection;
}

void WriteTuDataset(const GraphCollection& collection,
                    const fs::path& directory, const std::string& name) {
  collection.CheckAligned();
  fs::create_directories(directory);
  std::ofstream a(directory / (name + "_A.txt"));
  std::ofstream indicator(directory / (name + "_graph_indicator.txt"));
  std::ofstream node_labels(directory / (name + "_node_labels.txt"));
  std::int64_t base = 1;
  for (std::size_t g = 0; g < collection.size(); ++g) {
    const LabeledGraph& graph = collection.graphs[g];
    for (NodeId u = 0; u < graph.node_count(); ++u) {
      indicator << g + 1 << '\n';
      const LabelId id = graph.label(u);
      node_labels << (static_cast<std::size_t>(id) < collection.dictionary.size()
                          ? collection.dictionary.Raw(id)
                          : id)
                  << '\n';
    }
    for (const auto& [u, v] : graph.edges()) {
      a << base + u << ", " << base + v << '\n';
      if (u != v) a << base + v << ", " << base + u << '\n';
    }
    base += graph.node_count();
  }
  if (collection.class_labels) {
    std::ofstream graph_labels(directory / (name + "_graph_labels.txt"));
    for (int c : *collection.class_labels) graph_labels << c << '\n';
  }
}

fs::path ResolveDatasetDirectory(const fs::path& root,
                                 const std::string& name) {
  const fs::path nested = root / name;
  if (fs::exists(nested / (name + "_A.txt"))) return nested;
  return root;
}

}  // namespace ncwalk
