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

#include "ncwalk/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "ncwalk/errors.h"
#include "ncwalk/evaluation.h"
#include "ncwalk/gram_io.h"
#include "ncwalk/graph_kernel.h"
#include "ncwalk/isomorphism.h"
#include "ncwalk/log.h"
#include "ncwalk/node_kernel.h"
#include "ncwalk/refinement.h"
#include "ncwalk/tudataset.h"

namespace ncwalk {
namespace {

namespace fs = std::filesystem;

// Usage problems detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string dataset;
  std::string root = ".";
  std::vector<std::string> kernels = {"ncw"};
  int length = 1;
  std::string alpha = "0";
  double beta = 1.0;
  std::string lambda;
  bool normalize = false;
  std::string format = "csv";
  int threads = 1;
  bool dedup = false;
  std::string out;
  std::size_t node_budget = 10'000'000;
  std::int64_t iso_budget = 1'000'000;
  std::string method = "wl";
  std::optional<int> iterations;
  int graph = 0;
};

std::string FormatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

double ParseNumber(const std::string& text, const std::string& flag) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(flag + ": not a number: '" + text + "'");
  }
  return value;
}

Alpha ParseAlpha(const std::string& text) {
  if (text == "inf" || text == "infinity") return Alpha::Infinite();
  try {
    return Alpha::Finite(ParseNumber(text, "--alpha"));
  } catch (const ContractViolation& e) {
    throw UsageError(e.what());
  }
}

std::vector<double> ParseLambda(const std::string& text) {
  std::vector<double> values;
  if (text.empty()) return values;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    values.push_back(
        ParseNumber(text.substr(start, comma - start), "--lambda"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

GraphKernelSpec MakeSpec(const RunConfig& config, const std::string& kernel) {
  const auto kind = ParseKernelKind(kernel);
  if (!kind) throw UsageError("unknown kernel '" + kernel + "'");
  GraphKernelSpec spec;
  spec.kind = *kind;
  spec.max_length = config.length;
  spec.alpha = ParseAlpha(config.alpha);
  spec.beta = config.beta;
  spec.lambda = ParseLambda(config.lambda);
  try {
    spec.Validate();
  } catch (const ContractViolation& e) {
    throw UsageError(e.what());
  }
  return spec;
}

GraphCollection LoadDataset(const RunConfig& config) {
  fs::path root = config.root;
  std::string name = config.dataset;
  const fs::path given = config.dataset;
  if (given.has_parent_path()) {
    root = given.parent_path();
    name = given.filename().string();
  }
  return ParseTuDataset(ResolveDatasetDirectory(root, name), name);
}

GraphCollection MaybeDedup(GraphCollection collection, const RunConfig& config,
                           std::ostream& err) {
  if (!config.dedup) return collection;
  const std::size_t before = collection.size();
  DedupResult result = DedupIsomorphic(collection, {config.iso_budget});
  err << "dedup: kept " << result.kept.size() << " of " << before
      << " graphs\n";
  return std::move(result.collection);
}

GramOptions MakeGramOptions(const RunConfig& config) {
  GramOptions options;
  options.threads = config.threads;
  options.product_node_budget = config.node_budget;
  return options;
}

// Writes through `write` either into the --out file or into `out`.
template <typename Writer>
void Emit(const RunConfig& config, std::ostream& out, Writer write) {
  if (config.out.empty()) {
    write(out);
    out.flush();
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + config.out);
  write(file);
  file.close();
  if (!file) throw std::runtime_error("write failed: " + config.out);
}

void WriteRow(std::ostream& out, std::size_t graph, int step,
              std::span<const std::int64_t> values) {
  out << graph << '\t' << step << '\t';
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (v > 0) out << ' ';
    out << values[v];
  }
  out << '\n';
}

int RunGram(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.kernels.size() != 1) {
    throw UsageError("gram takes exactly one --kernel");
  }
  if (config.format != "csv" && config.format != "precomputed") {
    throw UsageError("--format must be csv or precomputed");
  }
  const GraphKernelSpec spec = MakeSpec(config, config.kernels.front());
  const GraphCollection collection =
      MaybeDedup(LoadDataset(config), config, err);
  GramMatrix gram =
      ComputeGramMatrix(collection, spec, MakeGramOptions(config));
  if (config.normalize) gram = NormalizeGram(gram);
  Emit(config, out, [&](std::ostream& stream) {
    if (config.format == "csv") {
      WriteGramCsv(stream, gram);
    } else {
      WritePrecomputedKernel(
          stream, gram,
          collection.class_labels ? std::span<const int>(*collection.class_labels)
                                  : std::span<const int>());
    }
  });
  return 0;
}

int RunRefine(const RunConfig& config, std::ostream& out) {
  if (config.method != "wl" && config.method != "morgan" &&
      config.method != "walkp") {
    throw UsageError("--method must be wl, morgan or walkp");
  }
  if (config.iterations && *config.iterations < 0) {
    throw UsageError("--iters must be non-negative");
  }
  if (config.method == "walkp" && !config.iterations) {
    throw UsageError("--method walkp needs --iters");
  }
  const GraphCollection collection = LoadDataset(config);
  Emit(config, out, [&](std::ostream& stream) {
    for (std::size_t k = 0; k < collection.size(); ++k) {
      const LabeledGraph& g = collection.graphs[k];
      if (config.method == "wl") {
        const RefinementSequence seq = WlRefine(g, config.iterations);
        for (std::size_t i = 0; i < seq.steps.size(); ++i) {
          const Labeling canonical = seq.steps[i].Canonical();
          std::vector<std::int64_t> ids(canonical.ids().begin(),
                                        canonical.ids().end());
          WriteRow(stream, k, static_cast<int>(i), ids);
        }
      } else if (config.method == "morgan") {
        std::vector<std::vector<std::int64_t>> history;
        if (config.iterations) {
          history = ExtendedConnectivitySequence(g, *config.iterations);
        } else {
          history = MorganExtendedConnectivity(g).history;
        }
        for (std::size_t i = 0; i < history.size(); ++i) {
          WriteRow(stream, k, static_cast<int>(i + 1), history[i]);
        }
      } else {
        const WalkPartitionMatrix matrix = WalkPartition(g, *config.iterations);
        for (int i = 0; i <= matrix.max_length(); ++i) {
          WriteRow(stream, k, i, matrix.column(i));
        }
      }
    }
  });
  return 0;
}

int RunNodeKernel(const RunConfig& config, std::ostream& out) {
  if (config.kernels.size() != 1 ||
      (config.kernels.front() != "ncw" && config.kernels.front() != "ncwwl")) {
    throw UsageError("node-kernel takes --kernel ncw or ncwwl");
  }
  NodeKernelParams params;
  params.max_length = config.length;
  params.alpha = ParseAlpha(config.alpha);
  params.wl_mode = config.kernels.front() == "ncwwl";
  try {
    params.Validate();
  } catch (const ContractViolation& e) {
    throw UsageError(e.what());
  }
  const GraphCollection collection = LoadDataset(config);
  if (config.graph < 0 ||
      static_cast<std::size_t>(config.graph) >= collection.size()) {
    throw UsageError("--graph out of range");
  }
  const LabeledGraph& g = collection.graphs[config.graph];
  const NodePairKernels kernels = WalkNodeKernels(g, params);
  const int l = config.length;
  Emit(config, out, [&](std::ostream& stream) {
    stream << "u\tv\tk\tk_plus\tgaussian\n";
    for (NodeId u = 0; u < g.node_count(); ++u) {
      for (NodeId v = u; v < g.node_count(); ++v) {
        stream << u << '\t' << v << '\t'
               << FormatDouble(kernels.WalkKernel(l, u, v)) << '\t'
               << FormatDouble(kernels.CumulativeKernel(l, u, v)) << '\t'
               << FormatDouble(kernels.GaussianKernel(l, u, v)) << '\n';
      }
    }
  });
  return 0;
}

int RunCompleteness(const RunConfig& config, std::ostream& out,
                    std::ostream& err) {
  std::vector<GraphKernelSpec> specs;
  for (const std::string& kernel : config.kernels) {
    specs.push_back(MakeSpec(config, kernel));
  }
  const GraphCollection collection =
      MaybeDedup(LoadDataset(config), config, err);
  const GramOptions options = MakeGramOptions(config);
  Emit(config, out, [&](std::ostream& stream) {
    stream << "kernel\tl\tratio\n";
    for (const GraphKernelSpec& spec : specs) {
      const std::vector<GramMatrix> grams =
          ComputeGramMatricesByLength(collection, spec, options);
      for (std::size_t l = 0; l < grams.size(); ++l) {
        stream << KernelKindName(spec.kind) << '\t' << l << '\t'
               << FormatDouble(CompletenessRatio(grams[l])) << '\n';
      }
    }
  });
  return 0;
}

int RunDedup(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const GraphCollection collection = LoadDataset(config);
  const DedupResult result = DedupIsomorphic(collection, {config.iso_budget});
  err << "dedup: kept " << result.kept.size() << " of " << collection.size()
      << " graphs\n";
  if (!config.out.empty()) {
    const std::string name = fs::path(config.dataset).filename().string();
    fs::create_directories(config.out);
    WriteTuDataset(result.collection, config.out, name);
  }
  for (std::size_t index : result.kept) out << index << '\n';
  out.flush();
  return 0;
}

void AddDatasetOptions(CLI::App* command, RunConfig& config) {
  command->add_option("--dataset", config.dataset,
                      "dataset name or path to its directory")
      ->required();
  command->add_option("--root", config.root, "directory holding datasets")
      ->capture_default_str();
}

void AddKernelOptions(CLI::App* command, RunConfig& config) {
  command->add_option("--kernel", config.kernels, "ncw|ncwwl|rw|wl|vl|el")
      ->delimiter(',')
      ->capture_default_str();
  command->add_option("--l", config.length, "walk length / WL iterations")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  command->add_option("--alpha", config.alpha, "Gaussian bandwidth or inf")
      ->capture_default_str();
  command->add_option("--beta", config.beta, "walk count exponent")
      ->capture_default_str();
  command->add_option("--lambda", config.lambda,
                      "rw weights v0,v1,...,vl (default all ones)");
  command->add_option("--threads", config.threads, "worker threads for Gram assembly")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  command->add_option("--node-budget", config.node_budget,
                      "largest product graph in nodes")
      ->capture_default_str();
  command->add_option("--iso-budget", config.iso_budget,
                      "backtracking steps per isomorphism test")
      ->capture_default_str();
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  RunConfig config;
  CLI::App app("Walk-based graph kernels and node refinement.", "ncwalk");
  app.require_subcommand(1);

  CLI::App* gram = app.add_subcommand("gram", "compute a Gram matrix");
  AddDatasetOptions(gram, config);
  AddKernelOptions(gram, config);
  gram->add_flag("--normalize", config.normalize, "cosine normalization");
  gram->add_option("--format", config.format, "csv|precomputed")
      ->capture_default_str();
  gram->add_flag("--dedup", config.dedup, "drop isomorphic duplicates first");
  gram->add_option("--out", config.out, "output file (default stdout)");

  CLI::App* refine = app.add_subcommand("refine", "print node labelings");
  AddDatasetOptions(refine, config);
  refine->add_option("--method", config.method, "wl|morgan|walkp")
      ->capture_default_str();
  refine->add_option("--iters", config.iterations, "number of iterations");
  refine->add_option("--out", config.out, "output file (default stdout)");

  CLI::App* node = app.add_subcommand("node-kernel", "node pair kernels");
  AddDatasetOptions(node, config);
  AddKernelOptions(node, config);
  node->add_option("--graph", config.graph, "graph index (0-based)")
      ->capture_default_str();
  node->add_option("--out", config.out, "output file (default stdout)");

  CLI::App* completeness =
      app.add_subcommand("completeness", "completeness ratio per length");
  AddDatasetOptions(completeness, config);
  AddKernelOptions(completeness, config);
  config.dedup = true;
  completeness->add_flag("--dedup,!--no-dedup", config.dedup,
                         "drop isomorphic duplicates first (default on)");
  completeness->add_option("--out", config.out, "output file (default stdout)");

  CLI::App* dedup = app.add_subcommand("dedup", "drop isomorphic duplicates");
  AddDatasetOptions(dedup, config);
  dedup->add_option("--iso-budget", config.iso_budget,
                    "backtracking steps per isomorphism test")
      ->capture_default_str();
  dedup->add_option("--out", config.out, "directory for the filtered dataset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  // Completeness turns dedup on by default; other subcommands only on request.
  if (!completeness->parsed() && gram->count("--dedup") == 0) {
    config.dedup = false;
  }

  WarningSink previous = SetWarningSink(
      [&err](std::string_view message) { err << "warning: " << message << '\n'; });
  int status = 0;
  try {
    if (gram->parsed()) {
      status = RunGram(config, out, err);
    } else if (refine->parsed()) {
      status = RunRefine(config, out);
    } else if (node->parsed()) {
      status = RunNodeKernel(config, out);
    } else if (completeness->parsed()) {
      status = RunCompleteness(config, out, err);
    } else {
      status = RunDedup(config, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    status = 2;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    status = 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    status = 1;
  }
  SetWarningSink(std::move(previous));
  return status;
}

}  // namespace ncwalk
