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

#include "ncwalk/gram_io.h"

#include <charconv>
#include <string>
#include <string_view>

#include "ncwalk/errors.h"

namespace ncwalk {
namespace {

void WriteDouble(std::ostream& out, double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  out.write(buffer, end - buffer);
}

double ParseDouble(std::string_view token, long line) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("<gram>", line,
                     "expected number, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(separator, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string StripCr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

void WriteGramCsv(std::ostream& out, const GramMatrix& gram) {
  const std::size_t n = gram.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) out << ',';
    out << j;
  }
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out << ',';
      WriteDouble(out, gram.at(i, j));
    }
    out << '\n';
  }
}

void WritePrecomputedKernel(std::ostream& out, const GramMatrix& gram,
                            std::span<const int> class_labels) {
  const std::size_t n = gram.size();
  if (!class_labels.empty() && class_labels.size() != n) {
    throw ContractViolation("class labels misaligned with Gram matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    out << (class_labels.empty() ? 0 : class_labels[i]) << " 0:" << i + 1;
    for (std::size_t j = 0; j < n; ++j) {
      out << ' ' << j + 1 << ':';
      WriteDouble(out, gram.at(i, j));
    }
    out << '\n';
  }
}

DenseMatrix ReadGramCsv(std::istream& in) {
  DenseMatrix matrix;
  std::string line;
  long number = 0;
  if (!std::getline(in, line)) throw ParseError("<gram>", 0, "empty input");
  ++number;
  matrix.size = StripCr(line).empty() ? 0 : Split(StripCr(line), ',').size();
  while (std::getline(in, line)) {
    ++number;
    line = StripCr(line);
    if (line.empty()) continue;
    const auto cells = Split(line, ',');
    if (cells.size() != matrix.size) {
      throw ParseError("<gram>", number, "row has wrong number of columns");
    }
    for (auto cell : cells) matrix.values.push_back(ParseDouble(cell, number));
  }
  if (matrix.values.size() != matrix.size * matrix.size) {
    throw ParseError("<gram>", number, "matrix is not square");
  }
  return matrix;
}

PrecomputedKernel ReadPrecomputedKernel(std::istream& in) {
  PrecomputedKernel kernel;
  std::vector<std::vector<double>> rows;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = StripCr(line);
    if (line.empty()) continue;
    const auto fields = Split(line, ' ');
    if (fields.size() < 2) {
      throw ParseError("<gram>", number, "expected label and row index");
    }
    kernel.class_labels.push_back(
        static_cast<int>(ParseDouble(fields[0], number)));
    std::vector<double> row;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      const auto colon = fields[f].find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("<gram>", number, "field without ':'");
      }
      const double index = ParseDouble(fields[f].substr(0, colon), number);
      const double value = ParseDouble(fields[f].substr(colon + 1), number);
      if (index != static_cast<double>(f - 1)) {
        throw ParseError("<gram>", number, "fields out of order");
      }
      if (f == 1) {
        if (value != static_cast<double>(rows.size() + 1)) {
          throw ParseError("<gram>", number, "unexpected row index");
        }
        continue;
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  kernel.matrix.size = rows.size();
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw ParseError("<gram>", number, "matrix is not square");
    }
    kernel.matrix.values.insert(kernel.matrix.values.end(), row.begin(),
                                row.end());
  }
  return kernel;
}

}  // namespace ncwalk
