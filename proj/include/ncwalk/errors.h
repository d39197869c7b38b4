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

#ifndef NCWALK_ERRORS_H_
#define NCWALK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ncwalk {

// A caller broke a documented precondition (bad argument sizes, invalid
// parameter combinations).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input text. The message carries file and line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, long line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}

  const std::string& file() const { return file_; }
  long line() const { return line_; }

 private:
  std::string file_;
  long line_;
};

// Input that parses but describes an impossible graph.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration or memory guard refused to run.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncwalk

#endif  // NCWALK_ERRORS_H_
