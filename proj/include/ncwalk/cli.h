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

#ifndef NCWALK_CLI_H_
#define NCWALK_CLI_H_

#include <ostream>

namespace ncwalk {

// Entry point of the ncwalk tool. Output that has no --out target goes to
// `out`, diagnostics to `err`. Returns 0 on success, 2 on usage errors and 1
// on runtime errors.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace ncwalk

#endif  // NCWALK_CLI_H_
