// Copyright 2026 The qphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPHASE_CLI_H
#define QPHASE_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qphase {

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_USAGE = 2;

/// Runs the qphase command line. `args` excludes the program name. Data goes to
/// `out` or to files; diagnostics go to `err`. Returns EXIT_OK or EXIT_USAGE.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qphase

#endif
