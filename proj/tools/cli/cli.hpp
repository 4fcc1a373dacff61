// Copyright 2026 The wavelearn Authors
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


// Command-line front end. Every command reads and writes files only and
// records a manifest next to its output that is sufficient to rerun it.

#ifndef WAVELEARN_TOOLS_CLI_HPP_
#define WAVELEARN_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace wavelearn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name. Diagnostics go to `err`; short
// human-readable summaries go to `out`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Path of the manifest written for an output path: <out>/manifest.json when
// the command writes a directory, <out>.manifest.json otherwise.
std::string ManifestPathFor(const std::string& command, const std::string& out);

}  // namespace wavelearn::cli

#endif  // WAVELEARN_TOOLS_CLI_HPP_
