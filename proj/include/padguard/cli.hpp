// Copyright 2026 The Padguard Authors.
//
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

#ifndef PADGUARD_CLI_HPP
#define PADGUARD_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "padguard/copyplan.hpp"
#include "padguard/taint.hpp"

namespace padguard {

/// One CLI invocation. Reports go to stdout, diagnostics to stderr.
/// Exit codes: 0 clean, 1 input/IO errors, 2 findings (analyze/check).
struct RunConfig {
  enum class Command { Layout, Analyze, Generate, Simulate, Check };
  enum class Format { Json, Text };

  Command command = Command::Analyze;
  std::string input_path;
  Format format = Format::Json;
  std::optional<Strategy> strategy;      // generate/simulate
  std::string out_dir;                   // generate
  std::optional<unsigned> default_pack;  // ABI override for pack-less structs
  InitPolicy init = InitPolicy::all();   // simulate
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv front end; parses flags into a RunConfig and runs it.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padguard

#endif  // PADGUARD_CLI_HPP
