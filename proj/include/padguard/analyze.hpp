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

// Scans a resolved program for the two outward leak channels: trusted
// calls returning a padded struct, and untrusted calls receiving one by
// value. Each finding lists the exact byte ranges that escape.

#ifndef PADGUARD_ANALYZE_HPP
#define PADGUARD_ANALYZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "padguard/layout.hpp"
#include "padguard/resolve.hpp"

namespace padguard {

enum class LeakChannel { EcallReturn, OcallInput };

const char* leak_channel_name(LeakChannel channel);

enum class Severity { Leak };

/// One leak: an interface whose carrier struct lets `escaping_ranges`
/// (its padding holes, in carrier coordinates) cross to untrusted memory.
struct LeakFinding {
  std::string interface_name;
  LeakChannel channel = LeakChannel::EcallReturn;
  std::string carrier;                    // carrier struct name
  std::optional<std::string> param_name;  // set for OcallInput
  std::vector<ByteRange> escaping_ranges;
  std::uint64_t total_bytes = 0;
  Severity severity = Severity::Leak;
};

struct AnalysisResult {
  std::vector<LeakFinding> findings;  // ordered by (interface, parameter position)
  std::vector<std::string> notes;     // informational, e.g. unmodeled pointers
};

/// Emits one finding per (interface, carrier) pair whose carrier struct has
/// padded bytes. Scalar returns/params, inward directions, and hole-free
/// structs produce nothing. Pure and deterministic.
AnalysisResult analyze(const ResolvedProgram& resolved, const AbiModel& abi);

}  // namespace padguard

#endif  // PADGUARD_ANALYZE_HPP
