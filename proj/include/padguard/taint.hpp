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

// Byte-granular taint simulation of a copy plan. Tags track provenance,
// not values: trusted bytes start Secret, untrusted bytes start
// UntrustedJunk, and member initialization or Zero steps make bytes
// Initialized. Whatever ends up Secret on the untrusted side escaped.

#ifndef PADGUARD_TAINT_HPP
#define PADGUARD_TAINT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padguard/copyplan.hpp"

namespace padguard {

enum class ByteTag : std::uint8_t { Secret, Initialized, UntrustedJunk };

/// Which carrier members the modeled enclave code assigns before the
/// marshalling copy runs. Member assignment touches exactly the member's
/// scalar bytes — interior padding of a struct-typed member stays Secret.
struct InitPolicy {
  enum class Mode { AllMembers, None, Partial };

  Mode mode = Mode::AllMembers;
  std::vector<std::string> members;  // top-level member names, Partial only

  static InitPolicy all() { return {Mode::AllMembers, {}}; }
  static InitPolicy none() { return {Mode::None, {}}; }
  static InitPolicy partial(std::vector<std::string> members) {
    return {Mode::Partial, std::move(members)};
  }
};

struct SimState {
  std::vector<ByteTag> trusted;
  std::vector<ByteTag> untrusted;
  std::vector<CopyStep> write_log;  // steps in application order
};

struct TaintReport {
  std::string interface_name;
  Strategy strategy = Strategy::ShallowVulnerable;
  std::string carrier;
  std::optional<std::string> param_name;
  std::vector<ByteRange> escaped;  // disjoint, sorted, coalesced
  std::uint64_t escaped_total = 0;
  double member_init_coverage = 0.0;  // fraction of scalar bytes Initialized
};

/// Applies the init policy, then every plan step in order. Throws
/// Error(OutOfBounds) with the step index if a step exceeds the buffers —
/// that is a plan-construction bug, not an input error.
SimState run_plan(const CopyPlan& plan, const InitPolicy& policy);

/// run_plan + escape scan.
TaintReport simulate(const CopyPlan& plan, const InitPolicy& policy);

struct CarrierLeak {
  std::string carrier;
  std::optional<std::string> param_name;
  std::vector<ByteRange> ranges;
};

/// Outcome of simulating every carrier of one interface under full member
/// initialization: clean, or the per-carrier ranges that escaped.
struct VerifyResult {
  bool clean = true;
  std::vector<CarrierLeak> leaks;
};

VerifyResult verify_strategy(const InterfaceDef& iface, Strategy strategy,
                             const ResolvedProgram& resolved, const AbiModel& abi);

}  // namespace padguard

#endif  // PADGUARD_TAINT_HPP
