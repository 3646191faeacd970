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

// Declarative marshalling plans: the byte traffic each strategy moves or
// zeroes for one struct crossing the trust boundary outward. Plans are the
// single source of truth — generated C code renders them, the taint
// simulator executes them.

#ifndef PADGUARD_COPYPLAN_HPP
#define PADGUARD_COPYPLAN_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padguard/analyze.hpp"
#include "padguard/layout.hpp"

namespace padguard {

enum class Strategy {
  ShallowVulnerable,      // whole-struct copy, padding travels along
  DeepCopy,               // per-member copy, holes never move
  Packed,                 // relayout with pack(1), nothing left to leak
  FullMemset,             // zero the whole carrier before members are set
  SelectivePaddingClear,  // zero exactly the holes, then copy whole
};

/// CLI spelling: shallow, deep, packed, memset, selective.
const char* strategy_name(Strategy strategy);
std::optional<Strategy> strategy_from_name(std::string_view name);

enum class Region { Trusted, Untrusted };

/// Move(src, dst, length) or Zero(region, offset, length). Zero stores its
/// target in the dst fields.
struct CopyStep {
  enum class Op { Move, Zero };

  static CopyStep move(Region src_region, std::uint64_t src_offset, Region dst_region,
                       std::uint64_t dst_offset, std::uint64_t length);
  static CopyStep zero(Region region, std::uint64_t offset, std::uint64_t length);

  Op op = Op::Move;
  Region src_region = Region::Trusted;
  std::uint64_t src_offset = 0;
  Region dst_region = Region::Untrusted;
  std::uint64_t dst_offset = 0;
  std::uint64_t length = 0;

  bool operator==(const CopyStep&) const = default;
};

struct CopyPlan {
  std::string interface_name;
  LeakChannel channel = LeakChannel::EcallReturn;
  Strategy strategy = Strategy::ShallowVulnerable;
  std::string carrier;                    // carrier struct name
  std::optional<std::string> param_name;  // set for OcallInput carriers
  StructLayout carrier_layout;            // packed layout when strategy == Packed
  std::vector<CopyStep> steps;
};

/// One plan per struct crossing outward (Ecall return, Ocall by-value
/// struct parameter), in parameter order; empty when nothing crosses.
/// Throws Error(UnsupportedStrategy) if a packed relayout still has holes
/// (unreachable under current layout rules; the guard is kept).
std::vector<CopyPlan> plan(const InterfaceDef& iface, Strategy strategy,
                           const ResolvedProgram& resolved, const AbiModel& abi);

}  // namespace padguard

#endif  // PADGUARD_COPYPLAN_HPP
