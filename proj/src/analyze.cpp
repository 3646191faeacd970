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

#include "padguard/analyze.hpp"

namespace padguard {

namespace {

// Returns the struct definition when a type is a plain struct reference.
// Arrays never reach interface signatures, and pointers are opaque.
const StructDef* carrier_struct(const TypeExpr& type, const ResolvedProgram& resolved) {
  if (type.kind != TypeExpr::Kind::StructRef) return nullptr;
  return resolved.lookup(type.ref_name);
}

std::optional<LeakFinding> make_finding(const InterfaceDef& iface, LeakChannel channel,
                                        const StructDef& def,
                                        std::optional<std::string> param_name,
                                        const ResolvedProgram& resolved,
                                        const AbiModel& abi) {
  StructLayout layout = layout_struct(def, resolved, abi);
  if (layout.holes.empty()) return std::nullopt;

  LeakFinding finding;
  finding.interface_name = iface.name;
  finding.channel = channel;
  finding.carrier = def.name;
  finding.param_name = std::move(param_name);
  finding.escaping_ranges = hole_ranges(layout);
  for (const auto& range : finding.escaping_ranges) finding.total_bytes += range.length;
  return finding;
}

}  // namespace

const char* leak_channel_name(LeakChannel channel) {
  return channel == LeakChannel::EcallReturn ? "EcallReturn" : "OcallInput";
}

AnalysisResult analyze(const ResolvedProgram& resolved, const AbiModel& abi) {
  AnalysisResult result;
  bool saw_pointer_param = false;

  for (const auto& iface : resolved.program().interfaces) {
    if (iface.direction == Direction::Ecall) {
      if (iface.return_type) {
        if (const StructDef* def = carrier_struct(*iface.return_type, resolved)) {
          if (auto finding = make_finding(iface, LeakChannel::EcallReturn, *def,
                                          std::nullopt, resolved, abi)) {
            result.findings.push_back(std::move(*finding));
          }
        }
      }
    } else {
      for (const auto& param : iface.params) {
        if (param.type.is_pointer()) {
          saw_pointer_param = true;
          continue;
        }
        if (const StructDef* def = carrier_struct(param.type, resolved)) {
          if (auto finding = make_finding(iface, LeakChannel::OcallInput, *def,
                                          param.name, resolved, abi)) {
            result.findings.push_back(std::move(*finding));
          }
        }
      }
    }
    // Ecall pointer params travel inward; note them too, once.
    if (iface.direction == Direction::Ecall) {
      for (const auto& param : iface.params) {
        if (param.type.is_pointer()) saw_pointer_param = true;
      }
    }
  }

  if (saw_pointer_param) {
    result.notes.push_back(
        "pointer parameters are passed as opaque addresses; pointee data is not "
        "marshalled and was not analyzed");
  }
  return result;
}

}  // namespace padguard
