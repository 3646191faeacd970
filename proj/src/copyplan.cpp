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

#include "padguard/copyplan.hpp"

#include <utility>

namespace padguard {

const char* strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::ShallowVulnerable: return "shallow";
    case Strategy::DeepCopy: return "deep";
    case Strategy::Packed: return "packed";
    case Strategy::FullMemset: return "memset";
    case Strategy::SelectivePaddingClear: return "selective";
  }
  return "shallow";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "shallow") return Strategy::ShallowVulnerable;
  if (name == "deep") return Strategy::DeepCopy;
  if (name == "packed") return Strategy::Packed;
  if (name == "memset") return Strategy::FullMemset;
  if (name == "selective") return Strategy::SelectivePaddingClear;
  return std::nullopt;
}

CopyStep CopyStep::move(Region src_region, std::uint64_t src_offset, Region dst_region,
                        std::uint64_t dst_offset, std::uint64_t length) {
  CopyStep step;
  step.op = Op::Move;
  step.src_region = src_region;
  step.src_offset = src_offset;
  step.dst_region = dst_region;
  step.dst_offset = dst_offset;
  step.length = length;
  return step;
}

CopyStep CopyStep::zero(Region region, std::uint64_t offset, std::uint64_t length) {
  CopyStep step;
  step.op = Op::Zero;
  step.dst_region = region;
  step.dst_offset = offset;
  step.length = length;
  return step;
}

namespace {

CopyPlan plan_for_carrier(const InterfaceDef& iface, LeakChannel channel,
                          const StructDef& def, std::optional<std::string> param_name,
                          Strategy strategy, const ResolvedProgram& resolved,
                          const AbiModel& abi) {
  CopyPlan plan;
  plan.interface_name = iface.name;
  plan.channel = channel;
  plan.strategy = strategy;
  plan.carrier = def.name;
  plan.param_name = std::move(param_name);

  AbiModel effective_abi = abi;
  if (strategy == Strategy::Packed) effective_abi.forced_pack = 1;
  plan.carrier_layout = layout_struct(def, resolved, effective_abi);
  const std::uint64_t size = plan.carrier_layout.size;

  switch (strategy) {
    case Strategy::ShallowVulnerable:
      plan.steps.push_back(CopyStep::move(Region::Trusted, 0, Region::Untrusted, 0, size));
      break;
    case Strategy::DeepCopy:
      for (const auto& range : occupied_ranges(plan.carrier_layout)) {
        plan.steps.push_back(CopyStep::move(Region::Trusted, range.start, Region::Untrusted,
                                            range.start, range.length));
      }
      break;
    case Strategy::Packed:
      if (padded_bytes(plan.carrier_layout) != 0) {
        throw Error(ErrorKind::UnsupportedStrategy,
                    "packed relayout of '" + def.name + "' still contains padding");
      }
      plan.steps.push_back(CopyStep::move(Region::Trusted, 0, Region::Untrusted, 0, size));
      break;
    case Strategy::FullMemset:
      plan.steps.push_back(CopyStep::zero(Region::Trusted, 0, size));
      plan.steps.push_back(CopyStep::move(Region::Trusted, 0, Region::Untrusted, 0, size));
      break;
    case Strategy::SelectivePaddingClear:
      for (const auto& hole : plan.carrier_layout.holes) {
        plan.steps.push_back(CopyStep::zero(Region::Trusted, hole.start, hole.length));
      }
      plan.steps.push_back(CopyStep::move(Region::Trusted, 0, Region::Untrusted, 0, size));
      break;
  }
  return plan;
}

}  // namespace

std::vector<CopyPlan> plan(const InterfaceDef& iface, Strategy strategy,
                           const ResolvedProgram& resolved, const AbiModel& abi) {
  std::vector<CopyPlan> plans;
  if (iface.direction == Direction::Ecall) {
    if (iface.return_type && iface.return_type->kind == TypeExpr::Kind::StructRef) {
      const StructDef* def = resolved.lookup(iface.return_type->ref_name);
      if (def) {
        plans.push_back(plan_for_carrier(iface, LeakChannel::EcallReturn, *def,
                                         std::nullopt, strategy, resolved, abi));
      }
    }
  } else {
    for (const auto& param : iface.params) {
      if (param.type.kind != TypeExpr::Kind::StructRef) continue;
      const StructDef* def = resolved.lookup(param.type.ref_name);
      if (!def) continue;
      plans.push_back(plan_for_carrier(iface, LeakChannel::OcallInput, *def, param.name,
                                       strategy, resolved, abi));
    }
  }
  return plans;
}

}  // namespace padguard
