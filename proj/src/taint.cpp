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

#include "padguard/taint.hpp"

#include <algorithm>

namespace padguard {

namespace {

// Scalar bytes of [start, start+size) relative to the carrier: the member
// span minus every hole overlapping it.
void mark_initialized(std::vector<ByteTag>& bytes, const StructLayout& layout,
                      std::uint64_t start, std::uint64_t size) {
  std::uint64_t end = start + size;
  std::vector<bool> is_hole(size, false);
  for (const auto& hole : layout.holes) {
    std::uint64_t lo = std::max(start, hole.start);
    std::uint64_t hi = std::min(end, hole.start + hole.length);
    for (std::uint64_t i = lo; i < hi; ++i) is_hole[i - start] = true;
  }
  for (std::uint64_t i = 0; i < size; ++i) {
    if (!is_hole[i]) bytes[start + i] = ByteTag::Initialized;
  }
}

void apply_init_policy(std::vector<ByteTag>& trusted, const StructLayout& layout,
                       const InitPolicy& policy) {
  switch (policy.mode) {
    case InitPolicy::Mode::None:
      return;
    case InitPolicy::Mode::AllMembers:
      for (const auto& range : occupied_ranges(layout)) {
        for (std::uint64_t i = 0; i < range.length; ++i) {
          trusted[range.start + i] = ByteTag::Initialized;
        }
      }
      return;
    case InitPolicy::Mode::Partial:
      for (const auto& field : layout.fields) {
        bool selected = std::find(policy.members.begin(), policy.members.end(),
                                  field.name) != policy.members.end();
        if (selected) mark_initialized(trusted, layout, field.offset, field.size);
      }
      return;
  }
}

std::vector<ByteTag>& region_of(SimState& state, Region region) {
  return region == Region::Trusted ? state.trusted : state.untrusted;
}

}  // namespace

SimState run_plan(const CopyPlan& plan, const InitPolicy& policy) {
  SimState state;
  state.trusted.assign(plan.carrier_layout.size, ByteTag::Secret);
  state.untrusted.assign(plan.carrier_layout.size, ByteTag::UntrustedJunk);

  apply_init_policy(state.trusted, plan.carrier_layout, policy);

  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const CopyStep& step = plan.steps[i];
    auto& dst = region_of(state, step.dst_region);
    bool in_bounds = step.dst_offset + step.length <= dst.size();
    if (step.op == CopyStep::Op::Move) {
      auto& src = region_of(state, step.src_region);
      in_bounds = in_bounds && step.src_offset + step.length <= src.size();
    }
    if (!in_bounds) {
      Error error(ErrorKind::OutOfBounds,
                  "copy step " + std::to_string(i) + " exceeds buffer bounds");
      error.set_step_index(i);
      throw error;
    }
    if (step.op == CopyStep::Op::Zero) {
      std::fill_n(dst.begin() + static_cast<std::ptrdiff_t>(step.dst_offset), step.length,
                  ByteTag::Initialized);
    } else {
      const auto& src = region_of(state, step.src_region);
      std::copy_n(src.begin() + static_cast<std::ptrdiff_t>(step.src_offset), step.length,
                  region_of(state, step.dst_region).begin() +
                      static_cast<std::ptrdiff_t>(step.dst_offset));
    }
    state.write_log.push_back(step);
  }
  return state;
}

TaintReport simulate(const CopyPlan& plan, const InitPolicy& policy) {
  SimState state = run_plan(plan, policy);

  TaintReport report;
  report.interface_name = plan.interface_name;
  report.strategy = plan.strategy;
  report.carrier = plan.carrier;
  report.param_name = plan.param_name;

  for (std::uint64_t i = 0; i < state.untrusted.size(); ++i) {
    if (state.untrusted[i] != ByteTag::Secret) continue;
    if (!report.escaped.empty() &&
        report.escaped.back().start + report.escaped.back().length == i) {
      ++report.escaped.back().length;
    } else {
      report.escaped.push_back({i, 1});
    }
    ++report.escaped_total;
  }

  std::uint64_t scalar_total = 0;
  std::uint64_t scalar_initialized = 0;
  // Recount from a fresh policy application so Zero steps on the trusted
  // side do not inflate the pre-marshalling coverage diagnostic.
  std::vector<ByteTag> fresh(plan.carrier_layout.size, ByteTag::Secret);
  apply_init_policy(fresh, plan.carrier_layout, policy);
  for (const auto& range : occupied_ranges(plan.carrier_layout)) {
    scalar_total += range.length;
    for (std::uint64_t i = 0; i < range.length; ++i) {
      if (fresh[range.start + i] == ByteTag::Initialized) ++scalar_initialized;
    }
  }
  report.member_init_coverage =
      scalar_total == 0 ? 1.0
                        : static_cast<double>(scalar_initialized) /
                              static_cast<double>(scalar_total);
  return report;
}

VerifyResult verify_strategy(const InterfaceDef& iface, Strategy strategy,
                             const ResolvedProgram& resolved, const AbiModel& abi) {
  VerifyResult result;
  for (const auto& carrier_plan : plan(iface, strategy, resolved, abi)) {
    TaintReport report = simulate(carrier_plan, InitPolicy::all());
    if (report.escaped_total == 0) continue;
    result.clean = false;
    result.leaks.push_back({report.carrier, report.param_name, report.escaped});
  }
  return result;
}

}  // namespace padguard
