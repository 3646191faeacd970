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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "padguard/analyze.hpp"
#include "padguard/parser.hpp"
#include "padguard/taint.hpp"
#include "support/random_types.hpp"

using namespace padguard;

namespace {

const char* kClassicProgram = R"(
typedef struct {
    uint64_t val1;
    uint8_t val2;
    uint64_t val3;
} test_struct;

trusted {
    test_struct ecall_test_struct(char* encrypted_input, size_t input_size);
};

untrusted {
    void ocall_test_struct(test_struct ts, int val);
};
)";

struct Fixture {
  ResolvedProgram resolved = resolve(parse(kClassicProgram));
  AbiModel abi = AbiModel::default64();

  const InterfaceDef& ecall() const { return resolved.program().interfaces[0]; }
  const InterfaceDef& ocall() const { return resolved.program().interfaces[1]; }

  CopyPlan plan_for(const InterfaceDef& iface, Strategy strategy) const {
    auto plans = plan(iface, strategy, resolved, abi);
    REQUIRE(plans.size() == 1);
    return plans[0];
  }
};

}  // namespace

TEST_CASE("shallow copy leaks exactly the 7 padding bytes") {
  Fixture fx;
  TaintReport report =
      simulate(fx.plan_for(fx.ecall(), Strategy::ShallowVulnerable), InitPolicy::all());
  CHECK(report.escaped == std::vector<ByteRange>{{9, 7}});
  CHECK(report.escaped_total == 7);
  CHECK(report.member_init_coverage == doctest::Approx(1.0));
}

TEST_CASE("full memset leaks nothing") {
  Fixture fx;
  TaintReport report =
      simulate(fx.plan_for(fx.ecall(), Strategy::FullMemset), InitPolicy::all());
  CHECK(report.escaped.empty());
  CHECK(report.escaped_total == 0);
}

TEST_CASE("deep copy leaks nothing and hole bytes stay untrusted junk") {
  Fixture fx;
  CopyPlan deep = fx.plan_for(fx.ecall(), Strategy::DeepCopy);
  SimState state = run_plan(deep, InitPolicy::all());
  for (std::uint64_t i = 9; i < 16; ++i) {
    CHECK(state.untrusted[i] == ByteTag::UntrustedJunk);
  }
  CHECK(state.write_log == deep.steps);
  TaintReport report = simulate(deep, InitPolicy::all());
  CHECK(report.escaped.empty());
  CHECK(report.escaped_total == 0);
}

TEST_CASE("partial initialization: uninitialized member bytes escape too") {
  Fixture fx;
  CopyPlan shallow = fx.plan_for(fx.ocall(), Strategy::ShallowVulnerable);

  // val2 left uninitialized: its byte coalesces with the following hole.
  TaintReport without_val2 =
      simulate(shallow, InitPolicy::partial({"val1", "val3"}));
  CHECK(without_val2.escaped == std::vector<ByteRange>{{8, 8}});
  CHECK(without_val2.escaped_total == 8);
  CHECK(without_val2.member_init_coverage == doctest::Approx(16.0 / 17.0));

  // Only val1 initialized: val2, the hole, and val3 all escape.
  TaintReport only_val1 = simulate(shallow, InitPolicy::partial({"val1"}));
  CHECK(only_val1.escaped == std::vector<ByteRange>{{8, 16}});
  CHECK(only_val1.escaped_total == 16);
}

TEST_CASE("under no initialization shallow leaks everything, deep leaks occupied") {
  Fixture fx;
  CopyPlan shallow = fx.plan_for(fx.ecall(), Strategy::ShallowVulnerable);
  TaintReport shallow_report = simulate(shallow, InitPolicy::none());
  CHECK(shallow_report.escaped_total == shallow.carrier_layout.size);
  CHECK(shallow_report.member_init_coverage == doctest::Approx(0.0));

  CopyPlan deep = fx.plan_for(fx.ecall(), Strategy::DeepCopy);
  TaintReport deep_report = simulate(deep, InitPolicy::none());
  std::uint64_t occupied_total = 0;
  for (const auto& range : occupied_ranges(deep.carrier_layout)) {
    occupied_total += range.length;
  }
  CHECK(deep_report.escaped_total == occupied_total);
}

TEST_CASE("enlarging the partial set never increases leakage") {
  Fixture fx;
  CopyPlan shallow = fx.plan_for(fx.ocall(), Strategy::ShallowVulnerable);
  std::vector<std::vector<std::string>> chain = {
      {}, {"val1"}, {"val1", "val2"}, {"val1", "val2", "val3"}};
  std::uint64_t previous = UINT64_MAX;
  for (const auto& members : chain) {
    TaintReport report = simulate(shallow, InitPolicy::partial(members));
    CHECK(report.escaped_total <= previous);
    previous = report.escaped_total;
  }
}

TEST_CASE("out-of-bounds steps are reported with their index") {
  Fixture fx;
  CopyPlan bogus = fx.plan_for(fx.ecall(), Strategy::ShallowVulnerable);
  bogus.steps.push_back(CopyStep::move(Region::Trusted, 8, Region::Untrusted, 20, 10));
  try {
    simulate(bogus, InitPolicy::all());
    FAIL("expected OutOfBounds");
  } catch (const Error& error) {
    CHECK(error.kind() == ErrorKind::OutOfBounds);
    CHECK(error.step_index() == 1);
  }
}

TEST_CASE("verify_strategy matches the per-strategy expectations") {
  Fixture fx;
  VerifyResult shallow =
      verify_strategy(fx.ecall(), Strategy::ShallowVulnerable, fx.resolved, fx.abi);
  CHECK_FALSE(shallow.clean);
  REQUIRE(shallow.leaks.size() == 1);
  CHECK(shallow.leaks[0].carrier == "test_struct");
  CHECK(shallow.leaks[0].ranges == std::vector<ByteRange>{{9, 7}});

  CHECK(verify_strategy(fx.ecall(), Strategy::Packed, fx.resolved, fx.abi).clean);
  CHECK(verify_strategy(fx.ecall(), Strategy::SelectivePaddingClear, fx.resolved, fx.abi)
            .clean);
  CHECK(verify_strategy(fx.ecall(), Strategy::DeepCopy, fx.resolved, fx.abi).clean);
  CHECK(verify_strategy(fx.ecall(), Strategy::FullMemset, fx.resolved, fx.abi).clean);

  VerifyResult ocall_shallow =
      verify_strategy(fx.ocall(), Strategy::ShallowVulnerable, fx.resolved, fx.abi);
  CHECK_FALSE(ocall_shallow.clean);
  CHECK(ocall_shallow.leaks[0].param_name == "ts");
}

TEST_CASE("interfaces without struct carriers simulate to nothing") {
  ResolvedProgram resolved = resolve(parse(R"(
untrusted {
    void ocall_scalar(int only);
};
)"));
  auto plans = plan(resolved.program().interfaces[0], Strategy::ShallowVulnerable,
                    resolved, AbiModel::default64());
  CHECK(plans.empty());
  CHECK(verify_strategy(resolved.program().interfaces[0], Strategy::ShallowVulnerable,
                        resolved, AbiModel::default64())
            .clean);
}

TEST_CASE("analyzer and shallow simulation agree on random programs") {
  std::mt19937_64 rng(60486);
  testsupport::GenOptions opts;
  AbiModel abi = AbiModel::default64();
  for (int i = 0; i < 300; ++i) {
    Program program = testsupport::random_program(rng, opts);
    ResolvedProgram resolved = resolve(std::move(program));
    AnalysisResult analysis = analyze(resolved, abi);

    std::size_t finding_cursor = 0;
    for (const auto& iface : resolved.program().interfaces) {
      VerifyResult verdict =
          verify_strategy(iface, Strategy::ShallowVulnerable, resolved, abi);
      // Every leak the simulator sees must be the next analyzer finding,
      // with identical ranges, and vice versa.
      for (const auto& leak : verdict.leaks) {
        REQUIRE(finding_cursor < analysis.findings.size());
        const LeakFinding& finding = analysis.findings[finding_cursor++];
        CHECK(finding.interface_name == iface.name);
        CHECK(finding.carrier == leak.carrier);
        CHECK(finding.param_name == leak.param_name);
        CHECK(finding.escaping_ranges == leak.ranges);
      }
    }
    CHECK(finding_cursor == analysis.findings.size());
  }
}

TEST_CASE("all hardened strategies are clean on random trees") {
  std::mt19937_64 rng(11);
  testsupport::GenOptions opts;
  AbiModel abi = AbiModel::default64();
  constexpr Strategy hardened[] = {Strategy::DeepCopy, Strategy::Packed,
                                   Strategy::FullMemset,
                                   Strategy::SelectivePaddingClear};
  for (int i = 0; i < 250; ++i) {
    Program program;
    std::string root = testsupport::add_random_struct_tree(program, rng, opts);
    InterfaceDef iface;
    iface.name = "ecall_probe";
    iface.direction = Direction::Ecall;
    iface.return_type = TypeExpr::struct_ref(root, {});
    program.interfaces.push_back(iface);
    ResolvedProgram resolved = resolve(std::move(program));
    const InterfaceDef& probe = resolved.program().interfaces[0];

    for (Strategy strategy : hardened) {
      CHECK(verify_strategy(probe, strategy, resolved, abi).clean);
    }

    StructLayout layout = layout_struct(*resolved.lookup(root), resolved, abi);
    auto plans = plan(probe, Strategy::ShallowVulnerable, resolved, abi);
    REQUIRE(plans.size() == 1);
    TaintReport report = simulate(plans[0], InitPolicy::all());
    CHECK(report.escaped_total == padded_bytes(layout));
  }
}
