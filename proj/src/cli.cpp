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

#include "padguard/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "padguard/analyze.hpp"
#include "padguard/codegen.hpp"
#include "padguard/parser.hpp"

namespace padguard {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFindings = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json ranges_json(const std::vector<ByteRange>& ranges, const char* start_key) {
  json out = json::array();
  for (const auto& range : ranges) {
    out.push_back({{start_key, range.start}, {"length", range.length}});
  }
  return out;
}

json finding_json(const LeakFinding& finding) {
  json out;
  out["interface"] = finding.interface_name;
  out["channel"] = leak_channel_name(finding.channel);
  out["carrier"] = finding.carrier;
  out["param"] = finding.param_name ? json(*finding.param_name) : json(nullptr);
  out["ranges"] = ranges_json(finding.escaping_ranges, "start");
  out["total_bytes"] = finding.total_bytes;
  out["severity"] = "Leak";
  return out;
}

json report_json(const TaintReport& report) {
  json out;
  out["interface"] = report.interface_name;
  out["strategy"] = strategy_name(report.strategy);
  out["escaped"] = ranges_json(report.escaped, "offset");
  out["escaped_total"] = report.escaped_total;
  out["carrier"] = report.carrier;
  out["param"] = report.param_name ? json(*report.param_name) : json(nullptr);
  out["member_init_coverage"] = report.member_init_coverage;
  return out;
}

std::string describe_ranges(const std::vector<ByteRange>& ranges) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (i) out << " ";
    out << "[" << ranges[i].start << "," << ranges[i].start + ranges[i].length << ")";
  }
  return out.str();
}

void print_hole_map(std::ostream& out, const StructLayout& layout) {
  out << "struct " << layout.struct_name << "  size=" << layout.size
      << "  align=" << layout.align << "\n";
  out << "  offset  size  entry\n";

  // Fields and holes interleaved by offset.
  std::size_t f = 0;
  std::size_t h = 0;
  while (f < layout.fields.size() || h < layout.holes.size()) {
    bool take_hole =
        f == layout.fields.size() ||
        (h < layout.holes.size() && layout.holes[h].start < layout.fields[f].offset);
    if (take_hole) {
      const auto& hole = layout.holes[h++];
      out << std::setw(8) << hole.start << "  " << std::setw(4) << hole.length
          << "  padding (" << hole_kind_name(hole.kind) << ")\n";
    } else {
      const auto& field = layout.fields[f++];
      out << std::setw(8) << field.offset << "  " << std::setw(4) << field.size << "  "
          << field.name << "\n";
    }
  }

  // Byte map: one letter per field (cycled), '.' for padding bytes.
  std::string map(layout.size, '?');
  for (std::size_t i = 0; i < layout.fields.size(); ++i) {
    char letter = static_cast<char>('A' + (i % 26));
    const auto& field = layout.fields[i];
    for (std::uint64_t b = field.offset; b < field.offset + field.size; ++b) {
      map[b] = letter;
    }
  }
  for (const auto& hole : layout.holes) {
    for (std::uint64_t b = hole.start; b < hole.start + hole.length; ++b) map[b] = '.';
  }
  for (std::uint64_t row = 0; row < layout.size; row += 32) {
    out << "  [" << std::setw(4) << row << "] " << map.substr(row, 32) << "\n";
  }
  out << "\n";
}

struct LoadedProgram {
  ResolvedProgram resolved;
  AbiModel abi;
  std::string program_name;
};

LoadedProgram load(const RunConfig& config) {
  std::string text = read_file(config.input_path);
  ResolvedProgram resolved = resolve(parse(text));
  AbiModel abi = AbiModel::default64();
  abi.default_pack = config.default_pack;
  std::string stem = std::filesystem::path(config.input_path).stem().string();
  return {std::move(resolved), abi, sanitize_program_name(stem)};
}

int run_layout(const LoadedProgram& loaded, const RunConfig& config, std::ostream& out) {
  json doc = json::array();
  for (const auto& def : loaded.resolved.program().structs) {
    StructLayout layout = layout_struct(def, loaded.resolved, loaded.abi);
    if (config.format == RunConfig::Format::Text) {
      print_hole_map(out, layout);
      continue;
    }
    json entry;
    entry["name"] = layout.struct_name;
    entry["size"] = layout.size;
    entry["align"] = layout.align;
    entry["fields"] = json::array();
    for (const auto& field : layout.fields) {
      entry["fields"].push_back(
          {{"name", field.name}, {"offset", field.offset}, {"size", field.size}});
    }
    entry["holes"] = json::array();
    for (const auto& hole : layout.holes) {
      entry["holes"].push_back({{"start", hole.start},
                                {"length", hole.length},
                                {"kind", hole_kind_name(hole.kind)}});
    }
    doc.push_back(std::move(entry));
  }
  if (config.format == RunConfig::Format::Json) out << doc.dump(2) << "\n";
  return kExitOk;
}

int run_analyze(const LoadedProgram& loaded, const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  AnalysisResult analysis = analyze(loaded.resolved, loaded.abi);
  for (const auto& note : analysis.notes) err << "note: " << note << "\n";

  if (config.format == RunConfig::Format::Json) {
    json doc = json::array();
    for (const auto& finding : analysis.findings) doc.push_back(finding_json(finding));
    out << doc.dump(2) << "\n";
  } else {
    if (analysis.findings.empty()) {
      out << "no padding leaks found\n";
    } else {
      out << std::left << std::setw(24) << "INTERFACE" << std::setw(13) << "CHANNEL"
          << std::setw(20) << "CARRIER" << std::setw(7) << "BYTES"
          << "RANGES\n";
      for (const auto& finding : analysis.findings) {
        std::string carrier = finding.param_name
                                  ? *finding.param_name + ": " + finding.carrier
                                  : finding.carrier;
        out << std::left << std::setw(24) << finding.interface_name << std::setw(13)
            << leak_channel_name(finding.channel) << std::setw(20) << carrier
            << std::setw(7) << finding.total_bytes
            << describe_ranges(finding.escaping_ranges) << "\n";
      }
    }
  }
  return analysis.findings.empty() ? kExitOk : kExitFindings;
}

int run_generate(const LoadedProgram& loaded, const RunConfig& config, std::ostream& out) {
  namespace fs = std::filesystem;
  fs::path dir(config.out_dir.empty() ? "." : config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorKind::IoError, "cannot create '" + dir.string() + "': " + ec.message());
  }

  auto write = [&](const fs::path& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::IoError, "cannot write '" + path.string() + "'");
    file << content;
  };

  std::vector<std::string> written;
  fs::path types_path = dir / (loaded.program_name + "_types.h");
  write(types_path,
        render_types_header(loaded.resolved, *config.strategy, loaded.abi, loaded.program_name));
  written.push_back(types_path.string());

  for (const auto& iface : loaded.resolved.program().interfaces) {
    fs::path proxy_path = dir / (iface.name + "_proxy.c");
    write(proxy_path, render_proxy_file(iface, *config.strategy, loaded.resolved,
                                        loaded.abi, loaded.program_name));
    written.push_back(proxy_path.string());
  }

  if (config.format == RunConfig::Format::Json) {
    out << json{{"files", written}}.dump(2) << "\n";
  } else {
    for (const auto& path : written) out << path << "\n";
  }
  return kExitOk;
}

int run_simulate(const LoadedProgram& loaded, const RunConfig& config, std::ostream& out) {
  std::vector<TaintReport> reports;
  for (const auto& iface : loaded.resolved.program().interfaces) {
    for (const auto& carrier_plan : plan(iface, *config.strategy, loaded.resolved,
                                         loaded.abi)) {
      reports.push_back(simulate(carrier_plan, config.init));
    }
  }

  if (config.format == RunConfig::Format::Json) {
    json doc = json::array();
    for (const auto& report : reports) doc.push_back(report_json(report));
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& report : reports) {
      std::string carrier = report.param_name ? *report.param_name + ": " + report.carrier
                                              : report.carrier;
      out << report.interface_name << " (" << carrier << ", "
          << strategy_name(report.strategy) << "): ";
      if (report.escaped_total == 0) {
        out << "clean\n";
      } else {
        out << report.escaped_total << " bytes escape at "
            << describe_ranges(report.escaped) << "\n";
      }
    }
  }
  return kExitOk;
}

int run_check(const LoadedProgram& loaded, const RunConfig& config, std::ostream& out,
              std::ostream& err) {
  AnalysisResult analysis = analyze(loaded.resolved, loaded.abi);
  for (const auto& note : analysis.notes) err << "note: " << note << "\n";

  // Cross-validate: the shallow simulation must escape exactly what the
  // analyzer flagged, carrier by carrier, and nothing anywhere else.
  bool consistent = true;
  json sim_doc = json::array();
  for (const auto& iface : loaded.resolved.program().interfaces) {
    VerifyResult verdict =
        verify_strategy(iface, Strategy::ShallowVulnerable, loaded.resolved, loaded.abi);
    json entry;
    entry["interface"] = iface.name;
    entry["clean"] = verdict.clean;
    entry["leaks"] = json::array();
    for (const auto& leak : verdict.leaks) {
      entry["leaks"].push_back({{"carrier", leak.carrier},
                                {"param", leak.param_name ? json(*leak.param_name)
                                                          : json(nullptr)},
                                {"ranges", ranges_json(leak.ranges, "start")}});
    }
    sim_doc.push_back(std::move(entry));

    std::vector<const LeakFinding*> expected;
    for (const auto& finding : analysis.findings) {
      if (finding.interface_name == iface.name) expected.push_back(&finding);
    }
    if (expected.size() != verdict.leaks.size()) {
      consistent = false;
      continue;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const auto& leak = verdict.leaks[i];
      if (expected[i]->carrier != leak.carrier ||
          expected[i]->param_name != leak.param_name ||
          expected[i]->escaping_ranges != leak.ranges) {
        consistent = false;
      }
    }
  }

  if (config.format == RunConfig::Format::Json) {
    json doc;
    doc["findings"] = json::array();
    for (const auto& finding : analysis.findings) {
      doc["findings"].push_back(finding_json(finding));
    }
    doc["simulation"] = std::move(sim_doc);
    doc["consistent"] = consistent;
    out << doc.dump(2) << "\n";
  } else {
    out << analysis.findings.size() << " finding(s); analyzer and simulator "
        << (consistent ? "agree" : "DISAGREE") << "\n";
    for (const auto& finding : analysis.findings) {
      std::string carrier = finding.param_name
                                ? *finding.param_name + ": " + finding.carrier
                                : finding.carrier;
      out << "  " << finding.interface_name << " [" << leak_channel_name(finding.channel)
          << "] " << carrier << ": " << finding.total_bytes << " bytes at "
          << describe_ranges(finding.escaping_ranges) << "\n";
    }
  }
  return (!consistent || !analysis.findings.empty()) ? kExitFindings : kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    LoadedProgram loaded = load(config);
    switch (config.command) {
      case RunConfig::Command::Layout: return run_layout(loaded, config, out);
      case RunConfig::Command::Analyze: return run_analyze(loaded, config, out, err);
      case RunConfig::Command::Generate: return run_generate(loaded, config, out);
      case RunConfig::Command::Simulate: return run_simulate(loaded, config, out);
      case RunConfig::Command::Check: return run_check(loaded, config, out, err);
    }
    return kExitError;
  } catch (const Error& error) {
    if (error.has_span()) {
      err << config.input_path << ":" << error.format() << "\n";
    } else {
      err << config.input_path << ": " << error.format() << "\n";
    }
    return kExitError;
  } catch (const std::exception& e) {
    err << config.input_path << ": error: " << e.what() << "\n";
    return kExitError;
  }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"padding-leak analysis for trusted/untrusted call boundaries", "padguard"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::string strategy;
  std::string init = "all";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", config.input_path, "interface definition file")->required();
    cmd->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--default-pack", config.default_pack,
                    "pack value for structs without a pack directive")
        ->check(CLI::IsMember({1u, 2u, 4u, 8u, 16u}));
  };

  CLI::App* layout = app.add_subcommand("layout", "print struct layouts and holes");
  add_common(layout);
  CLI::App* analyze = app.add_subcommand("analyze", "report padding leak findings");
  add_common(analyze);
  CLI::App* generate = app.add_subcommand("generate", "emit proxy marshalling code");
  add_common(generate);
  generate->add_option("--strategy", strategy, "shallow|deep|packed|memset|selective")
      ->required();
  generate->add_option("--out", config.out_dir, "output directory")->required();
  CLI::App* simulate = app.add_subcommand("simulate", "taint-simulate marshalling");
  add_common(simulate);
  simulate->add_option("--strategy", strategy, "shallow|deep|packed|memset|selective")
      ->required();
  simulate->add_option("--init", init, "all|none|partial=<m1,m2,...>");
  CLI::App* check = app.add_subcommand("check", "analyze + cross-validate with simulator");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  if (layout->parsed()) config.command = RunConfig::Command::Layout;
  if (analyze->parsed()) config.command = RunConfig::Command::Analyze;
  if (generate->parsed()) config.command = RunConfig::Command::Generate;
  if (simulate->parsed()) config.command = RunConfig::Command::Simulate;
  if (check->parsed()) config.command = RunConfig::Command::Check;

  config.format = format == "text" ? RunConfig::Format::Text : RunConfig::Format::Json;

  if (!strategy.empty()) {
    auto parsed = strategy_from_name(strategy);
    if (!parsed) {
      err << "unknown strategy '" << strategy << "'\n";
      return kExitError;
    }
    config.strategy = *parsed;
  }

  if (simulate->parsed()) {
    if (init == "all") {
      config.init = InitPolicy::all();
    } else if (init == "none") {
      config.init = InitPolicy::none();
    } else if (init.rfind("partial=", 0) == 0) {
      std::vector<std::string> members;
      std::string list = init.substr(8);
      std::size_t pos = 0;
      while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        if (comma == std::string::npos) comma = list.size();
        if (comma > pos) members.push_back(list.substr(pos, comma - pos));
        pos = comma + 1;
      }
      config.init = InitPolicy::partial(std::move(members));
    } else {
      err << "unknown init policy '" << init << "'\n";
      return kExitError;
    }
  }

  return run(config, out, err);
}

}  // namespace padguard
