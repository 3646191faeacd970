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

#include "padguard/codegen.hpp"

#include <cctype>
#include <sstream>

#include "padguard/layout.hpp"

namespace padguard {

namespace {

// Trusted-side temporary holding an Ecall's return value when the strategy
// needs to touch it before the outward copy.
constexpr const char* kRetvalTemp = "__retval";

std::string param_list(const InterfaceDef& iface) {
  std::ostringstream out;
  for (std::size_t i = 0; i < iface.params.size(); ++i) {
    if (i) out << ", ";
    out << base_spelling(iface.params[i].type) << " " << iface.params[i].name;
  }
  return out.str();
}

std::string call_args_from_ms(const InterfaceDef& iface) {
  std::ostringstream out;
  for (std::size_t i = 0; i < iface.params.size(); ++i) {
    if (i) out << ", ";
    out << "ms->ms_" << iface.params[i].name;
  }
  return out.str();
}

// Flattened member-path copy statements for a deep copy: one assignment
// per scalar leaf, one memcpy per hole-free array. `dst` and `src` are
// expression prefixes like "ms->ms_ts" and "ts".
void emit_deep_copy(std::ostringstream& out, const std::string& dst, const std::string& src,
                    const TypeExpr& type, const ResolvedProgram& resolved,
                    const AbiModel& abi) {
  switch (type.kind) {
    case TypeExpr::Kind::Scalar:
      out << "\t" << dst << " = " << src << ";\n";
      return;
    case TypeExpr::Kind::Array:
      if (!type_has_padding(*type.element, resolved, abi)) {
        out << "\tmemcpy(&" << dst << ", &" << src << ", "
            << type_size(type, resolved, abi) << ");\n";
        return;
      }
      for (std::uint64_t i = 0; i < type.count; ++i) {
        std::string idx = "[" + std::to_string(i) + "]";
        emit_deep_copy(out, dst + idx, src + idx, *type.element, resolved, abi);
      }
      return;
    case TypeExpr::Kind::StructRef: {
      const StructDef* def = resolved.lookup(type.ref_name);
      for (const auto& member : def->members) {
        emit_deep_copy(out, dst + "." + member.name, src + "." + member.name, member.type,
                       resolved, abi);
      }
      return;
    }
  }
}

// The outward copy statements for one struct carrier. `dst` is the ms
// member expression, `src` the trusted-side variable.
void emit_carrier_copy(std::ostringstream& out, Strategy strategy, const std::string& dst,
                       const std::string& src, const StructDef& def,
                       const ResolvedProgram& resolved, const AbiModel& abi) {
  switch (strategy) {
    case Strategy::ShallowVulnerable:
    case Strategy::Packed:
      out << "\t" << dst << " = " << src << ";\n";
      return;
    case Strategy::DeepCopy: {
      TypeExpr ref = TypeExpr::struct_ref(def.name, {});
      emit_deep_copy(out, dst, src, ref, resolved, abi);
      return;
    }
    case Strategy::FullMemset:
      // The memset is emitted where the carrier comes into scope; only the
      // whole-struct copy remains here.
      out << "\t" << dst << " = " << src << ";\n";
      return;
    case Strategy::SelectivePaddingClear: {
      StructLayout layout = layout_struct(def, resolved, abi);
      for (const auto& hole : layout.holes) {
        out << "\tmemset((char*)&" << src << " + " << hole.start << ", 0, " << hole.length
            << ");\n";
      }
      out << "\t" << dst << " = " << src << ";\n";
      return;
    }
  }
}

std::string render_ms_struct(const InterfaceDef& iface) {
  std::ostringstream out;
  out << "typedef struct ms_" << iface.name << "_t {\n";
  if (iface.return_type) {
    out << "\t" << base_spelling(*iface.return_type) << " ms_retval;\n";
  }
  for (const auto& param : iface.params) {
    out << "\t" << base_spelling(param.type) << " ms_" << param.name << ";\n";
  }
  out << "} ms_" << iface.name << "_t;\n";
  return out.str();
}

std::string render_ecall_proxy(const InterfaceDef& iface, Strategy strategy,
                               const ResolvedProgram& resolved, const AbiModel& abi) {
  const std::string ms_type = "ms_" + iface.name + "_t";
  std::ostringstream out;
  // Prototype of the trusted function this proxy dispatches to.
  out << (iface.return_type ? base_spelling(*iface.return_type) : "void") << " "
      << iface.name << "(" << (iface.params.empty() ? "void" : param_list(iface))
      << ");\n";
  out << "\n";
  out << "static sgx_status_t SGX_CDECL sgx_" << iface.name << "(void* pms)\n";
  out << "{\n";
  out << "\tCHECK_REF_POINTER(pms, sizeof(" << ms_type << "));\n";
  out << "\t" << ms_type << "* ms = SGX_CAST(" << ms_type << "*, pms);\n";
  out << "\tsgx_status_t status = SGX_SUCCESS;\n";
  out << "\n";

  const std::string args = call_args_from_ms(iface);
  const std::string call = iface.name + "(" + args + ")";

  const StructDef* carrier = nullptr;
  if (iface.return_type && iface.return_type->kind == TypeExpr::Kind::StructRef) {
    carrier = resolved.lookup(iface.return_type->ref_name);
  }

  if (!iface.return_type) {
    out << "\t" << call << ";\n";
  } else if (carrier == nullptr) {
    out << "\tms->ms_retval = " << call << ";\n";
  } else {
    switch (strategy) {
      case Strategy::ShallowVulnerable:
      case Strategy::Packed:
        out << "\tms->ms_retval = " << call << ";\n";
        break;
      case Strategy::FullMemset:
        out << "\t" << carrier->name << " " << kRetvalTemp << ";\n";
        out << "\tmemset(&" << kRetvalTemp << ", 0, sizeof(" << carrier->name << "));\n";
        out << "\t" << kRetvalTemp << " = " << call << ";\n";
        emit_carrier_copy(out, strategy, "ms->ms_retval", kRetvalTemp, *carrier, resolved,
                          abi);
        break;
      case Strategy::DeepCopy:
      case Strategy::SelectivePaddingClear:
        out << "\t" << carrier->name << " " << kRetvalTemp << " = " << call << ";\n";
        emit_carrier_copy(out, strategy, "ms->ms_retval", kRetvalTemp, *carrier, resolved,
                          abi);
        break;
    }
  }

  out << "\n";
  out << "\treturn status;\n";
  out << "}\n";
  return out.str();
}

std::string render_ocall_proxy(const InterfaceDef& iface, Strategy strategy,
                               const ResolvedProgram& resolved, const AbiModel& abi) {
  const std::string ms_type = "ms_" + iface.name + "_t";

  // Index of this ocall in the untrusted dispatch table.
  unsigned index = 0;
  for (const auto& other : resolved.program().interfaces) {
    if (other.direction != Direction::Ocall) continue;
    if (other.name == iface.name) break;
    ++index;
  }

  std::ostringstream out;
  out << "sgx_status_t SGX_CDECL " << iface.name << "(";
  if (iface.return_type) {
    out << base_spelling(*iface.return_type) << "* retval";
    if (!iface.params.empty()) out << ", ";
  }
  out << param_list(iface) << ")\n";
  out << "{\n";
  out << "\tsgx_status_t status = SGX_SUCCESS;\n";
  out << "\t" << ms_type << "* ms = NULL;\n";
  out << "\tsize_t ocalloc_size = sizeof(" << ms_type << ");\n";
  out << "\tvoid* __tmp = NULL;\n";
  out << "\n";
  out << "\t__tmp = sgx_ocalloc(ocalloc_size);\n";
  out << "\tif (__tmp == NULL) {\n";
  out << "\t\tsgx_ocfree();\n";
  out << "\t\treturn SGX_ERROR_UNEXPECTED;\n";
  out << "\t}\n";
  out << "\tms = (" << ms_type << "*)__tmp;\n";
  out << "\t__tmp = (void*)((size_t)__tmp + sizeof(" << ms_type << "));\n";
  out << "\n";

  for (const auto& param : iface.params) {
    const StructDef* carrier = nullptr;
    if (param.type.kind == TypeExpr::Kind::StructRef) {
      carrier = resolved.lookup(param.type.ref_name);
    }
    if (carrier == nullptr) {
      out << "\tms->ms_" << param.name << " = " << param.name << ";\n";
      continue;
    }
    if (strategy == Strategy::FullMemset) {
      out << "\tmemset(&" << param.name << ", 0, sizeof(" << carrier->name << "));\n";
    }
    emit_carrier_copy(out, strategy, "ms->ms_" + param.name, param.name, *carrier,
                      resolved, abi);
  }

  out << "\tstatus = sgx_ocall(" << index << ", ms);\n";
  if (iface.return_type) {
    out << "\tif (retval) *retval = ms->ms_retval;\n";
  }
  out << "\n";
  out << "\tsgx_ocfree();\n";
  out << "\treturn status;\n";
  out << "}\n";
  return out.str();
}

std::string banner(Strategy strategy) {
  std::ostringstream out;
  out << "/* Generated by padguard (strategy: " << strategy_name(strategy)
      << "). Do not edit. */\n";
  return out.str();
}

void render_struct_def(std::ostringstream& out, const StructDef& def) {
  out << "typedef struct {\n";
  for (const auto& member : def.members) {
    out << "\t" << base_spelling(member.type) << " " << member.name
        << array_suffixes(member.type) << ";\n";
  }
  out << "} " << def.name << ";\n";
}

}  // namespace

GeneratedSource generate(const InterfaceDef& iface, Strategy strategy,
                         const ResolvedProgram& resolved, const AbiModel& abi) {
  AbiModel effective_abi = abi;
  if (strategy == Strategy::Packed) effective_abi.forced_pack = 1;

  GeneratedSource source;
  source.marshalling_struct_text = render_ms_struct(iface);
  source.proxy_text = iface.direction == Direction::Ecall
                          ? render_ecall_proxy(iface, strategy, resolved, effective_abi)
                          : render_ocall_proxy(iface, strategy, resolved, effective_abi);
  return source;
}

std::string render_types_header(const ResolvedProgram& resolved, Strategy strategy,
                                const AbiModel& abi, std::string_view program_name) {
  std::string guard;
  for (char c : program_name) {
    guard += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  guard += "_TYPES_H";

  std::ostringstream out;
  out << banner(strategy);
  out << "\n";
  out << "#ifndef " << guard << "\n";
  out << "#define " << guard << "\n";
  out << "\n";
  out << "#include <stddef.h>\n";
  out << "#include <stdint.h>\n";
  out << "\n";
  if (strategy == Strategy::Packed) out << "#pragma pack(push, 1)\n\n";
  for (const auto& def : resolved.program().structs) {
    // A default-pack override is part of the layout contract, so it must
    // appear in the emitted C as well.
    std::optional<unsigned> pack = def.pack ? def.pack : abi.default_pack;
    bool own_pack = strategy != Strategy::Packed && pack.has_value();
    if (own_pack) out << "#pragma pack(push, " << *pack << ")\n";
    render_struct_def(out, def);
    if (own_pack) out << "#pragma pack(pop)\n";
    out << "\n";
  }
  if (strategy == Strategy::Packed) out << "#pragma pack(pop)\n\n";
  out << "#endif /* " << guard << " */\n";
  return out.str();
}

std::string render_proxy_file(const InterfaceDef& iface, Strategy strategy,
                              const ResolvedProgram& resolved, const AbiModel& abi,
                              std::string_view program_name) {
  GeneratedSource source = generate(iface, strategy, resolved, abi);
  std::ostringstream out;
  out << banner(strategy);
  out << "\n";
  out << "#include \"sgx_edge_stubs.h\"\n";
  out << "#include \"" << program_name << "_types.h\"\n";
  out << "\n";
  out << source.marshalling_struct_text;
  out << "\n";
  out << source.proxy_text;
  return out.str();
}

std::string sanitize_program_name(std::string_view stem) {
  std::string name;
  for (char c : stem) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    name += ok ? c : '_';
  }
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) {
    name.insert(name.begin(), 'p');
  }
  return name;
}

}  // namespace padguard
