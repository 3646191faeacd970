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

// Proxy-function and marshalling-struct source generation. The emitted C
// renders a CopyPlan statement by statement: whole-struct assignment for
// the shallow baseline, flattened member assignments for deep copy, memset
// calls for the zeroing strategies, and a pack(1) wrapper on type
// definitions for the packed strategy. Output is deterministic text
// against a stub edge-routine environment, never compiled here.

#ifndef PADGUARD_CODEGEN_HPP
#define PADGUARD_CODEGEN_HPP

#include <string>
#include <string_view>

#include "padguard/copyplan.hpp"
#include "padguard/resolve.hpp"

namespace padguard {

struct GeneratedSource {
  std::string marshalling_struct_text;  // the ms_<interface>_t typedef
  std::string proxy_text;               // the proxy function definition
  std::string language_dialect = "C99 text output";
};

/// Marshalling struct + proxy function for one interface. Byte-identical
/// across runs for identical inputs.
GeneratedSource generate(const InterfaceDef& iface, Strategy strategy,
                         const ResolvedProgram& resolved, const AbiModel& abi);

/// The shared <program>_types.h content: every struct definition in
/// declaration order. Pack directives are preserved, a default-pack
/// override is materialized as explicit pragmas, and everything is forced
/// to pack(1) under the packed strategy — the header always reproduces the
/// layout the plans were computed against.
std::string render_types_header(const ResolvedProgram& resolved, Strategy strategy,
                                const AbiModel& abi, std::string_view program_name);

/// Complete <interface>_proxy.c content: banner, includes, marshalling
/// struct, proxy function.
std::string render_proxy_file(const InterfaceDef& iface, Strategy strategy,
                              const ResolvedProgram& resolved, const AbiModel& abi,
                              std::string_view program_name);

/// Identifier-safe program name derived from an input path stem.
std::string sanitize_program_name(std::string_view stem);

}  // namespace padguard

#endif  // PADGUARD_CODEGEN_HPP
