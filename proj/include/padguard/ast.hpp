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

// Typed AST for the interface-definition input language: C-subset struct
// declarations plus trusted/untrusted call blocks. See docs/grammar.md for
// the surface grammar.

#ifndef PADGUARD_AST_HPP
#define PADGUARD_AST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace padguard {

/// 1-based line/column position of a node's first token in the input text.
struct SourceSpan {
  int line = 0;
  int column = 0;
};

/// Built-in scalar types of the input language. `Pointer` covers every
/// pointer-typed declaration; the pointee is recorded as an opaque spelling
/// and never marshalled.
enum class ScalarKind {
  U8,
  U16,
  U32,
  U64,
  I8,
  I16,
  I32,
  I64,
  F32,
  F64,
  Char,
  Int,
  SizeT,
  Pointer,
};

/// C spelling of a scalar kind ("uint8_t", "size_t", ...). Pointer has no
/// single spelling; callers must consult TypeExpr::pointee.
const char* scalar_spelling(ScalarKind kind);

/// Maps a C type spelling to its scalar kind, or nullopt if the name is not
/// a built-in scalar (and is therefore a struct reference).
std::optional<ScalarKind> scalar_from_spelling(std::string_view name);

/// A parsed type: scalar (including opaque pointers), fixed-size array, or
/// a by-name reference to a struct.
class TypeExpr {
 public:
  enum class Kind { Scalar, Array, StructRef };

  static TypeExpr scalar(ScalarKind kind, SourceSpan span);
  static TypeExpr pointer(std::string pointee_spelling, SourceSpan span);
  static TypeExpr array(TypeExpr element, std::uint64_t count, SourceSpan span);
  static TypeExpr struct_ref(std::string name, SourceSpan span);

  Kind kind = Kind::Scalar;

  // Kind::Scalar
  ScalarKind scalar_kind = ScalarKind::U8;
  std::string pointee;  // spelling of the pointed-to type, e.g. "char"

  // Kind::Array
  std::shared_ptr<const TypeExpr> element;
  std::uint64_t count = 0;

  // Kind::StructRef
  std::string ref_name;

  SourceSpan span;

  bool is_pointer() const {
    return kind == Kind::Scalar && scalar_kind == ScalarKind::Pointer;
  }
};

struct StructMember {
  std::string name;
  TypeExpr type;
  SourceSpan span;
};

struct StructDef {
  std::string name;
  std::vector<StructMember> members;
  std::optional<unsigned> pack;  // from a pack directive scoped to this struct
  SourceSpan span;
};

enum class Direction { Ecall, Ocall };

struct Param {
  std::string name;
  TypeExpr type;
  SourceSpan span;
};

/// One trusted (Ecall) or untrusted (Ocall) function signature. All
/// parameters are by value; pointer parameters are opaque.
struct InterfaceDef {
  std::string name;
  Direction direction = Direction::Ecall;
  std::optional<TypeExpr> return_type;  // nullopt == void
  std::vector<Param> params;
  SourceSpan span;
};

struct Program {
  std::vector<StructDef> structs;        // declaration order
  std::vector<InterfaceDef> interfaces;  // declaration order

  const StructDef* find_struct(std::string_view name) const;
};

// Structural equality ignoring source spans. Used by the round-trip tests.
bool structurally_equal(const TypeExpr& a, const TypeExpr& b);
bool structurally_equal(const StructDef& a, const StructDef& b);
bool structurally_equal(const InterfaceDef& a, const InterfaceDef& b);
bool structurally_equal(const Program& a, const Program& b);

/// Pretty-prints a program back to input-language text. Parsing the result
/// yields a structurally identical program.
std::string print(const Program& program);

/// Spelling of the non-array core of a type ("uint64_t", "char*",
/// "test_struct"). Array dimensions are declarator suffixes; see
/// array_suffixes().
std::string base_spelling(const TypeExpr& type);

/// Declarator suffix text for arrays ("[2][3]"), empty otherwise.
std::string array_suffixes(const TypeExpr& type);

}  // namespace padguard

#endif  // PADGUARD_AST_HPP
