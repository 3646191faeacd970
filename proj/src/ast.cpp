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

#include "padguard/ast.hpp"

#include <array>
#include <sstream>
#include <utility>

namespace padguard {

namespace {

struct ScalarSpelling {
  ScalarKind kind;
  const char* spelling;
};

// Surface spellings accepted by the grammar. Pointer is intentionally
// absent: it is produced by '*' declarators, never by a type name.
constexpr std::array<ScalarSpelling, 13> kScalarSpellings = {{
    {ScalarKind::U8, "uint8_t"},
    {ScalarKind::U16, "uint16_t"},
    {ScalarKind::U32, "uint32_t"},
    {ScalarKind::U64, "uint64_t"},
    {ScalarKind::I8, "int8_t"},
    {ScalarKind::I16, "int16_t"},
    {ScalarKind::I32, "int32_t"},
    {ScalarKind::I64, "int64_t"},
    {ScalarKind::F32, "float"},
    {ScalarKind::F64, "double"},
    {ScalarKind::Char, "char"},
    {ScalarKind::Int, "int"},
    {ScalarKind::SizeT, "size_t"},
}};

}  // namespace

const char* scalar_spelling(ScalarKind kind) {
  for (const auto& entry : kScalarSpellings) {
    if (entry.kind == kind) return entry.spelling;
  }
  return "void*";  // ScalarKind::Pointer; callers normally use TypeExpr::pointee
}

std::optional<ScalarKind> scalar_from_spelling(std::string_view name) {
  for (const auto& entry : kScalarSpellings) {
    if (name == entry.spelling) return entry.kind;
  }
  return std::nullopt;
}

TypeExpr TypeExpr::scalar(ScalarKind kind, SourceSpan span) {
  TypeExpr t;
  t.kind = Kind::Scalar;
  t.scalar_kind = kind;
  t.span = span;
  return t;
}

TypeExpr TypeExpr::pointer(std::string pointee_spelling, SourceSpan span) {
  TypeExpr t;
  t.kind = Kind::Scalar;
  t.scalar_kind = ScalarKind::Pointer;
  t.pointee = std::move(pointee_spelling);
  t.span = span;
  return t;
}

TypeExpr TypeExpr::array(TypeExpr element, std::uint64_t count, SourceSpan span) {
  TypeExpr t;
  t.kind = Kind::Array;
  t.element = std::make_shared<const TypeExpr>(std::move(element));
  t.count = count;
  t.span = span;
  return t;
}

TypeExpr TypeExpr::struct_ref(std::string name, SourceSpan span) {
  TypeExpr t;
  t.kind = Kind::StructRef;
  t.ref_name = std::move(name);
  t.span = span;
  return t;
}

const StructDef* Program::find_struct(std::string_view name) const {
  for (const auto& def : structs) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

bool structurally_equal(const TypeExpr& a, const TypeExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TypeExpr::Kind::Scalar:
      if (a.scalar_kind != b.scalar_kind) return false;
      return a.scalar_kind != ScalarKind::Pointer || a.pointee == b.pointee;
    case TypeExpr::Kind::Array:
      return a.count == b.count && structurally_equal(*a.element, *b.element);
    case TypeExpr::Kind::StructRef:
      return a.ref_name == b.ref_name;
  }
  return false;
}

bool structurally_equal(const StructDef& a, const StructDef& b) {
  if (a.name != b.name || a.pack != b.pack || a.members.size() != b.members.size())
    return false;
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (a.members[i].name != b.members[i].name) return false;
    if (!structurally_equal(a.members[i].type, b.members[i].type)) return false;
  }
  return true;
}

bool structurally_equal(const InterfaceDef& a, const InterfaceDef& b) {
  if (a.name != b.name || a.direction != b.direction) return false;
  if (a.return_type.has_value() != b.return_type.has_value()) return false;
  if (a.return_type && !structurally_equal(*a.return_type, *b.return_type))
    return false;
  if (a.params.size() != b.params.size()) return false;
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (a.params[i].name != b.params[i].name) return false;
    if (!structurally_equal(a.params[i].type, b.params[i].type)) return false;
  }
  return true;
}

bool structurally_equal(const Program& a, const Program& b) {
  if (a.structs.size() != b.structs.size()) return false;
  if (a.interfaces.size() != b.interfaces.size()) return false;
  for (std::size_t i = 0; i < a.structs.size(); ++i) {
    if (!structurally_equal(a.structs[i], b.structs[i])) return false;
  }
  for (std::size_t i = 0; i < a.interfaces.size(); ++i) {
    if (!structurally_equal(a.interfaces[i], b.interfaces[i])) return false;
  }
  return true;
}

std::string base_spelling(const TypeExpr& type) {
  switch (type.kind) {
    case TypeExpr::Kind::Scalar:
      if (type.scalar_kind == ScalarKind::Pointer) return type.pointee + "*";
      return scalar_spelling(type.scalar_kind);
    case TypeExpr::Kind::Array:
      return base_spelling(*type.element);
    case TypeExpr::Kind::StructRef:
      return type.ref_name;
  }
  return {};
}

std::string array_suffixes(const TypeExpr& type) {
  std::string out;
  const TypeExpr* t = &type;
  while (t->kind == TypeExpr::Kind::Array) {
    out += "[" + std::to_string(t->count) + "]";
    t = t->element.get();
  }
  return out;
}

namespace {

void print_signature(std::ostringstream& out, const InterfaceDef& iface) {
  out << "    ";
  out << (iface.return_type ? base_spelling(*iface.return_type) : "void");
  out << " " << iface.name << "(";
  if (iface.params.empty()) {
    out << "void";
  } else {
    for (std::size_t i = 0; i < iface.params.size(); ++i) {
      if (i) out << ", ";
      out << base_spelling(iface.params[i].type) << " " << iface.params[i].name;
    }
  }
  out << ");\n";
}

}  // namespace

std::string print(const Program& program) {
  std::ostringstream out;
  for (const auto& def : program.structs) {
    if (def.pack) out << "#pragma pack(" << *def.pack << ")\n";
    out << "typedef struct {\n";
    for (const auto& member : def.members) {
      out << "    " << base_spelling(member.type) << " " << member.name
          << array_suffixes(member.type) << ";\n";
    }
    out << "} " << def.name << ";\n\n";
  }

  // One block per contiguous run of same-direction interfaces, so that the
  // global declaration order survives a print/parse round trip.
  std::size_t i = 0;
  while (i < program.interfaces.size()) {
    Direction dir = program.interfaces[i].direction;
    out << (dir == Direction::Ecall ? "trusted {\n" : "untrusted {\n");
    while (i < program.interfaces.size() && program.interfaces[i].direction == dir) {
      print_signature(out, program.interfaces[i]);
      ++i;
    }
    out << "};\n\n";
  }
  return out.str();
}

}  // namespace padguard
