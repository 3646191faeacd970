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

#include "padguard/layout.hpp"

#include <algorithm>
#include <cassert>

namespace padguard {

namespace {

constexpr std::uint64_t round_up(std::uint64_t value, std::uint64_t align) {
  return (value + align - 1) / align * align;
}

// Resource bounds for hostile inputs: no real interface struct comes close,
// and compilers reject comparable object sizes outright.
constexpr std::uint64_t kMaxTypeSize = 1ull << 32;
constexpr std::uint64_t kMaxHoleEntries = 1ull << 20;

// Size, alignment, and interior holes of a type, in the type's own
// coordinates. Hole kinds are already final except for the owner mapping
// applied when the measured type is placed as a struct member.
struct TypeMeasure {
  std::uint64_t size = 0;
  std::uint64_t align = 1;
  std::vector<PaddingHole> holes;
};

HoleKind nested_kind(HoleKind inner) {
  switch (inner) {
    case HoleKind::InterField: return HoleKind::NestedInterField;
    case HoleKind::Trailing: return HoleKind::NestedTrailing;
    case HoleKind::NestedInterField:
    case HoleKind::NestedTrailing:
    case HoleKind::ArrayElementInternal:
      return inner;
  }
  return inner;
}

TypeMeasure measure_type(const TypeExpr& type, const ResolvedProgram& resolved,
                         const AbiModel& abi);

TypeMeasure measure_struct(const StructDef& def, const ResolvedProgram& resolved,
                           const AbiModel& abi) {
  StructLayout layout = layout_struct(def, resolved, abi);
  TypeMeasure m;
  m.size = layout.size;
  m.align = layout.align;
  m.holes = std::move(layout.holes);
  for (auto& hole : m.holes) hole.kind = nested_kind(hole.kind);
  return m;
}

TypeMeasure measure_type(const TypeExpr& type, const ResolvedProgram& resolved,
                         const AbiModel& abi) {
  switch (type.kind) {
    case TypeExpr::Kind::Scalar: {
      auto info = abi.scalar(type.scalar_kind);
      return {info.size, info.align, {}};
    }
    case TypeExpr::Kind::Array: {
      TypeMeasure element = measure_type(*type.element, resolved, abi);
      TypeMeasure m;
      // Mirror a compiler's "type is too large" rejection instead of
      // overflowing or materializing unbounded hole lists.
      if (element.size != 0 && type.count > kMaxTypeSize / element.size) {
        throw Error(ErrorKind::UnsupportedFeature, type.span, "array type is too large");
      }
      m.size = element.size * type.count;
      if (m.size > kMaxTypeSize ||
          element.holes.size() * type.count > kMaxHoleEntries) {
        throw Error(ErrorKind::UnsupportedFeature, type.span, "array type is too large");
      }
      m.align = element.align;
      // Element stride equals element size (size is already a multiple of
      // alignment), so every interior hole repeats once per element.
      m.holes.reserve(element.holes.size() * type.count);
      for (std::uint64_t i = 0; i < type.count; ++i) {
        for (const auto& hole : element.holes) {
          m.holes.push_back(
              {hole.start + i * element.size, hole.length, HoleKind::ArrayElementInternal});
        }
      }
      return m;
    }
    case TypeExpr::Kind::StructRef: {
      const StructDef* def = resolved.lookup(type.ref_name);
      assert(def != nullptr && "layout requires a resolved program");
      return measure_struct(*def, resolved, abi);
    }
  }
  return {};
}

}  // namespace

AbiModel::ScalarInfo AbiModel::scalar(ScalarKind kind) const {
  std::uint64_t size = 0;
  switch (kind) {
    case ScalarKind::U8:
    case ScalarKind::I8:
    case ScalarKind::Char:
      size = 1;
      break;
    case ScalarKind::U16:
    case ScalarKind::I16:
      size = 2;
      break;
    case ScalarKind::U32:
    case ScalarKind::I32:
    case ScalarKind::F32:
    case ScalarKind::Int:
      size = 4;
      break;
    case ScalarKind::U64:
    case ScalarKind::I64:
    case ScalarKind::F64:
    case ScalarKind::SizeT:
    case ScalarKind::Pointer:
      size = 8;
      break;
  }
  return {size, std::min(size, max_align)};
}

AbiModel AbiModel::default64() { return AbiModel{}; }

StructLayout layout_struct(const StructDef& def, const ResolvedProgram& resolved,
                           const AbiModel& abi) {
  std::optional<unsigned> pack = abi.forced_pack;
  if (!pack) pack = def.pack ? def.pack : abi.default_pack;

  auto effective = [&](std::uint64_t natural) {
    return pack ? std::min<std::uint64_t>(natural, *pack) : natural;
  };

  StructLayout layout;
  layout.struct_name = def.name;

  std::uint64_t cursor = 0;
  std::uint64_t align = 1;
  for (const auto& member : def.members) {
    TypeMeasure m = measure_type(member.type, resolved, abi);
    std::uint64_t member_align = effective(m.align);
    std::uint64_t offset = round_up(cursor, member_align);
    if (offset > cursor) {
      layout.holes.push_back({cursor, offset - cursor, HoleKind::InterField});
    }
    layout.fields.push_back({member.name, offset, m.size, member.type});
    for (const auto& hole : m.holes) {
      layout.holes.push_back({offset + hole.start, hole.length, hole.kind});
    }
    cursor = offset + m.size;
    align = std::max(align, member_align);
  }

  layout.align = align;
  layout.size = round_up(cursor, align);
  if (layout.size > cursor) {
    layout.holes.push_back({cursor, layout.size - cursor, HoleKind::Trailing});
  }
  std::sort(layout.holes.begin(), layout.holes.end(),
            [](const PaddingHole& a, const PaddingHole& b) { return a.start < b.start; });
  return layout;
}

std::uint64_t padded_bytes(const StructLayout& layout) {
  std::uint64_t total = 0;
  for (const auto& hole : layout.holes) total += hole.length;
  return total;
}

std::vector<ByteRange> occupied_ranges(const StructLayout& layout) {
  std::vector<ByteRange> ranges;
  std::uint64_t cursor = 0;
  for (const auto& hole : layout.holes) {
    if (hole.start > cursor) ranges.push_back({cursor, hole.start - cursor});
    cursor = hole.start + hole.length;
  }
  if (layout.size > cursor) ranges.push_back({cursor, layout.size - cursor});
  return ranges;
}

std::vector<ByteRange> hole_ranges(const StructLayout& layout) {
  std::vector<ByteRange> ranges;
  for (const auto& hole : layout.holes) {
    if (!ranges.empty() && ranges.back().start + ranges.back().length == hole.start) {
      ranges.back().length += hole.length;
    } else {
      ranges.push_back({hole.start, hole.length});
    }
  }
  return ranges;
}

std::uint64_t type_size(const TypeExpr& type, const ResolvedProgram& resolved,
                        const AbiModel& abi) {
  return measure_type(type, resolved, abi).size;
}

bool type_has_padding(const TypeExpr& type, const ResolvedProgram& resolved,
                      const AbiModel& abi) {
  return !measure_type(type, resolved, abi).holes.empty();
}

const char* hole_kind_name(HoleKind kind) {
  switch (kind) {
    case HoleKind::InterField: return "InterField";
    case HoleKind::Trailing: return "Trailing";
    case HoleKind::NestedInterField: return "NestedInterField";
    case HoleKind::NestedTrailing: return "NestedTrailing";
    case HoleKind::ArrayElementInternal: return "ArrayElementInternal";
  }
  return "InterField";
}

}  // namespace padguard
