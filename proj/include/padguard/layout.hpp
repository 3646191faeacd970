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

// Struct layout computation under a configurable ABI model: sizes,
// alignments, per-member offsets, and the exact byte ranges of every
// padding hole, including holes inside nested structs and array elements
// re-expressed in the outer struct's coordinates.

#ifndef PADGUARD_LAYOUT_HPP
#define PADGUARD_LAYOUT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "padguard/ast.hpp"
#include "padguard/resolve.hpp"

namespace padguard {

/// Size/alignment rules. The default is the 64-bit System V style model:
/// alignment equals size for every scalar, pointers and size_t are 8 bytes.
struct AbiModel {
  struct ScalarInfo {
    std::uint64_t size;
    std::uint64_t align;
  };

  /// Table lookup for a scalar kind; alignment is capped by max_align.
  ScalarInfo scalar(ScalarKind kind) const;

  std::uint64_t max_align = 16;

  /// Pack value applied to structs that carry no pack directive of their
  /// own (CLI override).
  std::optional<unsigned> default_pack;

  /// Pack value applied to every struct regardless of directives. Used for
  /// the packed marshalling strategy, which relays out the whole type tree.
  std::optional<unsigned> forced_pack;

  static AbiModel default64();
};

/// Half-open byte range [start, start + length).
struct ByteRange {
  std::uint64_t start = 0;
  std::uint64_t length = 0;

  bool operator==(const ByteRange&) const = default;
};

enum class HoleKind {
  InterField,           // gap between two members of this struct
  Trailing,             // tail padding of this struct
  NestedInterField,     // inter-field gap inside a struct-typed member
  NestedTrailing,       // tail padding inside a struct-typed member
  ArrayElementInternal, // any hole inside an array element
};

const char* hole_kind_name(HoleKind kind);

struct PaddingHole {
  std::uint64_t start = 0;
  std::uint64_t length = 0;
  HoleKind kind = HoleKind::InterField;
};

struct FieldSlot {
  std::string name;
  std::uint64_t offset = 0;
  std::uint64_t size = 0;
  TypeExpr type;
};

/// Complete layout of one struct. `fields` holds the struct's own members;
/// `holes` is exhaustive: disjoint, sorted, and together with the scalar
/// bytes it partitions [0, size).
struct StructLayout {
  std::string struct_name;
  std::uint64_t size = 0;
  std::uint64_t align = 1;
  std::vector<FieldSlot> fields;
  std::vector<PaddingHole> holes;
};

/// Sequential layout: each member is placed at the cursor rounded up to
/// min(natural alignment, pack); struct alignment is the max effective
/// member alignment; size rounds the cursor up to that alignment. Total on
/// resolved, non-recursive input.
StructLayout layout_struct(const StructDef& def, const ResolvedProgram& resolved,
                           const AbiModel& abi);

/// Sum of hole lengths.
std::uint64_t padded_bytes(const StructLayout& layout);

/// Size in bytes of any type under the model (structs included).
std::uint64_t type_size(const TypeExpr& type, const ResolvedProgram& resolved,
                        const AbiModel& abi);

/// Whether the type contains any padding hole anywhere inside it.
bool type_has_padding(const TypeExpr& type, const ResolvedProgram& resolved,
                      const AbiModel& abi);

/// Maximal disjoint sorted byte ranges covered by scalar data — the
/// complement of the holes within [0, size).
std::vector<ByteRange> occupied_ranges(const StructLayout& layout);

/// Hole bytes as maximal coalesced ranges. Adjacent holes of different
/// kinds (a nested trailing hole flowing into an outer alignment gap)
/// merge into one range here; `holes` keeps them separate.
std::vector<ByteRange> hole_ranges(const StructLayout& layout);

}  // namespace padguard

#endif  // PADGUARD_LAYOUT_HPP
