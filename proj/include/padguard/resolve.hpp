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

#ifndef PADGUARD_RESOLVE_HPP
#define PADGUARD_RESOLVE_HPP

#include <cstddef>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "padguard/ast.hpp"
#include "padguard/error.hpp"

namespace padguard {

/// A program with every struct reference bound and a dependency order
/// established: topo_order lists struct indices such that every struct
/// appears after all structs it contains by value.
class ResolvedProgram {
 public:
  explicit ResolvedProgram(Program program);

  const Program& program() const { return program_; }

  /// Looks up a struct definition by name; nullptr if absent.
  const StructDef* lookup(std::string_view name) const;

  /// Indices into program().structs, dependencies first.
  const std::vector<std::size_t>& topo_order() const { return topo_order_; }

 private:
  friend ResolvedProgram resolve(Program program);

  Program program_;
  std::unordered_map<std::string, std::size_t> index_by_name_;
  std::vector<std::size_t> topo_order_;
};

/// Binds struct references and orders structs by dependency.
///
/// Throws Error(UnresolvedType) for a reference to an undefined struct
/// (including references from interface signatures) and Error(RecursiveType)
/// for by-value cycles; the cycle path is spelled out in the message.
ResolvedProgram resolve(Program program);

}  // namespace padguard

#endif  // PADGUARD_RESOLVE_HPP
