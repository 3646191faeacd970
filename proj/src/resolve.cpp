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

#include "padguard/resolve.hpp"

#include <sstream>
#include <utility>

namespace padguard {

namespace {

// The struct reference underneath any array nesting, if there is one.
const TypeExpr* struct_ref_core(const TypeExpr& type) {
  const TypeExpr* t = &type;
  while (t->kind == TypeExpr::Kind::Array) t = t->element.get();
  return t->kind == TypeExpr::Kind::StructRef ? t : nullptr;
}

class Resolver {
 public:
  explicit Resolver(const Program& program,
                    const std::unordered_map<std::string, std::size_t>& index_by_name)
      : program_(program), index_by_name_(index_by_name) {
    color_.assign(program.structs.size(), Color::White);
  }

  std::vector<std::size_t> run() {
    for (std::size_t i = 0; i < program_.structs.size(); ++i) visit(i);
    check_interfaces();
    return std::move(order_);
  }

 private:
  enum class Color { White, Grey, Black };

  void visit(std::size_t index) {
    if (color_[index] == Color::Black) return;
    if (color_[index] == Color::Grey) {
      // Re-entered a struct on the active path: by-value cycle.
      std::ostringstream msg;
      msg << "recursive struct nesting: ";
      bool started = false;
      for (std::size_t i : path_) {
        if (i == index) started = true;
        if (started) msg << program_.structs[i].name << " -> ";
      }
      msg << program_.structs[index].name;
      throw Error(ErrorKind::RecursiveType, program_.structs[index].span, msg.str());
    }
    color_[index] = Color::Grey;
    path_.push_back(index);
    for (const auto& member : program_.structs[index].members) {
      if (const TypeExpr* ref = struct_ref_core(member.type)) {
        visit(lookup_or_throw(ref->ref_name, ref->span));
      }
    }
    path_.pop_back();
    color_[index] = Color::Black;
    order_.push_back(index);
  }

  void check_interfaces() {
    for (const auto& iface : program_.interfaces) {
      if (iface.return_type) {
        if (const TypeExpr* ref = struct_ref_core(*iface.return_type)) {
          lookup_or_throw(ref->ref_name, ref->span);
        }
      }
      for (const auto& param : iface.params) {
        if (const TypeExpr* ref = struct_ref_core(param.type)) {
          lookup_or_throw(ref->ref_name, ref->span);
        }
      }
    }
  }

  std::size_t lookup_or_throw(const std::string& name, SourceSpan span) {
    auto it = index_by_name_.find(name);
    if (it == index_by_name_.end()) {
      throw Error(ErrorKind::UnresolvedType, span, "unknown type '" + name + "'");
    }
    return it->second;
  }

  const Program& program_;
  const std::unordered_map<std::string, std::size_t>& index_by_name_;
  std::vector<Color> color_;
  std::vector<std::size_t> path_;
  std::vector<std::size_t> order_;
};

}  // namespace

ResolvedProgram::ResolvedProgram(Program program) : program_(std::move(program)) {
  for (std::size_t i = 0; i < program_.structs.size(); ++i) {
    index_by_name_.emplace(program_.structs[i].name, i);
  }
}

const StructDef* ResolvedProgram::lookup(std::string_view name) const {
  auto it = index_by_name_.find(std::string(name));
  return it == index_by_name_.end() ? nullptr : &program_.structs[it->second];
}

ResolvedProgram resolve(Program program) {
  ResolvedProgram resolved(std::move(program));
  Resolver resolver(resolved.program_, resolved.index_by_name_);
  resolved.topo_order_ = resolver.run();
  return resolved;
}

}  // namespace padguard
