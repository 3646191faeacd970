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

#ifndef PADGUARD_ERROR_HPP
#define PADGUARD_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "padguard/ast.hpp"

namespace padguard {

enum class ErrorKind {
  SyntaxError,
  DuplicateName,
  UnsupportedFeature,
  UnresolvedType,
  RecursiveType,
  UnsupportedStrategy,
  OutOfBounds,
  IoError,
};

const char* error_kind_name(ErrorKind kind);

/// Diagnostic carried by every failure in the pipeline. `what()` is the
/// plain message; format() prepends "line:col: kind:" when a span is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, SourceSpan span, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind), span_(span) {}

  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  SourceSpan span() const { return span_; }
  bool has_span() const { return span_.line > 0; }

  /// Index of the offending copy step, set only for OutOfBounds.
  std::optional<std::size_t> step_index() const { return step_index_; }
  void set_step_index(std::size_t index) { step_index_ = index; }

  std::string format() const;

 private:
  ErrorKind kind_;
  SourceSpan span_{};
  std::optional<std::size_t> step_index_;
};

}  // namespace padguard

#endif  // PADGUARD_ERROR_HPP
