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

#include "padguard/error.hpp"

#include <sstream>

namespace padguard {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "syntax error";
    case ErrorKind::DuplicateName: return "duplicate name";
    case ErrorKind::UnsupportedFeature: return "unsupported feature";
    case ErrorKind::UnresolvedType: return "unresolved type";
    case ErrorKind::RecursiveType: return "recursive type";
    case ErrorKind::UnsupportedStrategy: return "unsupported strategy";
    case ErrorKind::OutOfBounds: return "out of bounds";
    case ErrorKind::IoError: return "io error";
  }
  return "error";
}

std::string Error::format() const {
  std::ostringstream out;
  if (has_span()) out << span_.line << ":" << span_.column << ": ";
  out << error_kind_name(kind_) << ": " << what();
  return out.str();
}

}  // namespace padguard
