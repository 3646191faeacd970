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

#ifndef PADGUARD_PARSER_HPP
#define PADGUARD_PARSER_HPP

#include <string_view>

#include "padguard/ast.hpp"
#include "padguard/error.hpp"

namespace padguard {

/// Parses interface-definition text (docs/grammar.md) into a Program.
///
/// Throws Error with kind SyntaxError on malformed input, DuplicateName on
/// repeated struct/interface/member names, UnsupportedFeature on constructs
/// outside the subset (bitfields, unions, enums, function pointers, empty
/// structs), and RecursiveType when a struct directly contains itself by
/// value. Transitive by-value cycles are diagnosed later, by resolve().
Program parse(std::string_view source_text);

}  // namespace padguard

#endif  // PADGUARD_PARSER_HPP
