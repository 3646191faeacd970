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

// Hand-rolled lexer and recursive-descent parser for the input language:
// struct/typedef-struct declarations with scalar members, fixed-size
// arrays, by-value nested structs, an optional #pragma pack(n) scoped to
// the following struct, and trusted { ... }; / untrusted { ... }; blocks
// of call signatures. Grammar in docs/grammar.md.

#include "padguard/parser.hpp"

#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace padguard {

namespace {

enum class TokKind {
  Ident,
  Integer,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Semi,
  Comma,
  Star,
  Hash,
  Colon,
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  std::uint64_t value = 0;  // Integer only
  SourceSpan span;
};

const char* tok_kind_label(TokKind kind) {
  switch (kind) {
    case TokKind::Ident: return "identifier";
    case TokKind::Integer: return "integer";
    case TokKind::LBrace: return "'{'";
    case TokKind::RBrace: return "'}'";
    case TokKind::LParen: return "'('";
    case TokKind::RParen: return "')'";
    case TokKind::LBracket: return "'['";
    case TokKind::RBracket: return "']'";
    case TokKind::Semi: return "';'";
    case TokKind::Comma: return "','";
    case TokKind::Star: return "'*'";
    case TokKind::Hash: return "'#'";
    case TokKind::Colon: return "':'";
    case TokKind::End: return "end of input";
  }
  return "token";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token tok;
    tok.span = {line_, column_};
    if (pos_ >= text_.size()) {
      tok.kind = TokKind::End;
      return tok;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance();
      }
      tok.kind = TokKind::Ident;
      tok.text = std::string(text_.substr(start, pos_ - start));
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t value = 0;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
        if (value > (UINT64_MAX - digit) / 10) {
          throw Error(ErrorKind::SyntaxError, tok.span, "integer literal too large");
        }
        value = value * 10 + digit;
        advance();
      }
      tok.kind = TokKind::Integer;
      tok.value = value;
      tok.text = std::string(text_.substr(start, pos_ - start));
      return tok;
    }
    switch (c) {
      case '{': tok.kind = TokKind::LBrace; break;
      case '}': tok.kind = TokKind::RBrace; break;
      case '(': tok.kind = TokKind::LParen; break;
      case ')': tok.kind = TokKind::RParen; break;
      case '[': tok.kind = TokKind::LBracket; break;
      case ']': tok.kind = TokKind::RBracket; break;
      case ';': tok.kind = TokKind::Semi; break;
      case ',': tok.kind = TokKind::Comma; break;
      case '*': tok.kind = TokKind::Star; break;
      case '#': tok.kind = TokKind::Hash; break;
      case ':': tok.kind = TokKind::Colon; break;
      default: {
        std::ostringstream msg;
        if (std::isprint(static_cast<unsigned char>(c))) {
          msg << "unexpected character '" << c << "'";
        } else {
          msg << "unexpected byte 0x" << std::hex
              << static_cast<unsigned>(static_cast<unsigned char>(c));
        }
        throw Error(ErrorKind::SyntaxError, tok.span, msg.str());
      }
    }
    tok.text = std::string(1, c);
    advance();
    return tok;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
        continue;
      }
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        SourceSpan open{line_, column_};
        advance();
        advance();
        bool closed = false;
        while (pos_ < text_.size()) {
          if (text_[pos_] == '*' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
            advance();
            advance();
            closed = true;
            break;
          }
          advance();
        }
        if (!closed) {
          throw Error(ErrorKind::SyntaxError, open, "unterminated block comment");
        }
        continue;
      }
      break;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

  Program parse_program() {
    Program program;
    while (tok_.kind != TokKind::End) {
      if (tok_.kind == TokKind::Hash) {
        std::optional<unsigned> pack = parse_pack_directive();
        if (!is_ident("typedef") && !is_ident("struct")) {
          throw Error(ErrorKind::SyntaxError, tok_.span,
                      "expected a struct declaration after the pack directive");
        }
        parse_struct_decl(program, pack);
      } else if (is_ident("typedef") || is_ident("struct")) {
        parse_struct_decl(program, std::nullopt);
      } else if (is_ident("trusted")) {
        parse_interface_block(program, Direction::Ecall);
      } else if (is_ident("untrusted")) {
        parse_interface_block(program, Direction::Ocall);
      } else if (is_ident("union") || is_ident("enum")) {
        throw Error(ErrorKind::UnsupportedFeature, tok_.span,
                    "'" + tok_.text + "' declarations are not supported");
      } else {
        throw Error(ErrorKind::SyntaxError, tok_.span,
                    "expected 'struct', 'typedef', '#pragma pack', 'trusted', or "
                    "'untrusted', found " +
                        describe(tok_));
      }
    }
    return program;
  }

 private:
  bool is_ident(std::string_view text) const {
    return tok_.kind == TokKind::Ident && tok_.text == text;
  }

  static std::string describe(const Token& tok) {
    if (tok.kind == TokKind::Ident) return "'" + tok.text + "'";
    if (tok.kind == TokKind::Integer) return "'" + tok.text + "'";
    return tok_kind_label(tok.kind);
  }

  Token advance() {
    Token prev = std::move(tok_);
    tok_ = lexer_.next();
    return prev;
  }

  Token expect(TokKind kind, std::string_view what) {
    if (tok_.kind != kind) {
      throw Error(ErrorKind::SyntaxError, tok_.span,
                  "expected " + std::string(what) + ", found " + describe(tok_));
    }
    return advance();
  }

  Token expect_ident(std::string_view what) { return expect(TokKind::Ident, what); }

  unsigned parse_pack_directive() {
    expect(TokKind::Hash, "'#'");
    Token word = expect_ident("'pragma'");
    if (word.text != "pragma") {
      throw Error(ErrorKind::SyntaxError, word.span,
                  "expected 'pragma', found '" + word.text + "'");
    }
    Token pack_word = expect_ident("'pack'");
    if (pack_word.text != "pack") {
      throw Error(ErrorKind::UnsupportedFeature, pack_word.span,
                  "only '#pragma pack(n)' is supported");
    }
    expect(TokKind::LParen, "'('");
    Token value = expect(TokKind::Integer, "a pack value");
    expect(TokKind::RParen, "')'");
    std::uint64_t n = value.value;
    bool power_of_two = n != 0 && (n & (n - 1)) == 0;
    if (!power_of_two || n > 16) {
      throw Error(ErrorKind::UnsupportedFeature, value.span,
                  "pack value must be a power of two no larger than 16");
    }
    return static_cast<unsigned>(n);
  }

  // Parses the non-declarator part of a type: a scalar spelling, a struct
  // reference (with optional 'struct' keyword), plus any '*' declarators,
  // which collapse the type to an opaque pointer scalar.
  TypeExpr parse_base_type() {
    if (is_ident("union") || is_ident("enum")) {
      throw Error(ErrorKind::UnsupportedFeature, tok_.span,
                  "'" + tok_.text + "' types are not supported");
    }
    SourceSpan span = tok_.span;
    std::string spelling;
    TypeExpr type;
    if (is_ident("struct")) {
      advance();
      Token name = expect_ident("a struct name");
      spelling = "struct " + name.text;
      type = TypeExpr::struct_ref(name.text, span);
    } else if (is_ident("void")) {
      // Only valid as a pointer base; plain 'void' is handled by callers.
      advance();
      spelling = "void";
      if (tok_.kind != TokKind::Star) {
        throw Error(ErrorKind::SyntaxError, span, "'void' is not a value type here");
      }
      type = TypeExpr::scalar(ScalarKind::U8, span);  // replaced below by the '*'
    } else {
      Token name = expect_ident("a type name");
      spelling = name.text;
      if (auto scalar = scalar_from_spelling(name.text)) {
        type = TypeExpr::scalar(*scalar, span);
      } else {
        type = TypeExpr::struct_ref(name.text, span);
      }
    }
    while (tok_.kind == TokKind::Star) {
      advance();
      type = TypeExpr::pointer(spelling, span);
      spelling += "*";
    }
    return type;
  }

  void parse_struct_decl(Program& program, std::optional<unsigned> pack) {
    SourceSpan span = tok_.span;
    if (is_ident("typedef")) advance();
    Token struct_kw = expect_ident("'struct'");
    if (struct_kw.text != "struct") {
      if (struct_kw.text == "union" || struct_kw.text == "enum") {
        throw Error(ErrorKind::UnsupportedFeature, struct_kw.span,
                    "'" + struct_kw.text + "' declarations are not supported");
      }
      throw Error(ErrorKind::SyntaxError, struct_kw.span,
                  "expected 'struct', found '" + struct_kw.text + "'");
    }

    std::string tag;
    if (tok_.kind == TokKind::Ident) tag = advance().text;

    expect(TokKind::LBrace, "'{'");

    StructDef def;
    def.pack = pack;
    def.span = span;
    std::set<std::string> member_names;
    while (tok_.kind != TokKind::RBrace) {
      if (tok_.kind == TokKind::End) {
        throw Error(ErrorKind::SyntaxError, tok_.span, "expected '}' before end of input");
      }
      StructMember member = parse_member();
      if (!member_names.insert(member.name).second) {
        throw Error(ErrorKind::DuplicateName, member.span,
                    "duplicate member '" + member.name + "'");
      }
      def.members.push_back(std::move(member));
    }
    Token close = advance();  // '}'
    if (def.members.empty()) {
      throw Error(ErrorKind::UnsupportedFeature, close.span, "structs must have members");
    }

    std::string typedef_name;
    if (tok_.kind == TokKind::Ident) typedef_name = advance().text;
    expect(TokKind::Semi, "';'");

    if (!typedef_name.empty()) {
      def.name = typedef_name;
    } else if (!tag.empty()) {
      def.name = tag;
    } else {
      throw Error(ErrorKind::UnsupportedFeature, span, "anonymous structs are not supported");
    }

    if (scalar_from_spelling(def.name)) {
      throw Error(ErrorKind::DuplicateName, span,
                  "struct name '" + def.name + "' redefines a built-in type");
    }
    if (program.find_struct(def.name)) {
      throw Error(ErrorKind::DuplicateName, span, "duplicate struct '" + def.name + "'");
    }
    for (const auto& member : def.members) {
      if (member.type.kind == TypeExpr::Kind::StructRef && member.type.ref_name == def.name) {
        throw Error(ErrorKind::RecursiveType, member.span,
                    "struct '" + def.name + "' contains itself by value");
      }
      // Arrays of the struct itself are equally ill-formed.
      const TypeExpr* t = &member.type;
      while (t->kind == TypeExpr::Kind::Array) t = t->element.get();
      if (t->kind == TypeExpr::Kind::StructRef && t->ref_name == def.name) {
        throw Error(ErrorKind::RecursiveType, member.span,
                    "struct '" + def.name + "' contains itself by value");
      }
    }

    program.structs.push_back(std::move(def));
  }

  StructMember parse_member() {
    StructMember member;
    member.span = tok_.span;
    member.type = parse_base_type();
    Token name = expect_ident("a member name");
    member.name = name.text;

    if (tok_.kind == TokKind::LParen) {
      throw Error(ErrorKind::UnsupportedFeature, tok_.span,
                  "function members are not supported");
    }

    std::vector<std::pair<std::uint64_t, SourceSpan>> dims;
    while (tok_.kind == TokKind::LBracket) {
      advance();
      Token count = expect(TokKind::Integer, "an array size");
      expect(TokKind::RBracket, "']'");
      if (count.value == 0) {
        throw Error(ErrorKind::UnsupportedFeature, count.span,
                    "zero-length arrays are not supported");
      }
      dims.emplace_back(count.value, count.span);
    }
    // b[2][3] is array-of-2 of array-of-3: wrap innermost-first.
    for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
      member.type = TypeExpr::array(std::move(member.type), it->first, it->second);
    }

    if (tok_.kind == TokKind::Colon) {
      throw Error(ErrorKind::UnsupportedFeature, tok_.span, "bitfields are not supported");
    }
    expect(TokKind::Semi, "';'");
    return member;
  }

  void parse_interface_block(Program& program, Direction direction) {
    advance();  // 'trusted' / 'untrusted'
    expect(TokKind::LBrace, "'{'");
    while (tok_.kind != TokKind::RBrace) {
      if (tok_.kind == TokKind::End) {
        throw Error(ErrorKind::SyntaxError, tok_.span, "expected '}' before end of input");
      }
      if (is_ident("public")) {
        throw Error(ErrorKind::UnsupportedFeature, tok_.span,
                    "interface qualifiers are not supported");
      }
      parse_interface(program, direction);
    }
    advance();  // '}'
    expect(TokKind::Semi, "';'");
  }

  void parse_interface(Program& program, Direction direction) {
    InterfaceDef iface;
    iface.direction = direction;
    iface.span = tok_.span;

    if (is_ident("void")) {
      // Distinguish a void return from a void* return.
      SourceSpan span = tok_.span;
      advance();
      if (tok_.kind == TokKind::Star) {
        std::string spelling = "void";
        TypeExpr type = TypeExpr::pointer(spelling, span);
        spelling += "*";
        advance();
        while (tok_.kind == TokKind::Star) {
          type = TypeExpr::pointer(spelling, span);
          spelling += "*";
          advance();
        }
        iface.return_type = std::move(type);
      }
    } else {
      iface.return_type = parse_base_type();
      if (iface.return_type->kind == TypeExpr::Kind::Array) {
        throw Error(ErrorKind::UnsupportedFeature, iface.return_type->span,
                    "array return types are not supported");
      }
    }

    Token name = expect_ident("an interface name");
    iface.name = name.text;
    for (const auto& existing : program.interfaces) {
      if (existing.name == iface.name) {
        throw Error(ErrorKind::DuplicateName, name.span,
                    "duplicate interface '" + iface.name + "'");
      }
    }

    expect(TokKind::LParen, "'('");
    if (is_ident("void") ) {
      // f(void): empty parameter list — unless it is a void* parameter.
      SourceSpan span = tok_.span;
      advance();
      if (tok_.kind == TokKind::RParen) {
        advance();
      } else if (tok_.kind == TokKind::Star) {
        parse_param_tail(iface, span, "void");
        parse_more_params(iface);
      } else {
        throw Error(ErrorKind::SyntaxError, tok_.span,
                    "expected ')' or '*' after 'void', found " + describe(tok_));
      }
    } else if (tok_.kind == TokKind::RParen) {
      advance();
    } else {
      parse_param(iface);
      parse_more_params(iface);
    }
    expect(TokKind::Semi, "';'");
    program.interfaces.push_back(std::move(iface));
  }

  void parse_more_params(InterfaceDef& iface) {
    while (tok_.kind == TokKind::Comma) {
      advance();
      parse_param(iface);
    }
    expect(TokKind::RParen, "')' or ','");
  }

  void parse_param(InterfaceDef& iface) {
    if (tok_.kind == TokKind::LBracket) {
      throw Error(ErrorKind::UnsupportedFeature, tok_.span,
                  "parameter attributes are not supported");
    }
    SourceSpan span = tok_.span;
    if (is_ident("void")) {
      advance();
      if (tok_.kind != TokKind::Star) {
        throw Error(ErrorKind::SyntaxError, span, "'void' is not a parameter type");
      }
      parse_param_tail(iface, span, "void");
      return;
    }
    Param param;
    param.span = span;
    param.type = parse_base_type();
    finish_param(iface, std::move(param));
  }

  // Shared tail for parameters whose base type is 'void' (void* and deeper).
  void parse_param_tail(InterfaceDef& iface, SourceSpan span, std::string spelling) {
    Param param;
    param.span = span;
    param.type = TypeExpr::pointer(spelling, span);
    spelling += "*";
    advance();  // first '*'
    while (tok_.kind == TokKind::Star) {
      param.type = TypeExpr::pointer(spelling, span);
      spelling += "*";
      advance();
    }
    finish_param(iface, std::move(param));
  }

  void finish_param(InterfaceDef& iface, Param param) {
    Token name = expect_ident("a parameter name");
    param.name = name.text;
    if (tok_.kind == TokKind::LBracket) {
      throw Error(ErrorKind::UnsupportedFeature, tok_.span,
                  "array parameters are not supported");
    }
    for (const auto& existing : iface.params) {
      if (existing.name == param.name) {
        throw Error(ErrorKind::DuplicateName, name.span,
                    "duplicate parameter '" + param.name + "'");
      }
    }
    iface.params.push_back(std::move(param));
  }

  Lexer lexer_;
  Token tok_;
};

}  // namespace

Program parse(std::string_view source_text) {
  Parser parser(source_text);
  return parser.parse_program();
}

}  // namespace padguard
