// Copyright 2026 The cattcheck Authors
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

// Lexer and recursive-descent parser for the surface syntax.

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catt/error.h"
#include "catt/frontend.h"

namespace catt {
namespace {

enum class Tok { kIdent, kCoh, kLet, kStar, kArrow, kColon, kEq, kLParen,
                 kRParen, kEnd };

struct Token {
  Tok kind;
  std::string_view text;
  SourceLoc loc;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kIdent: return "identifier '" + std::string(t.text) + "'";
    case Tok::kEnd: return "end of input";
    default: return "'" + std::string(t.text) + "'";
  }
}

[[noreturn]] void syntax_error(SourceLoc loc, std::string message) {
  CattError e(ErrorCode::kSyntax, std::move(message));
  e.set_loc(loc);
  throw e;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         c == '\'' || c == '-';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (; n > 0; --n, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourceLoc loc{line, col};
    if (ident_start(c)) {
      std::size_t j = i + 1;
      // `-` belongs to the name unless it starts an arrow.
      while (j < text.size() && ident_char(text[j]) &&
             !(text[j] == '-' && j + 1 < text.size() && text[j + 1] == '>'))
        ++j;
      std::string_view word = text.substr(i, j - i);
      Tok kind = word == "coh" ? Tok::kCoh
                 : word == "let" ? Tok::kLet
                                 : Tok::kIdent;
      out.push_back({kind, word, loc});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::kArrow, text.substr(i, 2), loc});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '*': kind = Tok::kStar; break;
      case ':': kind = Tok::kColon; break;
      case '=': kind = Tok::kEq; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      default:
        syntax_error(loc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, text.substr(i, 1), loc});
    advance(1);
  }
  out.push_back({Tok::kEnd, {}, {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<SurfaceDecl> file() {
    std::vector<SurfaceDecl> out;
    while (peek().kind != Tok::kEnd) out.push_back(decl());
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  const Token& expect(Tok kind, std::string_view what) {
    if (peek().kind != kind)
      syntax_error(peek().loc, "expected " + std::string(what) + ", found " +
                                   describe(peek()));
    return next();
  }

  SurfaceDecl decl() {
    const Token& kw = peek();
    if (kw.kind != Tok::kCoh && kw.kind != Tok::kLet)
      syntax_error(kw.loc, "expected 'coh' or 'let', found " + describe(kw));
    next();
    DeclKind kind = kw.kind == Tok::kCoh ? DeclKind::kCoh : DeclKind::kLet;
    Ident name(expect(Tok::kIdent, "a declaration name").text);
    std::vector<std::pair<Ident, SurfaceType>> tele;
    while (peek().kind == Tok::kLParen) {
      next();
      Ident var(expect(Tok::kIdent, "a variable name").text);
      expect(Tok::kColon, "':'");
      SurfaceType ty = type();
      expect(Tok::kRParen, "')'");
      tele.emplace_back(var, std::move(ty));
    }
    if (kind == DeclKind::kCoh) {
      expect(Tok::kColon, "'(' or ':'");
      return SurfaceDecl{kind, name, std::move(tele), type(), kw.loc};
    }
    expect(Tok::kEq, "'(' or '='");
    return SurfaceDecl{kind, name, std::move(tele), term(), kw.loc};
  }

  SurfaceType type() {
    SourceLoc loc = peek().loc;
    if (peek().kind == Tok::kStar) {
      next();
      return SurfaceType{std::nullopt, loc};
    }
    SurfaceTerm src = term();
    expect(Tok::kArrow, "'->'");
    SurfaceTerm tgt = term();
    return SurfaceType{std::make_pair(std::move(src), std::move(tgt)), loc};
  }

  bool at_atom() const {
    return peek().kind == Tok::kIdent || peek().kind == Tok::kLParen;
  }

  SurfaceTerm term() {
    SourceLoc loc = peek().loc;
    SurfaceTerm head = atom();
    if (!at_atom()) return head;
    if (!head.args.empty())
      syntax_error(loc, "only a name can be applied to arguments");
    while (at_atom()) head.args.push_back(atom());
    head.loc = loc;
    return head;
  }

  SurfaceTerm atom() {
    const Token& t = peek();
    if (t.kind == Tok::kIdent) {
      next();
      return SurfaceTerm{Ident(t.text), {}, t.loc};
    }
    if (t.kind == Tok::kLParen) {
      next();
      SurfaceTerm inner = term();
      expect(Tok::kRParen, "')'");
      return inner;
    }
    syntax_error(t.loc, "expected a term, found " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<SurfaceDecl> parse(std::string_view text) {
  return Parser(lex(text)).file();
}

// ---------------------------------------------------------------------------

bool operator==(const SurfaceTerm& a, const SurfaceTerm& b) {
  return a.head == b.head && a.args == b.args;
}

bool operator==(const SurfaceType& a, const SurfaceType& b) {
  return a.arrow == b.arrow;
}

bool operator==(const SurfaceDecl& a, const SurfaceDecl& b) {
  return a.kind == b.kind && a.name == b.name && a.telescope == b.telescope &&
         a.rhs == b.rhs;
}

std::string pretty(const SurfaceTerm& t) {
  std::string out = t.head.string();
  for (const SurfaceTerm& arg : t.args)
    out += arg.args.empty() ? " " + pretty(arg) : " (" + pretty(arg) + ")";
  return out;
}

std::string pretty(const SurfaceType& ty) {
  if (!ty.arrow) return "*";
  return pretty(ty.arrow->first) + " -> " + pretty(ty.arrow->second);
}

std::string pretty(const SurfaceDecl& d) {
  std::string out = d.kind == DeclKind::kCoh ? "coh " : "let ";
  out += d.name.string();
  if (!d.telescope.empty()) out += " ";
  for (const auto& [var, ty] : d.telescope)
    out += "(" + var.string() + ":" + pretty(ty) + ")";
  if (const auto* ty = std::get_if<SurfaceType>(&d.rhs))
    return out + " : " + pretty(*ty);
  return out + " = " + pretty(std::get<SurfaceTerm>(d.rhs));
}

}  // namespace catt
