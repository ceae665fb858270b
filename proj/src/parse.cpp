// Copyright 2026 The ltltest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parse.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace ltltest {

namespace {

enum class Tok {
  End,
  LParen,
  RParen,
  Not,
  And,
  Or,
  Implies,
  Iff,
  True,
  False,
  Next,
  WeakNext,
  Eventually,
  Always,
  Until,
  Ident,
};

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  std::uint32_t line;
  std::uint32_t col;

  Tok tok = Tok::End;
  std::string ident;
  std::uint32_t tok_line = 1, tok_col = 1;

  Lexer(std::string_view t, std::uint32_t l, std::uint32_t c)
      : text(t), line(l), col(c) {
    advance();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_line, tok_col);
  }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  char take() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void advance() {
    while (pos < text.size() &&
           (peek() == ' ' || peek() == '\t' || peek() == '\r' ||
            peek() == '\n'))
      take();
    tok_line = line;
    tok_col = col;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = take();
    switch (c) {
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      case '!': tok = Tok::Not; return;
      case '&': tok = Tok::And; return;
      case '|': tok = Tok::Or; return;
      case '-':
        if (peek() != '>')
          throw ParseError("expected '>' after '-'", tok_line, tok_col);
        take();
        tok = Tok::Implies;
        return;
      case '<':
        if (pos + 1 < text.size() && peek() == '-' && text[pos + 1] == '>') {
          take();
          take();
          tok = Tok::Iff;
          return;
        }
        throw ParseError("expected '<->'", tok_line, tok_col);
      default: break;
    }
    auto ident_head = [](char ch) {
      return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || ch == '_';
    };
    auto ident_tail = [&](char ch) {
      return ident_head(ch) || (ch >= '0' && ch <= '9');
    };
    if (!ident_head(c))
      throw ParseError(std::string("unexpected character '") + c + "'",
                       tok_line, tok_col);
    std::string word(1, c);
    while (pos < text.size() && ident_tail(peek())) word += take();
    if (word == "true") tok = Tok::True;
    else if (word == "false") tok = Tok::False;
    else if (word == "X") tok = Tok::Next;
    else if (word == "N") tok = Tok::WeakNext;
    else if (word == "F") tok = Tok::Eventually;
    else if (word == "G") tok = Tok::Always;
    else if (word == "U") tok = Tok::Until;
    else {
      tok = Tok::Ident;
      ident = std::move(word);
    }
  }
};

struct Parser {
  Lexer lex;
  FormulaFactory& f;

  Parser(std::string_view text, FormulaFactory& factory, std::uint32_t line,
         std::uint32_t col)
      : lex(text, line, col), f(factory) {}

  FormulaId parse() {
    FormulaId id = iff();
    if (lex.tok != Tok::End) lex.fail("unexpected trailing input");
    return id;
  }

  FormulaId iff() {  // right associative
    FormulaId lhs = implies();
    if (lex.tok == Tok::Iff) {
      lex.advance();
      return f.iff(lhs, iff());
    }
    return lhs;
  }

  FormulaId implies() {  // right associative
    FormulaId lhs = or_();
    if (lex.tok == Tok::Implies) {
      lex.advance();
      return f.implies(lhs, implies());
    }
    return lhs;
  }

  FormulaId or_() {
    FormulaId lhs = and_();
    while (lex.tok == Tok::Or) {
      lex.advance();
      lhs = f.or_(lhs, and_());
    }
    return lhs;
  }

  FormulaId and_() {
    FormulaId lhs = until();
    while (lex.tok == Tok::And) {
      lex.advance();
      lhs = f.and_(lhs, until());
    }
    return lhs;
  }

  FormulaId until() {
    FormulaId lhs = unary();
    while (lex.tok == Tok::Until) {
      lex.advance();
      lhs = f.until(lhs, unary());
    }
    return lhs;
  }

  FormulaId unary() {
    switch (lex.tok) {
      case Tok::Not:
        lex.advance();
        return f.not_(unary());
      case Tok::Next:
        lex.advance();
        return f.next(unary());
      case Tok::Eventually:
        lex.advance();
        return f.eventually(unary());
      case Tok::Always:
        lex.advance();
        return f.always(unary());
      case Tok::WeakNext:
        lex.fail("weak next 'N' is not part of the surface grammar");
      default:
        return factor();
    }
  }

  FormulaId factor() {
    switch (lex.tok) {
      case Tok::True:
        lex.advance();
        return f.make_true();
      case Tok::False:
        lex.advance();
        return f.make_false();
      case Tok::Ident: {
        FormulaId id = f.atom(lex.ident);
        lex.advance();
        return id;
      }
      case Tok::LParen: {
        lex.advance();
        FormulaId id = iff();
        if (lex.tok != Tok::RParen) lex.fail("expected ')'");
        lex.advance();
        return id;
      }
      case Tok::End:
        lex.fail("unexpected end of formula");
      default:
        lex.fail("expected a formula");
    }
  }
};

}  // namespace

FormulaId parse_ltl(std::string_view text, FormulaFactory& factory,
                    std::uint32_t line, std::uint32_t column) {
  Parser p(text, factory, line, column);
  return p.parse();
}

std::vector<std::string> Spec::input_names() const {
  return {ap->names().begin(), ap->names().begin() + num_inputs};
}

std::vector<std::string> Spec::output_names() const {
  return {ap->names().begin() + num_inputs, ap->names().end()};
}

namespace {

// Splits off a directive's identifier list; `col0` is the 1-based column of
// the first character after the directive keyword.
std::vector<std::string> split_idents(std::string_view rest,
                                      std::uint32_t lineno,
                                      std::uint32_t col0) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < rest.size()) {
    if (rest[i] == ' ' || rest[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < rest.size() && rest[j] != ' ' && rest[j] != '\t') ++j;
    std::string word(rest.substr(i, j - i));
    if (!valid_identifier(word))
      throw ParseError("invalid identifier '" + word + "'", lineno,
                       col0 + static_cast<std::uint32_t>(i));
    out.push_back(std::move(word));
    i = j;
  }
  return out;
}

}  // namespace

Spec parse_spec(std::string_view text) {
  std::vector<std::string> inputs, outputs;
  bool saw_inputs = false, saw_outputs = false;
  // Requirement text with its position, parsed after declarations are known.
  std::vector<std::tuple<std::string, std::uint32_t, std::uint32_t>> reqs;

  std::uint32_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++lineno;
    std::size_t next = end + 1;

    std::string_view line = raw.substr(0, raw.find('#'));
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      start = next;
      continue;
    }
    std::uint32_t col = static_cast<std::uint32_t>(first) + 1;
    line = line.substr(first);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r'))
      line.remove_suffix(1);

    auto starts = [&](std::string_view kw) {
      return line.size() >= kw.size() && line.substr(0, kw.size()) == kw &&
             (line.size() == kw.size() || line[kw.size()] == ' ' ||
              line[kw.size()] == '\t');
    };

    if (starts(".inputs")) {
      if (saw_inputs)
        throw ParseError("duplicate .inputs directive", lineno, col);
      if (!reqs.empty())
        throw ParseError(".inputs must precede requirements", lineno, col);
      saw_inputs = true;
      inputs = split_idents(line.substr(7), lineno, col + 7);
      if (inputs.empty())
        throw ParseError(".inputs needs at least one identifier", lineno, col);
    } else if (starts(".outputs")) {
      if (saw_outputs)
        throw ParseError("duplicate .outputs directive", lineno, col);
      if (!reqs.empty())
        throw ParseError(".outputs must precede requirements", lineno, col);
      saw_outputs = true;
      outputs = split_idents(line.substr(8), lineno, col + 8);
      if (outputs.empty())
        throw ParseError(".outputs needs at least one identifier", lineno,
                         col);
    } else if (starts(".req")) {
      if (!saw_inputs || !saw_outputs)
        throw ParseError(".req before .inputs/.outputs declarations", lineno,
                         col);
      std::string_view body = line.substr(4);
      reqs.emplace_back(std::string(body), lineno, col + 4);
    } else {
      throw ParseError("expected .inputs, .outputs or .req", lineno, col);
    }

    if (end == text.size()) break;
    start = next;
  }

  if (!saw_inputs) throw Error("spec has no .inputs declaration");
  if (!saw_outputs) throw Error("spec has no .outputs declaration");
  if (reqs.empty()) throw Error("spec has no requirements");

  Spec spec;
  spec.factory = std::make_shared<FormulaFactory>();
  auto ap = std::make_shared<VarTable>();
  for (const std::string& name : inputs)
    ap->add(name);  // throws on duplicates within the inputs
  spec.num_inputs = ap->size();
  for (const std::string& name : outputs) {
    auto existing = ap->find(name);
    if (existing && *existing < spec.num_inputs)
      throw Error("variable '" + name + "' declared as both input and output");
    ap->add(name);  // throws on duplicates within the outputs
  }
  spec.ap = ap;

  for (const auto& [body, rline, rcol] : reqs) {
    FormulaId id = parse_ltl(body, *spec.factory, rline, rcol);
    for (const std::string& a : spec.factory->atom_names(id))
      if (!ap->find(a))
        throw ParseError("undeclared atom '" + a + "'", rline, rcol);
    spec.requirements.push_back(id);
  }

  spec.conjunction = spec.requirements.front();
  for (std::size_t i = 1; i < spec.requirements.size(); ++i)
    spec.conjunction =
        spec.factory->and_(spec.conjunction, spec.requirements[i]);
  return spec;
}

Spec parse_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

}  // namespace ltltest
