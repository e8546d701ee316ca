//  Copyright 2026 The trunclat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "trunclat/term.hpp"

#include <cctype>
#include <vector>

#include "trunclat/error.hpp"

namespace trunclat {

TermPtr var(std::string name) { return std::make_shared<Term>(Term::Var{std::move(name)}); }
TermPtr lit(Rational value) { return std::make_shared<Term>(Term::Lit{std::move(value)}); }
TermPtr one() { return std::make_shared<Term>(Term::One{}); }
TermPtr scale(Rational factor, TermPtr arg) {
  return std::make_shared<Term>(Term::Scale{std::move(factor), std::move(arg)});
}
TermPtr binary(BinaryOp op, TermPtr lhs, TermPtr rhs) {
  return std::make_shared<Term>(Term::Binary{op, std::move(lhs), std::move(rhs)});
}
TermPtr unary(UnaryOp op, TermPtr arg) {
  return std::make_shared<Term>(Term::Unary{op, std::move(arg)});
}

bool equal(const Term& a, const Term& b) {
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T* y = std::get_if<T>(&b.node());
        if (y == nullptr) return false;
        if constexpr (std::is_same_v<T, Term::Scale>) {
          return x.factor == y->factor && equal(*x.arg, *y->arg);
        } else if constexpr (std::is_same_v<T, Term::Binary>) {
          return x.op == y->op && equal(*x.lhs, *y->lhs) && equal(*x.rhs, *y->rhs);
        } else if constexpr (std::is_same_v<T, Term::Unary>) {
          return x.op == y->op && equal(*x.arg, *y->arg);
        } else {
          return x == *y;
        }
      },
      a.node());
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  std::visit(
      [&out](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Term::Var>) {
          out.insert(x.name);
        } else if constexpr (std::is_same_v<T, Term::Scale> || std::is_same_v<T, Term::Unary>) {
          collect_vars(*x.arg, out);
        } else if constexpr (std::is_same_v<T, Term::Binary>) {
          collect_vars(*x.lhs, out);
          collect_vars(*x.rhs, out);
        }
      },
      t.node());
}

const char* binary_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Join: return "\\/";
    case BinaryOp::Meet: return "/\\";
  }
  return "?";
}

const char* unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Abs: return "|";
    case UnaryOp::Pos: return "pos";
    case UnaryOp::Neg: return "neg";
    case UnaryOp::Trunc: return "tr";
  }
  return "?";
}

// ---- lexer ---------------------------------------------------------------

enum class Tok { Num, Ident, Join, Meet, Plus, Minus, Star, Bar, LParen, RParen, Leq, Geq, EqEq, End, Bad };

const char* tok_name(Tok k) {
  switch (k) {
    case Tok::Num: return "number";
    case Tok::Ident: return "variable";
    case Tok::Join: return "'\\/'";
    case Tok::Meet: return "'/\\'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Bar: return "'|'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Leq: return "'<='";
    case Tok::Geq: return "'>='";
    case Tok::EqEq: return "'=='";
    case Tok::End: return "end of input";
    case Tok::Bad: return "invalid character";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto two = [&](char a, char b) { return i + 1 < s.size() && s[i] == a && s[i + 1] == b; };
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) {
      out.push_back({Tok::End, i, ""});
      return out;
    }
    const std::size_t start = i;
    auto emit = [&](Tok k, std::size_t len) {
      out.push_back({k, start, std::string(s.substr(start, len))});
      i = start + len;
    };
    if (digit(s[i])) {
      std::size_t j = i;
      while (j < s.size() && digit(s[j])) ++j;
      if (j + 1 < s.size() && s[j] == '/' && digit(s[j + 1])) {
        ++j;
        while (j < s.size() && digit(s[j])) ++j;
      }
      emit(Tok::Num, j - i);
    } else if (ident_start(s[i])) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      emit(Tok::Ident, j - i);
    } else if (two('\\', '/')) {
      emit(Tok::Join, 2);
    } else if (two('/', '\\')) {
      emit(Tok::Meet, 2);
    } else if (two('<', '=')) {
      emit(Tok::Leq, 2);
    } else if (two('>', '=')) {
      emit(Tok::Geq, 2);
    } else if (two('=', '=')) {
      emit(Tok::EqEq, 2);
    } else {
      switch (s[i]) {
        case '+': emit(Tok::Plus, 1); break;
        case '-': emit(Tok::Minus, 1); break;
        case '*': emit(Tok::Star, 1); break;
        case '|': emit(Tok::Bar, 1); break;
        case '(': emit(Tok::LParen, 1); break;
        case ')': emit(Tok::RParen, 1); break;
        default: emit(Tok::Bad, 1); break;
      }
    }
  }
}

// ---- parser --------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  TermPtr whole_term() {
    TermPtr t = expr();
    expect(Tok::End);
    return t;
  }

  Assertion whole_assertion() {
    TermPtr lhs = expr();
    Relation rel;
    if (accept(Tok::Leq)) {
      rel = Relation::Leq;
    } else if (accept(Tok::EqEq)) {
      rel = Relation::Eq;
    } else if (accept(Tok::Geq)) {
      rel = Relation::Geq;
    } else if (accept_word("perp")) {
      rel = Relation::Disjoint;
    } else {
      fail();
    }
    TermPtr rhs = expr();
    expect(Tok::End);
    return {std::move(lhs), rel, std::move(rhs)};
  }

 private:
  const Token& cur() const { return toks_[pos_]; }

  bool accept(Tok k) {
    if (cur().kind == k) {
      ++pos_;
      expected_.clear();
      return true;
    }
    expected_.insert(tok_name(k));
    return false;
  }

  bool accept_word(const char* word) {
    if (cur().kind == Tok::Ident && cur().text == word) {
      ++pos_;
      expected_.clear();
      return true;
    }
    expected_.insert(std::string("'") + word + "'");
    return false;
  }

  void expect(Tok k) {
    if (!accept(k)) fail();
  }

  [[noreturn]] void fail() const {
    const Token& t = cur();
    throw ParseError(t.offset, {expected_.begin(), expected_.end()},
                     t.kind == Tok::End ? "end of input" : t.text);
  }

  TermPtr expr() {
    TermPtr l = meet_level();
    while (accept(Tok::Join)) l = binary(BinaryOp::Join, l, meet_level());
    return l;
  }

  TermPtr meet_level() {
    TermPtr l = sum();
    while (accept(Tok::Meet)) l = binary(BinaryOp::Meet, l, sum());
    return l;
  }

  TermPtr sum() {
    TermPtr l = prod();
    while (true) {
      if (accept(Tok::Plus)) {
        l = binary(BinaryOp::Add, l, prod());
      } else if (accept(Tok::Minus)) {
        l = binary(BinaryOp::Sub, l, prod());
      } else {
        return l;
      }
    }
  }

  TermPtr prod() {
    const bool signed_number =
        cur().kind == Tok::Minus && toks_[pos_ + 1].kind == Tok::Num;
    if (cur().kind == Tok::Num || signed_number) {
      const std::size_t offset = cur().offset;
      std::string text;
      if (signed_number) {
        text = "-";
        ++pos_;
      }
      text += cur().text;
      ++pos_;
      expected_.clear();
      Rational value;
      try {
        value = Rational::parse(text);
      } catch (const Error&) {
        throw ParseError(offset, {"nonzero denominator"}, text);
      }
      if (accept(Tok::Star)) return scale(std::move(value), prod());
      if (text == "1") return one();
      return lit(std::move(value));
    }
    expected_.insert("number");
    return atom();
  }

  TermPtr atom() {
    if (accept(Tok::Bar)) {
      TermPtr e = expr();
      expect(Tok::Bar);
      return unary(UnaryOp::Abs, std::move(e));
    }
    if (accept(Tok::LParen)) {
      TermPtr e = expr();
      expect(Tok::RParen);
      return e;
    }
    if (cur().kind == Tok::Ident) {
      const std::string name = cur().text;
      if (name == "perp") {
        expected_.insert("operand");
        fail();
      }
      ++pos_;
      expected_.clear();
      for (UnaryOp op : {UnaryOp::Pos, UnaryOp::Neg, UnaryOp::Trunc}) {
        if (name == unary_name(op)) {
          expect(Tok::LParen);
          TermPtr e = expr();
          expect(Tok::RParen);
          return unary(op, std::move(e));
        }
      }
      return var(name);
    }
    expected_.insert(tok_name(Tok::Ident));
    expected_.insert("'pos'");
    expected_.insert("'neg'");
    expected_.insert("'tr'");
    fail();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> expected_;
};

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

std::string render(const Term& t) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Term::Var>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, Term::Lit>) {
          return x.value.str();
        } else if constexpr (std::is_same_v<T, Term::One>) {
          return "1";
        } else if constexpr (std::is_same_v<T, Term::Scale>) {
          return "(" + x.factor.str() + " * " + render(*x.arg) + ")";
        } else if constexpr (std::is_same_v<T, Term::Binary>) {
          return "(" + render(*x.lhs) + " " + binary_symbol(x.op) + " " + render(*x.rhs) + ")";
        } else {
          if (x.op == UnaryOp::Abs) return "|" + render(*x.arg) + "|";
          return std::string(unary_name(x.op)) + "(" + render(*x.arg) + ")";
        }
      },
      t.node());
}

TermPtr parse_term(std::string_view text) { return Parser(text).whole_term(); }

bool is_keyword(std::string_view word) {
  return word == "pos" || word == "neg" || word == "tr" || word == "perp";
}

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::Leq: return "<=";
    case Relation::Eq: return "==";
    case Relation::Geq: return ">=";
    case Relation::Disjoint: return "perp";
  }
  return "?";
}

Assertion parse_assertion(std::string_view text) { return Parser(text).whole_assertion(); }

std::string render(const Assertion& a) {
  return render(*a.lhs) + " " + relation_symbol(a.relation) + " " + render(*a.rhs);
}

}  // namespace trunclat
