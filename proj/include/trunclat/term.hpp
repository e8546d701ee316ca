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

#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "trunclat/rational.hpp"

namespace trunclat {

class Term;
using TermPtr = std::shared_ptr<const Term>;

enum class BinaryOp { Add, Sub, Join, Meet };
enum class UnaryOp { Abs, Pos, Neg, Trunc };

/// Immutable expression tree. Children are shared, so copies are cheap.
///
/// Precedence, loosest to tightest: \/, /\, + and -, scalar *, then the
/// bracketed forms |e|, pos(e), neg(e), tr(e), (e). All binary operators are
/// left associative, so "x + y /\ z" is (x + y) /\ z.
class Term {
 public:
  struct Var {
    std::string name;
    friend bool operator==(const Var&, const Var&) = default;
  };
  /// A rational c other than the literal "1". In a unitization it denotes
  /// c·1; outside one only 0 evaluates.
  struct Lit {
    Rational value;
    friend bool operator==(const Lit&, const Lit&) = default;
  };
  /// The unit 1 of E ⊕ R.
  struct One {
    friend bool operator==(const One&, const One&) = default;
  };
  struct Scale {
    Rational factor;
    TermPtr arg;
  };
  struct Binary {
    BinaryOp op;
    TermPtr lhs;
    TermPtr rhs;
  };
  struct Unary {
    UnaryOp op;
    TermPtr arg;
  };
  using Node = std::variant<Var, Lit, One, Scale, Binary, Unary>;

  explicit Term(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

TermPtr var(std::string name);
TermPtr lit(Rational value);
TermPtr one();
TermPtr scale(Rational factor, TermPtr arg);
TermPtr binary(BinaryOp op, TermPtr lhs, TermPtr rhs);
TermPtr unary(UnaryOp op, TermPtr arg);

/// Structural equality.
bool equal(const Term& a, const Term& b);
inline bool equal(const TermPtr& a, const TermPtr& b) { return equal(*a, *b); }

std::set<std::string> free_vars(const Term& t);

/// Canonical text with every compound subterm parenthesized; parse(render(t))
/// is structurally equal to t.
std::string render(const Term& t);

/// Throws ParseError with the byte offset and the accepted tokens.
TermPtr parse_term(std::string_view text);

/// Words that cannot be variable names.
bool is_keyword(std::string_view word);

enum class Relation { Leq, Eq, Geq, Disjoint };

const char* relation_symbol(Relation r);

struct Assertion {
  TermPtr lhs;
  Relation relation;
  TermPtr rhs;
};

/// "lhs REL rhs" with REL one of <=, ==, >= or the word perp (|lhs| /\ |rhs|
/// == 0).
Assertion parse_assertion(std::string_view text);
std::string render(const Assertion& a);

}  // namespace trunclat
