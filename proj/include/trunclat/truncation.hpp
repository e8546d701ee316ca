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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "trunclat/element.hpp"
#include "trunclat/json_io.hpp"
#include "trunclat/law_report.hpp"

namespace trunclat {

enum class TruncationKind {
  MeetWithUnit,    // x -> x ^ u, any space, u >= 0
  MeetWithOne,     // x -> x ^ 1 componentwise on SparseSeq (1 is not in c00)
  LexMeetZeroOne,  // x -> x ^ (0,1) on LexPlane
  Identity,        // x -> x on IdentityLine
  Fixture,         // arbitrary map, used to exercise refutation paths
};

/// A named truncation attached to a space. Values are immutable; fixtures
/// hold a pure std::function.
class Truncation {
 public:
  using Map = std::function<Element(const Element&)>;

  /// Throws InvalidDescriptor unless unit >= 0.
  static Truncation meet_with_unit(Element unit);
  static Truncation meet_with_one();
  static Truncation lex_meet_zero_one();
  static Truncation identity();
  /// The map is trusted as-is; the law checkers are what judge it.
  static Truncation fixture(Space space, std::string name, Map map);

  const Space& space() const { return space_; }
  TruncationKind kind() const { return kind_; }
  /// Unital means x -> x ^ u for a fixed u >= 0 (the truncation unit).
  bool unital() const { return unit_.has_value(); }
  /// The truncation unit; present iff unital().
  const std::optional<Element>& unit() const { return unit_; }
  const std::string& name() const { return name_; }

  /// Applies the map without checking the input sign.
  Element apply(const Element& x) const;

 private:
  Truncation(Space space, TruncationKind kind, std::string name,
             std::optional<Element> unit, Map map = {})
      : space_(space),
        kind_(kind),
        name_(std::move(name)),
        unit_(std::move(unit)),
        map_(std::move(map)) {}

  Space space_;
  TruncationKind kind_;
  std::string name_;
  std::optional<Element> unit_;
  Map map_;
};

/// The truncation each space ships with: meet_with_one on SparseSeq,
/// lex_meet_zero_one on LexPlane, identity on IdentityLine and meet with the
/// all-ones vector on FinitePointwise.
Truncation default_truncation(const Space& space);

/// {"kind":"meet_with_one"} | {"kind":"meet_with_unit","unit":<element>} |
/// {"kind":"lex_meet_zero_one"} | {"kind":"identity"}
Json truncation_to_json(const Truncation& t);
Truncation truncation_from_json(const Space& space, const Json& j);

/// x̄ for x >= 0. Throws NegativeInput, SpaceMismatch.
Element truncate(const Truncation& t, const Element& x);

/// Membership in the fixed-point set: truncate(|x|) == |x|.
bool in_fixed_set(const Truncation& t, const Element& x);

using ElementPair = std::pair<Element, Element>;

// Law checks over positive samples. Each report's trial count is the number
// of samples examined; a refutation stops at the first failing sample.

/// a ^ b̄ <= ā <= a
LawReport check_tau1(const Truncation& t, std::span<const ElementPair> pairs);
/// ā = 0 implies a = 0
LawReport check_tau2(const Truncation& t, std::span<const Element> samples);
/// a ^ b̄ == ā ^ b
LawReport check_meet_exchange(const Truncation& t,
                              std::span<const ElementPair> pairs);
/// Contractivity, monotonicity, idempotency, images are fixed points,
/// downward closure of the fixed set and |x̄ - ȳ| <= trunc(|x - y|).
LawReport check_basic_properties(const Truncation& t,
                                 std::span<const ElementPair> pairs);

/// Outcome of the Archimedean-truncation axiom: if trunc(n a) = n a for every
/// n then a = 0.
struct Tau3Result {
  enum class Kind { ViolationWitness, NoViolationUpTo, SymbolicViolation, SymbolicPass };

  Kind kind;
  std::optional<Element> witness;
  unsigned bound = 0;
  std::string reason;

  /// SymbolicPass -> Pass, SymbolicViolation -> Refuted; bounded outcomes are
  /// Inconclusive (a finite search cannot settle the axiom either way).
  LawReport to_report(std::string law_id, std::uint64_t trials) const;
};

/// Decided symbolically for every cataloged kind; fixtures fall back to
/// checking trunc(n x) == n x for n = 1..bound on each positive sample.
Tau3Result check_tau3(const Truncation& t, std::span<const Element> samples,
                      unsigned bound);

/// Compares two truncations on a space through both routes: membership in
/// the fixed-point sets and pointwise values. The sample set is closed under
/// both truncations first, which makes the two verdicts coincide exactly
/// (fixed points determine the truncation). The report is Refuted only if
/// they diverge.
struct FixedSetComparison {
  bool fixed_sets_agree = true;
  std::optional<Element> fixed_set_witness;
  bool truncations_agree = true;
  std::optional<Element> truncation_witness;
  LawReport report;
};

FixedSetComparison compare_fixed_sets(const Truncation& t1, const Truncation& t2,
                                      std::span<const Element> samples);

}  // namespace trunclat
