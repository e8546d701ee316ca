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

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "trunclat/rational.hpp"

namespace trunclat {

enum class SpaceKind { FinitePointwise, SparseSeq, LexPlane, IdentityLine };

/// One of the concrete vector lattices. FinitePointwise(n) is Q^n with the
/// pointwise order, SparseSeq the eventually-zero sequences (indices >= 1),
/// LexPlane Q^2 with the lexicographic order, IdentityLine the line {0} x Q.
class Space {
 public:
  static Space finite_pointwise(std::size_t dim);
  static Space sparse_seq() { return Space(SpaceKind::SparseSeq, 0); }
  static Space lex_plane() { return Space(SpaceKind::LexPlane, 2); }
  static Space identity_line() { return Space(SpaceKind::IdentityLine, 1); }

  SpaceKind kind() const { return kind_; }
  /// Number of stored coordinates for the dense kinds; 0 for SparseSeq.
  std::size_t dim() const { return dim_; }
  bool is_sparse() const { return kind_ == SpaceKind::SparseSeq; }
  /// Whether the order is the coordinatewise one (everything but LexPlane).
  bool is_pointwise() const { return kind_ != SpaceKind::LexPlane; }

  std::string name() const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  Space(SpaceKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

  SpaceKind kind_;
  std::size_t dim_;
};

using SparseIndex = std::uint32_t;
using SparseMap = std::map<SparseIndex, Rational>;

/// A space-tagged element. Dense kinds (FinitePointwise, LexPlane,
/// IdentityLine) store one rational per coordinate; SparseSeq stores its
/// finite support and never an explicit zero, so structural equality is
/// semantic equality.
class Element {
 public:
  static Element zero(const Space& space);
  static Element dense(std::vector<Rational> coords);
  static Element sparse(SparseMap entries);
  static Element lex(Rational first, Rational second);
  static Element line(Rational value);
  /// Dense element of an explicit space; checks the coordinate count.
  static Element of(const Space& space, std::vector<Rational> coords);

  const Space& space() const { return space_; }

  /// Coordinates of a dense-kind element. Throws for SparseSeq.
  const std::vector<Rational>& coords() const;
  /// Support of a SparseSeq element. Throws for dense kinds.
  const SparseMap& entries() const;

  /// Coordinate k (1-based) for every kind; absent sparse entries are 0.
  Rational at(std::size_t k) const;

  bool is_zero() const;

  friend bool operator==(const Element&, const Element&) = default;

  std::string debug_string() const;

 private:
  Element(Space space, std::variant<std::vector<Rational>, SparseMap> payload)
      : space_(space), payload_(std::move(payload)) {}

  Space space_;
  std::variant<std::vector<Rational>, SparseMap> payload_;
};

}  // namespace trunclat
