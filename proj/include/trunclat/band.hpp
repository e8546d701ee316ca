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
#include <set>
#include <utility>

#include "trunclat/element.hpp"
#include "trunclat/law_report.hpp"
#include "trunclat/unitization.hpp"

namespace trunclat {

/// A band of FinitePointwise(n): the elements supported on a coordinate
/// subset S ⊆ {1..n}. Every band of that space has this form.
class Band {
 public:
  /// Throws PreconditionViolated unless space is FinitePointwise and every
  /// coordinate lies in [1, dim].
  Band(const Space& space, std::set<std::size_t> coords);

  static Band empty(const Space& space) { return Band(space, {}); }
  static Band full(const Space& space);

  const Space& space() const { return space_; }
  const std::set<std::size_t>& coords() const { return coords_; }
  bool contains_coord(std::size_t k) const { return coords_.contains(k); }
  /// x is in the band iff its support lies inside S.
  bool contains(const Element& x) const;
  Band complement() const;

  /// x with the coordinates outside S set to zero.
  Element mask(const Element& x) const;

  friend bool operator==(const Band&, const Band&) = default;

 private:
  Space space_;
  std::set<std::size_t> coords_;
};

/// sup(B⁺ ∩ [0, x]) for x >= 0, i.e. x masked to B. Throws NegativeInput or
/// SpaceMismatch.
Element band_component(const Band& band, const Element& x);

/// The same supremum by search: every element of the grid {0, x_k/2, x_k}^n
/// inside [0, x] that lies in B, joined together. Exponential in n; meant for
/// n <= 4.
Element band_component_by_search(const Band& band, const Element& x);

/// A band of E ⊕ R for a unital base: (B ∩ E) plus, optionally, the line
/// E^d = R(1 - u).
struct UnitizedBand {
  Band base;
  bool include_complement = false;
};

struct BandProjection {
  UnitizedElement in_band;
  UnitizedElement in_disjoint;
};

/// Splits x = (e, λ) as (e + λu, 0) + λ(1 - u), projects the first part onto
/// B ∩ E and keeps the second iff include_complement. The parts are disjoint
/// and sum to x. Throws PreconditionViolated for a non-unital base or a base
/// other than FinitePointwise.
BandProjection project_band_unitized(const Unitization& ctx, const UnitizedBand& band,
                                     const UnitizedElement& x);

/// band_component against band_component_by_search on `trials` random
/// (B, x) in FinitePointwise(n), n in [1, 4].
LawReport check_band_component(std::uint64_t seed, std::uint64_t trials);

/// project_band_unitized on `trials` samples: parts sum to x, are disjoint
/// under meet_u of absolute values, and the band part lies in the band.
LawReport check_band_projection(const Unitization& ctx, std::uint64_t seed,
                                std::uint64_t trials);

}  // namespace trunclat
