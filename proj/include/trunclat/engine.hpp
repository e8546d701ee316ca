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

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "trunclat/law_report.hpp"
#include "trunclat/truncation.hpp"
#include "trunclat/unitization.hpp"

namespace trunclat {

/// Archimedean property of a space: 0 <= n x <= y for all n implies x = 0.
struct ArchimedeanResult {
  enum class Kind { Witness, NoWitnessUpTo, SymbolicDecision };

  Kind kind;
  /// Meaningful for SymbolicDecision.
  bool archimedean = true;
  std::optional<ElementPair> witness;
  unsigned bound = 0;
  std::string reason;

  LawReport to_report(std::string law_id, std::uint64_t trials) const;
};

/// Every supported space is decided symbolically: the coordinatewise spaces
/// are Archimedean over Q, LexPlane is not, with witness ((0,1),(1,0)).
/// The pairs and bound are accepted for interface symmetry with the search.
ArchimedeanResult archimedean_check(const Space& space, std::span<const ElementPair> pairs,
                                    unsigned bound);

/// Bounded search: a pair (x, y) with x != 0 and 0 <= n x <= y for
/// n = 1..bound. Independent of the symbolic route; used to cross-check it.
ArchimedeanResult archimedean_search(std::span<const ElementPair> pairs, unsigned bound);

/// An n >= 1 with n x ≰ y, tried from 1 and floor(y_k / x_k) + 1 for each
/// coordinate with x_k > 0. No such n for a pair that witnesses a failure of
/// the Archimedean property.
std::optional<Rational> archimedean_escape(const ElementPair& pair);

/// Non-unital base, x > 0 in E ⊕ R: sup{ȳ : y in E, 0 <= y <= x} = x̄.
/// (i) every sampled y in [0, x] has ȳ <= x̄; (ii) each candidate z < x̄ is
/// beaten by some ȳ ≰ z, searching the samples and multiples of structural
/// probes met with x. A failed search is Inconclusive. Throws
/// PreconditionViolated for a unital base or x not > 0.
LawReport check_sup_of_truncations(const Unitization& ctx, const UnitizedElement& x,
                                   std::span<const Element> sample_ys,
                                   std::span<const UnitizedElement> candidate_zs);

/// Unital base with unit u and x = x1 + mu(1 - u) > 0: every sampled ȳ with
/// y in E ∩ [0, x] satisfies ȳ <= x ^ u, and x ^ u = x1 ^ u is attained at
/// y = x1. Throws PreconditionViolated for a non-unital base or x not >= 0.
LawReport check_unital_sup_of_truncations(const Unitization& ctx, const Element& x1,
                                          const Rational& mu,
                                          std::span<const Element> sample_ys);

/// A in E finite and nonempty with a0 = sup_finite(A): every candidate z that
/// bounds A in E ⊕ R also bounds a0. trials counts candidates that were
/// upper bounds. Throws EmptySet.
LawReport check_sup_transfer(const Unitization& ctx, std::span<const Element> set,
                             std::span<const UnitizedElement> candidate_bounds);

}  // namespace trunclat
