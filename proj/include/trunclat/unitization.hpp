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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trunclat/element.hpp"
#include "trunclat/law_report.hpp"
#include "trunclat/truncation.hpp"

namespace trunclat {

/// x + lambda·1 in E ⊕ R. The formal unit 1 is (0, 1).
struct UnitizedElement {
  Element e;
  Rational lambda;

  friend bool operator==(const UnitizedElement&, const UnitizedElement&) = default;
  std::string debug_string() const;
};

UnitizedElement operator+(const UnitizedElement& a, const UnitizedElement& b);
UnitizedElement operator-(const UnitizedElement& a, const UnitizedElement& b);
UnitizedElement operator-(const UnitizedElement& a);
UnitizedElement operator*(const Rational& c, const UnitizedElement& a);

/// E ⊕ R over a truncated base space. The order is the one generated by the
/// cone E+ ∪ {x + λ : λ > 0, (1/λ)x⁻ in the fixed set}, and the truncation
/// on E ⊕ R is meet with 1.
class Unitization {
 public:
  explicit Unitization(Truncation trunc) : trunc_(std::move(trunc)) {}

  const Truncation& truncation() const { return trunc_; }
  const Space& base() const { return trunc_.space(); }

  UnitizedElement zero() const { return {Element::zero(base()), Rational()}; }
  UnitizedElement one() const { return {Element::zero(base()), Rational(1)}; }
  UnitizedElement embed(Element x) const;

 private:
  Truncation trunc_;
};

Json unitized_to_json(const UnitizedElement& a);
/// {"e": <element>, "lambda": "p/q"}; a bare element is embedded with λ = 0.
UnitizedElement unitized_from_json(const Space& base, const Json& j);

bool is_positive(const Unitization& ctx, const UnitizedElement& a);
bool leq_u(const Unitization& ctx, const UnitizedElement& a, const UnitizedElement& b);

/// |x + λ| = |x| - 2|λ|·trunc((1/λ)x⁻ v (-1/λ)x⁺) + |λ| for λ != 0, |x| for λ = 0.
UnitizedElement abs_u(const Unitization& ctx, const UnitizedElement& a);
/// a v b = (a + b + |a - b|) / 2
UnitizedElement join_u(const Unitization& ctx, const UnitizedElement& a,
                       const UnitizedElement& b);
/// a ^ b = (a + b - |a - b|) / 2
UnitizedElement meet_u(const Unitization& ctx, const UnitizedElement& a,
                       const UnitizedElement& b);
UnitizedElement pos_u(const Unitization& ctx, const UnitizedElement& a);
UnitizedElement neg_u(const Unitization& ctx, const UnitizedElement& a);
/// a ^ 1 for a >= 0. Throws NegativeInput.
UnitizedElement truncate_u(const Unitization& ctx, const UnitizedElement& a);

/// in_fixed_set(x) <=> |x| <= 1 in E ⊕ R, for each sample x in E.
LawReport check_fixed_set_unit_ball(const Unitization& ctx,
                                    std::span<const Element> samples);

/// For each (a, b) with |b| <= |a| (a in E, b in E ⊕ R): b has no scalar
/// part. Pairs violating the premise are skipped; trials counts the ones used.
LawReport check_ideal_absorption(
    const Unitization& ctx, std::span<const std::pair<Element, UnitizedElement>> pairs);

/// The disjoint complement of E inside E ⊕ R.
struct ComplementResult {
  enum class Kind { NonUnitalZero, UnitalSpan };

  struct Probe {
    UnitizedElement candidate;
    std::optional<Element> non_orthogonal_to;
  };

  Kind kind;
  /// (-u, 1) = 1 - u for unital bases.
  std::optional<UnitizedElement> generator;
  /// Non-unital bases: each sampled candidate z != 0 with the x in E that
  /// shows |z| ^ |x| != 0 (empty when the search failed).
  std::vector<Probe> table;
  LawReport report;
};

/// Unital base: checks |c (1 - u)| ^ |x| = 0 for each sampled (x, c).
/// Non-unital base: for each candidate z != 0 searches the samples and a few
/// structural probes for x with |z| ^ |x| != 0. A failed search is
/// Inconclusive, never Pass.
ComplementResult orthogonal_complement_witness(const Unitization& ctx,
                                               std::span<const Element> xs,
                                               std::span<const Rational> scalars,
                                               std::span<const UnitizedElement> candidates);

/// Order density of E in E ⊕ R holds iff E is not unital. Non-unital: for
/// each sampled a > 0 find x in E with 0 < x <= a (Inconclusive if not
/// found). Unital: 1 - u > 0 has no such x, checked against every probe.
LawReport check_density(const Unitization& ctx, std::span<const UnitizedElement> samples,
                        std::span<const Element> probes);

// Sampled structure laws of E ⊕ R.

/// a >= 0 and -a >= 0 imply a = 0.
LawReport check_cone(const Unitization& ctx, std::span<const UnitizedElement> samples);
/// abs_u(a) >= ±a and abs_u(a) >= 0; every candidate z >= ±a satisfies
/// z >= abs_u(a). Candidates are (|x|, |λ|) + d for each perturbation d, built
/// without abs_u so the check is not circular. trials counts candidates that
/// were actual upper bounds.
LawReport check_abs_least_upper_bound(
    const Unitization& ctx,
    std::span<const std::pair<UnitizedElement, UnitizedElement>> a_and_perturbation);
/// join_u(a, b) bounds a and b, and lies below every candidate common bound
/// (|x_a| + |x_b|, |λ_a| + |λ_b|) + d.
LawReport check_join_least_upper_bound(
    const Unitization& ctx,
    std::span<const std::pair<UnitizedElement, UnitizedElement>> pairs,
    std::span<const UnitizedElement> perturbations);
LawReport check_triangle(const Unitization& ctx,
                         std::span<const std::pair<UnitizedElement, UnitizedElement>> pairs);
/// tau1, tau2, meet exchange and the basic properties for truncate_u on
/// positive pairs.
LawReport check_unitized_truncation(
    const Unitization& ctx,
    std::span<const std::pair<UnitizedElement, UnitizedElement>> positive_pairs);
/// Two positive elements whose scalar parts are both > 0 are never disjoint.
LawReport check_disjoint_scalar_parts(
    const Unitization& ctx,
    std::span<const std::pair<UnitizedElement, UnitizedElement>> positive_pairs);

/// Elements of E used as structural probes near a: the basis vectors of a
/// dense space, or for SparseSeq the unit vectors at 1, on the support of a.e
/// and one index past it.
std::vector<Element> structural_probes(const Space& base, const UnitizedElement& a);

}  // namespace trunclat
