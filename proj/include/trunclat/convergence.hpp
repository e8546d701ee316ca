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
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "trunclat/law_report.hpp"
#include "trunclat/unitization.hpp"

namespace trunclat {

/// Sequence indexed from 1.
using UnitizedSequence = std::function<UnitizedElement(std::size_t)>;

/// |seq(n) - seq(m)| <= eps·u for all lo <= n, m <= hi, exactly. Throws
/// PreconditionViolated unless eps > 0, u > 0 and lo <= hi.
bool uniform_cauchy_prefix(const Unitization& ctx, const UnitizedSequence& seq,
                           const UnitizedElement& u, const Rational& eps, std::size_t lo,
                           std::size_t hi);

/// The eventually-zero sequence u_n with coordinates 1/k for 1 <= k <= n and
/// 0 beyond. It is 1-uniformly Cauchy in c00 ⊕ R but has no limit there.
Element harmonic_prefix(std::size_t n);

/// Smallest n with 1/k <= eps for all k >= n.
std::size_t harmonic_cauchy_start(const Rational& eps);

struct CauchyWindowRow {
  Rational eps;
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool cauchy = false;
};

struct CandidateRow {
  UnitizedElement limit;
  /// Index whose value exposes the gap: the coordinate n0 + 1 past the
  /// support for λ = 0, unused (0) when the scalar part decides.
  std::size_t index = 0;
  /// |λ| or 1/(n0 + 1): the gap no eps below it can close.
  Rational gap;
  std::vector<Rational> eps_refuted;
  bool refuted = false;
};

struct NotUniformlyCompleteOutcome {
  std::vector<CauchyWindowRow> windows;
  std::vector<CandidateRow> candidates;
  LawReport report;
};

/// Reproduces the failure of relative uniform completeness of c00 ⊕ R under
/// meet-with-one: the harmonic prefixes are 1-uniformly Cauchy on
/// [n(eps), n(eps) + window] for each eps, and every candidate limit
/// (v, λ) is refuted exactly. For λ != 0 the scalar part of
/// |u_n - v - λ| is |λ| for every n, so no eps < |λ| works; for λ = 0 with
/// supp v ⊆ [1, n0] coordinate n0 + 1 of |u_n - v| is 1/(n0 + 1) for every
/// n > n0. Both are checked on the window for every listed eps below the
/// gap and for gap/2.
NotUniformlyCompleteOutcome repro_unitization_not_ruc(std::span<const Rational> eps_list,
                                                      std::size_t window,
                                                      std::span<const UnitizedElement> candidates);

/// 22 candidate limits: scalar parts of both signs and prefixes / perturbed
/// prefixes of the sequence itself.
std::vector<UnitizedElement> default_candidate_limits();

/// A c00 sequence together with a stabilization certificate: coordinate k is
/// constant for n >= stabilizes_at[k], and for n >= support_from the support
/// lies inside the certified coordinates.
struct CertifiedSequence {
  std::string name;
  std::function<Element(std::size_t)> term;
  std::map<SparseIndex, std::size_t> stabilizes_at;
  std::size_t support_from = 1;
  Element regulator;
};

struct C00Outcome {
  std::vector<std::pair<std::string, Element>> limits;
  LawReport report;
};

/// Re-checks each certificate on a window of `window` indices (throws
/// InvalidCertificate if it lies), extracts the coordinatewise limit, checks
/// that it is finitely supported and that |term(n) - c| <= eps·v on the
/// certified tail for eps in {1, 1/10, 1/100}.
C00Outcome repro_c00_ruc(std::span<const CertifiedSequence> fixtures, std::size_t window);

std::vector<CertifiedSequence> c00_fixtures();
/// A fixture whose certificate claims stabilization one step too early.
CertifiedSequence lying_c00_fixture();

}  // namespace trunclat
