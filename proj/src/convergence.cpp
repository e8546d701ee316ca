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

#include "trunclat/convergence.hpp"

#include <algorithm>

#include "trunclat/error.hpp"
#include "trunclat/lattice.hpp"

namespace trunclat {

namespace {

const Unitization& c00_unitization() {
  static const Unitization ctx(Truncation::meet_with_one());
  return ctx;
}

std::size_t max_support_index(const Element& e) {
  return e.entries().empty() ? 0 : e.entries().rbegin()->first;
}

}  // namespace

bool uniform_cauchy_prefix(const Unitization& ctx, const UnitizedSequence& seq,
                           const UnitizedElement& u, const Rational& eps, std::size_t lo,
                           std::size_t hi) {
  if (eps.sign() <= 0 || lo > hi || !is_positive(ctx, u) ||
      (u.lambda.is_zero() && u.e.is_zero())) {
    throw Error(Errc::PreconditionViolated, "need eps > 0, u > 0 and lo <= hi");
  }
  const UnitizedElement bound = eps * u;
  std::vector<UnitizedElement> terms;
  terms.reserve(hi - lo + 1);
  for (std::size_t n = lo; n <= hi; ++n) terms.push_back(seq(n));
  // |a - b| = |b - a|, so unordered pairs suffice.
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (!leq_u(ctx, abs_u(ctx, terms[i] - terms[j]), bound)) return false;
    }
  }
  return true;
}

Element harmonic_prefix(std::size_t n) {
  SparseMap entries;
  for (std::size_t k = 1; k <= n; ++k) {
    entries.emplace(static_cast<SparseIndex>(k), Rational(1, static_cast<long>(k)));
  }
  return Element::sparse(std::move(entries));
}

std::size_t harmonic_cauchy_start(const Rational& eps) {
  if (eps.sign() <= 0) throw Error(Errc::PreconditionViolated, "eps must be > 0");
  // ceil(1/eps), computed exactly.
  const mpq_class inv = 1 / eps.raw();
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
  return std::max<std::size_t>(1, q.get_ui());
}

NotUniformlyCompleteOutcome repro_unitization_not_ruc(
    std::span<const Rational> eps_list, std::size_t window,
    std::span<const UnitizedElement> candidates) {
  const Unitization& ctx = c00_unitization();
  const UnitizedSequence seq = [&ctx](std::size_t n) { return ctx.embed(harmonic_prefix(n)); };
  NotUniformlyCompleteOutcome out;
  const std::string id = "example.unitization_not_ruc";
  bool ok = true;
  std::uint64_t trials = 0;

  for (const auto& eps : eps_list) {
    CauchyWindowRow row{eps, harmonic_cauchy_start(eps), 0, false};
    row.hi = row.lo + window;
    row.cauchy = uniform_cauchy_prefix(ctx, seq, ctx.one(), eps, row.lo, row.hi);
    ok = ok && row.cauchy;
    ++trials;
    out.windows.push_back(row);
  }

  std::optional<UnitizedElement> survivor;
  for (const auto& limit : candidates) {
    CandidateRow row{limit, 0, Rational(), {}, false};
    std::size_t first_n = 1;
    if (!limit.lambda.is_zero()) {
      row.gap = abs(limit.lambda);
    } else {
      row.index = max_support_index(limit.e) + 1;
      row.gap = Rational(1, static_cast<long>(row.index));
      first_n = row.index;
    }
    std::vector<Rational> eps_to_refute{row.gap / Rational(2)};
    for (const auto& eps : eps_list) {
      if (eps < row.gap && std::find(eps_to_refute.begin(), eps_to_refute.end(), eps) ==
                               eps_to_refute.end()) {
        eps_to_refute.push_back(eps);
      }
    }
    bool refuted = true;
    for (const auto& eps : eps_to_refute) {
      const UnitizedElement bound = eps * ctx.one();
      for (std::size_t n = first_n; n <= first_n + window && refuted; ++n) {
        const auto d = abs_u(ctx, seq(n) - limit);
        // The exposed gap is present at every n of the window...
        const Rational exposed = limit.lambda.is_zero() ? d.e.at(row.index) : d.lambda;
        refuted = exposed == row.gap && !leq_u(ctx, d, bound);
      }
      if (refuted) row.eps_refuted.push_back(eps);
    }
    row.refuted = refuted;
    ++trials;
    if (!refuted && !survivor) survivor = limit;
    ok = ok && refuted;
    out.candidates.push_back(std::move(row));
  }

  if (ok) {
    out.report = LawReport::pass(id, trials);
  } else {
    Json w;
    if (survivor) w["unrefuted_limit"] = unitized_to_json(*survivor);
    for (const auto& r : out.windows) {
      if (!r.cauchy) w["non_cauchy_eps"] = rational_to_json(r.eps);
    }
    out.report = LawReport::refuted(id, trials, std::move(w));
  }
  return out;
}

std::vector<UnitizedElement> default_candidate_limits() {
  std::vector<UnitizedElement> out;
  const Element zero = Element::zero(Space::sparse_seq());
  // Scalar parts of both signs, on top of a few c00 parts.
  for (const Rational& lambda : {Rational(1, 2), Rational(-1, 3), Rational(1), Rational(-2),
                                 Rational(1, 1000), Rational(3, 7)}) {
    out.push_back({zero, lambda});
  }
  out.push_back({harmonic_prefix(5), Rational(1, 4)});
  out.push_back({harmonic_prefix(20), Rational(-1, 50)});
  out.push_back({Element::sparse({{1, Rational(-1)}, {3, Rational(2)}}), Rational(1, 8)});
  out.push_back({Element::sparse({{2, Rational(1, 3)}}), Rational(-5, 6)});
  // λ = 0: the zero sequence, prefixes of the sequence itself, perturbations.
  out.push_back({zero, Rational()});
  for (std::size_t n : {1u, 2u, 3u, 9u, 10u, 25u, 60u}) {
    out.push_back({harmonic_prefix(n), Rational()});
  }
  out.push_back({Element::sparse({{1, Rational(1)}}), Rational()});
  out.push_back({Element::sparse({{4, Rational(7, 2)}}), Rational()});
  out.push_back({harmonic_prefix(12) + Element::sparse({{12, Rational(1)}}), Rational()});
  out.push_back({Element::sparse({{1, Rational(1)}, {2, Rational(1, 2)}, {30, Rational(-1, 30)}}),
                 Rational()});
  return out;
}

C00Outcome repro_c00_ruc(std::span<const CertifiedSequence> fixtures, std::size_t window) {
  const std::string id = "example.c00_ruc";
  C00Outcome out;
  std::uint64_t trials = 0;
  for (const auto& f : fixtures) {
    std::size_t tail = f.support_from;
    SparseMap limit;
    for (const auto& [k, start] : f.stabilizes_at) {
      const Rational value = f.term(start).at(k);
      for (std::size_t n = start; n <= start + window; ++n) {
        if (!(f.term(n).at(k) == value)) {
          throw Error(Errc::InvalidCertificate,
                      f.name + ": coordinate " + std::to_string(k) + " changes at n = " +
                          std::to_string(n) + " after certified index " +
                          std::to_string(start));
        }
      }
      limit.emplace(k, value);
      tail = std::max(tail, start);
    }
    for (std::size_t n = f.support_from; n <= f.support_from + window; ++n) {
      const Element term = f.term(n);
      for (const auto& [k, v] : term.entries()) {
        if (!f.stabilizes_at.contains(k)) {
          throw Error(Errc::InvalidCertificate,
                      f.name + ": coordinate " + std::to_string(k) +
                          " is uncertified but nonzero at n = " + std::to_string(n));
        }
      }
    }
    const Element c = Element::sparse(std::move(limit));
    // Finite support holds by construction: c lives on the certified keys.
    for (const Rational& eps : {Rational(1), Rational(1, 10), Rational(1, 100)}) {
      const Element bound = eps * f.regulator;
      for (std::size_t n = tail; n <= tail + window; ++n) {
        ++trials;
        if (!leq(abs(f.term(n) - c), bound)) {
          out.report = LawReport::refuted(
              id, trials, Json{{"fixture", f.name}, {"n", n}, {"eps", rational_to_json(eps)}});
          return out;
        }
      }
    }
    out.limits.emplace_back(f.name, c);
  }
  out.report = LawReport::pass(id, trials);
  return out;
}

std::vector<CertifiedSequence> c00_fixtures() {
  std::vector<CertifiedSequence> out;
  const Element one_at_1 = Element::sparse({{1, Rational(1)}});
  out.push_back({"constant",
                 [](std::size_t) {
                   return Element::sparse({{2, Rational(3, 4)}, {5, Rational(-2)}});
                 },
                 {{2, 1}, {5, 1}},
                 1,
                 Element::sparse({{2, Rational(1)}, {5, Rational(1)}})});
  // 1 - 2^-n at coordinate 1 before n = 1, then constant 1.
  out.push_back({"stabilized_geometric",
                 [](std::size_t n) {
                   return n >= 1 ? Element::sparse({{1, Rational(1)}})
                                 : Element::sparse({{1, Rational(1, 2)}});
                 },
                 {{1, 1}},
                 1,
                 one_at_1});
  // Harmonic prefix capped at 5 coordinates: converges, unlike the uncapped one.
  out.push_back({"capped_harmonic",
                 [](std::size_t n) { return harmonic_prefix(std::min<std::size_t>(n, 5)); },
                 {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}},
                 1,
                 Element::sparse({{1, Rational(1)}, {2, Rational(1)}, {3, Rational(1)},
                                  {4, Rational(1)}, {5, Rational(1)}})});
  // Oscillates in coordinate 3 until n = 7 with amplitude shrinking like 1/n.
  out.push_back({"damped_oscillation",
                 [](std::size_t n) {
                   SparseMap m{{1, Rational(2)}};
                   m.emplace(3, n < 7 ? Rational(n % 2 ? 1 : -1, static_cast<long>(n))
                                      : Rational());
                   return Element::sparse(std::move(m));
                 },
                 {{1, 1}, {3, 7}},
                 1,
                 Element::sparse({{1, Rational(1)}, {3, Rational(1)}})});
  return out;
}

CertifiedSequence lying_c00_fixture() {
  return {"lying_certificate",
          [](std::size_t n) { return harmonic_prefix(std::min<std::size_t>(n, 4)); },
          {{1, 1}, {2, 2}, {3, 3}, {4, 3}},
          1,
          Element::sparse({{1, Rational(1)}, {2, Rational(1)}, {3, Rational(1)},
                           {4, Rational(1)}})};
}

}  // namespace trunclat
