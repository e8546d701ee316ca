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

#include "trunclat/unitization.hpp"

#include "trunclat/error.hpp"
#include "trunclat/lattice.hpp"
#include "trunclat/truncation_laws.hpp"

namespace trunclat {

namespace {

struct UnitizedOps {
  using Value = UnitizedElement;
  const Unitization& ctx;

  bool leq(const Value& a, const Value& b) const { return leq_u(ctx, a, b); }
  Value meet(const Value& a, const Value& b) const { return meet_u(ctx, a, b); }
  Value abs(const Value& a) const { return abs_u(ctx, a); }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value truncate(const Value& a) const { return truncate_u(ctx, a); }
  bool is_zero(const Value& a) const { return a.lambda.is_zero() && a.e.is_zero(); }
  Json to_json(const Value& a) const { return unitized_to_json(a); }
};

bool is_zero_u(const UnitizedElement& a) { return a.lambda.is_zero() && a.e.is_zero(); }

Element unit_vector(const Space& space, std::size_t k) {
  if (space.is_sparse()) {
    return Element::sparse({{static_cast<SparseIndex>(k), Rational(1)}});
  }
  std::vector<Rational> c(space.dim());
  c[k - 1] = 1;
  return Element::of(space, std::move(c));
}

}  // namespace

std::string UnitizedElement::debug_string() const {
  return "(" + e.debug_string() + ", " + lambda.short_str() + ")";
}

UnitizedElement operator+(const UnitizedElement& a, const UnitizedElement& b) {
  return {a.e + b.e, a.lambda + b.lambda};
}

UnitizedElement operator-(const UnitizedElement& a, const UnitizedElement& b) {
  return {a.e - b.e, a.lambda - b.lambda};
}

UnitizedElement operator-(const UnitizedElement& a) { return {-a.e, -a.lambda}; }

UnitizedElement operator*(const Rational& c, const UnitizedElement& a) {
  return {c * a.e, c * a.lambda};
}

UnitizedElement Unitization::embed(Element x) const {
  if (!(x.space() == base())) {
    throw Error(Errc::SpaceMismatch,
                "embedding " + x.space().name() + " into unitization of " + base().name());
  }
  return {std::move(x), Rational()};
}

Json unitized_to_json(const UnitizedElement& a) {
  Json j;
  j["e"] = element_to_json(a.e);
  j["lambda"] = rational_to_json(a.lambda);
  return j;
}

UnitizedElement unitized_from_json(const Space& base, const Json& j) {
  if (j.is_object() && j.contains("lambda")) {
    if (!j.contains("e")) {
      throw Error(Errc::InvalidDescriptor, "unitized element needs \"e\" and \"lambda\"");
    }
    return {element_from_json(base, j["e"]), rational_from_json(j["lambda"])};
  }
  return {element_from_json(base, j), Rational()};
}

bool is_positive(const Unitization& ctx, const UnitizedElement& a) {
  const int s = a.lambda.sign();
  if (s < 0) return false;
  if (s == 0) return is_positive(a.e);
  // (1/λ) x⁻ must lie in the fixed-point set; x⁻ >= 0 already.
  return in_fixed_set(ctx.truncation(), (Rational(1) / a.lambda) * neg(a.e));
}

bool leq_u(const Unitization& ctx, const UnitizedElement& a, const UnitizedElement& b) {
  return is_positive(ctx, b - a);
}

UnitizedElement abs_u(const Unitization& ctx, const UnitizedElement& a) {
  const Element abs_x = abs(a.e);
  if (a.lambda.is_zero()) return {abs_x, Rational()};
  const Rational inv = Rational(1) / a.lambda;
  // Nonnegative for either sign of λ: one side of the join is >= 0.
  const Element inner = join(inv * neg(a.e), (-inv) * pos(a.e));
  const Rational abs_lambda = abs(a.lambda);
  const Element t = truncate(ctx.truncation(), inner);
  return {abs_x - (Rational(2) * abs_lambda) * t, abs_lambda};
}

UnitizedElement join_u(const Unitization& ctx, const UnitizedElement& a,
                       const UnitizedElement& b) {
  return Rational(1, 2) * (a + b + abs_u(ctx, a - b));
}

UnitizedElement meet_u(const Unitization& ctx, const UnitizedElement& a,
                       const UnitizedElement& b) {
  return Rational(1, 2) * (a + b - abs_u(ctx, a - b));
}

UnitizedElement pos_u(const Unitization& ctx, const UnitizedElement& a) {
  return join_u(ctx, a, ctx.zero());
}

UnitizedElement neg_u(const Unitization& ctx, const UnitizedElement& a) {
  return join_u(ctx, -a, ctx.zero());
}

UnitizedElement truncate_u(const Unitization& ctx, const UnitizedElement& a) {
  if (!is_positive(ctx, a)) {
    throw Error(Errc::NegativeInput, "truncate_u of " + a.debug_string());
  }
  return meet_u(ctx, a, ctx.one());
}

LawReport check_fixed_set_unit_ball(const Unitization& ctx,
                                    std::span<const Element> samples) {
  const std::string id = "unitization.fixed_set_unit_ball";
  std::uint64_t n = 0;
  for (const auto& x : samples) {
    ++n;
    const bool fixed = in_fixed_set(ctx.truncation(), x);
    const bool in_ball = leq_u(ctx, ctx.embed(abs(x)), ctx.one());
    if (fixed != in_ball) {
      return LawReport::refuted(id, n,
                                Json{{"x", element_to_json(x)},
                                     {"in_fixed_set", fixed},
                                     {"abs_leq_one", in_ball}});
    }
  }
  return LawReport::pass(id, n);
}

LawReport check_ideal_absorption(
    const Unitization& ctx, std::span<const std::pair<Element, UnitizedElement>> pairs) {
  const std::string id = "unitization.ideal_absorption";
  std::uint64_t n = 0;
  for (const auto& [a, b] : pairs) {
    if (!leq_u(ctx, abs_u(ctx, b), ctx.embed(abs(a)))) continue;
    ++n;
    if (!b.lambda.is_zero()) {
      return LawReport::refuted(
          id, n, Json{{"a", element_to_json(a)}, {"b", unitized_to_json(b)}});
    }
  }
  return LawReport::pass(id, n);
}

std::vector<Element> structural_probes(const Space& base, const UnitizedElement& a) {
  std::vector<Element> out;
  if (!base.is_sparse()) {
    for (std::size_t k = 1; k <= base.dim(); ++k) out.push_back(unit_vector(base, k));
    return out;
  }
  SparseIndex past = 1;
  out.push_back(unit_vector(base, 1));
  for (const auto& [k, v] : a.e.entries()) {
    if (k != 1) out.push_back(unit_vector(base, k));
    past = k + 1;
  }
  if (past != 1) out.push_back(unit_vector(base, past));
  return out;
}

ComplementResult orthogonal_complement_witness(const Unitization& ctx,
                                               std::span<const Element> xs,
                                               std::span<const Rational> scalars,
                                               std::span<const UnitizedElement> candidates) {
  const std::string id = "unitization.disjoint_complement";
  ComplementResult out;
  const Truncation& t = ctx.truncation();
  if (t.unital()) {
    out.kind = ComplementResult::Kind::UnitalSpan;
    const UnitizedElement w{-*t.unit(), Rational(1)};
    out.generator = w;
    if (!is_positive(ctx, w) || is_zero_u(w)) {
      out.report = LawReport::refuted(id, 0, Json{{"generator", unitized_to_json(w)},
                                                  {"check", "1 - u > 0"}});
      return out;
    }
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ++n;
      const Rational c = scalars.empty() ? Rational(1) : scalars[i % scalars.size()];
      const auto m = meet_u(ctx, abs_u(ctx, c * w), ctx.embed(abs(xs[i])));
      if (!is_zero_u(m)) {
        out.report = LawReport::refuted(id, n,
                                        Json{{"generator", unitized_to_json(w)},
                                             {"c", rational_to_json(c)},
                                             {"x", element_to_json(xs[i])},
                                             {"meet", unitized_to_json(m)}});
        return out;
      }
    }
    out.report = LawReport::pass(id, n);
    out.report.witness = Json{{"generator", unitized_to_json(w)}};
    return out;
  }

  out.kind = ComplementResult::Kind::NonUnitalZero;
  std::uint64_t n = 0;
  std::optional<UnitizedElement> unresolved;
  for (const auto& z : candidates) {
    if (is_zero_u(z)) continue;
    ++n;
    const auto az = abs_u(ctx, z);
    ComplementResult::Probe probe{z, std::nullopt};
    auto try_probe = [&](const Element& x) {
      if (probe.non_orthogonal_to || x.is_zero()) return;
      if (!is_zero_u(meet_u(ctx, az, ctx.embed(abs(x))))) probe.non_orthogonal_to = x;
    };
    if (!z.e.is_zero()) try_probe(z.e);
    for (const auto& p : structural_probes(ctx.base(), z)) try_probe(p);
    for (const auto& x : xs) try_probe(x);
    if (!probe.non_orthogonal_to && !unresolved) unresolved = z;
    out.table.push_back(std::move(probe));
  }
  if (unresolved) {
    out.report = LawReport::inconclusive(id, n, "sampled and structural probes");
    out.report.witness = Json{{"unresolved", unitized_to_json(*unresolved)}};
  } else {
    out.report = LawReport::pass(id, n);
  }
  return out;
}

LawReport check_density(const Unitization& ctx, std::span<const UnitizedElement> samples,
                        std::span<const Element> probes) {
  const std::string id = "unitization.density";
  const Truncation& t = ctx.truncation();
  if (t.unital()) {
    const UnitizedElement w{-*t.unit(), Rational(1)};
    if (!is_positive(ctx, w) || is_zero_u(w)) {
      return LawReport::refuted(id, 0, Json{{"a", unitized_to_json(w)}, {"check", "1 - u > 0"}});
    }
    std::vector<Element> all(probes.begin(), probes.end());
    for (auto& p : structural_probes(ctx.base(), w)) all.push_back(std::move(p));
    std::uint64_t n = 0;
    for (const auto& p : all) {
      ++n;
      const auto m = meet_u(ctx, w, ctx.embed(abs(p)));
      if (!is_zero_u(m)) {
        return LawReport::refuted(id, n, Json{{"a", unitized_to_json(w)},
                                              {"x", unitized_to_json(m)},
                                              {"check", "no 0 < x <= 1 - u in E"}});
      }
    }
    LawReport r = LawReport::pass(id, n);
    r.witness = Json{{"not_dense_at", unitized_to_json(w)}};
    return r;
  }

  std::uint64_t n = 0;
  for (const auto& a : samples) {
    if (is_zero_u(a) || !is_positive(ctx, a)) continue;
    ++n;
    bool found = false;
    auto try_probe = [&](const Element& p) {
      if (found || p.is_zero()) return false;
      const auto x = meet_u(ctx, a, ctx.embed(abs(p)));
      if (!x.lambda.is_zero()) return true;  // E failed to be an ideal
      found = !x.e.is_zero();
      return false;
    };
    bool broken = false;
    for (const auto& p : structural_probes(ctx.base(), a)) broken |= try_probe(p);
    for (const auto& p : probes) broken |= try_probe(p);
    if (broken) {
      return LawReport::refuted(id, n, Json{{"a", unitized_to_json(a)},
                                            {"check", "a ^ |p| lies in E"}});
    }
    if (!found) {
      LawReport r = LawReport::inconclusive(id, n, "sampled and structural probes");
      r.witness = Json{{"unresolved", unitized_to_json(a)}};
      return r;
    }
  }
  return LawReport::pass(id, n);
}

LawReport check_cone(const Unitization& ctx, std::span<const UnitizedElement> samples) {
  const std::string id = "unitization.cone";
  std::uint64_t n = 0;
  for (const auto& a : samples) {
    ++n;
    if (is_positive(ctx, a) && is_positive(ctx, -a) && !is_zero_u(a)) {
      return LawReport::refuted(id, n, Json{{"a", unitized_to_json(a)}});
    }
  }
  return LawReport::pass(id, n);
}

LawReport check_abs_least_upper_bound(
    const Unitization& ctx,
    std::span<const std::pair<UnitizedElement, UnitizedElement>> a_and_perturbation) {
  const std::string id = "unitization.abs_least_upper_bound";
  std::uint64_t n = 0;
  for (const auto& [a, d] : a_and_perturbation) {
    const auto m = abs_u(ctx, a);
    if (!leq_u(ctx, a, m) || !leq_u(ctx, -a, m) || !is_positive(ctx, m)) {
      return LawReport::refuted(id, n + 1, Json{{"a", unitized_to_json(a)},
                                                {"check", "abs_u(a) >= a, -a, 0"}});
    }
    const UnitizedElement z = UnitizedElement{abs(a.e), abs(a.lambda)} + d;
    if (!leq_u(ctx, a, z) || !leq_u(ctx, -a, z)) continue;
    ++n;
    if (!leq_u(ctx, m, z)) {
      return LawReport::refuted(id, n, Json{{"a", unitized_to_json(a)},
                                            {"z", unitized_to_json(z)},
                                            {"check", "z >= ±a implies z >= abs_u(a)"}});
    }
  }
  return LawReport::pass(id, n);
}

LawReport check_join_least_upper_bound(
    const Unitization& ctx,
    std::span<const std::pair<UnitizedElement, UnitizedElement>> pairs,
    std::span<const UnitizedElement> perturbations) {
  const std::string id = "unitization.join_least_upper_bound";
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    const auto j = join_u(ctx, a, b);
    if (!leq_u(ctx, a, j) || !leq_u(ctx, b, j)) {
      return LawReport::refuted(id, n + 1, Json{{"a", unitized_to_json(a)},
                                                {"b", unitized_to_json(b)},
                                                {"check", "join_u(a,b) >= a, b"}});
    }
    const UnitizedElement base{abs(a.e) + abs(b.e), abs(a.lambda) + abs(b.lambda)};
    const UnitizedElement z =
        perturbations.empty() ? base : base + perturbations[i % perturbations.size()];
    if (!leq_u(ctx, a, z) || !leq_u(ctx, b, z)) continue;
    ++n;
    if (!leq_u(ctx, j, z)) {
      return LawReport::refuted(id, n, Json{{"a", unitized_to_json(a)},
                                            {"b", unitized_to_json(b)},
                                            {"z", unitized_to_json(z)},
                                            {"check", "z >= a, b implies z >= join_u(a,b)"}});
    }
  }
  return LawReport::pass(id, n);
}

LawReport check_triangle(const Unitization& ctx,
                         std::span<const std::pair<UnitizedElement, UnitizedElement>> pairs) {
  const std::string id = "unitization.triangle";
  std::uint64_t n = 0;
  for (const auto& [a, b] : pairs) {
    ++n;
    if (!leq_u(ctx, abs_u(ctx, a + b), abs_u(ctx, a) + abs_u(ctx, b))) {
      return LawReport::refuted(id, n,
                                Json{{"a", unitized_to_json(a)}, {"b", unitized_to_json(b)}});
    }
  }
  return LawReport::pass(id, n);
}

LawReport check_unitized_truncation(
    const Unitization& ctx,
    std::span<const std::pair<UnitizedElement, UnitizedElement>> positive_pairs) {
  const std::string id = "unitization.truncation_axioms";
  const UnitizedOps ops{ctx};
  std::vector<UnitizedElement> singles;
  singles.reserve(positive_pairs.size());
  for (const auto& p : positive_pairs) singles.push_back(p.first);

  for (LawReport r : {laws::tau1(ops, positive_pairs, id),
                      laws::tau2(ops, std::span<const UnitizedElement>(singles), id),
                      laws::meet_exchange(ops, positive_pairs, id),
                      laws::basic_properties(ops, positive_pairs, id)}) {
    if (r.verdict != Verdict::Pass) return r;
  }
  return LawReport::pass(id, positive_pairs.size());
}

LawReport check_disjoint_scalar_parts(
    const Unitization& ctx,
    std::span<const std::pair<UnitizedElement, UnitizedElement>> positive_pairs) {
  const std::string id = "unitization.disjoint_scalar_parts";
  std::uint64_t n = 0;
  for (const auto& [a, b] : positive_pairs) {
    if (a.lambda.sign() <= 0 || b.lambda.sign() <= 0) continue;
    if (!is_positive(ctx, a) || !is_positive(ctx, b)) continue;
    ++n;
    if (is_zero_u(meet_u(ctx, a, b))) {
      return LawReport::refuted(id, n,
                                Json{{"a", unitized_to_json(a)}, {"b", unitized_to_json(b)}});
    }
  }
  return LawReport::pass(id, n);
}

}  // namespace trunclat
