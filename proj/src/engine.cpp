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

#include "trunclat/engine.hpp"

#include "trunclat/error.hpp"
#include "trunclat/lattice.hpp"

namespace trunclat {

namespace {

bool is_zero_u(const UnitizedElement& a) { return a.lambda.is_zero() && a.e.is_zero(); }

Json pair_json(const ElementPair& p) {
  return Json{{"x", element_to_json(p.first)}, {"y", element_to_json(p.second)}};
}

bool survives(const ElementPair& p, unsigned bound) {
  const auto& [x, y] = p;
  if (x.is_zero() || !is_positive(x)) return false;
  for (unsigned n = 1; n <= bound; ++n) {
    if (!leq(Rational(n) * x, y)) return false;
  }
  return true;
}

}  // namespace

LawReport ArchimedeanResult::to_report(std::string law_id, std::uint64_t trials) const {
  switch (kind) {
    case Kind::SymbolicDecision: {
      if (archimedean) {
        LawReport r = LawReport::pass(std::move(law_id), trials);
        r.witness = Json{{"decision", "symbolic"}, {"reason", reason}};
        return r;
      }
      Json w = pair_json(*witness);
      w["decision"] = "symbolic";
      w["reason"] = reason;
      return LawReport::refuted(std::move(law_id), trials, std::move(w));
    }
    case Kind::Witness: {
      LawReport r = LawReport::inconclusive(std::move(law_id), trials,
                                            "n <= " + std::to_string(bound));
      r.witness = pair_json(*witness);
      return r;
    }
    case Kind::NoWitnessUpTo:
      return LawReport::inconclusive(std::move(law_id), trials,
                                     "n <= " + std::to_string(bound));
  }
  return LawReport::pass(std::move(law_id), trials);
}

ArchimedeanResult archimedean_search(std::span<const ElementPair> pairs, unsigned bound) {
  for (const auto& p : pairs) {
    if (survives(p, bound)) {
      return {ArchimedeanResult::Kind::Witness, false, p, bound,
              "0 <= n x <= y for every tested n"};
    }
  }
  return {ArchimedeanResult::Kind::NoWitnessUpTo, true, std::nullopt, bound,
          "no sampled pair survived"};
}

ArchimedeanResult archimedean_check(const Space& space, std::span<const ElementPair>,
                                    unsigned) {
  using Kind = ArchimedeanResult::Kind;
  if (space.kind() == SpaceKind::LexPlane) {
    // 0 <= n x <= y for all n iff x = 0, or x = (0, s) with s >= 0 and y has a
    // positive first coordinate.
    return {Kind::SymbolicDecision, false, ElementPair{Element::lex(0, 1), Element::lex(1, 0)},
            0, "(0,s) with s > 0 is dominated by every y with positive first coordinate"};
  }
  return {Kind::SymbolicDecision, true, std::nullopt, 0,
          "coordinatewise order over Q: n x_k <= y_k for all n forces x_k <= 0"};
}

std::optional<Rational> archimedean_escape(const ElementPair& pair) {
  const auto& [x, y] = pair;
  std::vector<Rational> candidates{Rational(1)};
  auto add = [&](const Rational& xk, const Rational& yk) {
    if (xk.sign() <= 0) return;
    const mpq_class q = (yk / xk).raw();
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    candidates.push_back(Rational(mpq_class(f + 1)));
  };
  if (x.space().is_sparse()) {
    for (const auto& [k, v] : x.entries()) add(v, y.at(k));
  } else {
    for (std::size_t i = 0; i < x.coords().size(); ++i) add(x.coords()[i], y.coords()[i]);
  }
  for (const auto& n : candidates) {
    if (n.sign() > 0 && !leq(n * x, y)) return n;
  }
  return std::nullopt;
}

LawReport check_sup_of_truncations(const Unitization& ctx, const UnitizedElement& x,
                                   std::span<const Element> sample_ys,
                                   std::span<const UnitizedElement> candidate_zs) {
  if (ctx.truncation().unital()) {
    throw Error(Errc::PreconditionViolated, "sup of truncations needs a non-unital base");
  }
  if (is_zero_u(x) || !is_positive(ctx, x)) {
    throw Error(Errc::PreconditionViolated, "x must be > 0, got " + x.debug_string());
  }
  const std::string id = "unitization.sup_of_truncations";
  const Truncation& t = ctx.truncation();
  const auto xbar = truncate_u(ctx, x);

  // y in E ∩ [0, x]: the given samples that qualify, plus samples and probe
  // multiples met with x (E is an ideal, so those stay in E).
  std::vector<Element> ys;
  auto add_y = [&](const UnitizedElement& y) {
    if (y.lambda.is_zero() && is_positive(y.e) && leq_u(ctx, y, x)) ys.push_back(y.e);
  };
  for (const auto& y : sample_ys) {
    add_y(ctx.embed(y));
    add_y(meet_u(ctx, ctx.embed(abs(y)), x));
  }
  // Probes cover the supports of x and of every candidate, plus one index
  // past them, so a gap of z below x̄ "at infinity" is still exposed.
  std::vector<Element> probes = structural_probes(ctx.base(), x);
  for (const auto& z : candidate_zs) {
    const UnitizedElement support{abs(x.e) + abs(z.e), Rational()};
    for (auto& p : structural_probes(ctx.base(), support)) probes.push_back(std::move(p));
  }
  for (const auto& p : probes) {
    for (long m = 1; m <= 1024; m *= 2) add_y(meet_u(ctx, ctx.embed(Rational(m) * p), x));
  }

  std::uint64_t n = 0;
  for (const auto& y : ys) {
    ++n;
    if (!leq_u(ctx, ctx.embed(truncate(t, y)), xbar)) {
      return LawReport::refuted(id, n, Json{{"x", unitized_to_json(x)},
                                            {"y", element_to_json(y)},
                                            {"check", "tr(y) <= tr(x)"}});
    }
  }
  for (const auto& z : candidate_zs) {
    if (z == xbar || !leq_u(ctx, z, xbar)) continue;
    ++n;
    bool beaten = false;
    for (const auto& y : ys) {
      if (!leq_u(ctx, ctx.embed(truncate(t, y)), z)) {
        beaten = true;
        break;
      }
    }
    if (!beaten) {
      LawReport r = LawReport::inconclusive(id, n, "sampled y in [0, x]");
      r.witness = Json{{"x", unitized_to_json(x)}, {"z", unitized_to_json(z)}};
      return r;
    }
  }
  return LawReport::pass(id, n);
}

LawReport check_unital_sup_of_truncations(const Unitization& ctx, const Element& x1,
                                          const Rational& mu,
                                          std::span<const Element> sample_ys) {
  const Truncation& t = ctx.truncation();
  if (!t.unital()) {
    throw Error(Errc::PreconditionViolated, "needs a unital base");
  }
  const Element& u = *t.unit();
  const UnitizedElement x{x1 - mu * u, mu};
  if (!is_positive(ctx, x)) {
    throw Error(Errc::PreconditionViolated, "x1 + mu(1 - u) must be >= 0");
  }
  const std::string id = "unitization.unital_sup_of_truncations";
  const auto bound = meet_u(ctx, x, ctx.embed(u));
  if (!(bound == ctx.embed(meet(x1, u)))) {
    return LawReport::refuted(id, 0, Json{{"x", unitized_to_json(x)},
                                          {"check", "x ^ u == x1 ^ u"}});
  }
  // y = x1 lies in [0, x] and attains the bound.
  if (!leq_u(ctx, ctx.embed(x1), x) || !(ctx.embed(truncate(t, x1)) == bound)) {
    return LawReport::refuted(id, 0, Json{{"x", unitized_to_json(x)},
                                          {"check", "tr(x1) attains x ^ u"}});
  }
  std::uint64_t n = 1;
  for (const auto& s : sample_ys) {
    for (const auto& y : {ctx.embed(s), meet_u(ctx, ctx.embed(abs(s)), x)}) {
      if (!y.lambda.is_zero() || !is_positive(y.e) || !leq_u(ctx, y, x)) continue;
      ++n;
      if (!leq_u(ctx, ctx.embed(truncate(t, y.e)), bound)) {
        return LawReport::refuted(id, n, Json{{"x", unitized_to_json(x)},
                                              {"y", element_to_json(y.e)},
                                              {"check", "tr(y) <= x ^ u"}});
      }
    }
  }
  return LawReport::pass(id, n);
}

LawReport check_sup_transfer(const Unitization& ctx, std::span<const Element> set,
                             std::span<const UnitizedElement> candidate_bounds) {
  const Element a0 = sup_finite(set);
  const std::string id = "unitization.sup_transfer";
  std::uint64_t n = 0;
  for (const auto& z : candidate_bounds) {
    bool bounds_all = true;
    for (const auto& a : set) {
      if (!leq_u(ctx, ctx.embed(a), z)) {
        bounds_all = false;
        break;
      }
    }
    if (!bounds_all) continue;
    ++n;
    if (!leq_u(ctx, ctx.embed(a0), z)) {
      Json elems = Json::array();
      for (const auto& a : set) elems.push_back(element_to_json(a));
      return LawReport::refuted(id, n, Json{{"set", std::move(elems)},
                                            {"z", unitized_to_json(z)}});
    }
  }
  return LawReport::pass(id, n);
}

}  // namespace trunclat
