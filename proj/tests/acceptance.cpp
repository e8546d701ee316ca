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

// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "agreement.hpp"
#include "oracle.hpp"
#include "term_gen.hpp"
#include "trunclat/band.hpp"
#include "trunclat/cli.hpp"
#include "trunclat/convergence.hpp"
#include "trunclat/engine.hpp"
#include "trunclat/error.hpp"
#include "trunclat/generator.hpp"
#include "trunclat/lattice.hpp"
#include "trunclat/suite.hpp"
#include "trunclat/term.hpp"

using namespace trunclat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = "failed: " + what;
    }
  }
};

std::string name_of(const Truncation& t) { return t.space().name() + "/" + t.name(); }

Outcome law_suite() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t checks = 0;
  for (const auto& t : agreement::cataloged()) {
    for (const char* law : {"truncation.tau1", "truncation.tau2", "truncation.meet_exchange",
                            "truncation.basic_properties"}) {
      const LawReport r = run_law(t, law, 42, 1000);
      o.require(r.verdict == Verdict::Pass && r.trials == 1000, name_of(t) + " " + law);
      ++checks;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  if (o.ok) {
    std::ostringstream s;
    s << checks << " law runs x 1000 trials in " << secs << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome counterexamples() {
  Outcome o;
  // Lexicographic plane: Archimedean truncation on a non-Archimedean space.
  const Truncation lex = Truncation::lex_meet_zero_one();
  const LawReport tau3 = run_law(lex, "truncation.tau3", 42, 1000);
  o.require(tau3.verdict == Verdict::Pass && tau3.witness &&
                (*tau3.witness)["decision"] == "symbolic",
            "lex tau3 symbolic pass");
  const LawReport arch = run_law(lex, "space.archimedean", 42, 1000);
  o.require(arch.verdict == Verdict::Refuted && arch.expected_violation, "lex non-Archimedean");
  if (arch.witness) {
    const Element x = element_from_json(lex.space(), (*arch.witness)["x"]);
    const Element y = element_from_json(lex.space(), (*arch.witness)["y"]);
    o.require(x == Element::lex(0, 1) && y == Element::lex(1, 0), "witness ((0,1),(1,0))");
    bool dominated = true;
    for (long n = 1; n <= 1000; ++n) dominated = dominated && leq(Rational(n) * x, y);
    o.require(dominated && !archimedean_escape({x, y}), "n x <= y for every n");
  }

  // The identity on the line satisfies tau1 and tau2 but not tau3.
  const Truncation id = Truncation::identity();
  const LawReport idr = run_law(id, "truncation.tau3", 42, 1000);
  o.require(idr.verdict == Verdict::Refuted && idr.expected_violation && idr.witness &&
                (*idr.witness)["decision"] == "symbolic",
            "identity tau3 symbolic violation");
  for (long n = 1; n <= 100; ++n) {
    o.require(truncate(id, Element::line(n)) == Element::line(n), "identity fixes n");
  }

  // c00 ⊕ R is not relatively uniformly complete.
  const std::vector<Rational> eps{Rational(1, 10), Rational(1, 100)};
  auto family = default_candidate_limits();
  family.resize(20, family.front());
  const auto out = repro_unitization_not_ruc(eps, 50, family);
  for (const auto& w : out.windows) {
    o.require(w.cauchy, "Cauchy window eps=" + w.eps.str());
    // Independent check of the same window on the pointwise model.
    for (std::size_t n = w.lo; n <= w.hi; ++n) {
      for (std::size_t m = n + 1; m <= w.hi; ++m) {
        const UnitizedElement d{harmonic_prefix(m) - harmonic_prefix(n), Rational()};
        const oracle::PointFn f = oracle::to_fn(oracle::abs(d));
        for (const auto& [k, v] : f.values) o.require(v <= w.eps, "pointwise window");
      }
    }
  }
  o.require(out.windows.size() == 2, "two windows");
  o.require(out.candidates.size() == 20, "20 candidates");
  for (const auto& c : out.candidates) o.require(c.refuted, "candidate refuted");
  o.require(out.report.verdict == Verdict::Pass, "reproduction report");
  if (o.ok) o.detail = "lex witness ((0,1),(1,0)); identity tau3 refuted; 2 windows, 20/20 refuted";
  return o;
}

Outcome unitization_oracle() {
  Outcome o;
  const Unitization ctx(Truncation::meet_with_one());
  Generator g(42, "acceptance.unitization", Space::sparse_seq());
  std::vector<std::pair<UnitizedElement, UnitizedElement>> lub_pairs;
  std::size_t positives = 0;
  for (int i = 0; i < 1000; ++i) {
    UnitizedElement a = g.unitized();
    const UnitizedElement b = g.unitized();
    // Mix in elements near the cone boundary so both answers occur.
    const UnitizedElement p = i % 2 == 0 ? a : UnitizedElement{a.e, abs(a.lambda) + Rational(i % 3)};
    const bool pos = is_positive(ctx, p);
    positives += pos ? 1 : 0;
    o.require(pos == oracle::positive(p), "is_positive " + p.debug_string());
    o.require(abs_u(ctx, a) == oracle::abs(a), "abs_u " + a.debug_string());
    o.require(join_u(ctx, a, b) == oracle::join(a, b), "join_u");
    o.require(meet_u(ctx, a, b) == oracle::meet(a, b), "meet_u");
    lub_pairs.emplace_back(std::move(a), b);
  }
  const LawReport lub = check_abs_least_upper_bound(ctx, lub_pairs);
  o.require(lub.verdict == Verdict::Pass, "abs_u least upper bound");
  o.require(positives > 100 && positives < 900, "positive samples on both sides");
  if (o.ok) {
    o.detail = "4 x 1000 oracle comparisons; " + std::to_string(lub.trials) +
               " upper-bound candidates over 1000 samples";
  }
  return o;
}

Outcome unitization_structure() {
  Outcome o;
  for (const auto& t : agreement::cataloged()) {
    o.require(run_law(t, "unitization.fixed_set_unit_ball", 42, 1000).verdict == Verdict::Pass,
              "fixed set " + name_of(t));
    o.require(run_law(t, "unitization.ideal_absorption", 42, 1000).verdict == Verdict::Pass,
              "ideal absorption " + name_of(t));
  }

  const Truncation unital = default_truncation(Space::finite_pointwise(3));
  const Unitization uctx(unital);
  Generator g(42, "acceptance.complement", unital.space());
  std::vector<Element> xs;
  std::vector<Rational> cs;
  for (int i = 0; i < 200; ++i) {
    xs.push_back(g.element());
    cs.push_back(g.rational());
  }
  const auto ur = orthogonal_complement_witness(uctx, xs, cs, {});
  o.require(ur.kind == ComplementResult::Kind::UnitalSpan && ur.report.verdict == Verdict::Pass,
            "unital complement");
  o.require(ur.generator && *ur.generator == UnitizedElement{-*unital.unit(), Rational(1)},
            "generator (-u, 1)");
  // In the unital case (e, λ) <-> (e + λu, λ) identifies E ⊕ R with E x R,
  // sending (-u, 1) to (0, 1) and x to (x, 0).
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const UnitizedElement w = cs[i] * *ur.generator;
    const Element image = w.e + w.lambda * *unital.unit();
    o.require(image.is_zero(), "generator lies off E");
  }

  const Unitization sctx(Truncation::meet_with_one());
  Generator gs(42, "acceptance.complement", Space::sparse_seq());
  std::vector<Element> sxs;
  for (int i = 0; i < 200; ++i) sxs.push_back(gs.element());
  const std::vector<UnitizedElement> cand{sctx.one()};
  const auto nr = orthogonal_complement_witness(sctx, sxs, {}, cand);
  o.require(nr.kind == ComplementResult::Kind::NonUnitalZero, "non-unital complement");
  o.require(nr.table.size() == 1 && nr.table[0].non_orthogonal_to.has_value(),
            "({}, 1) refuted as orthogonal");
  if (o.ok) {
    const UnitizedElement x{abs(*nr.table[0].non_orthogonal_to), Rational()};
    const UnitizedElement m = oracle::meet(oracle::abs(sctx.one()), x);
    o.require(!(m == sctx.zero()), "oracle confirms |1| ^ |x| != 0");
  }
  if (o.ok) o.detail = "4 spaces x 1000 samples; 200 disjointness checks; ({},1) not orthogonal";
  return o;
}

Outcome band_machinery() {
  Outcome o;
  Generator pick(42, "acceptance.band", Space::finite_pointwise(1));
  for (int i = 0; i < 500; ++i) {
    const auto dim = static_cast<std::size_t>(pick.between(1, 4));
    const Space space = Space::finite_pointwise(dim);
    Generator g(static_cast<std::uint64_t>(i), "acceptance.band", space);
    std::set<std::size_t> coords;
    for (std::size_t k = 1; k <= dim; ++k) {
      if (g.coin()) coords.insert(k);
    }
    const Element x = g.positive();
    o.require(band_component(Band(space, coords), x) == oracle::band_component(coords, x),
              "band component " + x.debug_string());
  }
  const Unitization ctx(default_truncation(Space::finite_pointwise(3)));
  const LawReport proj = check_band_projection(ctx, 42, 500);
  o.require(proj.verdict == Verdict::Pass && proj.trials == 500, "unitized projection");
  if (o.ok) o.detail = "500 components match the oracle; 500 projections split x disjointly";
  return o;
}

Outcome chain_machinery() {
  Outcome o;
  for (const auto& t : {Truncation::meet_with_one(), default_truncation(Space::finite_pointwise(3))}) {
    for (const char* law : {"chain.decompose", "chain.sup_additivity"}) {
      const LawReport r = run_law(t, law, 42, 500);
      o.require(r.verdict == Verdict::Pass && r.trials == 500, name_of(t) + " " + law);
    }
  }
  const Unitization ctx(Truncation::meet_with_one());
  Generator g(42, "acceptance.transfer", Space::sparse_seq());
  std::uint64_t bounds_used = 0;
  for (int s = 0; s < 100; ++s) {
    std::vector<Element> set;
    const long size = g.between(1, 4);
    for (long k = 0; k < size; ++k) set.push_back(g.element());
    std::vector<UnitizedElement> bounds;
    for (int k = 0; k < 100; ++k) {
      UnitizedElement z = g.unitized();
      if (k % 2 == 0) {
        for (const auto& a : set) z = join_u(ctx, z, ctx.embed(a));
      }
      bounds.push_back(std::move(z));
    }
    const LawReport r = check_sup_transfer(ctx, set, bounds);
    o.require(r.verdict == Verdict::Pass, "sup transfer set " + std::to_string(s));
    bounds_used += r.trials;
  }
  o.require(bounds_used >= 5000, "at least half the sampled bounds are upper bounds");
  if (o.ok) {
    o.detail = "2 x 500 chains per law; 100 sets, " + std::to_string(bounds_used) +
               " of 10000 sampled bounds were upper bounds";
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const char* space : {"sparse_seq", "finite_pointwise:3", "lex_plane", "identity_line"}) {
    const std::vector<std::string> args{"check", "--space", space, "--seed", "7",
                                        "--trials", "200"};
    std::ostringstream a, b, err;
    const int ca = run_cli(args, a, err);
    const int cb = run_cli(args, b, err);
    o.require(ca == kExitOk && cb == kExitOk, std::string("exit code on ") + space);
    o.require(!a.str().empty() && a.str() == b.str(), std::string("identical JSON on ") + space);
  }
  if (o.ok) o.detail = "4 spaces byte-identical (verified on this platform only)";
  return o;
}

Outcome dsl() {
  Outcome o;
  testgen::TermGen gen(42);
  for (int i = 0; i < 1000; ++i) {
    const TermPtr t = gen.term(4);
    const std::string text = render(*t);
    try {
      o.require(equal(*parse_term(text), *t), "round trip " + text);
    } catch (const Error& e) {
      o.require(false, text + ": " + e.what());
    }
  }
  std::size_t runs = 0;
  std::size_t refuted = 0;
  std::vector<Truncation> truncs = agreement::cataloged();
  truncs.push_back(agreement::half(Space::sparse_seq()));
  truncs.push_back(agreement::half(Space::lex_plane()));
  for (const auto& law : agreement::dsl_laws()) {
    const AssertionFile file = agreement::load(law);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      for (const auto& t : truncs) {
        const std::uint64_t trials = agreement::trials_for(t, 30);
        const bool native = agreement::native_holds(t, law, seed, trials);
        const bool text = agreement::dsl_holds(file, t, seed, trials);
        o.require(native == text, law + " on " + name_of(t) + " seed " + std::to_string(seed));
        ++runs;
        refuted += native ? 0 : 1;
      }
    }
  }
  o.require(refuted > 0, "the half fixture is refuted");
  if (o.ok) {
    o.detail = "1000 ASTs round-trip; " + std::to_string(runs) + " law runs agree (" +
               std::to_string(refuted) + " refuted by both)";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"law suite", law_suite},
      {"counterexample pack", counterexamples},
      {"unitization oracle equivalence", unitization_oracle},
      {"unitization structure checks", unitization_structure},
      {"band component and projection", band_machinery},
      {"chain constructions and sup transfer", chain_machinery},
      {"determinism", determinism},
      {"DSL round trip and agreement", dsl},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  "
              << criteria[i].first << "  (" << o.detail << ")\n";
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
