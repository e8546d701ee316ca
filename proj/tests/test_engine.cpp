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

#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "trunclat/band.hpp"
#include "trunclat/convergence.hpp"
#include "trunclat/engine.hpp"
#include "trunclat/error.hpp"
#include "trunclat/generator.hpp"
#include "trunclat/lattice.hpp"
#include "trunclat/repro.hpp"
#include "trunclat/suite.hpp"

using namespace trunclat;

namespace {

const Space kSparse = Space::sparse_seq();

Element sp(const char* json) { return element_from_json(kSparse, parse_json(json)); }

const LawReport& find(const std::vector<LawReport>& rs, const std::string& id) {
  const auto it = std::find_if(rs.begin(), rs.end(), [&](const auto& r) { return r.law_id == id; });
  REQUIRE(it != rs.end());
  return *it;
}

}  // namespace

TEST_CASE("suite over the catalog") {
  const auto sparse = run_suite(Truncation::meet_with_one(), 42, 200);
  CHECK(std::is_sorted(sparse.begin(), sparse.end(),
                       [](const auto& a, const auto& b) { return a.law_id < b.law_id; }));
  for (const auto& r : sparse) {
    CHECK_MESSAGE(r.verdict == Verdict::Pass, r.law_id);
    CHECK(r.seed == 42);
  }

  const auto line = run_suite(Truncation::identity(), 42, 200);
  const LawReport& tau3 = find(line, "truncation.tau3");
  CHECK(tau3.verdict == Verdict::Refuted);
  CHECK(tau3.expected_violation);
  CHECK(tau3.to_json()["flag"] == "EXPECTED_VIOLATION");

  const auto lex = run_suite(Truncation::lex_meet_zero_one(), 42, 200);
  const LawReport& arch = find(lex, "space.archimedean");
  CHECK(arch.verdict == Verdict::Refuted);
  CHECK(arch.expected_violation);
  CHECK((*arch.witness)["x"] == element_to_json(Element::lex(0, 1)));
  CHECK((*arch.witness)["y"] == element_to_json(Element::lex(1, 0)));
  for (const auto& r : lex) {
    if (r.law_id != "space.archimedean") CHECK_MESSAGE(r.verdict == Verdict::Pass, r.law_id);
  }
}

TEST_CASE("law registry") {
  const auto sparse = registered_laws(Truncation::meet_with_one());
  CHECK(std::count(sparse.begin(), sparse.end(), "unitization.sup_of_truncations") == 1);
  CHECK(std::count(sparse.begin(), sparse.end(), "truncation.unit_form") == 0);
  const auto fp = registered_laws(default_truncation(Space::finite_pointwise(2)));
  CHECK(std::count(fp.begin(), fp.end(), "band.component") == 1);
  CHECK(std::count(fp.begin(), fp.end(), "unitization.unital_sup_of_truncations") == 1);
  CHECK_THROWS_AS(run_law(Truncation::meet_with_one(), "band.component", 1, 1), Error);
  CHECK_THROWS_AS(run_law(Truncation::meet_with_one(), "no.such.law", 1, 1), Error);
  CHECK_FALSE(is_expected_violation(Truncation::meet_with_one(), "truncation.tau3"));
}

TEST_CASE("reports are reproducible and independent of each other") {
  const Truncation t = Truncation::lex_meet_zero_one();
  const auto a = run_suite(t, 9, 100);
  const auto b = run_suite(t, 9, 100);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].to_json().dump() == b[i].to_json().dump());
    CHECK(run_law(t, a[i].law_id, 9, 100).to_json().dump() == a[i].to_json().dump());
  }
}

TEST_CASE("Archimedean decision and its independent cross-check") {
  const auto lex = archimedean_check(Space::lex_plane(), {}, 100);
  CHECK(lex.kind == ArchimedeanResult::Kind::SymbolicDecision);
  CHECK_FALSE(lex.archimedean);
  REQUIRE(lex.witness);
  CHECK(lex.witness->first == Element::lex(0, 1));
  CHECK(lex.witness->second == Element::lex(1, 0));
  CHECK_FALSE(archimedean_escape(*lex.witness));
  CHECK(archimedean_check(kSparse, {}, 100).archimedean);

  // Every sampled pair of an Archimedean space has an escape index.
  for (const Space& s : {kSparse, Space::finite_pointwise(3), Space::identity_line()}) {
    Generator g(4, "escape", s);
    for (int i = 0; i < 300; ++i) {
      auto [x, y] = g.positive_pair();
      if (x.is_zero()) continue;
      const auto n = archimedean_escape({x, y});
      REQUIRE(n);
      CHECK_FALSE(leq(*n * x, y));
    }
  }
  const ElementPair zero{Element::zero(kSparse), sp(R"({"1":"1"})")};
  CHECK_FALSE(archimedean_escape(zero));
  const std::vector<ElementPair> pairs{zero};
  CHECK(archimedean_search(pairs, 50).kind == ArchimedeanResult::Kind::NoWitnessUpTo);
}

TEST_CASE("sup of truncations below x in the non-unital case") {
  const Unitization ctx(Truncation::meet_with_one());
  const std::vector<Element> ys{sp(R"({"1":"1"})"), sp(R"({"2":"5"})"), sp(R"({"1":"1/2"})")};
  const std::vector<UnitizedElement> zs{{Element::zero(kSparse), Rational(1, 2)}};
  const LawReport r = check_sup_of_truncations(ctx, ctx.one(), ys, zs);
  CHECK(r.verdict == Verdict::Pass);

  const UnitizedElement x = ctx.embed(sp(R"({"1":"3"})"));
  const std::vector<Element> just_x{sp(R"({"1":"3"})")};
  CHECK(check_sup_of_truncations(ctx, x, just_x, {}).verdict == Verdict::Pass);
  CHECK(truncate(ctx.truncation(), just_x[0]) == sp(R"({"1":"1"})"));

  const Unitization unital(default_truncation(Space::finite_pointwise(2)));
  CHECK_THROWS_AS(check_sup_of_truncations(unital, unital.one(), {}, {}), Error);
  CHECK_THROWS_AS(check_sup_of_truncations(ctx, ctx.zero(), {}, {}), Error);
}

TEST_CASE("sup of truncations in the unital case") {
  const Space fp = Space::finite_pointwise(2);
  const Unitization ctx(Truncation::meet_with_unit(Element::of(fp, {1, 1})));
  Generator g(1, "unital-sup", fp);
  std::vector<Element> ys;
  for (int i = 0; i < 100; ++i) ys.push_back(g.positive());
  CHECK(check_unital_sup_of_truncations(ctx, Element::of(fp, {2, 0}), 0, ys).verdict ==
        Verdict::Pass);
  CHECK(check_unital_sup_of_truncations(ctx, Element::zero(fp), 1, ys).verdict == Verdict::Pass);
  CHECK(meet_u(ctx, UnitizedElement{Element::of(fp, {-1, -1}), 1}, ctx.embed(Element::of(fp, {1, 1})))
            .e.is_zero());
  CHECK(check_unital_sup_of_truncations(ctx, Element::of(fp, {1, 1}), 0, ys).verdict ==
        Verdict::Pass);
  CHECK_THROWS_AS(check_unital_sup_of_truncations(ctx, Element::of(fp, {-5, 0}), 0, ys), Error);
}

TEST_CASE("sup transfer into the unitization") {
  const Unitization ctx(Truncation::meet_with_one());
  const std::vector<Element> set{sp(R"({"1":"1"})"), sp(R"({"2":"1"})")};
  const UnitizedElement a0 = ctx.embed(sp(R"({"1":"1","2":"1"})"));
  const std::vector<UnitizedElement> bounds{ctx.one(), a0, ctx.zero()};
  const LawReport r = check_sup_transfer(ctx, set, bounds);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.trials == 2);
}

TEST_CASE("uniform Cauchy windows") {
  const Unitization ctx(Truncation::meet_with_one());
  const UnitizedSequence harmonic = [](std::size_t n) {
    return UnitizedElement{harmonic_prefix(n), Rational()};
  };
  CHECK(harmonic_cauchy_start(Rational(1, 10)) == 10);
  CHECK(harmonic_cauchy_start(Rational(3, 10)) == 4);
  CHECK(uniform_cauchy_prefix(ctx, harmonic, ctx.one(), Rational(1, 10), 10, 60));
  const UnitizedSequence constant = [](std::size_t) {
    return UnitizedElement{Element::sparse({{2, Rational(5)}}), Rational(1)};
  };
  CHECK(uniform_cauchy_prefix(ctx, constant, ctx.one(), Rational(1, 1000), 1, 20));
  const UnitizedSequence growing = [](std::size_t n) {
    return UnitizedElement{Element::sparse({{1, Rational(static_cast<long>(n))}}), Rational()};
  };
  CHECK_FALSE(uniform_cauchy_prefix(ctx, growing, ctx.one(), Rational(1), 1, 3));
  CHECK(harmonic_prefix(3) == Element::sparse({{1, 1}, {2, Rational(1, 2)}, {3, Rational(1, 3)}}));
}

TEST_CASE("candidate limits of the harmonic prefixes are refuted") {
  const std::vector<Rational> eps{Rational(1, 10), Rational(1, 4), Rational(1, 3)};
  const std::vector<UnitizedElement> cands{{Element::zero(kSparse), Rational(1, 2)},
                                           {Element::sparse({{1, 1}}), Rational()}};
  const auto out = repro_unitization_not_ruc(eps, 50, cands);
  REQUIRE(out.candidates.size() == 2);
  const auto& scalar = out.candidates[0];
  CHECK(scalar.refuted);
  CHECK(scalar.gap == Rational(1, 2));
  CHECK(std::count(scalar.eps_refuted.begin(), scalar.eps_refuted.end(), Rational(1, 4)) == 1);
  const auto& prefix = out.candidates[1];
  CHECK(prefix.refuted);
  CHECK(prefix.index == 2);
  CHECK(prefix.gap == Rational(1, 2));
  CHECK(std::count(prefix.eps_refuted.begin(), prefix.eps_refuted.end(), Rational(1, 3)) == 1);
  CHECK(out.report.verdict == Verdict::Pass);
  CHECK(default_candidate_limits().size() >= 20);
}

TEST_CASE("c00 sequences with certificates") {
  const auto out = repro_c00_ruc(c00_fixtures(), 40);
  CHECK(out.report.verdict == Verdict::Pass);
  const auto it = std::find_if(out.limits.begin(), out.limits.end(),
                               [](const auto& l) { return l.first == "stabilized_geometric"; });
  REQUIRE(it != out.limits.end());
  CHECK(it->second == Element::sparse({{1, 1}}));
  const auto c = std::find_if(out.limits.begin(), out.limits.end(),
                              [](const auto& l) { return l.first == "constant"; });
  REQUIRE(c != out.limits.end());
  CHECK(c->second == c00_fixtures().front().term(1));
  const std::vector<CertifiedSequence> liar{lying_c00_fixture()};
  CHECK_THROWS_AS(repro_c00_ruc(liar, 40), Error);
}

TEST_CASE("band components") {
  const Space fp3 = Space::finite_pointwise(3);
  const Element x = Element::of(fp3, {3, 2, 1});
  CHECK(band_component(Band(fp3, {1}), x) == Element::of(fp3, {3, 0, 0}));
  CHECK(band_component(Band::empty(fp3), x).is_zero());
  CHECK(band_component(Band::full(fp3), x) == x);
  CHECK_THROWS_AS(band_component(Band(fp3, {1}), Element::of(fp3, {-1, 0, 0})), Error);
  CHECK_THROWS_AS(Band(fp3, {4}), Error);
  CHECK(Band(fp3, {1, 3}).complement().coords() == std::set<std::size_t>{2});

  for (std::size_t dim = 1; dim <= 4; ++dim) {
    const Space s = Space::finite_pointwise(dim);
    Generator g(dim, "band-props", s);
    for (int i = 0; i < 100; ++i) {
      std::set<std::size_t> coords;
      for (std::size_t k = 1; k <= dim; ++k) {
        if (g.coin()) coords.insert(k);
      }
      const Band b(s, coords);
      const Element p = g.positive();
      const Element c = band_component(b, p);
      CHECK(c == oracle::band_component(coords, p));
      CHECK(c == band_component_by_search(b, p));
      CHECK(c + band_component(b.complement(), p) == p);
    }
  }
}

TEST_CASE("band projection in the unitization") {
  const Space fp2 = Space::finite_pointwise(2);
  const Unitization ctx(Truncation::meet_with_unit(Element::of(fp2, {1, 1})));
  const UnitizedElement x{Element::of(fp2, {3, 2}), 1};
  const auto p = project_band_unitized(ctx, {Band(fp2, {1}), false}, x);
  CHECK(p.in_band == UnitizedElement{Element::of(fp2, {4, 0}), 0});
  CHECK(p.in_band + p.in_disjoint == x);
  CHECK(meet_u(ctx, abs_u(ctx, p.in_band), abs_u(ctx, p.in_disjoint)) == ctx.zero());

  const auto all = project_band_unitized(ctx, {Band::full(fp2), true}, x);
  CHECK(all.in_band == x);
  CHECK(all.in_disjoint == ctx.zero());
  const auto none = project_band_unitized(ctx, {Band::empty(fp2), false}, x);
  CHECK(none.in_band == ctx.zero());
  CHECK(none.in_disjoint == x);

  const Unitization sparse(Truncation::meet_with_one());
  CHECK_THROWS_AS(project_band_unitized(sparse, {Band::full(fp2), true}, x), Error);
  CHECK(check_band_projection(ctx, 3, 200).verdict == Verdict::Pass);
  CHECK(check_band_component(3, 200).verdict == Verdict::Pass);
}

TEST_CASE("scripted reproductions") {
  CHECK(repro_ids().size() == 6);
  for (const auto& id : repro_ids()) {
    const ReproOutcome r = run_repro(id);
    CHECK_MESSAGE(r.matches, id);
    CHECK(r.checksum.size() == 16);
    CHECK(run_repro(id).checksum == r.checksum);
    CHECK(r.to_json()["id"] == id);
  }
  CHECK_THROWS_AS(run_repro("nope"), Error);
}
