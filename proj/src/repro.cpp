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

#include "trunclat/repro.hpp"

#include <cstdio>
#include <functional>

#include "trunclat/band.hpp"
#include "trunclat/convergence.hpp"
#include "trunclat/engine.hpp"
#include "trunclat/error.hpp"
#include "trunclat/generator.hpp"
#include "trunclat/lattice.hpp"
#include "trunclat/suite.hpp"

namespace trunclat {

namespace {

constexpr std::uint64_t kTrials = 1000;

class Trace {
 public:
  void line(std::string text) { lines_.push_back(std::move(text)); }
  /// Records a check and folds it into the overall verdict.
  void expect(bool ok, const std::string& what) {
    line(std::string(ok ? "ok   " : "FAIL ") + what);
    ok_ = ok_ && ok;
  }
  void report(const LawReport& r, Verdict want) {
    std::string text = r.law_id + ": " + verdict_name(r.verdict) + " (" +
                       std::to_string(r.trials) + " trials)";
    if (r.verdict != Verdict::Pass && r.witness) text += " witness " + r.witness->dump();
    expect(r.verdict == want, text);
  }
  bool ok() const { return ok_; }
  std::vector<std::string> take() { return std::move(lines_); }

 private:
  std::vector<std::string> lines_;
  bool ok_ = true;
};

std::string u_str(const UnitizedElement& a) { return unitized_to_json(a).dump(); }
std::string e_str(const Element& a) { return element_to_json(a).dump(); }

void run_law_list(Trace& tr, const Truncation& t, std::initializer_list<const char*> ids) {
  for (const char* id : ids) tr.report(run_law(t, id, kReproSeed, kTrials), Verdict::Pass);
}

void lex_trunc_archimedean(Trace& tr) {
  const Truncation t = Truncation::lex_meet_zero_one();
  tr.line("space lex_plane, truncation x -> x /\\ (0,1), seed " + std::to_string(kReproSeed));
  run_law_list(tr, t, {"truncation.tau1", "truncation.tau2", "truncation.meet_exchange",
                       "truncation.basic_properties"});
  const auto tau3 = check_tau3(t, {}, 100);
  tr.expect(tau3.kind == Tau3Result::Kind::SymbolicPass, "tau3 decided symbolically: " + tau3.reason);

  const auto arch = archimedean_check(t.space(), {}, 100);
  const ElementPair w = *arch.witness;
  tr.expect(!arch.archimedean && w == ElementPair{Element::lex(0, 1), Element::lex(1, 0)},
            "space is not Archimedean, witness x = " + e_str(w.first) + ", y = " +
                e_str(w.second));
  bool dominated = true;
  for (long n = 1; n <= 1000000; n *= 10) {
    dominated = dominated && leq(Rational(n) * w.first, w.second);
  }
  tr.expect(dominated, "0 <= n x <= y for n = 1, 10, ..., 10^6");
  tr.expect(!archimedean_escape(w), "no n escapes: n (0,1) = (0,n) < (1,0) for every n");
}

void identity_trunc_tau3(Trace& tr) {
  const Truncation t = Truncation::identity();
  tr.line("space identity_line, truncation x -> x, seed " + std::to_string(kReproSeed));
  run_law_list(tr, t, {"truncation.tau1", "truncation.tau2", "truncation.meet_exchange",
                       "truncation.basic_properties"});
  const Element one = Element::line(1);
  bool fixed = true;
  for (long n = 1; n <= 1000; ++n) {
    const Element nx = Rational(n) * one;
    fixed = fixed && truncate(t, nx) == nx;
  }
  tr.expect(fixed, "tr(n 1) = n 1 for n = 1..1000 although 1 != 0");
  std::vector<Element> samples{one};
  const auto tau3 = check_tau3(t, samples, 100);
  tr.expect(tau3.kind == Tau3Result::Kind::SymbolicViolation && tau3.witness == one,
            "tau3 violated symbolically at a = " + e_str(*tau3.witness) + ": " + tau3.reason);
  const LawReport suite = run_law(t, "truncation.tau3", kReproSeed, kTrials);
  tr.expect(suite.verdict == Verdict::Refuted && suite.expected_violation,
            "suite flags truncation.tau3 as an expected violation");
}

void c00_ruc(Trace& tr) {
  tr.line("space sparse_seq, certified sequences, tail window 50");
  const auto fixtures = c00_fixtures();
  const auto out = repro_c00_ruc(fixtures, 50);
  for (const auto& [name, limit] : out.limits) {
    tr.line("  " + name + " -> limit " + e_str(limit) + ", support size " +
            std::to_string(limit.entries().size()));
  }
  tr.report(out.report, Verdict::Pass);
  tr.expect(out.limits.size() == fixtures.size() && out.limits[1].second ==
                                                      Element::sparse({{1, Rational(1)}}),
            "stabilized fixture converges to {1:1}");
  const std::vector<CertifiedSequence> lying{lying_c00_fixture()};
  bool rejected = false;
  try {
    (void)repro_c00_ruc(lying, 50);
  } catch (const Error& e) {
    rejected = e.code() == Errc::InvalidCertificate;
    tr.line("  " + std::string(e.what()));
  }
  tr.expect(rejected, "a lying certificate is rejected");
}

void unitization_not_ruc(Trace& tr) {
  tr.line("space sparse_seq (+) R, truncation /\\ 1, u_n = sum_{k<=n} (1/k) e_k");
  const std::vector<Rational> eps{Rational(1, 10), Rational(1, 100)};
  const auto candidates = default_candidate_limits();
  const auto out = repro_unitization_not_ruc(eps, 50, candidates);
  for (const auto& w : out.windows) {
    tr.expect(w.cauchy, "eps " + w.eps.str() + ": 1-uniformly Cauchy on [" +
                            std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]");
  }
  tr.line("candidate limit | exposed at | gap | eps refuted");
  for (const auto& c : out.candidates) {
    std::string refuted;
    for (const auto& e : c.eps_refuted) refuted += (refuted.empty() ? "" : " ") + e.str();
    const std::string at = c.index == 0 ? "scalar" : "k=" + std::to_string(c.index);
    tr.expect(c.refuted, u_str(c.limit) + " | " + at + " | " + c.gap.str() + " | " + refuted);
  }
  tr.expect(out.candidates.size() >= 20,
            std::to_string(out.candidates.size()) + " candidate limits, all refuted");
  tr.report(out.report, Verdict::Pass);
}

void sup_of_truncations_repro(Trace& tr) {
  const Unitization ctx(Truncation::meet_with_one());
  const UnitizedElement one = ctx.one();
  tr.line("non-unital: sparse_seq, truncation /\\ 1; sup of tr(y) over y in E, 0 <= y <= x");
  const Element e1 = Element::sparse({{1, Rational(1)}});
  const std::vector<Element> ys{e1};
  const std::vector<UnitizedElement> zs{UnitizedElement{Element::zero(ctx.base()), Rational(1, 2)}};
  const LawReport at_one = check_sup_of_truncations(ctx, one, ys, zs);
  tr.report(at_one, Verdict::Pass);
  tr.expect(!leq_u(ctx, ctx.embed(e1), zs[0]), "x = 1, z = 1/2: y = {1:1} has tr(y) = {1:1}, not <= z");

  const UnitizedElement x3{Element::sparse({{1, Rational(3)}}), Rational()};
  const auto xbar = truncate_u(ctx, x3);
  tr.expect(xbar == ctx.embed(e1) &&
                ctx.embed(truncate(ctx.truncation(), x3.e)) == xbar,
            "x = {1:3}: tr(x) = " + u_str(xbar) + " attained at y = x");

  Generator g(kReproSeed, "sup-of-truncations", ctx.base());
  std::uint64_t checked = 0;
  bool all_pass = true;
  for (int i = 0; i < 50; ++i) {
    UnitizedElement x = abs_u(ctx, g.unitized());
    if (x == ctx.zero()) continue;
    std::vector<Element> sample_ys;
    std::vector<UnitizedElement> cands;
    for (int k = 0; k < 8; ++k) {
      sample_ys.push_back(g.element());
      cands.push_back(meet_u(ctx, truncate_u(ctx, x), abs_u(ctx, g.unitized())));
    }
    const auto r = check_sup_of_truncations(ctx, x, sample_ys, cands);
    checked += r.trials;
    all_pass = all_pass && r.verdict == Verdict::Pass;
  }
  tr.expect(all_pass, "50 seeded x: no y exceeds tr(x) and every z < tr(x) is beaten (" +
                          std::to_string(checked) + " checks)");

  tr.line("unital: finite_pointwise(2), u = (1,1); sup is x /\\ u for x = x1 + mu(1 - u)");
  const Unitization fp(Truncation::meet_with_unit(Element::dense({Rational(1), Rational(1)})));
  const std::vector<Element> fys{Element::dense({Rational(1), Rational()}),
                                 Element::dense({Rational(1, 2), Rational(1, 3)})};
  struct Case {
    Element x1;
    Rational mu;
  };
  for (const auto& c : {Case{Element::dense({Rational(2), Rational()}), Rational()},
                        Case{Element::dense({Rational(), Rational()}), Rational(1)},
                        Case{Element::dense({Rational(1), Rational(1)}), Rational()}}) {
    const auto r = check_unital_sup_of_truncations(fp, c.x1, c.mu, fys);
    const UnitizedElement x{c.x1 - c.mu * *fp.truncation().unit(), c.mu};
    tr.report(r, Verdict::Pass);
    tr.line("  x1 = " + e_str(c.x1) + ", mu = " + c.mu.str() + ": x /\\ u = " +
            u_str(meet_u(fp, x, fp.embed(*fp.truncation().unit()))));
  }
}

void band_decomposition(Trace& tr) {
  tr.line("bands of finite_pointwise(n), n <= 4; component = x masked to the band");
  tr.report(check_band_component(kReproSeed, 500), Verdict::Pass);
  for (std::size_t n = 2; n <= 4; ++n) {
    const Space space = Space::finite_pointwise(n);
    const Unitization ctx(default_truncation(space));
    tr.report(check_band_projection(ctx, kReproSeed + n, 500), Verdict::Pass);
  }
  const Space two = Space::finite_pointwise(2);
  const Unitization ctx(default_truncation(two));
  const UnitizedElement x{Element::dense({Rational(3), Rational(2)}), Rational(1)};
  const auto [in_b, in_d] = project_band_unitized(ctx, {Band(two, {1}), false}, x);
  tr.expect(in_b == UnitizedElement{Element::dense({Rational(4), Rational()}), Rational()},
            "x = " + u_str(x) + ", B = {1} without E^d: in_B = " + u_str(in_b) +
                ", in_B^d = " + u_str(in_d));
}

const std::vector<std::pair<std::string, std::function<void(Trace&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<void(Trace&)>>> r{
      {"lex-trunc-archimedean", lex_trunc_archimedean},
      {"identity-trunc-tau3", identity_trunc_tau3},
      {"c00-ruc", c00_ruc},
      {"unitization-not-ruc", unitization_not_ruc},
      {"sup-of-truncations", sup_of_truncations_repro},
      {"band-decomposition", band_decomposition},
  };
  return r;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

Json ReproOutcome::to_json() const {
  Json j;
  j["id"] = id;
  j["matches"] = matches;
  j["trace"] = trace;
  j["checksum"] = checksum;
  return j;
}

const std::vector<std::string>& repro_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

ReproOutcome run_repro(std::string_view id) {
  for (const auto& [name, fn] : registry()) {
    if (name != id) continue;
    Trace tr;
    fn(tr);
    ReproOutcome out;
    out.id = name;
    out.matches = tr.ok();
    out.trace = tr.take();
    std::string joined;
    for (const auto& l : out.trace) joined += l + "\n";
    out.checksum = hex64(stable_hash(joined));
    return out;
  }
  std::string known;
  for (const auto& k : repro_ids()) known += (known.empty() ? "" : ", ") + k;
  throw Error(Errc::InvalidDescriptor,
              "unknown repro id '" + std::string(id) + "' (known: " + known + ")");
}

}  // namespace trunclat
