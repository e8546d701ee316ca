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

#include "trunclat/truncation.hpp"

#include <vector>

#include "trunclat/error.hpp"
#include "trunclat/lattice.hpp"
#include "trunclat/truncation_laws.hpp"

namespace trunclat {

namespace {

void require_space(const Space& expected, const Element& x) {
  if (!(x.space() == expected)) {
    throw Error(Errc::SpaceMismatch,
                "truncation on " + expected.name() + " applied to " + x.space().name());
  }
}

Element all_ones(const Space& space) {
  return Element::of(space, std::vector<Rational>(space.dim(), Rational(1)));
}

struct BaseOps {
  using Value = Element;
  const Truncation& t;

  bool leq(const Element& a, const Element& b) const { return trunclat::leq(a, b); }
  Element meet(const Element& a, const Element& b) const { return trunclat::meet(a, b); }
  Element abs(const Element& a) const { return trunclat::abs(a); }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element truncate(const Element& a) const { return trunclat::truncate(t, a); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  Json to_json(const Element& a) const { return element_to_json(a); }
};

}  // namespace

Truncation Truncation::meet_with_unit(Element unit) {
  if (!is_positive(unit)) {
    throw Error(Errc::InvalidDescriptor,
                "truncation unit " + unit.debug_string() + " is not >= 0");
  }
  const Space space = unit.space();
  return Truncation(space, TruncationKind::MeetWithUnit, "meet_with_unit", std::move(unit));
}

Truncation Truncation::meet_with_one() {
  return Truncation(Space::sparse_seq(), TruncationKind::MeetWithOne, "meet_with_one",
                    std::nullopt);
}

Truncation Truncation::lex_meet_zero_one() {
  return Truncation(Space::lex_plane(), TruncationKind::LexMeetZeroOne, "lex_meet_zero_one",
                    Element::lex(0, 1));
}

Truncation Truncation::identity() {
  return Truncation(Space::identity_line(), TruncationKind::Identity, "identity",
                    std::nullopt);
}

Truncation Truncation::fixture(Space space, std::string name, Map map) {
  return Truncation(space, TruncationKind::Fixture, std::move(name), std::nullopt,
                    std::move(map));
}

Element Truncation::apply(const Element& x) const {
  switch (kind_) {
    case TruncationKind::MeetWithUnit:
    case TruncationKind::LexMeetZeroOne:
      return meet(x, *unit_);
    case TruncationKind::MeetWithOne: {
      SparseMap out;
      for (const auto& [k, v] : x.entries()) out.emplace(k, min(v, Rational(1)));
      return Element::sparse(std::move(out));
    }
    case TruncationKind::Identity:
      return x;
    case TruncationKind::Fixture:
      return map_(x);
  }
  return x;
}

Truncation default_truncation(const Space& space) {
  switch (space.kind()) {
    case SpaceKind::SparseSeq: return Truncation::meet_with_one();
    case SpaceKind::LexPlane: return Truncation::lex_meet_zero_one();
    case SpaceKind::IdentityLine: return Truncation::identity();
    case SpaceKind::FinitePointwise: return Truncation::meet_with_unit(all_ones(space));
  }
  throw Error(Errc::InvalidDescriptor, "no default truncation");
}

Json truncation_to_json(const Truncation& t) {
  Json j;
  switch (t.kind()) {
    case TruncationKind::MeetWithUnit:
      j["kind"] = "meet_with_unit";
      j["unit"] = element_to_json(*t.unit());
      break;
    case TruncationKind::MeetWithOne: j["kind"] = "meet_with_one"; break;
    case TruncationKind::LexMeetZeroOne: j["kind"] = "lex_meet_zero_one"; break;
    case TruncationKind::Identity: j["kind"] = "identity"; break;
    case TruncationKind::Fixture:
      j["kind"] = "fixture";
      j["name"] = t.name();
      break;
  }
  return j;
}

Truncation truncation_from_json(const Space& space, const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(Errc::InvalidDescriptor,
                "truncation descriptor must be an object with a \"kind\" string");
  }
  const auto kind = j["kind"].get<std::string>();
  auto require = [&](SpaceKind sk) {
    if (space.kind() != sk) {
      throw Error(Errc::InvalidDescriptor,
                  "truncation '" + kind + "' is not defined on " + space.name());
    }
  };
  if (kind == "meet_with_one") {
    require(SpaceKind::SparseSeq);
    return Truncation::meet_with_one();
  }
  if (kind == "lex_meet_zero_one") {
    require(SpaceKind::LexPlane);
    return Truncation::lex_meet_zero_one();
  }
  if (kind == "identity") {
    require(SpaceKind::IdentityLine);
    return Truncation::identity();
  }
  if (kind == "meet_with_unit") {
    if (!j.contains("unit")) {
      if (space.kind() == SpaceKind::FinitePointwise) {
        return Truncation::meet_with_unit(all_ones(space));
      }
      throw Error(Errc::InvalidDescriptor, "meet_with_unit needs a \"unit\" element");
    }
    return Truncation::meet_with_unit(element_from_json(space, j["unit"]));
  }
  throw Error(Errc::InvalidDescriptor, "unknown truncation kind '" + kind + "'");
}

Element truncate(const Truncation& t, const Element& x) {
  require_space(t.space(), x);
  if (!is_positive(x)) {
    throw Error(Errc::NegativeInput, "truncate of " + x.debug_string());
  }
  return t.apply(x);
}

bool in_fixed_set(const Truncation& t, const Element& x) {
  require_space(t.space(), x);
  const Element ax = abs(x);
  return t.apply(ax) == ax;
}

LawReport check_tau1(const Truncation& t, std::span<const ElementPair> pairs) {
  return laws::tau1(BaseOps{t}, pairs, "truncation.tau1");
}

LawReport check_tau2(const Truncation& t, std::span<const Element> samples) {
  return laws::tau2(BaseOps{t}, samples, "truncation.tau2");
}

LawReport check_meet_exchange(const Truncation& t, std::span<const ElementPair> pairs) {
  return laws::meet_exchange(BaseOps{t}, pairs, "truncation.meet_exchange");
}

LawReport check_basic_properties(const Truncation& t, std::span<const ElementPair> pairs) {
  return laws::basic_properties(BaseOps{t}, pairs, "truncation.basic_properties");
}

LawReport Tau3Result::to_report(std::string law_id, std::uint64_t trials) const {
  switch (kind) {
    case Kind::SymbolicPass: {
      LawReport r = LawReport::pass(std::move(law_id), trials);
      r.witness = Json{{"decision", "symbolic"}, {"reason", reason}};
      return r;
    }
    case Kind::SymbolicViolation:
      return LawReport::refuted(std::move(law_id), trials,
                                Json{{"a", element_to_json(*witness)},
                                     {"decision", "symbolic"},
                                     {"reason", reason}});
    case Kind::ViolationWitness: {
      LawReport r = LawReport::inconclusive(std::move(law_id), trials,
                                            "n <= " + std::to_string(bound));
      r.witness = Json{{"candidate", element_to_json(*witness)}, {"reason", reason}};
      return r;
    }
    case Kind::NoViolationUpTo:
      return LawReport::inconclusive(std::move(law_id), trials,
                                     "n <= " + std::to_string(bound));
  }
  return LawReport::pass(std::move(law_id), trials);
}

Tau3Result check_tau3(const Truncation& t, std::span<const Element> samples,
                      unsigned bound) {
  using Kind = Tau3Result::Kind;
  const Space& space = t.space();
  switch (t.kind()) {
    case TruncationKind::Identity: {
      // trunc(n x) = n x for every n and every x.
      Element x = Element::line(1);
      for (const auto& s : samples) {
        if (!s.is_zero() && is_positive(s)) {
          x = s;
          break;
        }
      }
      return {Kind::SymbolicViolation, x, 0,
              "identity truncation fixes n x for every n"};
    }
    case TruncationKind::MeetWithOne:
      return {Kind::SymbolicPass, std::nullopt, 0,
              "n x_k <= 1 for all n forces x_k <= 0 in every coordinate"};
    case TruncationKind::LexMeetZeroOne:
    case TruncationKind::MeetWithUnit: {
      const Element& u = *t.unit();
      if (space.kind() == SpaceKind::LexPlane && u.coords()[0].sign() > 0) {
        // (0, n) <= u for all n once u has a positive first coordinate.
        return {Kind::SymbolicViolation, Element::lex(0, 1), 0,
                "n (0,1) <= u for all n since u has positive first coordinate"};
      }
      return {Kind::SymbolicPass, std::nullopt, 0,
              space.kind() == SpaceKind::LexPlane
                  ? "n x <= (0,s) for all n forces x = 0"
                  : "n x <= u for all n forces x = 0 coordinatewise"};
    }
    case TruncationKind::Fixture:
      break;
  }
  for (const auto& s : samples) {
    if (s.is_zero() || !is_positive(s)) continue;
    bool survives = true;
    for (unsigned n = 1; n <= bound && survives; ++n) {
      const Element nx = Rational(n) * s;
      survives = t.apply(nx) == nx;
    }
    if (survives) {
      return {Kind::ViolationWitness, s, bound,
              "trunc(n x) = n x for every tested n"};
    }
  }
  return {Kind::NoViolationUpTo, std::nullopt, bound, "no sample survived"};
}

FixedSetComparison compare_fixed_sets(const Truncation& t1, const Truncation& t2,
                                      std::span<const Element> samples) {
  if (!(t1.space() == t2.space())) {
    throw Error(Errc::SpaceMismatch, t1.space().name() + " vs " + t2.space().name());
  }
  std::vector<Element> closed;
  closed.reserve(3 * samples.size());
  for (const auto& s : samples) {
    const Element a = abs(s);
    closed.push_back(a);
    closed.push_back(t1.apply(a));
    closed.push_back(t2.apply(a));
  }
  FixedSetComparison out;
  for (const auto& x : closed) {
    if (out.fixed_sets_agree && in_fixed_set(t1, x) != in_fixed_set(t2, x)) {
      out.fixed_sets_agree = false;
      out.fixed_set_witness = x;
    }
    if (out.truncations_agree && !(t1.apply(x) == t2.apply(x))) {
      out.truncations_agree = false;
      out.truncation_witness = x;
    }
  }
  const std::string id = "truncation.fixed_set_determines";
  if (out.fixed_sets_agree == out.truncations_agree) {
    out.report = LawReport::pass(id, closed.size());
  } else {
    Json w;
    w["x"] = element_to_json(out.fixed_set_witness ? *out.fixed_set_witness
                                                   : *out.truncation_witness);
    w["fixed_sets_agree"] = out.fixed_sets_agree;
    w["truncations_agree"] = out.truncations_agree;
    out.report = LawReport::refuted(id, closed.size(), std::move(w));
  }
  return out;
}

}  // namespace trunclat
