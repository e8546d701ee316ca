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

#include "trunclat/band.hpp"

#include <string>
#include <vector>

#include "trunclat/error.hpp"
#include "trunclat/generator.hpp"
#include "trunclat/lattice.hpp"

namespace trunclat {

namespace {

void require_dense(const Space& space) {
  if (space.kind() != SpaceKind::FinitePointwise) {
    throw Error(Errc::PreconditionViolated,
                "bands are modeled on finite_pointwise only, got " + space.name());
  }
}

Json band_json(const Band& b) {
  Json coords = Json::array();
  for (auto k : b.coords()) coords.push_back(k);
  return coords;
}

Band random_band(Generator& g, const Space& space) {
  std::set<std::size_t> coords;
  for (std::size_t k = 1; k <= space.dim(); ++k) {
    if (g.coin()) coords.insert(k);
  }
  return Band(space, std::move(coords));
}

}  // namespace

Band::Band(const Space& space, std::set<std::size_t> coords)
    : space_(space), coords_(std::move(coords)) {
  require_dense(space_);
  for (auto k : coords_) {
    if (k < 1 || k > space_.dim()) {
      throw Error(Errc::PreconditionViolated,
                  "band coordinate " + std::to_string(k) + " outside [1, " +
                      std::to_string(space_.dim()) + "]");
    }
  }
}

Band Band::full(const Space& space) {
  require_dense(space);
  std::set<std::size_t> all;
  for (std::size_t k = 1; k <= space.dim(); ++k) all.insert(k);
  return Band(space, std::move(all));
}

bool Band::contains(const Element& x) const {
  if (x.space() != space_) throw Error(Errc::SpaceMismatch, "band and element spaces differ");
  const auto& c = x.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero() && !contains_coord(i + 1)) return false;
  }
  return true;
}

Band Band::complement() const {
  std::set<std::size_t> rest;
  for (std::size_t k = 1; k <= space_.dim(); ++k) {
    if (!contains_coord(k)) rest.insert(k);
  }
  return Band(space_, std::move(rest));
}

Element Band::mask(const Element& x) const {
  if (x.space() != space_) throw Error(Errc::SpaceMismatch, "band and element spaces differ");
  std::vector<Rational> c = x.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!contains_coord(i + 1)) c[i] = Rational();
  }
  return Element::dense(std::move(c));
}

Element band_component(const Band& band, const Element& x) {
  if (x.space() != band.space()) {
    throw Error(Errc::SpaceMismatch, "band and element spaces differ");
  }
  if (!is_positive(x)) throw Error(Errc::NegativeInput, "x must be >= 0");
  return band.mask(x);
}

Element band_component_by_search(const Band& band, const Element& x) {
  if (x.space() != band.space()) {
    throw Error(Errc::SpaceMismatch, "band and element spaces differ");
  }
  if (!is_positive(x)) throw Error(Errc::NegativeInput, "x must be >= 0");
  const std::size_t n = x.space().dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;

  const Rational half(1, 2);
  std::vector<Element> members;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Rational> c(n);
    std::size_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      const auto digit = rest % 3;
      rest /= 3;
      c[i] = digit == 0 ? Rational() : digit == 1 ? half * x.coords()[i] : x.coords()[i];
    }
    Element y = Element::dense(std::move(c));
    if (leq(Element::zero(x.space()), y) && leq(y, x) && band.contains(y)) {
      members.push_back(std::move(y));
    }
  }
  // 0 is always a member.
  return sup_finite(members);
}

BandProjection project_band_unitized(const Unitization& ctx, const UnitizedBand& band,
                                     const UnitizedElement& x) {
  const Truncation& t = ctx.truncation();
  if (!t.unital()) {
    throw Error(Errc::PreconditionViolated, "band projection needs a unital base");
  }
  require_dense(ctx.base());
  if (band.base.space() != ctx.base() || x.e.space() != ctx.base()) {
    throw Error(Errc::SpaceMismatch, "band, element and unitization spaces differ");
  }
  const Element& u = *t.unit();
  const Element e_part = x.e + x.lambda * u;
  UnitizedElement in_band{band.base.mask(e_part), Rational()};
  if (band.include_complement) {
    in_band = in_band + UnitizedElement{-(x.lambda * u), x.lambda};
  }
  UnitizedElement in_disjoint = x - in_band;
  return {std::move(in_band), std::move(in_disjoint)};
}

LawReport check_band_component(std::uint64_t seed, std::uint64_t trials) {
  const std::string id = "band.component";
  Generator dims(seed, id, Space::finite_pointwise(1));
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Space space = Space::finite_pointwise(static_cast<std::size_t>(dims.between(1, 4)));
    Generator g(seed + i, id, space);
    const Band b = random_band(g, space);
    const Element x = g.positive();
    const Element fast = band_component(b, x);
    const Element slow = band_component_by_search(b, x);
    if (!(fast == slow)) {
      return LawReport::refuted(id, i + 1, Json{{"band", band_json(b)},
                                                {"x", element_to_json(x)},
                                                {"mask", element_to_json(fast)},
                                                {"search", element_to_json(slow)}});
    }
  }
  return LawReport::pass(id, trials);
}

LawReport check_band_projection(const Unitization& ctx, std::uint64_t seed,
                                std::uint64_t trials) {
  const std::string id = "band.unitized_projection";
  Generator g(seed, id, ctx.base());
  const auto zero = ctx.zero();
  for (std::uint64_t i = 0; i < trials; ++i) {
    const UnitizedBand b{random_band(g, ctx.base()), g.coin()};
    const UnitizedElement x = g.unitized();
    const auto [in_b, in_d] = project_band_unitized(ctx, b, x);
    std::string failed;
    if (!(in_b + in_d == x)) {
      failed = "parts sum to x";
    } else if (!(meet_u(ctx, abs_u(ctx, in_b), abs_u(ctx, in_d)) == zero)) {
      failed = "parts are disjoint";
    } else {
      // in_b = (m, 0) + c(1 - u) with m in B, and c = 0 unless the band
      // contains E^d.
      const Element m = in_b.e + in_b.lambda * *ctx.truncation().unit();
      if (!b.base.contains(m) || (!b.include_complement && !in_b.lambda.is_zero())) {
        failed = "band part lies in the band";
      }
    }
    if (!failed.empty()) {
      return LawReport::refuted(id, i + 1, Json{{"band", band_json(b.base)},
                                                {"include_complement", b.include_complement},
                                                {"x", unitized_to_json(x)},
                                                {"check", failed}});
    }
  }
  return LawReport::pass(id, trials);
}

}  // namespace trunclat
