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

#include "trunclat/element.hpp"

#include <sstream>

#include "trunclat/error.hpp"

namespace trunclat {

Space Space::finite_pointwise(std::size_t dim) {
  if (dim == 0) {
    throw Error(Errc::InvalidDescriptor, "finite_pointwise needs dim >= 1");
  }
  return Space(SpaceKind::FinitePointwise, dim);
}

std::string Space::name() const {
  switch (kind_) {
    case SpaceKind::FinitePointwise:
      return "finite_pointwise(" + std::to_string(dim_) + ")";
    case SpaceKind::SparseSeq: return "sparse_seq";
    case SpaceKind::LexPlane: return "lex_plane";
    case SpaceKind::IdentityLine: return "identity_line";
  }
  return "?";
}

Element Element::zero(const Space& space) {
  if (space.is_sparse()) return Element(space, SparseMap{});
  return Element(space, std::vector<Rational>(space.dim()));
}

Element Element::dense(std::vector<Rational> coords) {
  const Space space = Space::finite_pointwise(coords.size());
  return Element(space, std::move(coords));
}

Element Element::sparse(SparseMap entries) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (it->first == 0) {
      throw Error(Errc::InvalidDescriptor, "sparse indices start at 1");
    }
    it = it->second.is_zero() ? entries.erase(it) : std::next(it);
  }
  return Element(Space::sparse_seq(), std::move(entries));
}

Element Element::lex(Rational first, Rational second) {
  return Element(Space::lex_plane(),
                 std::vector<Rational>{std::move(first), std::move(second)});
}

Element Element::line(Rational value) {
  return Element(Space::identity_line(), std::vector<Rational>{std::move(value)});
}

Element Element::of(const Space& space, std::vector<Rational> coords) {
  if (space.is_sparse()) {
    throw Error(Errc::InvalidDescriptor, "Element::of needs a dense space");
  }
  if (coords.size() != space.dim()) {
    throw Error(Errc::InvalidDescriptor,
                "expected " + std::to_string(space.dim()) + " coordinates for " +
                    space.name() + ", got " + std::to_string(coords.size()));
  }
  return Element(space, std::move(coords));
}

const std::vector<Rational>& Element::coords() const {
  if (const auto* d = std::get_if<std::vector<Rational>>(&payload_)) return *d;
  throw Error(Errc::SpaceMismatch, "coords() on a sparse element");
}

const SparseMap& Element::entries() const {
  if (const auto* s = std::get_if<SparseMap>(&payload_)) return *s;
  throw Error(Errc::SpaceMismatch, "entries() on a dense element");
}

Rational Element::at(std::size_t k) const {
  if (k == 0) throw Error(Errc::PreconditionViolated, "coordinates are 1-based");
  if (const auto* s = std::get_if<SparseMap>(&payload_)) {
    const auto it = s->find(static_cast<SparseIndex>(k));
    return it == s->end() ? Rational() : it->second;
  }
  const auto& d = std::get<std::vector<Rational>>(payload_);
  return k <= d.size() ? d[k - 1] : Rational();
}

bool Element::is_zero() const {
  if (const auto* s = std::get_if<SparseMap>(&payload_)) return s->empty();
  for (const auto& c : std::get<std::vector<Rational>>(payload_)) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string Element::debug_string() const {
  std::ostringstream os;
  if (const auto* s = std::get_if<SparseMap>(&payload_)) {
    os << '{';
    bool first = true;
    for (const auto& [k, v] : *s) {
      os << (first ? "" : ", ") << k << ':' << v.short_str();
      first = false;
    }
    os << '}';
    return os.str();
  }
  os << '(';
  const auto& d = std::get<std::vector<Rational>>(payload_);
  for (std::size_t i = 0; i < d.size(); ++i) {
    os << (i ? "," : "") << d[i].short_str();
  }
  os << ')';
  return os.str();
}

}  // namespace trunclat
