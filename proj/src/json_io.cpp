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

#include "trunclat/json_io.hpp"

#include <charconv>

#include "trunclat/error.hpp"

namespace trunclat {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(Errc::InvalidDescriptor, what);
}

SparseIndex parse_index(const std::string& key) {
  unsigned long long value = 0;
  const char* end = key.data() + key.size();
  const auto [ptr, ec] = std::from_chars(key.data(), end, value);
  if (ec != std::errc() || ptr != end || value == 0 || value > 0xFFFFFFFFull) {
    bad("sparse index '" + key + "' is not an integer >= 1");
  }
  return static_cast<SparseIndex>(value);
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational::parse(j.dump());
  bad("expected a rational string, got " + j.dump());
}

Json space_to_json(const Space& s) {
  Json j;
  switch (s.kind()) {
    case SpaceKind::FinitePointwise:
      j["space"] = "finite_pointwise";
      j["dim"] = s.dim();
      break;
    case SpaceKind::SparseSeq: j["space"] = "sparse_seq"; break;
    case SpaceKind::LexPlane: j["space"] = "lex_plane"; break;
    case SpaceKind::IdentityLine: j["space"] = "identity_line"; break;
  }
  return j;
}

Space space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("space") || !j["space"].is_string()) {
    bad("space descriptor must be an object with a \"space\" string");
  }
  const auto name = j["space"].get<std::string>();
  if (name == "sparse_seq") return Space::sparse_seq();
  if (name == "lex_plane") return Space::lex_plane();
  if (name == "identity_line") return Space::identity_line();
  if (name == "finite_pointwise") {
    if (!j.contains("dim") || !j["dim"].is_number_unsigned() ||
        j["dim"].get<std::size_t>() == 0) {
      bad("finite_pointwise needs a positive integer \"dim\"");
    }
    return Space::finite_pointwise(j["dim"].get<std::size_t>());
  }
  bad("unknown space '" + name + "'");
}

Json element_to_json(const Element& e) {
  switch (e.space().kind()) {
    case SpaceKind::SparseSeq: {
      Json j = Json::object();
      for (const auto& [k, v] : e.entries()) j[std::to_string(k)] = v.str();
      return j;
    }
    case SpaceKind::IdentityLine: return e.coords()[0].str();
    default: {
      Json j = Json::array();
      for (const auto& c : e.coords()) j.push_back(c.str());
      return j;
    }
  }
}

Element element_from_json(const Space& space, const Json& j) {
  switch (space.kind()) {
    case SpaceKind::SparseSeq: {
      if (!j.is_object()) bad("sparse_seq element must be an object");
      SparseMap entries;
      for (const auto& [key, value] : j.items()) {
        entries[parse_index(key)] = rational_from_json(value);
      }
      return Element::sparse(std::move(entries));
    }
    case SpaceKind::IdentityLine:
      if (j.is_array() && j.size() == 1) return Element::line(rational_from_json(j[0]));
      return Element::line(rational_from_json(j));
    default: {
      if (!j.is_array()) bad(space.name() + " element must be an array");
      std::vector<Rational> coords;
      for (const auto& c : j) coords.push_back(rational_from_json(c));
      return Element::of(space, std::move(coords));
    }
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace trunclat
