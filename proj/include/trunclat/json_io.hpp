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

#pragma once

#include <json.hpp>

#include "trunclat/element.hpp"

namespace trunclat {

using Json = nlohmann::ordered_json;

// Wire formats. Rationals are "p/q" strings (integers and "p" strings are
// accepted on input). Elements: FinitePointwise and LexPlane as arrays of
// rationals, SparseSeq as {"index": "p/q"} with indices >= 1, IdentityLine as
// a single rational string. Malformed input throws Error(InvalidDescriptor).

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"space":"sparse_seq"} | {"space":"finite_pointwise","dim":3} |
/// {"space":"lex_plane"} | {"space":"identity_line"}
Json space_to_json(const Space& s);
Space space_from_json(const Json& j);

Json element_to_json(const Element& e);
Element element_from_json(const Space& space, const Json& j);

/// Parses text as JSON, rethrowing syntax errors as InvalidDescriptor.
Json parse_json(std::string_view text);

}  // namespace trunclat
