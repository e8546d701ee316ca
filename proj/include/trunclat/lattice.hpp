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

#include <span>
#include <utility>
#include <vector>

#include "trunclat/element.hpp"

namespace trunclat {

// Vector-space structure. Binary operations throw Error(SpaceMismatch) when
// the operands live in different spaces.
Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const Rational& c, const Element& a);
inline Element scale(const Rational& c, const Element& a) { return c * a; }

// Order and lattice operations.
bool leq(const Element& a, const Element& b);
inline bool is_positive(const Element& a) {
  return leq(Element::zero(a.space()), a);
}
Element join(const Element& a, const Element& b);
Element meet(const Element& a, const Element& b);
Element abs(const Element& a);
/// a v 0.
Element pos(const Element& a);
/// (-a) v 0; always >= 0, so a = pos(a) - neg(a).
Element neg(const Element& a);

/// Least upper bound of a nonempty finite set. Every supported space is a
/// lattice, so the supremum always exists. Throws Error(EmptySet).
Element sup_finite(std::span<const Element> set);

/// Increasing finite chain x_0 <= x_1 <= ... ; the finite stand-in for an
/// increasing net.
using Chain = std::vector<Element>;

bool is_increasing(std::span<const Element> chain);

/// Splits a chain 0 <= x_i <= |u| + |v| into chains u_i = (x_i v -|u|) ^ |u|
/// and v_i = x_i - u_i, both increasing with 0 <= u_i <= |u|,
/// 0 <= v_i <= |v|. Throws Error(PreconditionViolated) if the chain is not
/// increasing or not bounded.
std::pair<Chain, Chain> decompose_chain(std::span<const Element> chain,
                                        const Element& u, const Element& v);

/// sup(x_i + y_i) == sup(x_i) + sup(y_i) for two increasing chains of the same
/// length. Throws Error(PreconditionViolated) on mismatched lengths or
/// non-increasing input.
bool check_chain_sup_additivity(std::span<const Element> xchain,
                                std::span<const Element> ychain);

}  // namespace trunclat
