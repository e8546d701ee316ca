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

#include "trunclat/lattice.hpp"

#include "trunclat/error.hpp"

namespace trunclat {

namespace {

void require_same_space(const Element& a, const Element& b) {
  if (!(a.space() == b.space())) {
    throw Error(Errc::SpaceMismatch,
                a.space().name() + " vs " + b.space().name());
  }
}

// Coordinatewise combination; f must map (0, 0) to 0 for sparse operands.
template <class F>
Element zip(const Element& a, const Element& b, F f) {
  require_same_space(a, b);
  if (a.space().is_sparse()) {
    SparseMap out;
    const SparseMap& ea = a.entries();
    const SparseMap& eb = b.entries();
    auto ia = ea.begin();
    auto ib = eb.begin();
    const Rational zero;
    while (ia != ea.end() || ib != eb.end()) {
      if (ib == eb.end() || (ia != ea.end() && ia->first < ib->first)) {
        out.emplace(ia->first, f(ia->second, zero));
        ++ia;
      } else if (ia == ea.end() || ib->first < ia->first) {
        out.emplace(ib->first, f(zero, ib->second));
        ++ib;
      } else {
        out.emplace(ia->first, f(ia->second, ib->second));
        ++ia;
        ++ib;
      }
    }
    return Element::sparse(std::move(out));
  }
  const auto& ca = a.coords();
  const auto& cb = b.coords();
  std::vector<Rational> out;
  out.reserve(ca.size());
  for (std::size_t i = 0; i < ca.size(); ++i) out.push_back(f(ca[i], cb[i]));
  return Element::of(a.space(), std::move(out));
}

template <class F>
Element map(const Element& a, F f) {
  if (a.space().is_sparse()) {
    SparseMap out;
    for (const auto& [k, v] : a.entries()) out.emplace(k, f(v));
    return Element::sparse(std::move(out));
  }
  std::vector<Rational> out;
  out.reserve(a.coords().size());
  for (const auto& c : a.coords()) out.push_back(f(c));
  return Element::of(a.space(), std::move(out));
}

// Lexicographic comparison on LexPlane: first coordinate dominates.
bool lex_leq(const Element& a, const Element& b) {
  const auto& x = a.coords();
  const auto& y = b.coords();
  return x[0] < y[0] || (x[0] == y[0] && x[1] <= y[1]);
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

Element operator-(const Element& a, const Element& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

Element operator-(const Element& a) {
  return map(a, [](const Rational& x) { return -x; });
}

Element operator*(const Rational& c, const Element& a) {
  if (c.is_zero()) return Element::zero(a.space());
  return map(a, [&c](const Rational& x) { return c * x; });
}

bool leq(const Element& a, const Element& b) {
  require_same_space(a, b);
  if (a.space().kind() == SpaceKind::LexPlane) return lex_leq(a, b);
  if (a.space().is_sparse()) {
    // a <= b iff (b - a) has no negative entry.
    const Element diff = b - a;
    for (const auto& [k, v] : diff.entries()) {
      if (v.sign() < 0) return false;
    }
    return true;
  }
  const auto& x = a.coords();
  const auto& y = b.coords();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] < x[i]) return false;
  }
  return true;
}

Element join(const Element& a, const Element& b) {
  if (a.space().kind() == SpaceKind::LexPlane) {
    require_same_space(a, b);
    return lex_leq(a, b) ? b : a;
  }
  return zip(a, b, [](const Rational& x, const Rational& y) { return max(x, y); });
}

Element meet(const Element& a, const Element& b) {
  if (a.space().kind() == SpaceKind::LexPlane) {
    require_same_space(a, b);
    return lex_leq(a, b) ? a : b;
  }
  return zip(a, b, [](const Rational& x, const Rational& y) { return min(x, y); });
}

Element abs(const Element& a) { return join(a, -a); }

Element pos(const Element& a) { return join(a, Element::zero(a.space())); }

Element neg(const Element& a) { return join(-a, Element::zero(a.space())); }

Element sup_finite(std::span<const Element> set) {
  if (set.empty()) throw Error(Errc::EmptySet, "sup_finite of an empty set");
  Element acc = set.front();
  for (const auto& x : set.subspan(1)) acc = join(acc, x);
  return acc;
}

bool is_increasing(std::span<const Element> chain) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!leq(chain[i - 1], chain[i])) return false;
  }
  return true;
}

std::pair<Chain, Chain> decompose_chain(std::span<const Element> chain,
                                        const Element& u, const Element& v) {
  if (!is_increasing(chain)) {
    throw Error(Errc::PreconditionViolated, "chain is not increasing");
  }
  const Element abs_u = abs(u);
  const Element bound = abs_u + abs(v);
  const Element zero = Element::zero(u.space());
  const Element lower = -abs_u;
  Chain us;
  Chain vs;
  us.reserve(chain.size());
  vs.reserve(chain.size());
  for (const auto& x : chain) {
    if (!leq(zero, x) || !leq(x, bound)) {
      throw Error(Errc::PreconditionViolated,
                  "chain element " + x.debug_string() + " outside [0, |u|+|v|]");
    }
    Element ui = meet(join(x, lower), abs_u);
    vs.push_back(x - ui);
    us.push_back(std::move(ui));
  }
  return {std::move(us), std::move(vs)};
}

bool check_chain_sup_additivity(std::span<const Element> xchain,
                                std::span<const Element> ychain) {
  if (xchain.size() != ychain.size() || xchain.empty()) {
    throw Error(Errc::PreconditionViolated,
                "chains must be nonempty and of equal length");
  }
  if (!is_increasing(xchain) || !is_increasing(ychain)) {
    throw Error(Errc::PreconditionViolated, "chains must be increasing");
  }
  std::vector<Element> sums;
  sums.reserve(xchain.size());
  for (std::size_t i = 0; i < xchain.size(); ++i) {
    sums.push_back(xchain[i] + ychain[i]);
  }
  return sup_finite(sums) == sup_finite(xchain) + sup_finite(ychain);
}

}  // namespace trunclat
