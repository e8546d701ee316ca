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
#include <string>
#include <utility>

#include "trunclat/law_report.hpp"

namespace trunclat::laws {

// The truncation laws, written once over any truncated lattice. Ops supplies
//   using Value;
//   bool leq(const Value&, const Value&) const;
//   Value meet(const Value&, const Value&) const;
//   Value abs(const Value&) const;
//   Value sub(const Value&, const Value&) const;
//   Value truncate(const Value&) const;
//   bool is_zero(const Value&) const;
//   Json to_json(const Value&) const;
// so that both a base space and its unitization can be checked by the same
// code.

template <class Ops>
bool fixed(const Ops& ops, const typename Ops::Value& x) {
  const auto ax = ops.abs(x);
  return ops.truncate(ax) == ax;
}

template <class Ops>
Json pair_witness(const Ops& ops, const typename Ops::Value& a,
                  const typename Ops::Value& b, const char* check) {
  Json j;
  j["a"] = ops.to_json(a);
  j["b"] = ops.to_json(b);
  j["check"] = check;
  return j;
}

template <class Ops>
LawReport tau1(const Ops& ops,
               std::span<const std::pair<typename Ops::Value, typename Ops::Value>> pairs,
               std::string id) {
  std::uint64_t n = 0;
  for (const auto& [a, b] : pairs) {
    ++n;
    const auto ta = ops.truncate(a);
    if (!ops.leq(ops.meet(a, ops.truncate(b)), ta)) {
      return LawReport::refuted(id, n, pair_witness(ops, a, b, "a^tr(b) <= tr(a)"));
    }
    if (!ops.leq(ta, a)) {
      return LawReport::refuted(id, n, pair_witness(ops, a, b, "tr(a) <= a"));
    }
  }
  return LawReport::pass(std::move(id), n);
}

template <class Ops>
LawReport tau2(const Ops& ops, std::span<const typename Ops::Value> samples,
               std::string id) {
  std::uint64_t n = 0;
  for (const auto& a : samples) {
    ++n;
    if (ops.is_zero(ops.truncate(a)) && !ops.is_zero(a)) {
      Json w;
      w["a"] = ops.to_json(a);
      w["check"] = "tr(a) = 0 implies a = 0";
      return LawReport::refuted(id, n, std::move(w));
    }
  }
  return LawReport::pass(std::move(id), n);
}

template <class Ops>
LawReport meet_exchange(
    const Ops& ops,
    std::span<const std::pair<typename Ops::Value, typename Ops::Value>> pairs,
    std::string id) {
  std::uint64_t n = 0;
  for (const auto& [a, b] : pairs) {
    ++n;
    if (!(ops.meet(a, ops.truncate(b)) == ops.meet(ops.truncate(a), b))) {
      return LawReport::refuted(id, n, pair_witness(ops, a, b, "a^tr(b) == tr(a)^b"));
    }
  }
  return LawReport::pass(std::move(id), n);
}

template <class Ops>
LawReport basic_properties(
    const Ops& ops,
    std::span<const std::pair<typename Ops::Value, typename Ops::Value>> pairs,
    std::string id) {
  std::uint64_t n = 0;
  for (const auto& [x, y] : pairs) {
    ++n;
    const auto tx = ops.truncate(x);
    const auto ty = ops.truncate(y);
    const char* failed = nullptr;
    if (!ops.leq(tx, x)) {
      failed = "tr(x) <= x";
    } else if (!ops.leq(ops.truncate(ops.meet(x, y)), ty) ||
               (ops.leq(x, y) && !ops.leq(tx, ty))) {
      failed = "x <= y implies tr(x) <= tr(y)";
    } else if (!(ops.truncate(tx) == tx)) {
      failed = "tr(tr(x)) == tr(x)";
    } else if (!fixed(ops, tx) || !fixed(ops, ty)) {
      failed = "tr(x) is a fixed point";
    } else if (!fixed(ops, ops.meet(x, ty))) {
      failed = "x <= y, y fixed implies x fixed";
    } else if (!ops.leq(ops.abs(ops.sub(tx, ty)), ops.truncate(ops.abs(ops.sub(x, y))))) {
      failed = "|tr(x) - tr(y)| <= tr(|x - y|)";
    }
    if (failed) return LawReport::refuted(id, n, pair_witness(ops, x, y, failed));
  }
  return LawReport::pass(std::move(id), n);
}

}  // namespace trunclat::laws
