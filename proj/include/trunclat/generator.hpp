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

#include <cstdint>
#include <random>
#include <string_view>

#include "trunclat/element.hpp"
#include "trunclat/truncation.hpp"
#include "trunclat/unitization.hpp"

namespace trunclat {

struct GeneratorBounds {
  /// Numerators lie in [-max_magnitude, max_magnitude], denominators in
  /// [1, max_magnitude].
  long max_magnitude = 32;
  /// SparseSeq indices lie in [1, max_index].
  SparseIndex max_index = 16;
  std::size_t max_support = 4;
};

/// Seeded sample stream. std::mt19937_64 and std::seed_seq are fully
/// specified by the standard and all range reduction is done here, so the
/// same (seed, stream, bounds) gives the same samples on every platform.
class Generator {
 public:
  Generator(std::uint64_t seed, Space space, GeneratorBounds bounds = {});
  /// Independent stream per name (e.g. per law id) under one seed.
  Generator(std::uint64_t seed, std::string_view stream, Space space,
            GeneratorBounds bounds = {});

  const Space& space() const { return space_; }

  /// Uniform in [0, n). n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);
  bool coin() { return below(2) == 0; }

  Rational rational();
  Rational positive_rational();
  Element element();
  Element positive() { return abs(element()); }
  ElementPair positive_pair();
  /// λ is zero about a third of the time.
  UnitizedElement unitized();

 private:
  static Element abs(const Element& e);

  Space space_;
  GeneratorBounds bounds_;
  std::mt19937_64 rng_;
};

/// FNV-1a; used to derive per-stream seeds portably.
std::uint64_t stable_hash(std::string_view text);

}  // namespace trunclat
