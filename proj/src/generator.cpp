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

#include "trunclat/generator.hpp"

#include <limits>

#include "trunclat/lattice.hpp"

namespace trunclat {

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

std::uint64_t stable_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Generator::Generator(std::uint64_t seed, Space space, GeneratorBounds bounds)
    : space_(space), bounds_(bounds), rng_(seeded(seed, 0)) {}

Generator::Generator(std::uint64_t seed, std::string_view stream, Space space,
                     GeneratorBounds bounds)
    : space_(space), bounds_(bounds), rng_(seeded(seed, stable_hash(stream))) {}

std::uint64_t Generator::below(std::uint64_t n) {
  // Rejection sampling keeps the reduction unbiased and portable.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = rng_();
  } while (r >= limit);
  return r % n;
}

long Generator::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Generator::rational() {
  const long m = bounds_.max_magnitude;
  switch (below(4)) {
    case 0: return Rational(between(-3, 3));
    case 1: return Rational(between(-m, m));
    default: {
      // Separate statements: argument evaluation order is unspecified.
      const long num = between(-m, m);
      const long den = between(1, m);
      return Rational(num, den);
    }
  }
}

Rational Generator::positive_rational() {
  const long m = bounds_.max_magnitude;
  if (below(3) == 0) return Rational(between(1, 3));
  const long num = between(1, m);
  const long den = between(1, m);
  return Rational(num, den);
}

Element Generator::element() {
  if (space_.is_sparse()) {
    SparseMap entries;
    const auto support = below(bounds_.max_support + 1);
    for (std::uint64_t i = 0; i < support; ++i) {
      const auto k = static_cast<SparseIndex>(between(1, bounds_.max_index));
      entries[k] = rational();
    }
    return Element::sparse(std::move(entries));
  }
  std::vector<Rational> coords;
  coords.reserve(space_.dim());
  for (std::size_t i = 0; i < space_.dim(); ++i) {
    coords.push_back(below(4) == 0 ? Rational() : rational());
  }
  return Element::of(space_, std::move(coords));
}

ElementPair Generator::positive_pair() {
  Element a = positive();
  Element b = positive();
  return {std::move(a), std::move(b)};
}

UnitizedElement Generator::unitized() {
  Element e = element();
  Rational lambda = below(3) == 0 ? Rational() : rational();
  return {std::move(e), std::move(lambda)};
}

Element Generator::abs(const Element& e) { return trunclat::abs(e); }

}  // namespace trunclat
