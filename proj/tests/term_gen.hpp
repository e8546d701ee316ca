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

#include <random>
#include <string>

#include "trunclat/term.hpp"

namespace testgen {

// Random well-formed terms of bounded depth.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  trunclat::Rational rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    return trunclat::Rational(num(rng_), den(rng_));
  }

  trunclat::TermPtr term(int depth) {
    using namespace trunclat;
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 11);
    switch (pick(rng_)) {
      case 0:
      case 1: {
        static const char* names[] = {"x", "y", "z", "w", "a1", "b_2", "posx", "trace"};
        std::uniform_int_distribution<int> n(0, 7);
        return var(names[n(rng_)]);
      }
      case 2: return coin() ? lit(rational()) : one();
      case 3: return scale(rational(), term(depth - 1));
      case 4: return binary(BinaryOp::Add, term(depth - 1), term(depth - 1));
      case 5: return binary(BinaryOp::Sub, term(depth - 1), term(depth - 1));
      case 6: return binary(BinaryOp::Join, term(depth - 1), term(depth - 1));
      case 7: return binary(BinaryOp::Meet, term(depth - 1), term(depth - 1));
      case 8: return unary(UnaryOp::Abs, term(depth - 1));
      case 9: return unary(UnaryOp::Pos, term(depth - 1));
      case 10: return unary(UnaryOp::Neg, term(depth - 1));
      default: return unary(UnaryOp::Trunc, term(depth - 1));
    }
  }

 private:
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 0; }
  std::mt19937_64 rng_;
};

}  // namespace testgen
