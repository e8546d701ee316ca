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
#include <optional>
#include <string>

#include "trunclat/json_io.hpp"

namespace trunclat {

enum class Verdict { Pass, Refuted, Inconclusive };

const char* verdict_name(Verdict v);

/// Outcome of one law check. A Refuted report always carries the witness of
/// the first failing trial; Inconclusive carries the search bound that was
/// exhausted.
struct LawReport {
  std::string law_id;
  std::uint64_t trials = 0;
  Verdict verdict = Verdict::Pass;
  std::optional<Json> witness;
  std::uint64_t seed = 0;
  std::optional<std::string> bound;
  /// Set by the suite when a refutation is a predicted counterexample.
  bool expected_violation = false;

  static LawReport pass(std::string id, std::uint64_t trials);
  static LawReport refuted(std::string id, std::uint64_t trials, Json witness);
  static LawReport inconclusive(std::string id, std::uint64_t trials,
                                std::string bound);

  bool refuted_unexpectedly() const {
    return verdict == Verdict::Refuted && !expected_violation;
  }

  /// {law_id, trials, verdict, witness?, seed} plus "bound" for Inconclusive
  /// and "flag":"EXPECTED_VIOLATION" for predicted refutations.
  Json to_json() const;
};

}  // namespace trunclat
