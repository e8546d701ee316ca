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
#include <filesystem>
#include <string>
#include <vector>

#include "trunclat/dsl.hpp"
#include "trunclat/lattice.hpp"
#include "trunclat/suite.hpp"

namespace agreement {

inline const std::vector<std::string>& dsl_laws() {
  static const std::vector<std::string> ids{
      "lattice.laws",           "lattice.pos_neg",
      "truncation.basic_properties", "truncation.meet_exchange",
      "truncation.tau1",        "unitization.triangle",
      "unitization.truncation_axioms"};
  return ids;
}

inline trunclat::AssertionFile load(const std::string& law_id) {
  return trunclat::load_assertion_file(std::filesystem::path(TRUNCLAT_ASSERTIONS_DIR) /
                                       (law_id + ".tla"));
}

/// The file's assertions, evaluated under t instead of the header's truncation.
inline bool dsl_holds(const trunclat::AssertionFile& file, const trunclat::Truncation& t,
                      std::uint64_t seed, std::uint64_t trials) {
  trunclat::AssertionContext ctx = file.context;
  ctx.truncation = t;
  for (const auto& r : trunclat::run_assertions(file, ctx, seed, trials)) {
    if (r.verdict != trunclat::Verdict::Pass) return false;
  }
  return true;
}

inline bool native_holds(const trunclat::Truncation& t, const std::string& law_id,
                         std::uint64_t seed, std::uint64_t trials) {
  return trunclat::run_law(t, law_id, seed, trials).verdict == trunclat::Verdict::Pass;
}

/// x -> x/2: satisfies tau2 but breaks tau1, the meet exchange and
/// idempotency.
inline trunclat::Truncation half(const trunclat::Space& space) {
  return trunclat::Truncation::fixture(space, "half", [](const trunclat::Element& x) {
    return trunclat::Rational(1, 2) * x;
  });
}

inline std::vector<trunclat::Truncation> cataloged() {
  using namespace trunclat;
  return {Truncation::meet_with_one(),
          default_truncation(Space::finite_pointwise(3)),
          Truncation::lex_meet_zero_one(),
          Truncation::identity()};
}

// Broken fixtures hold on some draws, so both routes need enough trials to
// hit a refutation on every seed.
inline std::uint64_t trials_for(const trunclat::Truncation& t, std::uint64_t base) {
  return t.kind() == trunclat::TruncationKind::Fixture ? 200 : base;
}

}  // namespace agreement
