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
#include <string>
#include <string_view>
#include <vector>

#include "trunclat/law_report.hpp"
#include "trunclat/truncation.hpp"

namespace trunclat {

/// Ids of the laws that apply to t, sorted.
std::vector<std::string> registered_laws(const Truncation& t);

/// Runs every applicable law with `trials` samples each. Each law draws from
/// its own stream Generator(seed, law_id, space), so reports are independent
/// of one another and of the order they run in. Sorted by law_id.
std::vector<LawReport> run_suite(const Truncation& t, std::uint64_t seed,
                                 std::uint64_t trials);

/// Runs a single law. Throws PreconditionViolated for an id that does not
/// apply to t.
LawReport run_law(const Truncation& t, std::string_view law_id, std::uint64_t seed,
                  std::uint64_t trials);

/// Refutations that are known counterexamples rather than failures: the
/// lexicographic plane is not Archimedean, and the identity truncation on
/// the line violates tau3.
bool is_expected_violation(const Truncation& t, std::string_view law_id);

}  // namespace trunclat
