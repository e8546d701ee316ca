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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "trunclat/law_report.hpp"
#include "trunclat/term.hpp"
#include "trunclat/unitization.hpp"

namespace trunclat {

using Env = std::map<std::string, Element, std::less<>>;
using UnitizedEnv = std::map<std::string, UnitizedElement, std::less<>>;

/// Evaluation in the base space. Literals other than 0 and the unit 1 throw
/// OneOutsideUnitization; a free variable missing from env throws
/// UnboundVariable; tr of a non-positive value throws NegativeTruncArgument.
Element eval(const Term& t, const Env& env, const Truncation& trunc);

/// Evaluation in E ⊕ R, where a literal c denotes c·1 and tr is meet with 1.
UnitizedElement eval(const Term& t, const UnitizedEnv& env, const Unitization& ctx);

struct AssertionResult {
  bool holds = false;
  Json lhs;
  Json rhs;
};

AssertionResult check_assertion(const Assertion& a, const Env& env, const Truncation& trunc);
AssertionResult check_assertion(const Assertion& a, const UnitizedEnv& env,
                                const Unitization& ctx);

/// Where the assertions of a file are evaluated and how their free variables
/// are sampled.
struct AssertionContext {
  Truncation truncation;
  bool unitize = false;
  /// Sample variables from the positive cone (the default) or anywhere.
  bool positive_samples = true;
};

/// {"space": ..., "dim"?: n, "trunc"?: name | descriptor, "unitize"?: bool,
///  "sample"?: "positive" | "any"}. Throws InvalidDescriptor.
AssertionContext assertion_context_from_json(const Json& j);

struct AssertionLine {
  std::size_t line = 0;
  std::string text;
  Assertion assertion;
};

/// One assertion per line, "#" starts a comment, and a header line
/// "ctx: <json>" before the first assertion.
struct AssertionFile {
  std::string label;
  AssertionContext context;
  std::vector<AssertionLine> lines;
};

/// Parse errors carry the byte offset within the whole text. Throws
/// InvalidDescriptor when the header is missing or malformed.
AssertionFile parse_assertion_file(std::string_view text, std::string label);
/// label defaults to the file stem.
AssertionFile load_assertion_file(const std::filesystem::path& path);

/// Each assertion becomes a law "<label>:<line>" checked on `trials` samples
/// drawn from Generator(seed, law_id, space), one fresh sample per free
/// variable per trial.
std::vector<LawReport> run_assertions(const AssertionFile& file, const AssertionContext& ctx,
                                      std::uint64_t seed, std::uint64_t trials);
inline std::vector<LawReport> run_assertions(const AssertionFile& file, std::uint64_t seed,
                                             std::uint64_t trials) {
  return run_assertions(file, file.context, seed, trials);
}

}  // namespace trunclat
