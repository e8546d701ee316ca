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

#include "trunclat/json_io.hpp"

namespace trunclat {

/// Seed used by every scripted reproduction.
inline constexpr std::uint64_t kReproSeed = 42;

struct ReproOutcome {
  std::string id;
  /// The scripted checks came out as predicted.
  bool matches = false;
  std::vector<std::string> trace;
  /// FNV-1a of the trace lines joined by '\n', as 16 hex digits.
  std::string checksum;

  Json to_json() const;
};

/// lex-trunc-archimedean, identity-trunc-tau3, c00-ruc, unitization-not-ruc,
/// sup-of-truncations, band-decomposition.
const std::vector<std::string>& repro_ids();

/// Throws InvalidDescriptor for an unknown id.
ReproOutcome run_repro(std::string_view id);

}  // namespace trunclat
