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

#include <iosfwd>
#include <string>
#include <vector>

#include "trunclat/truncation.hpp"

namespace trunclat {

/// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

/// "sparse_seq", "lex_plane", "identity_line", "finite_pointwise:<dim>" or a
/// JSON space descriptor. Throws InvalidDescriptor.
Space parse_space_arg(const std::string& text);
/// A truncation kind name, or a JSON truncation descriptor. Empty text picks
/// the space's default truncation.
Truncation parse_trunc_arg(const Space& space, const std::string& text);

/// Runs the tool on args (without the program name), writing results to out
/// and diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trunclat
