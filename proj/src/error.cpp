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

#include "trunclat/error.hpp"

namespace trunclat {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::EmptySet: return "EmptySet";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::InvalidDescriptor: return "InvalidDescriptor";
    case Errc::InvalidCertificate: return "InvalidCertificate";
    case Errc::ParseError: return "ParseError";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::NegativeTruncArgument: return "NegativeTruncArgument";
    case Errc::OneOutsideUnitization: return "OneOutsideUnitization";
  }
  return "Unknown";
}

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::string msg = "at byte " + std::to_string(offset) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += ", ";
    msg += expected[i];
  }
  msg += "; found " + (found.empty() ? std::string("end of input") : "'" + found + "'");
  return msg;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& found)
    : Error(Errc::ParseError, describe(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)),
      found_(found) {}

}  // namespace trunclat
