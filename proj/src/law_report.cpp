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

#include "trunclat/law_report.hpp"

namespace trunclat {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

LawReport LawReport::pass(std::string id, std::uint64_t trials) {
  LawReport r;
  r.law_id = std::move(id);
  r.trials = trials;
  return r;
}

LawReport LawReport::refuted(std::string id, std::uint64_t trials, Json witness) {
  LawReport r;
  r.law_id = std::move(id);
  r.trials = trials;
  r.verdict = Verdict::Refuted;
  r.witness = std::move(witness);
  return r;
}

LawReport LawReport::inconclusive(std::string id, std::uint64_t trials,
                                  std::string bound) {
  LawReport r;
  r.law_id = std::move(id);
  r.trials = trials;
  r.verdict = Verdict::Inconclusive;
  r.bound = std::move(bound);
  return r;
}

Json LawReport::to_json() const {
  Json j;
  j["law_id"] = law_id;
  j["trials"] = trials;
  j["verdict"] = verdict_name(verdict);
  if (witness) j["witness"] = *witness;
  j["seed"] = seed;
  if (bound) j["bound"] = *bound;
  if (expected_violation) j["flag"] = "EXPECTED_VIOLATION";
  return j;
}

}  // namespace trunclat
