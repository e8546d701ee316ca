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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trunclat/cli.hpp"
#include "trunclat/error.hpp"
#include "trunclat/json_io.hpp"

using namespace trunclat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(parse_json(line));
  return out;
}

}  // namespace

TEST_CASE("check passes on the sparse catalog entry") {
  const Run r = run({"check", "--space", "sparse_seq", "--trunc", "meet_with_one", "--seed",
                     "42", "--trials", "200"});
  CHECK(r.code == kExitOk);
  const auto reports = lines(r.out);
  CHECK(reports.size() > 20);
  for (const auto& j : reports) {
    CHECK(j["verdict"] == "Pass");
    CHECK(j["seed"] == 42);
  }
}

TEST_CASE("predicted refutations are flagged, not failed") {
  const Run r = run({"check", "--space", "identity_line", "--trunc", "identity", "--trials", "50"});
  CHECK(r.code == kExitOk);
  bool flagged = false;
  for (const auto& j : lines(r.out)) {
    if (j["law_id"] == "truncation.tau3") {
      flagged = j["verdict"] == "Refuted" && j["flag"] == "EXPECTED_VIOLATION";
    }
  }
  CHECK(flagged);
  const Run table = run({"check", "--space", "lex_plane", "--trials", "50", "--format", "table"});
  CHECK(table.code == kExitOk);
  CHECK(table.out.find("EXPECTED_VIOLATION") != std::string::npos);
}

TEST_CASE("unexpected refutations fail the run") {
  const auto path = std::filesystem::temp_directory_path() / "trunclat_bad.tla";
  std::ofstream(path) << "ctx: {\"space\": \"sparse_seq\"}\ntr(x) == x\n";
  const Run r = run({"check", "--trials", "20", "--assertions", path.string()});
  CHECK(r.code == kExitRefuted);
  CHECK(r.out.find("\"law_id\":\"trunclat_bad:2\",\"trials\"") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run({"check", "--space", "{bad"}).code == kExitUsage);
  CHECK(run({"check", "--space", "sparse_seq", "--trunc", "identity"}).code == kExitUsage);
  CHECK(run({"check", "--space", "finite_pointwise:x"}).code == kExitUsage);
  CHECK(run({"check", "--trials", "0"}).code == kExitUsage);
  CHECK(run({"check", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"repro", "no-such-example"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("eval") {
  Run r = run({"eval", "|x - 1|", "--bind", R"(x={"1":"2/1"})", "--unitize"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{\"e\":{},\"lambda\":\"1/1\"}\n");
  r = run({"eval", "1"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("OneOutsideUnitization") != std::string::npos);
  r = run({"eval", "pos(x)", "--bind", R"(x={"1":"-1/1"})"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{}\n");
  r = run({"eval", "x /\\ y", "--space", "finite_pointwise:2", "--bind", "x=[1,5]", "--bind",
           "y=[\"3/2\",2]"});
  CHECK(r.out == "[\"1/1\",\"2/1\"]\n");
  r = run({"eval", "x + y", "--bind", R"(x={"e":{},"lambda":"2"})", "--unitize"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("UnboundVariable") != std::string::npos);
  CHECK(run({"eval", "tr(x", "--bind", "x={}"}).code == kExitUsage);
  CHECK(run({"eval", "x", "--bind", "x"}).code == kExitUsage);
}

TEST_CASE("repro") {
  Run r = run({"repro", "unitization-not-ruc"});
  CHECK(r.code == kExitOk);
  const Json j = parse_json(r.out);
  CHECK(j["id"] == "unitization-not-ruc");
  CHECK(j["matches"] == true);
  r = run({"repro", "lex-trunc-archimedean", "--format", "table"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("MATCHES") != std::string::npos);
}

TEST_CASE("output file and determinism") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "trunclat_a.jsonl";
  const auto b = dir / "trunclat_b.jsonl";
  CHECK(run({"check", "--space", "lex_plane", "--seed", "3", "--trials", "100", "--out",
             a.string()}).code == kExitOk);
  CHECK(run({"check", "--space", "lex_plane", "--seed", "3", "--trials", "100", "--out",
             b.string()}).code == kExitOk);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  CHECK(!slurp(a).empty());
  CHECK(slurp(a) == slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("TRUNCLAT_SEED sets the default seed") {
  ::setenv("TRUNCLAT_SEED", "77", 1);
  const Run r = run({"check", "--space", "identity_line", "--trials", "10"});
  CHECK(lines(r.out).front()["seed"] == 77);
  ::setenv("TRUNCLAT_SEED", "nope", 1);
  CHECK(run({"check", "--trials", "10"}).code == kExitUsage);
  ::unsetenv("TRUNCLAT_SEED");
  CHECK(lines(run({"check", "--space", "identity_line", "--trials", "10"}).out).front()["seed"] ==
        42);
}

TEST_CASE("descriptor arguments") {
  CHECK(parse_space_arg("finite_pointwise:4") == Space::finite_pointwise(4));
  CHECK(parse_space_arg(R"({"space":"lex_plane"})") == Space::lex_plane());
  CHECK_THROWS_AS(parse_space_arg("finite_pointwise"), Error);
  const Truncation t = parse_trunc_arg(Space::finite_pointwise(2),
                                       R"({"kind":"meet_with_unit","unit":[2,3]})");
  CHECK(*t.unit() == Element::of(Space::finite_pointwise(2), {2, 3}));
  CHECK(parse_trunc_arg(Space::lex_plane(), "").kind() == TruncationKind::LexMeetZeroOne);
}
