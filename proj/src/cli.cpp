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

#include "trunclat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

#include "trunclat/dsl.hpp"
#include "trunclat/error.hpp"
#include "trunclat/repro.hpp"
#include "trunclat/suite.hpp"

namespace trunclat {

namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv("TRUNCLAT_SEED");
  if (env == nullptr || *env == '\0') return kReproSeed;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used == std::string_view(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::InvalidDescriptor, std::string("TRUNCLAT_SEED is not an integer: ") + env);
}

struct Options {
  std::string space = "sparse_seq";
  std::string trunc;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 1000;
  std::string out;
  std::string format = "json";
  std::vector<std::string> binds;
  bool unitize = false;
  std::string assertions;
  std::string expr;
  std::string repro_id;
};

// Results go to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(Errc::InvalidDescriptor, "cannot write " + path);
      os_ = &file_;
    }
  }
  std::ostream& get() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

void print_table(std::ostream& os, const std::vector<LawReport>& reports) {
  std::size_t width = 6;
  for (const auto& r : reports) width = std::max(width, r.law_id.size());
  os << std::left << std::setw(static_cast<int>(width) + 2) << "law" << std::setw(14) << "verdict"
     << std::setw(8) << "trials" << "note\n";
  for (const auto& r : reports) {
    std::string note;
    if (r.expected_violation) note = "EXPECTED_VIOLATION";
    if (r.bound) note = "bound " + *r.bound;
    os << std::setw(static_cast<int>(width) + 2) << r.law_id << std::setw(14)
       << verdict_name(r.verdict) << std::setw(8) << r.trials << note << '\n';
  }
}

int cmd_check(const Options& o, std::ostream& out) {
  const Space space = parse_space_arg(o.space);
  const Truncation t = parse_trunc_arg(space, o.trunc);
  const std::uint64_t seed = o.seed ? *o.seed : default_seed();
  std::vector<LawReport> reports = run_suite(t, seed, o.trials);
  if (!o.assertions.empty()) {
    const AssertionFile file = load_assertion_file(o.assertions);
    for (auto& r : run_assertions(file, seed, o.trials)) reports.push_back(std::move(r));
  }
  Sink sink(o.out, out);
  if (o.format == "table") {
    print_table(sink.get(), reports);
  } else {
    for (const auto& r : reports) sink.get() << r.to_json().dump() << '\n';
  }
  for (const auto& r : reports) {
    if (r.refuted_unexpectedly()) return kExitRefuted;
  }
  return kExitOk;
}

std::pair<std::string, Json> split_binding(const std::string& b) {
  const auto eq = b.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(Errc::InvalidDescriptor, "binding must look like name=<json>: " + b);
  }
  return {b.substr(0, eq), parse_json(b.substr(eq + 1))};
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Space space = parse_space_arg(o.space);
  const Truncation t = parse_trunc_arg(space, o.trunc);
  const TermPtr term = parse_term(o.expr);
  Sink sink(o.out, out);
  if (o.unitize) {
    const Unitization ctx(t);
    UnitizedEnv env;
    for (const auto& b : o.binds) {
      auto [name, j] = split_binding(b);
      env.insert_or_assign(name, unitized_from_json(space, j));
    }
    sink.get() << unitized_to_json(eval(*term, env, ctx)).dump() << '\n';
  } else {
    Env env;
    for (const auto& b : o.binds) {
      auto [name, j] = split_binding(b);
      env.insert_or_assign(name, element_from_json(space, j));
    }
    sink.get() << element_to_json(eval(*term, env, t)).dump() << '\n';
  }
  return kExitOk;
}

int cmd_repro(const Options& o, std::ostream& out) {
  const ReproOutcome r = run_repro(o.repro_id);
  Sink sink(o.out, out);
  if (o.format == "table") {
    for (const auto& line : r.trace) sink.get() << line << '\n';
    sink.get() << (r.matches ? "MATCHES" : "DIFFERS") << "  checksum " << r.checksum << '\n';
  } else {
    sink.get() << r.to_json().dump() << '\n';
  }
  return r.matches ? kExitOk : kExitRefuted;
}

}  // namespace

Space parse_space_arg(const std::string& text) {
  if (!text.empty() && text.front() == '{') return space_from_json(parse_json(text));
  const auto colon = text.find(':');
  Json j{{"space", text.substr(0, colon)}};
  if (colon != std::string::npos) {
    const std::string dim = text.substr(colon + 1);
    if (dim.empty() || dim.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(Errc::InvalidDescriptor, "bad dimension in '" + text + "'");
    }
    j["dim"] = std::stoull(dim);
  }
  return space_from_json(j);
}

Truncation parse_trunc_arg(const Space& space, const std::string& text) {
  if (text.empty()) return default_truncation(space);
  if (text.front() == '{') return truncation_from_json(space, parse_json(text));
  return truncation_from_json(space, Json{{"kind", text}});
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact truncated vector lattices: law checks, evaluation, reproductions",
               "trunclat"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* c) {
    c->add_option("--space", o.space, "space name, name:dim or JSON descriptor");
    c->add_option("--trunc", o.trunc, "truncation kind or JSON descriptor");
    c->add_option("--out", o.out, "write results to this file");
    c->add_option("--format", o.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* check = app.add_subcommand("check", "run the law suite");
  common(check);
  check->add_option("--seed", o.seed, "seed (default $TRUNCLAT_SEED or 42)");
  check->add_option("--trials", o.trials, "samples per law")->check(CLI::PositiveNumber);
  check->add_option("--assertions", o.assertions, "assertion file to check as well")
      ->check(CLI::ExistingFile);

  CLI::App* ev = app.add_subcommand("eval", "evaluate an expression");
  common(ev);
  ev->add_option("expr", o.expr, "expression")->required();
  ev->add_option("--bind", o.binds, "name=<element json>, repeatable");
  ev->add_flag("--unitize", o.unitize, "evaluate in the unitization");

  CLI::App* repro = app.add_subcommand("repro", "run a scripted reproduction");
  repro->add_option("id", o.repro_id, "reproduction id")
      ->required()
      ->check(CLI::IsMember(repro_ids()));
  repro->add_option("--out", o.out, "write results to this file");
  repro->add_option("--format", o.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (ev->parsed()) return cmd_eval(o, out);
    return cmd_repro(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace trunclat
