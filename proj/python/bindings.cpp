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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "trunclat/cli.hpp"
#include "trunclat/dsl.hpp"
#include "trunclat/error.hpp"
#include "trunclat/repro.hpp"
#include "trunclat/suite.hpp"
#include "trunclat/term.hpp"

namespace py = pybind11;
using namespace trunclat;

namespace {

using Bindings = std::map<std::string, std::string>;

std::vector<std::string> check(const std::string& space, const std::string& trunc,
                               std::uint64_t seed, std::uint64_t trials) {
  const Space s = parse_space_arg(space);
  std::vector<std::string> out;
  for (const auto& r : run_suite(parse_trunc_arg(s, trunc), seed, trials)) {
    out.push_back(r.to_json().dump());
  }
  return out;
}

std::string evaluate(const std::string& expr, const Bindings& binds, const std::string& space,
                     const std::string& trunc, bool unitize) {
  const Space s = parse_space_arg(space);
  const Truncation t = parse_trunc_arg(s, trunc);
  const TermPtr term = parse_term(expr);
  if (unitize) {
    const Unitization ctx(t);
    UnitizedEnv env;
    for (const auto& [name, text] : binds) env.emplace(name, unitized_from_json(s, parse_json(text)));
    return unitized_to_json(eval(*term, env, ctx)).dump();
  }
  Env env;
  for (const auto& [name, text] : binds) env.emplace(name, element_from_json(s, parse_json(text)));
  return element_to_json(eval(*term, env, t)).dump();
}

py::tuple holds(const std::string& assertion, const Bindings& binds, const std::string& space,
                const std::string& trunc, bool unitize) {
  const Space s = parse_space_arg(space);
  const Truncation t = parse_trunc_arg(s, trunc);
  const Assertion a = parse_assertion(assertion);
  AssertionResult r;
  if (unitize) {
    const Unitization ctx(t);
    UnitizedEnv env;
    for (const auto& [name, text] : binds) env.emplace(name, unitized_from_json(s, parse_json(text)));
    r = check_assertion(a, env, ctx);
  } else {
    Env env;
    for (const auto& [name, text] : binds) env.emplace(name, element_from_json(s, parse_json(text)));
    r = check_assertion(a, env, t);
  }
  return py::make_tuple(r.holds, r.lhs.dump(), r.rhs.dump());
}

}  // namespace

PYBIND11_MODULE(_trunclat, m) {
  m.doc() = "Exact truncated vector lattices";

  static py::exception<Error> error(m, "TrunclatError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const auto type = py::reinterpret_borrow<py::object>(error);
      py::object exc = type(e.what());
      exc.attr("code") = errc_name(e.code());
      py::set_error(type, exc);
    }
  });

  m.def("check", &check, py::arg("space"), py::arg("trunc"), py::arg("seed"), py::arg("trials"));
  m.def("evaluate", &evaluate, py::arg("expr"), py::arg("bindings"), py::arg("space"),
        py::arg("trunc"), py::arg("unitize"));
  m.def("holds", &holds, py::arg("assertion"), py::arg("bindings"), py::arg("space"),
        py::arg("trunc"), py::arg("unitize"));
  m.def("render", [](const std::string& text) { return render(*parse_term(text)); });
  m.def("repro", [](const std::string& id) { return run_repro(id).to_json().dump(); });
  m.def("repro_ids", &repro_ids);
  m.def("laws", [](const std::string& space, const std::string& trunc) {
    const Space s = parse_space_arg(space);
    return registered_laws(parse_trunc_arg(s, trunc));
  });
}
