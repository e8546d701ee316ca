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

#include "trunclat/dsl.hpp"

#include <fstream>
#include <sstream>

#include "trunclat/error.hpp"
#include "trunclat/generator.hpp"
#include "trunclat/lattice.hpp"

namespace trunclat {

namespace {

struct BaseEval {
  using Value = Element;
  const Truncation& t;

  Value constant(const Rational& c) const {
    if (!c.is_zero()) {
      throw Error(Errc::OneOutsideUnitization,
                  "the literal " + c.short_str() + " denotes a multiple of 1; use --unitize");
    }
    return Element::zero(t.space());
  }
  Value unit() const {
    throw Error(Errc::OneOutsideUnitization, "1 is only defined in a unitization");
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value scale(const Rational& c, const Value& a) const { return c * a; }
  Value join(const Value& a, const Value& b) const { return trunclat::join(a, b); }
  Value meet(const Value& a, const Value& b) const { return trunclat::meet(a, b); }
  Value abs(const Value& a) const { return trunclat::abs(a); }
  Value pos(const Value& a) const { return trunclat::pos(a); }
  Value neg(const Value& a) const { return trunclat::neg(a); }
  bool positive(const Value& a) const { return is_positive(a); }
  Value truncate(const Value& a) const { return trunclat::truncate(t, a); }
  bool leq(const Value& a, const Value& b) const { return trunclat::leq(a, b); }
  bool is_zero(const Value& a) const { return a.is_zero(); }
  Json to_json(const Value& a) const { return element_to_json(a); }
};

struct UnitizedEval {
  using Value = UnitizedElement;
  const Unitization& ctx;

  Value constant(const Rational& c) const { return {Element::zero(ctx.base()), c}; }
  Value unit() const { return ctx.one(); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value scale(const Rational& c, const Value& a) const { return c * a; }
  Value join(const Value& a, const Value& b) const { return join_u(ctx, a, b); }
  Value meet(const Value& a, const Value& b) const { return meet_u(ctx, a, b); }
  Value abs(const Value& a) const { return abs_u(ctx, a); }
  Value pos(const Value& a) const { return pos_u(ctx, a); }
  Value neg(const Value& a) const { return neg_u(ctx, a); }
  bool positive(const Value& a) const { return is_positive(ctx, a); }
  Value truncate(const Value& a) const { return truncate_u(ctx, a); }
  bool leq(const Value& a, const Value& b) const { return leq_u(ctx, a, b); }
  bool is_zero(const Value& a) const { return a.lambda.is_zero() && a.e.is_zero(); }
  Json to_json(const Value& a) const { return unitized_to_json(a); }
};

template <class Ops, class E>
typename Ops::Value eval_with(const Ops& ops, const Term& t, const E& env) {
  using V = typename Ops::Value;
  return std::visit(
      [&](const auto& x) -> V {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Term::Var>) {
          const auto it = env.find(x.name);
          if (it == env.end()) throw Error(Errc::UnboundVariable, "'" + x.name + "' is not bound");
          return it->second;
        } else if constexpr (std::is_same_v<T, Term::Lit>) {
          return ops.constant(x.value);
        } else if constexpr (std::is_same_v<T, Term::One>) {
          return ops.unit();
        } else if constexpr (std::is_same_v<T, Term::Scale>) {
          return ops.scale(x.factor, eval_with(ops, *x.arg, env));
        } else if constexpr (std::is_same_v<T, Term::Binary>) {
          const V l = eval_with(ops, *x.lhs, env);
          const V r = eval_with(ops, *x.rhs, env);
          switch (x.op) {
            case BinaryOp::Add: return ops.add(l, r);
            case BinaryOp::Sub: return ops.sub(l, r);
            case BinaryOp::Join: return ops.join(l, r);
            case BinaryOp::Meet: return ops.meet(l, r);
          }
          throw Error(Errc::PreconditionViolated, "unknown operator");
        } else {
          const V a = eval_with(ops, *x.arg, env);
          switch (x.op) {
            case UnaryOp::Abs: return ops.abs(a);
            case UnaryOp::Pos: return ops.pos(a);
            case UnaryOp::Neg: return ops.neg(a);
            case UnaryOp::Trunc:
              if (!ops.positive(a)) {
                throw Error(Errc::NegativeTruncArgument,
                            "tr(" + render(*x.arg) + ") of " + ops.to_json(a).dump());
              }
              return ops.truncate(a);
          }
          throw Error(Errc::PreconditionViolated, "unknown operator");
        }
      },
      t.node());
}

template <class Ops, class E>
AssertionResult check_with(const Ops& ops, const Assertion& a, const E& env) {
  const auto l = eval_with(ops, *a.lhs, env);
  const auto r = eval_with(ops, *a.rhs, env);
  bool holds = false;
  switch (a.relation) {
    case Relation::Leq: holds = ops.leq(l, r); break;
    case Relation::Eq: holds = l == r; break;
    case Relation::Geq: holds = ops.leq(r, l); break;
    case Relation::Disjoint: holds = ops.is_zero(ops.meet(ops.abs(l), ops.abs(r))); break;
  }
  return {holds, ops.to_json(l), ops.to_json(r)};
}

template <class Ops, class E, class Sample>
LawReport run_line(const Ops& ops, const AssertionLine& line, const std::string& id,
                   std::uint64_t trials, Sample&& sample) {
  const auto vars = free_vars(*line.assertion.lhs);
  auto rhs_vars = free_vars(*line.assertion.rhs);
  std::set<std::string> all(vars);
  all.insert(rhs_vars.begin(), rhs_vars.end());
  for (std::uint64_t i = 0; i < trials; ++i) {
    E env;
    for (const auto& v : all) env.emplace(v, sample());
    const auto res = check_with(ops, line.assertion, env);
    if (!res.holds) {
      Json bindings = Json::object();
      for (const auto& [name, value] : env) bindings[name] = ops.to_json(value);
      return LawReport::refuted(id, i + 1, Json{{"assertion", line.text},
                                                {"bindings", std::move(bindings)},
                                                {"lhs", res.lhs},
                                                {"rhs", res.rhs}});
    }
  }
  return LawReport::pass(id, trials);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Element eval(const Term& t, const Env& env, const Truncation& trunc) {
  return eval_with(BaseEval{trunc}, t, env);
}

UnitizedElement eval(const Term& t, const UnitizedEnv& env, const Unitization& ctx) {
  return eval_with(UnitizedEval{ctx}, t, env);
}

AssertionResult check_assertion(const Assertion& a, const Env& env, const Truncation& trunc) {
  return check_with(BaseEval{trunc}, a, env);
}

AssertionResult check_assertion(const Assertion& a, const UnitizedEnv& env,
                                const Unitization& ctx) {
  return check_with(UnitizedEval{ctx}, a, env);
}

AssertionContext assertion_context_from_json(const Json& j) {
  const Space space = space_from_json(j);
  Truncation t = default_truncation(space);
  if (j.contains("trunc")) {
    const Json& d = j["trunc"];
    t = truncation_from_json(space, d.is_string() ? Json{{"kind", d}} : d);
  }
  bool unitize = false;
  if (j.contains("unitize")) {
    if (!j["unitize"].is_boolean()) {
      throw Error(Errc::InvalidDescriptor, "\"unitize\" must be a boolean");
    }
    unitize = j["unitize"].get<bool>();
  }
  bool positive = true;
  if (j.contains("sample")) {
    const Json& s = j["sample"];
    if (s == "any") {
      positive = false;
    } else if (s != "positive") {
      throw Error(Errc::InvalidDescriptor, "\"sample\" must be \"positive\" or \"any\"");
    }
  }
  return {std::move(t), unitize, positive};
}

AssertionFile parse_assertion_file(std::string_view text, std::string label) {
  std::optional<AssertionContext> ctx;
  std::vector<AssertionLine> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view raw = text.substr(start, end - start);
    const auto hash = raw.find('#');
    const std::string_view body = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
    const std::size_t body_offset = start + (body.empty() ? 0 : body.data() - raw.data());
    if (!body.empty()) {
      if (body.starts_with("ctx:")) {
        if (ctx || !lines.empty()) {
          throw Error(Errc::InvalidDescriptor,
                      label + ":" + std::to_string(line_no) + ": ctx header must come first");
        }
        ctx = assertion_context_from_json(parse_json(std::string(body.substr(4))));
      } else {
        if (!ctx) {
          throw Error(Errc::InvalidDescriptor,
                      label + ":" + std::to_string(line_no) + ": missing ctx header");
        }
        try {
          lines.push_back({line_no, std::string(body), parse_assertion(body)});
        } catch (const ParseError& e) {
          throw ParseError(body_offset + e.offset(), e.expected(), e.found());
        }
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!ctx) throw Error(Errc::InvalidDescriptor, label + ": missing ctx header");
  return {std::move(label), std::move(*ctx), std::move(lines)};
}

AssertionFile load_assertion_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidDescriptor, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_assertion_file(buf.str(), path.stem().string());
}

std::vector<LawReport> run_assertions(const AssertionFile& file, const AssertionContext& ctx,
                                      std::uint64_t seed, std::uint64_t trials) {
  std::vector<LawReport> out;
  const Space& space = ctx.truncation.space();
  for (const auto& line : file.lines) {
    const std::string id = file.label + ":" + std::to_string(line.line);
    Generator g(seed, id, space);
    LawReport r;
    if (ctx.unitize) {
      const Unitization u(ctx.truncation);
      r = run_line<UnitizedEval, UnitizedEnv>(UnitizedEval{u}, line, id, trials, [&] {
        UnitizedElement a = g.unitized();
        return ctx.positive_samples ? abs_u(u, a) : a;
      });
    } else {
      r = run_line<BaseEval, Env>(BaseEval{ctx.truncation}, line, id, trials, [&] {
        return ctx.positive_samples ? g.positive() : g.element();
      });
    }
    r.seed = seed;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace trunclat
