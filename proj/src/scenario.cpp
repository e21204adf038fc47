// Copyright 2026 The seqprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqprod/scenario.hpp"

#include <fstream>
#include <sstream>

#include "seqprod/error.hpp"

namespace seqprod {
namespace {

const std::map<std::string, std::vector<std::string>>& object_check_fields() {
  static const std::map<std::string, std::vector<std::string>> fields = {
      {"commutator", {"a", "b", "op_a", "op_b"}},
      {"seq_product", {"op", "b"}},
      {"measured_effect", {"op"}},
      {"condition", {"b", "op_a", "op_a_prime"}}};
  return fields;
}

Index object_dim(const NamedObject& obj) {
  return std::visit([](const auto& o) { return o.dim(); }, obj);
}

std::string_view object_kind(const NamedObject& obj) {
  switch (obj.index()) {
    case 0:
      return "effect";
    case 1:
      return "state";
    case 2:
      return "operation";
    case 3:
      return "observable";
    default:
      return "instrument";
  }
}

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorKind::InvariantViolation, msg);
}

std::string check_title(const Json& c) {
  if (c.contains("suite")) return c["suite"].get<std::string>();
  std::string out = c["check"].get<std::string>() + "(";
  bool first = true;
  for (const auto& f : object_check_fields().at(c["check"].get<std::string>())) {
    out += (first ? "" : ", ") + c[f].get<std::string>();
    first = false;
  }
  return out + ")";
}

void validate_check(const Json& c, std::size_t index, const Scenario& sc) {
  const std::string where = "check " + std::to_string(index);
  if (!c.is_object()) throw Error(ErrorKind::ParseError, where + " must be an object");
  if (c.contains("suite")) {
    if (!c["suite"].is_string()) throw Error(ErrorKind::ParseError, where + ": suite must be a string");
    bool known = false;
    for (const auto& s : list_suites()) known = known || s.name == c["suite"].get<std::string>();
    if (!known) invalid(where + ": unknown suite '" + c["suite"].get<std::string>() + "'");
    if (c.contains("params")) {
      const Json& p = c["params"];
      if (!p.is_object()) throw Error(ErrorKind::ParseError, where + ": params must be an object");
      for (const auto& [key, value] : p.items()) {
        if (key != "dim" && key != "trials" && key != "seed") {
          throw Error(ErrorKind::ParseError, where + ": unknown parameter '" + key + "'");
        }
        if (!value.is_number_integer()) {
          throw Error(ErrorKind::ParseError, where + ": parameter '" + key + "' must be an integer");
        }
      }
    }
    return;
  }
  if (!c.contains("check") || !c["check"].is_string()) {
    throw Error(ErrorKind::ParseError, where + " needs 'suite' or 'check'");
  }
  const std::string kind = c["check"].get<std::string>();
  const auto it = object_check_fields().find(kind);
  if (it == object_check_fields().end()) {
    throw Error(ErrorKind::ParseError, where + ": unknown check '" + kind + "'");
  }
  for (const auto& field : it->second) {
    if (!c.contains(field) || !c[field].is_string()) {
      throw Error(ErrorKind::ParseError, where + ": missing label field '" + field + "'");
    }
    const std::string label = c[field].get<std::string>();
    const auto obj = sc.objects.find(label);
    if (obj == sc.objects.end()) invalid(where + ": unknown object '" + label + "'");
    const bool wants_op = field.rfind("op", 0) == 0;
    const std::string_view have = object_kind(obj->second);
    if (wants_op ? have != "operation" : have != "effect") {
      invalid(where + ": object '" + label + "' is a " + std::string(have) + ", expected " +
              (wants_op ? "operation" : "effect"));
    }
  }
  if (c.contains("expected")) matrix_from_json(c["expected"]);
  if (c.contains("tol") && !c["tol"].is_number()) {
    throw Error(ErrorKind::ParseError, where + ": tol must be a number");
  }
}

SuiteReport object_check(const Json& c, const Scenario& sc, const Tolerances& tol) {
  SuiteReport rep;
  rep.suite = sc.name + ": " + check_title(c);
  rep.cases_run = 1;
  const std::string kind = c["check"].get<std::string>();
  ComplexMatrix value;
  try {
    if (kind == "commutator") {
      const CommutatorResult cr = commutator(sc.effect(c["a"]), sc.effect(c["b"]),
                                             sc.operation(c["op_a"]), sc.operation(c["op_b"]), tol);
      value = cr.value;
      rep.paper_claim = "C(a,b;I,J) = I*(b) - J*(a)";
    } else if (kind == "seq_product") {
      value = seq_product(sc.operation(c["op"]), sc.effect(c["b"]), tol).matrix();
      rep.paper_claim = "a[I]b = I*(b)";
    } else if (kind == "measured_effect") {
      value = measured_effect(sc.operation(c["op"]), tol).matrix();
      rep.paper_claim = "measured effect I*(I)";
    } else {
      value = condition_effect(sc.effect(c["b"]), sc.operation(c["op_a"]),
                               sc.operation(c["op_a_prime"]), tol)
                  .matrix();
      rep.paper_claim = "b|(I,J)a = I*(b) + J*(b)";
    }
  } catch (const Error& e) {
    rep.notes.push_back(std::string("FAIL ") + e.what());
    rep.status = SuiteStatus::fail;
    return rep;
  }
  Json w = {{"name", check_title(c)}, {"value", to_json(value)}};
  bool ok = true;
  if (c.contains("expected")) {
    const ComplexMatrix expected = matrix_from_json(c["expected"]);
    const double t = c.value("tol", tol.eq_tol);
    const double dev = expected.rows() == value.rows() ? max_abs_diff(value, expected) : INFINITY;
    ok = dev <= t;
    w["expected"] = c["expected"];
    w["max_deviation"] = dev;
    if (!ok) rep.notes.push_back("FAIL value deviates from expected by " + std::to_string(dev));
  }
  rep.witnesses.push_back(std::move(w));
  rep.cases_passed = ok ? 1 : 0;
  rep.status = ok ? SuiteStatus::pass : SuiteStatus::fail;
  return rep;
}

}  // namespace

const Effect& Scenario::effect(const std::string& label) const {
  const auto it = objects.find(label);
  if (it == objects.end() || !std::holds_alternative<Effect>(it->second)) {
    invalid("object '" + label + "' is not an effect");
  }
  return std::get<Effect>(it->second);
}

const Operation& Scenario::operation(const std::string& label) const {
  const auto it = objects.find(label);
  if (it == objects.end() || !std::holds_alternative<Operation>(it->second)) {
    invalid("object '" + label + "' is not an operation");
  }
  return std::get<Operation>(it->second);
}

Scenario scenario_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "scenario must be a JSON object");
  Scenario sc;
  if (!j.contains("name") || !j["name"].is_string()) {
    throw Error(ErrorKind::ParseError, "scenario needs a string 'name'");
  }
  sc.name = j["name"].get<std::string>();
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw Error(ErrorKind::ParseError, "scenario needs a positive integer 'dim'");
  }
  sc.dim = static_cast<Index>(j["dim"].get<long long>());
  const Json objects = j.value("objects", Json::object());
  if (!objects.is_object()) throw Error(ErrorKind::ParseError, "'objects' must be an object");
  for (const auto& [label, body] : objects.items()) {
    try {
      NamedObject obj = object_from_json(body, tol);
      if (object_dim(obj) != sc.dim) {
        invalid("object '" + label + "': dimension " + std::to_string(object_dim(obj)) +
                " differs from scenario dimension " + std::to_string(sc.dim));
      }
      sc.objects.emplace(label, std::move(obj));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvariantViolation && std::string(e.what()).find("object '") != std::string::npos) {
        throw;
      }
      const ErrorKind kind =
          e.kind() == ErrorKind::ParseError ? ErrorKind::ParseError : ErrorKind::InvariantViolation;
      throw Error(kind, "object '" + label + "': " + e.what());
    }
  }
  const Json checks = j.value("checks", Json::array());
  if (!checks.is_array()) throw Error(ErrorKind::ParseError, "'checks' must be an array");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    validate_check(checks[i], i, sc);
    sc.checks.push_back(checks[i]);
  }
  return sc;
}

Scenario load_scenario(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open scenario '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "scenario '" + path + "': " + e.what());
  }
  return scenario_from_json(j, tol);
}

Json to_json(const Scenario& sc) {
  Json objects = Json::object();
  for (const auto& [label, obj] : sc.objects) objects[label] = to_json(obj);
  return {{"name", sc.name}, {"dim", sc.dim}, {"objects", objects}, {"checks", sc.checks}};
}

void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  out << to_json(sc).dump(2) << "\n";
  if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
}

std::vector<SuiteReport> run_scenario(const Scenario& sc, const TrialConfig& cfg) {
  cfg.validate();
  std::vector<SuiteReport> out;
  for (const auto& c : sc.checks) {
    if (c.contains("suite")) {
      TrialConfig local = cfg;
      const Json p = c.value("params", Json::object());
      if (p.contains("dim")) local.dim = p["dim"].get<int>();
      if (p.contains("trials")) local.trials = p["trials"].get<int>();
      if (p.contains("seed")) local.seed = p["seed"].get<std::uint64_t>();
      out.push_back(run_suite(c["suite"].get<std::string>(), local));
    } else {
      out.push_back(object_check(c, sc, cfg.tol));
    }
  }
  return out;
}

}  // namespace seqprod
