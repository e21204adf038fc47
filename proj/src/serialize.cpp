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

#include "seqprod/serialize.hpp"

#include <cmath>
#include <string>

#include "seqprod/error.hpp"

namespace seqprod {
namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    parse_error(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

void expect_kind(const Json& j, std::string_view kind) {
  const Json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    parse_error("expected kind '" + std::string(kind) + "'");
  }
}

double number(const Json& j) {
  if (!j.is_number()) parse_error("expected a number");
  return j.get<double>();
}

std::vector<Label> labels_from_json(const Json& j) {
  if (!j.is_array()) parse_error("outcomes must be an array");
  std::vector<Label> out;
  for (const auto& item : j) out.push_back(label_from_json(item));
  return out;
}

Json labels_to_json(const std::vector<Label>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(to_json(l));
  return out;
}

Json matrix_body(const ComplexMatrix& m, std::string_view kind) {
  Json j = to_json(m);
  Json out = {{"kind", kind}};
  out["dim"] = j["dim"];
  out["rows"] = j["rows"];
  return out;
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"rows", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) {
    parse_error("dim must be a positive integer");
  }
  const auto dim = static_cast<Index>(dim_j.get<long long>());
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || static_cast<Index>(rows.size()) != dim) {
    parse_error("rows must be an array of length dim");
  }
  ComplexMatrix m(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != dim) {
      parse_error("row " + std::to_string(i) + " must have dim entries");
    }
    for (Index k = 0; k < dim; ++k) {
      const Json& z = row[static_cast<std::size_t>(k)];
      if (!z.is_array() || z.size() != 2) parse_error("complex entries are [re, im] pairs");
      m(i, k) = Complex(number(z[0]), number(z[1]));
    }
  }
  if (!m.allFinite()) parse_error("matrix has non-finite entries");
  return m;
}

Json to_json(const Effect& e) { return matrix_body(e.matrix(), "effect"); }

Json to_json(const State& s) { return matrix_body(s.matrix(), "state"); }

Effect effect_from_json(const Json& j, const Tolerances& tol) {
  expect_kind(j, "effect");
  return Effect(matrix_from_json(j), tol);
}

State state_from_json(const Json& j, const Tolerances& tol) {
  expect_kind(j, "state");
  return State(matrix_from_json(j), tol);
}

Json to_json(const Operation& op) {
  Json kraus = Json::array();
  for (const auto& k : op.kraus()) kraus.push_back(to_json(k));
  Json out = {{"kind", "operation"}, {"flavor", to_string(op.flavor())}, {"kraus", kraus}};
  Json params = Json::object();
  if (op.effect_param()) params["a"] = to_json(op.effect_param()->matrix());
  if (op.state_param()) params["alpha"] = to_json(op.state_param()->matrix());
  out["params"] = std::move(params);
  return out;
}

Operation operation_from_json(const Json& j, const Tolerances& tol) {
  expect_kind(j, "operation");
  const Json& flavor_j = field(j, "flavor");
  if (!flavor_j.is_string()) parse_error("flavor must be a string");
  const Flavor flavor = flavor_from_string(flavor_j.get<std::string>());
  const Json params = j.contains("params") ? j.at("params") : Json::object();

  std::vector<ComplexMatrix> kraus;
  if (j.contains("kraus")) {
    if (!j.at("kraus").is_array()) parse_error("kraus must be an array");
    for (const auto& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  }

  // Lüders and Holevo families are rebuilt from their parameters; a provided
  // Kraus list must define the same map.
  auto check_provided = [&](const Operation& built) {
    if (kraus.empty()) return built;
    const Operation given = Operation::from_kraus(kraus, tol);
    if (!same_map(built, given, tol.eq_tol)) {
      throw Error(ErrorKind::InvariantViolation,
                  std::string(to_string(flavor)) + " operation: Kraus list disagrees with params");
    }
    return built;
  };

  switch (flavor) {
    case Flavor::luders:
      return check_provided(luders_operation(Effect(matrix_from_json(field(params, "a")), tol), tol));
    case Flavor::holevo:
      return check_provided(holevo_operation(Effect(matrix_from_json(field(params, "a")), tol),
                                             State(matrix_from_json(field(params, "alpha")), tol),
                                             tol));
    case Flavor::zero: {
      if (kraus.empty()) parse_error("zero operation needs a Kraus list to fix its dimension");
      const Index dim = kraus.front().rows();
      for (const auto& k : kraus) {
        if (max_abs(k) > tol.eq_tol) {
          throw Error(ErrorKind::InvariantViolation, "zero operation has a non-zero Kraus operator");
        }
      }
      return zero_operation(dim);
    }
    case Flavor::generic:
      if (kraus.empty()) parse_error("generic operation needs a Kraus list");
      return Operation::from_kraus(std::move(kraus), tol);
  }
  parse_error("unreachable flavor");
}

Json to_json(const Label& label) {
  if (const auto* s = std::get_if<std::string>(&label)) return *s;
  return std::get<double>(label);
}

Label label_from_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) parse_error("numeric outcome label must be finite");
    return v;
  }
  parse_error("outcome labels are strings or numbers");
}

Json to_json(const Observable& obs) {
  Json effects = Json::array();
  for (const auto& e : obs.effects()) effects.push_back(to_json(e.matrix()));
  return {{"kind", "observable"}, {"outcomes", labels_to_json(obs.outcomes())}, {"effects", effects}};
}

Observable observable_from_json(const Json& j, const Tolerances& tol) {
  expect_kind(j, "observable");
  std::vector<Label> outcomes = labels_from_json(field(j, "outcomes"));
  const Json& effects_j = field(j, "effects");
  if (!effects_j.is_array()) parse_error("effects must be an array");
  std::vector<Effect> effects;
  for (const auto& e : effects_j) effects.emplace_back(matrix_from_json(e), tol);
  return Observable(std::move(outcomes), std::move(effects), tol);
}

Json to_json(const Instrument& instr) {
  Json ops = Json::array();
  for (const auto& op : instr.operations()) ops.push_back(to_json(op));
  return {{"kind", "instrument"}, {"outcomes", labels_to_json(instr.outcomes())}, {"operations", ops}};
}

Instrument instrument_from_json(const Json& j, const Tolerances& tol) {
  expect_kind(j, "instrument");
  std::vector<Label> outcomes = labels_from_json(field(j, "outcomes"));
  const Json& ops_j = field(j, "operations");
  if (!ops_j.is_array()) parse_error("operations must be an array");
  std::vector<Operation> ops;
  for (const auto& op : ops_j) ops.push_back(operation_from_json(op, tol));
  return Instrument(std::move(outcomes), std::move(ops), tol);
}

Json to_json(const BiObservable& joint) {
  Json first = Json::array();
  Json second = Json::array();
  Json effects = Json::array();
  for (std::size_t x = 0; x < joint.outcomes1().size(); ++x) {
    for (std::size_t y = 0; y < joint.outcomes2().size(); ++y) {
      first.push_back(to_json(joint.outcomes1()[x]));
      second.push_back(to_json(joint.outcomes2()[y]));
      effects.push_back(to_json(joint.at(x, y).matrix()));
    }
  }
  return {{"kind", "bi-observable"}, {"outcomes1", first}, {"outcomes2", second}, {"effects", effects}};
}

BiObservable bi_observable_from_json(const Json& j, const Tolerances& tol) {
  expect_kind(j, "bi-observable");
  const std::vector<Label> flat1 = labels_from_json(field(j, "outcomes1"));
  const std::vector<Label> flat2 = labels_from_json(field(j, "outcomes2"));
  const Json& effects_j = field(j, "effects");
  if (!effects_j.is_array() || flat1.size() != flat2.size() || flat1.size() != effects_j.size()) {
    parse_error("bi-observable arrays must have equal length");
  }
  // Recover the two outcome sets in first-appearance order.
  std::vector<Label> outcomes1;
  std::vector<Label> outcomes2;
  auto remember = [](std::vector<Label>& seen, const Label& l) {
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] == l) return i;
    }
    seen.push_back(l);
    return seen.size() - 1;
  };
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t i = 0; i < flat1.size(); ++i) {
    positions.emplace_back(remember(outcomes1, flat1[i]), remember(outcomes2, flat2[i]));
  }
  const std::size_t n2 = outcomes2.size();
  if (outcomes1.size() * n2 != flat1.size()) parse_error("bi-observable must list every pair once");
  std::vector<std::optional<Effect>> slots(flat1.size());
  for (std::size_t i = 0; i < flat1.size(); ++i) {
    auto& slot = slots[positions[i].first * n2 + positions[i].second];
    if (slot) parse_error("bi-observable lists a pair twice");
    slot.emplace(matrix_from_json(effects_j[i]), tol);
  }
  std::vector<Effect> effects;
  for (auto& s : slots) effects.push_back(std::move(*s));
  return BiObservable(std::move(outcomes1), std::move(outcomes2), std::move(effects), tol);
}

Json to_json(const UncertaintyReport& r) {
  return {{"expectation_s", r.expectation_s},
          {"expectation_t", r.expectation_t},
          {"variance_s", r.variance_s},
          {"variance_t", r.variance_t},
          {"correlation_re", r.correlation.real()},
          {"correlation_im", r.correlation.imag()},
          {"covariance", r.covariance},
          {"commutator_term", r.commutator_term},
          {"bound", r.bound}};
}

NamedObject object_from_json(const Json& j, const Tolerances& tol) {
  const Json& kind_j = field(j, "kind");
  if (!kind_j.is_string()) parse_error("kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "effect") return effect_from_json(j, tol);
  if (kind == "state") return state_from_json(j, tol);
  if (kind == "operation") return operation_from_json(j, tol);
  if (kind == "observable") return observable_from_json(j, tol);
  if (kind == "instrument") return instrument_from_json(j, tol);
  parse_error("unknown object kind '" + kind + "'");
}

Json to_json(const NamedObject& obj) {
  return std::visit([](const auto& o) { return to_json(o); }, obj);
}

}  // namespace seqprod
