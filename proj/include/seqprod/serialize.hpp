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

#pragma once

#include <variant>

#include <json.hpp>

#include "seqprod/statistics.hpp"

namespace seqprod {

using Json = nlohmann::json;

// Wire format:
//   complex  [re, im]
//   matrix   {"dim": d, "rows": [[[re, im], ...], ...]}
//   effect   {"kind": "effect", "dim": d, "rows": ...}        (likewise "state")
//   operation {"kind": "operation", "flavor": ..., "kraus": [matrix...],
//              "params": {"a": matrix, "alpha": matrix}}
//   observable {"kind": "observable", "outcomes": [...], "effects": [matrix...]}
//   instrument {"kind": "instrument", "outcomes": [...], "operations": [operation...]}
//   bi-observable {"kind": "bi-observable", "outcomes1": [...], "outcomes2": [...],
//                  "effects": [matrix...]} with one entry per (x, y) pair.
// All parse failures raise ParseError; invariant failures keep their own kind.

Json to_json(const ComplexMatrix& m);
Json to_json(const Effect& e);
Json to_json(const State& s);
Json to_json(const Operation& op);
Json to_json(const Label& label);
Json to_json(const Observable& obs);
Json to_json(const Instrument& instr);
Json to_json(const BiObservable& joint);
Json to_json(const UncertaintyReport& report);

ComplexMatrix matrix_from_json(const Json& j);
Label label_from_json(const Json& j);
Effect effect_from_json(const Json& j, const Tolerances& tol = {});
State state_from_json(const Json& j, const Tolerances& tol = {});
Operation operation_from_json(const Json& j, const Tolerances& tol = {});
Observable observable_from_json(const Json& j, const Tolerances& tol = {});
Instrument instrument_from_json(const Json& j, const Tolerances& tol = {});
BiObservable bi_observable_from_json(const Json& j, const Tolerances& tol = {});

using NamedObject = std::variant<Effect, State, Operation, Observable, Instrument>;

/// Dispatches on the "kind" field.
NamedObject object_from_json(const Json& j, const Tolerances& tol = {});
Json to_json(const NamedObject& obj);

}  // namespace seqprod
