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

#include <map>
#include <string>
#include <vector>

#include "seqprod/suites.hpp"

namespace seqprod {

/// A named collection of objects plus the checks to run on them.
///
/// File layout:
///   {"name": ..., "dim": d,
///    "objects": {label: serialized effect/state/operation/observable/instrument},
///    "checks": [check...]}
/// A check is either {"suite": name, "params": {"dim", "trials", "seed"}} or an
/// object check with "check" one of
///   commutator        a, b, op_a, op_b
///   seq_product       op, b
///   measured_effect   op
///   condition         b, op_a, op_a_prime
/// and an optional "expected" matrix compared at "tol" (default eq_tol).
struct Scenario {
  std::string name;
  Index dim = 0;
  std::map<std::string, NamedObject> objects;
  std::vector<Json> checks;

  const Effect& effect(const std::string& label) const;
  const Operation& operation(const std::string& label) const;
};

/// Validates every object and check. Malformed JSON raises ParseError; an
/// object or check that violates an invariant raises InvariantViolation naming
/// the label and the failed invariant. Unreadable files raise IoError.
Scenario load_scenario(const std::string& path, const Tolerances& tol = {});
Scenario scenario_from_json(const Json& j, const Tolerances& tol = {});

Json to_json(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::string& path);

/// One report per check. Suite checks inherit cfg with the listed overrides.
std::vector<SuiteReport> run_scenario(const Scenario& scenario, const TrialConfig& cfg);

}  // namespace seqprod
