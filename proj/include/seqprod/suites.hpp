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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqprod/serialize.hpp"

namespace seqprod {

struct TrialConfig {
  /// Unset: every suite sweeps its own dimension range. Set: the sweep is
  /// restricted to this dimension.
  std::optional<int> dim;
  /// Scale factor: 200 runs each suite at its native instance counts.
  int trials = 200;
  std::uint64_t seed = 0;
  Tolerances tol;

  /// Throws BadConfig.
  void validate() const;
};

enum class SuiteStatus { pass, fail, witness_found, witness_not_found };

std::string_view to_string(SuiteStatus status);

struct SuiteReport {
  std::string suite;
  std::string paper_claim;
  int cases_run = 0;
  int cases_passed = 0;
  std::vector<Json> witnesses;
  SuiteStatus status = SuiteStatus::fail;
  /// Failure messages, missing witnesses and exploratory findings.
  std::vector<std::string> notes;

  bool ok() const { return status == SuiteStatus::pass || status == SuiteStatus::witness_found; }
};

struct SuiteInfo {
  std::string name;
  std::string paper_claim;
};

const std::vector<SuiteInfo>& list_suites();

/// Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, const TrialConfig& cfg);

/// Every registered suite in registry order. With parallel = true suites run on
/// worker threads; results are identical to the sequential run.
std::vector<SuiteReport> run_all(const TrialConfig& cfg, bool parallel = false);

/// 0 when every report passed, 1 otherwise.
int exit_code(const std::vector<SuiteReport>& reports);

Json to_json(const SuiteReport& report);

}  // namespace seqprod
