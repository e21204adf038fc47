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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqprod/generators.hpp"
#include "seqprod/suites.hpp"

namespace seqprod::detail {

class Recorder {
 public:
  Recorder(const TrialConfig& cfg, Rng base) : cfg_(cfg), base_(base) {}

  const TrialConfig& cfg() const { return cfg_; }
  const Tolerances& tol() const { return cfg_.tol; }

  /// Independent stream for one part of a suite at one dimension.
  Rng stream(std::string_view part, Index dim = 0) const;

  /// Instance count for a part whose native count is `native` at trials = 200.
  int scaled(int native) const;

  /// Dimensions to sweep: [lo, hi], or cfg.dim alone when it is set.
  std::vector<Index> dims(Index lo, Index hi) const;

  /// Records one case. Library errors count as failures.
  void check(std::string_view what, const std::function<bool()>& body);
  void expect(bool ok, std::string_view what);

  using Probe = std::function<std::optional<Json>(Index dim, Rng& rng)>;

  /// Searches for a counterexample, at most cfg.trials attempts per dimension,
  /// dimensions in order. A required search counts as one case.
  bool search(std::string_view name, const std::vector<Index>& dims, const Probe& probe,
              bool required = true);

  void witness(std::string_view name, Json body);
  void note(std::string text);

  /// Counterexample suites report witness-found on success, theorem suites pass.
  SuiteReport finish(std::string suite, std::string claim, bool counterexample) const;

 private:
  void fail(std::string text);

  const TrialConfig& cfg_;
  Rng base_;
  int cases_run_ = 0;
  int cases_passed_ = 0;
  int missing_witnesses_ = 0;
  int failure_notes_ = 0;
  std::vector<Json> witnesses_;
  std::vector<std::string> notes_;
};

/// Largest entry of |x - y| stays below tol.
inline bool close(const ComplexMatrix& x, const ComplexMatrix& y, double tol) {
  return max_abs_diff(x, y) <= tol;
}

/// Hermitian x >= -tol.
bool nonnegative(const ComplexMatrix& x, double tol);

using SuiteFn = void (*)(Recorder&);

// Suite bodies, one per registry entry.
void suite_duality(Recorder& r);
void suite_seqprod_laws(Recorder& r);
void suite_luders(Recorder& r);
void suite_thm21(Recorder& r);
void suite_kraus_counterparts(Recorder& r);
void suite_example1(Recorder& r);
void suite_example2(Recorder& r);
void suite_example3(Recorder& r);
void suite_example4(Recorder& r);
void suite_thm31(Recorder& r);
void suite_thm32(Recorder& r);
void suite_thm33(Recorder& r);
void suite_thm34(Recorder& r);
void suite_conditioning(Recorder& r);
void suite_obs_marginals(Recorder& r);
void suite_obs_distribution(Recorder& r);
void suite_post_processing(Recorder& r);
void suite_stats(Recorder& r);
void suite_uncertainty(Recorder& r);

}  // namespace seqprod::detail
