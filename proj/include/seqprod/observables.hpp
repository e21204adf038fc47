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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "seqprod/operations.hpp"

namespace seqprod {

/// Outcome label: a name, or a real value for real-valued observables.
using Label = std::variant<std::string, double>;

std::string label_to_string(const Label& label);

/// Finite observable: distinct labels, effects summing to I.
class Observable {
 public:
  /// Throws LengthMismatch, DuplicateLabel, DimMismatch or NotNormalized.
  Observable(std::vector<Label> outcomes, std::vector<Effect> effects, const Tolerances& tol = {});

  const std::vector<Label>& outcomes() const { return outcomes_; }
  const std::vector<Effect>& effects() const { return effects_; }
  std::size_t size() const { return effects_.size(); }
  Index dim() const { return effects_.front().dim(); }

  /// Position of a label. Throws UnknownLabel.
  std::size_t index_of(const Label& label) const;
  bool is_sharp(const Tolerances& tol = {}) const;

 private:
  std::vector<Label> outcomes_;
  std::vector<Effect> effects_;
};

/// Observable with real outcome labels, the input to stochastic operators.
class RealObservable {
 public:
  /// Throws OutcomeMismatch if a label is not a finite real.
  explicit RealObservable(Observable obs);
  RealObservable(std::vector<double> values, std::vector<Effect> effects,
                 const Tolerances& tol = {});

  const Observable& observable() const { return obs_; }
  const std::vector<double>& values() const { return values_; }

 private:
  Observable obs_;
  std::vector<double> values_;
};

/// Finite instrument: operations whose sum is a channel.
class Instrument {
 public:
  /// Throws LengthMismatch, DuplicateLabel, DimMismatch or NotNormalized.
  Instrument(std::vector<Label> outcomes, std::vector<Operation> operations,
             const Tolerances& tol = {});

  const std::vector<Label>& outcomes() const { return outcomes_; }
  const std::vector<Operation>& operations() const { return operations_; }
  std::size_t size() const { return operations_.size(); }
  Index dim() const { return operations_.front().dim(); }

 private:
  std::vector<Label> outcomes_;
  std::vector<Operation> operations_;
};

/// Observable indexed by pairs; effects stored row-major, (x, y) at
/// x * outcomes2.size() + y.
class BiObservable {
 public:
  /// Throws LengthMismatch, DuplicateLabel or NotNormalized.
  BiObservable(std::vector<Label> outcomes1, std::vector<Label> outcomes2,
               std::vector<Effect> effects, const Tolerances& tol = {});

  const std::vector<Label>& outcomes1() const { return outcomes1_; }
  const std::vector<Label>& outcomes2() const { return outcomes2_; }
  const std::vector<Effect>& effects() const { return effects_; }
  const Effect& at(std::size_t x, std::size_t y) const {
    return effects_[x * outcomes2_.size() + y];
  }
  Index dim() const { return effects_.front().dim(); }

 private:
  std::vector<Label> outcomes1_;
  std::vector<Label> outcomes2_;
  std::vector<Effect> effects_;
};

enum class Marginal { first, second };

/// Labels "0", "1", ... for n outcomes.
std::vector<Label> default_labels(std::size_t n);

/// Phi(x) = tr(rho A_x) per outcome.
std::vector<std::pair<Label, double>> distribution(const State& rho, const Observable& obs,
                                                   const Tolerances& tol = {});

/// Phi(x) = tr[I_x(rho)] per outcome.
std::vector<std::pair<Label, double>> distribution(const State& rho, const Instrument& instr);

/// A(Delta) = sum of A_x over x in Delta. Throws UnknownLabel.
Effect subset_effect(const Observable& obs, std::span<const Label> subset,
                     const Tolerances& tol = {});

/// The channel sum_x I_x.
Operation total_channel(const Instrument& instr, const Tolerances& tol = {});

Observable measured_observable(const Instrument& instr, const Tolerances& tol = {});

Instrument luders_instrument(const Observable& obs, const Tolerances& tol = {});

/// Throws LengthMismatch unless there is one state per outcome.
Instrument holevo_instrument(const Observable& obs, std::span<const State> alphas,
                             const Tolerances& tol = {});

/// Throws NotNormalized unless sum K_x^dagger K_x = I.
Instrument kraus_instrument(std::span<const ComplexMatrix> kraus, const Tolerances& tol = {});
Instrument kraus_instrument(std::vector<Label> outcomes, std::span<const ComplexMatrix> kraus,
                            const Tolerances& tol = {});

/// (x, y) -> I_x*(B_y).
BiObservable seq_product_obs(const Instrument& instr, const Observable& b,
                             const Tolerances& tol = {});

Observable marginal(const BiObservable& joint, Marginal which, const Tolerances& tol = {});

/// (B|I A)_y = sum_x I_x*(B_y), labelled by B's outcomes.
Observable conditioned_obs(const Observable& b, const Instrument& instr,
                           const Tolerances& tol = {});

/// T[x][y] = tr(alpha_x B_y). Row-stochasticity is checked (InvariantViolation).
std::vector<std::vector<double>> transition_matrix(const Observable& b,
                                                   std::span<const State> alphas,
                                                   const Tolerances& tol = {});

/// Certifies that b and c are the marginals of joint, effect by effect.
/// Throws OutcomeMismatch when the outcome sets do not line up.
bool coexist_via_joint(const BiObservable& joint, const Observable& b, const Observable& c,
                       const Tolerances& tol = {});

}  // namespace seqprod
