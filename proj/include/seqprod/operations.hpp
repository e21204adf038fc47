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
#include <span>
#include <string_view>
#include <vector>

#include "seqprod/effects.hpp"

namespace seqprod {

/// Provenance of an operation, kept for reporting and serialization.
enum class Flavor { generic, luders, holevo, zero };

std::string_view to_string(Flavor flavor);
/// Throws ParseError.
Flavor flavor_from_string(std::string_view name);

/// A completely positive, trace non-increasing map stored as a Kraus family
/// {K_i} with sum K_i^dagger K_i <= I. Immutable once built.
class Operation {
 public:
  /// Generic operation. Throws NotContraction, DimMismatch, NotSquare,
  /// NonFinite or LengthMismatch (empty family).
  static Operation from_kraus(std::vector<ComplexMatrix> kraus, const Tolerances& tol = {});

  Index dim() const { return kraus_.front().rows(); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  Flavor flavor() const { return flavor_; }

  /// The effect parameter of a Lüders or Holevo operation.
  const std::optional<Effect>& effect_param() const { return effect_; }
  /// The output state of a Holevo operation.
  const std::optional<State>& state_param() const { return state_; }

 private:
  Operation(std::vector<ComplexMatrix> kraus, Flavor flavor) noexcept
      : kraus_(std::move(kraus)), flavor_(flavor) {}

  friend Operation luders_operation(const Effect& a, const Tolerances& tol);
  friend Operation holevo_operation(const Effect& a, const State& alpha, const Tolerances& tol);
  friend Operation zero_operation(Index dim);

  std::vector<ComplexMatrix> kraus_;
  Flavor flavor_ = Flavor::generic;
  std::optional<Effect> effect_;
  std::optional<State> state_;
};

struct CommutatorResult {
  ComplexMatrix value;  // I*(b) - J*(a)
  bool vanishes = false;
};

/// Repeatability criteria that are proven equivalent; `def` is I*(a) = a.
enum class RepeatCriterion { def, ii, iii, iv, v };

std::string_view to_string(RepeatCriterion criterion);

/// sum_i K_i X K_i^dagger for any square X of matching size.
ComplexMatrix apply(const Operation& op, const ComplexMatrix& x);
ComplexMatrix apply(const Operation& op, const State& rho);

/// sum_i K_i^dagger A K_i. Throws DimMismatch or NotHermitian.
ComplexMatrix dual_apply(const Operation& op, const ComplexMatrix& a, const Tolerances& tol = {});

/// The effect measured by the operation, I*(I).
Effect measured_effect(const Operation& op, const Tolerances& tol = {});

bool is_channel(const Operation& op, const Tolerances& tol = {});

/// rho -> K rho K^dagger. Throws NotContraction unless K^dagger K <= I.
Operation kraus_operation(const ComplexMatrix& k, const Tolerances& tol = {});

/// rho -> a^{1/2} rho a^{1/2}.
Operation luders_operation(const Effect& a, const Tolerances& tol = {});

/// rho -> tr(rho a) alpha, with Kraus family
/// K_jk = sqrt(l_j) |psi_j><e_k| a^{1/2} over the eigenpairs (l_j, psi_j) of
/// alpha with l_j > psd_tol. Both the action and the dual are checked on every
/// matrix unit before returning (InvariantViolation on mismatch).
Operation holevo_operation(const Effect& a, const State& alpha, const Tolerances& tol = {});

/// The operation that measures 0.
Operation zero_operation(Index dim);

/// K = a^{1/2} U with U unitary and [U, a] = 0; measures a. Throws
/// InvariantViolation if U is not unitary or does not commute with a.
Operation kraus_measuring(const Effect& a, const ComplexMatrix& commuting_unitary,
                          const Tolerances& tol = {});

/// A random unitary commuting with a: Haar blocks inside each eigenspace of a
/// (eigenvalues clustered at eq_tol), expressed in a's eigenbasis.
ComplexMatrix random_commuting_unitary(const Effect& a, Rng& rng, const Tolerances& tol = {});

/// a[I]b = I*(b).
Effect seq_product(const Operation& op_a, const Effect& b, const Tolerances& tol = {});

/// C(a, b; I, J) = I*(b) - J*(a). Throws WrongMeasuredEffect unless op_a
/// measures a and op_b measures b.
CommutatorResult commutator(const Effect& a, const Effect& b, const Operation& op_a,
                            const Operation& op_b, const Tolerances& tol = {});

/// Evaluates one repeatability criterion. Universally quantified criteria are
/// checked on deterministic edge witnesses plus `random_witnesses` samples
/// drawn from rng. Throws WrongMeasuredEffect unless op measures a.
bool is_repeatable(const Effect& a, const Operation& op, RepeatCriterion criterion, Rng& rng,
                   const Tolerances& tol = {}, int random_witnesses = 50);
bool is_repeatable(const Effect& a, const Operation& op, RepeatCriterion criterion,
                   const Tolerances& tol = {});

/// b|(I, J)a = I*(b) + J*(b) where I measures a and J measures a'.
/// Throws ComplementMismatch when the measured effects do not sum to I.
Effect condition_effect(const Effect& b, const Operation& op_a, const Operation& op_a_prime,
                        const Tolerances& tol = {});
/// As above, additionally checking that op_a measures a (WrongMeasuredEffect).
Effect condition_effect(const Effect& b, const Effect& a, const Operation& op_a,
                        const Operation& op_a_prime, const Tolerances& tol = {});

/// op2 after op1: Kraus family {K2_j K1_i}.
Operation compose(const Operation& op1, const Operation& op2, const Tolerances& tol = {});

/// Pointwise sum of operations (concatenated Kraus families). Throws
/// NotContraction when the sum is not trace non-increasing.
Operation operation_sum(std::span<const Operation> ops, const Tolerances& tol = {});

/// Whether two operations define the same linear map, compared on every
/// matrix unit.
bool same_map(const Operation& lhs, const Operation& rhs, double tol);

}  // namespace seqprod
