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
#include <span>

#include "seqprod/matrix.hpp"

namespace seqprod {

/// An operator a with 0 <= a <= I. Construction validates eagerly.
class Effect {
 public:
  /// Throws NotSquare, NonFinite, NotHermitian or NotEffect.
  explicit Effect(ComplexMatrix m, const Tolerances& tol = {});

  static Effect identity(Index dim);
  static Effect zero(Index dim);

  const ComplexMatrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }

 private:
  struct Unchecked {};
  Effect(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// A density operator: rho >= 0 with unit trace.
class State {
 public:
  /// Throws NotSquare, NonFinite, NotHermitian or NotState.
  explicit State(ComplexMatrix m, const Tolerances& tol = {});

  /// I / dim.
  static State maximally_mixed(Index dim);
  /// |psi><psi| for a normalized copy of psi.
  static State pure(const ComplexVector& psi);

  const ComplexMatrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

/// Whether m satisfies 0 <= m <= I within tolerance, without throwing for
/// non-Hermitian input.
bool is_effect_matrix(const ComplexMatrix& m, const Tolerances& tol = {});

/// a' = I - a
Effect complement(const Effect& a);

/// P_rho(a) = tr(rho a). Throws DimMismatch, or ImaginaryResidue when the
/// imaginary part exceeds eq_tol.
double prob(const State& rho, const Effect& a, const Tolerances& tol = {});

/// a <= b, i.e. b - a is PSD.
bool leq(const Effect& a, const Effect& b, const Tolerances& tol = {});

/// a + b is an effect. Also computes b <= a' and throws InvariantViolation if
/// the two readings disagree.
bool perp(const Effect& a, const Effect& b, const Tolerances& tol = {});

/// a^2 = a.
bool is_sharp(const Effect& a, const Tolerances& tol = {});

/// Largest eigenvalue >= 1 - eq_tol.
bool has_eigenvalue_one(const Effect& a, const Tolerances& tol = {});

/// U diag(u) U^dagger with u_i uniform on [0, 1] and U Haar.
Effect random_effect(Index dim, Rng& rng);
Effect random_effect(Index dim, std::uint64_t seed);

/// W W^dagger / tr(W W^dagger) for complex Gaussian W, or a pure state from a
/// normalized Gaussian vector.
State random_state(Index dim, Rng& rng, bool pure = false);
State random_state(Index dim, std::uint64_t seed, bool pure = false);

/// sum_i w_i b_i. Throws BadWeights, LengthMismatch or DimMismatch.
Effect convex_combination(std::span<const double> weights, std::span<const Effect> effects,
                          const Tolerances& tol = {});

}  // namespace seqprod
