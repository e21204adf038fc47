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

#include "seqprod/observables.hpp"

namespace seqprod {

/// Hermitian operator, the carrier of rho-statistics.
class SelfAdjointOperator {
 public:
  /// Throws NotSquare, NonFinite or NotHermitian.
  explicit SelfAdjointOperator(ComplexMatrix m, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

/// rho-statistics of a pair S, T.
///
/// `commutator_term` stores the raw |tr(rho [S, T])|^2, which equals
/// 4 (Im tr(rho S T))^2. The exact split of the squared correlation is
///   |Cor|^2 = covariance^2 + commutator_term / 4.
struct UncertaintyReport {
  double expectation_s = 0.0;
  double expectation_t = 0.0;
  double variance_s = 0.0;
  double variance_t = 0.0;
  Complex correlation;
  double covariance = 0.0;
  double commutator_term = 0.0;
  double bound = 0.0;  // variance_s * variance_t

  double correlation_sq() const { return std::norm(correlation); }
};

/// sum_x x A_x.
SelfAdjointOperator stochastic_operator(const RealObservable& obs, const Tolerances& tol = {});

/// tr(rho S). Throws DimMismatch or ImaginaryResidue.
double expectation(const State& rho, const SelfAdjointOperator& s, const Tolerances& tol = {});

/// tr(rho S T) - tr(rho S) tr(rho T).
Complex correlation(const State& rho, const SelfAdjointOperator& s,
                    const SelfAdjointOperator& t);

/// Re Cor(S, T).
double covariance(const State& rho, const SelfAdjointOperator& s, const SelfAdjointOperator& t);

/// tr(rho S^2) - tr(rho S)^2, clamped to 0 from [-1e-10, 0). Anything lower
/// throws NegativeVariance.
double variance(const State& rho, const SelfAdjointOperator& s, const Tolerances& tol = {});

/// Populates every field and checks the split of |Cor|^2 and the
/// Cauchy-Schwarz bound (InvariantViolation on failure).
UncertaintyReport uncertainty_report(const State& rho, const SelfAdjointOperator& s,
                                     const SelfAdjointOperator& t, const Tolerances& tol = {});

/// (B|I A)~ = Ibar*(B~). Computed both as sum_y y (B|I A)_y and as the dual
/// of the total channel at B~; the two must agree (InvariantViolation).
SelfAdjointOperator conditioned_stochastic(const RealObservable& b, const Instrument& instr,
                                           const Tolerances& tol = {});

/// uncertainty_report for the conditioned stochastic operators of B and C.
UncertaintyReport conditioned_stats(const State& rho, const RealObservable& b,
                                    const RealObservable& c, const Instrument& instr,
                                    const Tolerances& tol = {});

}  // namespace seqprod
