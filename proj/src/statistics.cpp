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

#include "seqprod/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seqprod/error.hpp"

namespace seqprod {
namespace {

constexpr double kVarianceFloor = 1e-10;
constexpr double kIdentityTol = 1e-9;

// Scale for comparing quantities that grow with operator norms.
double magnitude(double x) { return std::max(1.0, std::abs(x)); }

}  // namespace

SelfAdjointOperator::SelfAdjointOperator(ComplexMatrix m, const Tolerances& tol)
    : m_(std::move(m)) {
  require_square(m_, "SelfAdjointOperator");
  require_finite(m_, "SelfAdjointOperator");
  if (!is_hermitian(m_, tol)) {
    throw Error(ErrorKind::NotHermitian, "SelfAdjointOperator: matrix is not Hermitian");
  }
}

SelfAdjointOperator stochastic_operator(const RealObservable& obs, const Tolerances& tol) {
  const Observable& o = obs.observable();
  ComplexMatrix sum = zero(o.dim());
  for (std::size_t i = 0; i < o.size(); ++i) sum += obs.values()[i] * o.effects()[i].matrix();
  return SelfAdjointOperator(hermitian_part(sum), tol);
}

double expectation(const State& rho, const SelfAdjointOperator& s, const Tolerances& tol) {
  require_same_dim(rho.matrix(), s.matrix(), "expectation");
  const Complex e = trace_product(rho.matrix(), s.matrix());
  if (std::abs(e.imag()) > tol.eq_tol * magnitude(e.real())) {
    throw Error(ErrorKind::ImaginaryResidue,
                "expectation: imaginary part " + std::to_string(e.imag()));
  }
  return e.real();
}

Complex correlation(const State& rho, const SelfAdjointOperator& s,
                    const SelfAdjointOperator& t) {
  require_same_dim(rho.matrix(), s.matrix(), "correlation");
  require_same_dim(rho.matrix(), t.matrix(), "correlation");
  const Complex st = trace_product(rho.matrix(), s.matrix() * t.matrix());
  const double es = trace_product(rho.matrix(), s.matrix()).real();
  const double et = trace_product(rho.matrix(), t.matrix()).real();
  return st - es * et;
}

double covariance(const State& rho, const SelfAdjointOperator& s, const SelfAdjointOperator& t) {
  return correlation(rho, s, t).real();
}

double variance(const State& rho, const SelfAdjointOperator& s, const Tolerances& tol) {
  require_same_dim(rho.matrix(), s.matrix(), "variance");
  const double e = expectation(rho, s, tol);
  const double v = trace_product(rho.matrix(), s.matrix() * s.matrix()).real() - e * e;
  if (v < -kVarianceFloor * magnitude(e * e)) {
    throw Error(ErrorKind::NegativeVariance, "variance: " + std::to_string(v));
  }
  return std::max(v, 0.0);
}

UncertaintyReport uncertainty_report(const State& rho, const SelfAdjointOperator& s,
                                     const SelfAdjointOperator& t, const Tolerances& tol) {
  UncertaintyReport r;
  r.expectation_s = expectation(rho, s, tol);
  r.expectation_t = expectation(rho, t, tol);
  r.variance_s = variance(rho, s, tol);
  r.variance_t = variance(rho, t, tol);
  r.correlation = correlation(rho, s, t);
  r.covariance = r.correlation.real();
  r.commutator_term = std::norm(trace_product(rho.matrix(), bracket(s.matrix(), t.matrix())));
  r.bound = r.variance_s * r.variance_t;

  const double cor_sq = r.correlation_sq();
  const double scale = magnitude(r.bound) + magnitude(cor_sq);
  const double split = r.covariance * r.covariance + r.commutator_term / 4.0;
  if (std::abs(cor_sq - split) > kIdentityTol * scale) {
    throw Error(ErrorKind::InvariantViolation,
                "uncertainty_report: |Cor|^2 != covariance^2 + commutator_term / 4");
  }
  if (cor_sq > r.bound + kIdentityTol * scale) {
    throw Error(ErrorKind::InvariantViolation,
                "uncertainty_report: |Cor|^2 exceeds the variance product");
  }
  return r;
}

SelfAdjointOperator conditioned_stochastic(const RealObservable& b, const Instrument& instr,
                                           const Tolerances& tol) {
  const Observable conditioned = conditioned_obs(b.observable(), instr, tol);
  ComplexMatrix by_outcomes = zero(instr.dim());
  for (std::size_t y = 0; y < conditioned.size(); ++y) {
    by_outcomes += b.values()[y] * conditioned.effects()[y].matrix();
  }
  const SelfAdjointOperator b_tilde = stochastic_operator(b, tol);
  ComplexMatrix by_dual = zero(instr.dim());
  for (const auto& op : instr.operations()) by_dual += dual_apply(op, b_tilde.matrix(), tol);

  double scale = 1.0;
  for (double v : b.values()) scale = std::max(scale, std::abs(v));
  if (max_abs(by_outcomes - by_dual) > tol.eq_tol * scale) {
    throw Error(ErrorKind::InvariantViolation,
                "conditioned_stochastic: outcome sum and total dual disagree");
  }
  return SelfAdjointOperator(hermitian_part(by_dual), tol);
}

UncertaintyReport conditioned_stats(const State& rho, const RealObservable& b,
                                    const RealObservable& c, const Instrument& instr,
                                    const Tolerances& tol) {
  return uncertainty_report(rho, conditioned_stochastic(b, instr, tol),
                            conditioned_stochastic(c, instr, tol), tol);
}

}  // namespace seqprod
