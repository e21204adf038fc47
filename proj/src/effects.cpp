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

#include "seqprod/effects.hpp"

#include <cmath>
#include <string>

#include "seqprod/error.hpp"

namespace seqprod {
namespace {

void validate_operator(const ComplexMatrix& m, const Tolerances& tol, std::string_view what) {
  require_square(m, what);
  require_finite(m, what);
  if (!is_hermitian(m, tol)) {
    throw Error(ErrorKind::NotHermitian, std::string(what) + ": matrix is not Hermitian");
  }
}

}  // namespace

Effect::Effect(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
  validate_operator(m_, tol, "Effect");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m_), Eigen::EigenvaluesOnly);
  const RealVector& ev = solver.eigenvalues();
  if (ev(0) < -tol.psd_tol || ev(ev.size() - 1) > 1.0 + tol.psd_tol) {
    throw Error(ErrorKind::NotEffect, "Effect: spectrum [" + std::to_string(ev(0)) + ", " +
                                          std::to_string(ev(ev.size() - 1)) +
                                          "] not inside [0, 1]");
  }
}

Effect Effect::identity(Index dim) { return Effect(seqprod::identity(dim), Unchecked{}); }

Effect Effect::zero(Index dim) { return Effect(seqprod::zero(dim), Unchecked{}); }

State::State(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
  validate_operator(m_, tol, "State");
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > tol.eq_tol) {
    throw Error(ErrorKind::NotState, "State: trace " + std::to_string(tr) + " != 1");
  }
  if (min_eigenvalue(m_, tol) < -tol.psd_tol) {
    throw Error(ErrorKind::NotState, "State: operator is not positive");
  }
}

State State::maximally_mixed(Index dim) {
  return State(seqprod::identity(dim) / static_cast<double>(dim));
}

State State::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (!(n > 0.0)) throw Error(ErrorKind::NotState, "State::pure: zero vector");
  return State(outer(psi / n));
}

bool is_effect_matrix(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() == 0 || !m.allFinite()) return false;
  if (!is_hermitian(m, tol)) return false;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
  const RealVector& ev = solver.eigenvalues();
  return ev(0) >= -tol.psd_tol && ev(ev.size() - 1) <= 1.0 + tol.psd_tol;
}

Effect complement(const Effect& a) {
  // I - a inherits both bounds from a.
  return Effect(seqprod::identity(a.dim()) - a.matrix());
}

double prob(const State& rho, const Effect& a, const Tolerances& tol) {
  require_same_dim(rho.matrix(), a.matrix(), "prob");
  const Complex p = trace_product(rho.matrix(), a.matrix());
  if (std::abs(p.imag()) > tol.eq_tol) {
    throw Error(ErrorKind::ImaginaryResidue,
                "prob: tr(rho a) has imaginary part " + std::to_string(p.imag()));
  }
  return p.real();
}

bool leq(const Effect& a, const Effect& b, const Tolerances& tol) {
  require_same_dim(a.matrix(), b.matrix(), "leq");
  return psd_check(b.matrix() - a.matrix(), tol);
}

bool perp(const Effect& a, const Effect& b, const Tolerances& tol) {
  require_same_dim(a.matrix(), b.matrix(), "perp");
  const bool sum_is_effect = is_effect_matrix(a.matrix() + b.matrix(), tol);
  const bool below_complement = leq(b, complement(a), tol);
  if (sum_is_effect != below_complement) {
    throw Error(ErrorKind::InvariantViolation,
                "perp: a + b in E(H) and b <= a' disagree at the tolerance boundary");
  }
  return sum_is_effect;
}

bool is_sharp(const Effect& a, const Tolerances& tol) {
  return max_abs(a.matrix() * a.matrix() - a.matrix()) <= tol.eq_tol;
}

bool has_eigenvalue_one(const Effect& a, const Tolerances& tol) {
  return max_eigenvalue(a.matrix(), tol) >= 1.0 - tol.eq_tol;
}

Effect random_effect(Index dim, Rng& rng) {
  const ComplexMatrix u = random_unitary(dim, rng);
  RealVector spectrum(dim);
  for (Index i = 0; i < dim; ++i) spectrum(i) = rng.uniform();
  return Effect(hermitian_part(u * spectrum.cast<Complex>().asDiagonal() * u.adjoint()));
}

Effect random_effect(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_effect(dim, rng);
}

State random_state(Index dim, Rng& rng, bool pure) {
  if (dim < 1) throw Error(ErrorKind::BadConfig, "random_state: dim must be >= 1");
  if (pure) {
    ComplexVector psi(dim);
    for (Index i = 0; i < dim; ++i) psi(i) = rng.complex_normal();
    return State::pure(psi);
  }
  ComplexMatrix w(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) w(i, j) = rng.complex_normal();
  }
  ComplexMatrix g = hermitian_part(w * w.adjoint());
  return State(g / g.trace().real());
}

State random_state(Index dim, std::uint64_t seed, bool pure) {
  Rng rng(seed);
  return random_state(dim, rng, pure);
}

Effect convex_combination(std::span<const double> weights, std::span<const Effect> effects,
                          const Tolerances& tol) {
  if (weights.size() != effects.size()) {
    throw Error(ErrorKind::LengthMismatch, "convex_combination: weights and effects differ");
  }
  if (effects.empty()) throw Error(ErrorKind::BadWeights, "convex_combination: empty family");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorKind::BadWeights, "convex_combination: negative or non-finite weight");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > tol.eq_tol) {
    throw Error(ErrorKind::BadWeights,
                "convex_combination: weights sum to " + std::to_string(total));
  }
  ComplexMatrix sum = zero(effects.front().dim());
  for (std::size_t i = 0; i < effects.size(); ++i) {
    require_same_dim(sum, effects[i].matrix(), "convex_combination");
    sum += weights[i] * effects[i].matrix();
  }
  return Effect(std::move(sum), tol);
}

}  // namespace seqprod
