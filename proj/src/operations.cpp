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

#include "seqprod/operations.hpp"

#include <cmath>
#include <string>

#include "seqprod/error.hpp"

namespace seqprod {
namespace {

ComplexMatrix gram_sum(const std::vector<ComplexMatrix>& kraus) {
  ComplexMatrix sum = zero(kraus.front().cols());
  for (const auto& k : kraus) sum.noalias() += k.adjoint() * k;
  return hermitian_part(sum);
}

ComplexMatrix dual_unchecked(const Operation& op, const ComplexMatrix& a) {
  ComplexMatrix out = zero(op.dim());
  for (const auto& k : op.kraus()) out.noalias() += k.adjoint() * a * k;
  return out;
}

ComplexMatrix matrix_unit(Index dim, Index row, Index col) {
  ComplexMatrix e = zero(dim);
  e(row, col) = 1.0;
  return e;
}

void require_measures(const Operation& op, const Effect& a, const Tolerances& tol,
                      std::string_view what) {
  require_same_dim(op.kraus().front(), a.matrix(), what);
  if (!approx_equal(dual_unchecked(op, identity(op.dim())), a.matrix(), tol)) {
    throw Error(ErrorKind::WrongMeasuredEffect,
                std::string(what) + ": operation does not measure the given effect");
  }
}

bool is_zero(const ComplexMatrix& m, const Tolerances& tol) { return max_abs(m) <= tol.eq_tol; }

}  // namespace

std::string_view to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::generic: return "generic";
    case Flavor::luders: return "luders";
    case Flavor::holevo: return "holevo";
    case Flavor::zero: return "zero";
  }
  return "generic";
}

Flavor flavor_from_string(std::string_view name) {
  if (name == "generic") return Flavor::generic;
  if (name == "luders") return Flavor::luders;
  if (name == "holevo") return Flavor::holevo;
  if (name == "zero") return Flavor::zero;
  throw Error(ErrorKind::ParseError, "unknown operation flavor '" + std::string(name) + "'");
}

std::string_view to_string(RepeatCriterion criterion) {
  switch (criterion) {
    case RepeatCriterion::def: return "def";
    case RepeatCriterion::ii: return "ii";
    case RepeatCriterion::iii: return "iii";
    case RepeatCriterion::iv: return "iv";
    case RepeatCriterion::v: return "v";
  }
  return "def";
}

Operation Operation::from_kraus(std::vector<ComplexMatrix> kraus, const Tolerances& tol) {
  if (kraus.empty()) {
    throw Error(ErrorKind::LengthMismatch, "Operation: Kraus family must be non-empty");
  }
  for (const auto& k : kraus) {
    require_square(k, "Operation");
    require_finite(k, "Operation");
    require_same_dim(kraus.front(), k, "Operation");
  }
  const ComplexMatrix slack = identity(kraus.front().rows()) - gram_sum(kraus);
  if (!psd_check(slack, tol)) {
    throw Error(ErrorKind::NotContraction, "Operation: sum of K^dagger K exceeds I");
  }
  return Operation(std::move(kraus), Flavor::generic);
}

ComplexMatrix apply(const Operation& op, const ComplexMatrix& x) {
  require_same_dim(op.kraus().front(), x, "apply");
  ComplexMatrix out = zero(op.dim());
  for (const auto& k : op.kraus()) out.noalias() += k * x * k.adjoint();
  return out;
}

ComplexMatrix apply(const Operation& op, const State& rho) { return seqprod::apply(op, rho.matrix()); }

ComplexMatrix dual_apply(const Operation& op, const ComplexMatrix& a, const Tolerances& tol) {
  require_same_dim(op.kraus().front(), a, "dual_apply");
  if (!is_hermitian(a, tol)) {
    throw Error(ErrorKind::NotHermitian, "dual_apply: argument is not Hermitian");
  }
  return hermitian_part(dual_unchecked(op, a));
}

Effect measured_effect(const Operation& op, const Tolerances& tol) {
  return Effect(hermitian_part(dual_unchecked(op, identity(op.dim()))), tol);
}

bool is_channel(const Operation& op, const Tolerances& tol) {
  return approx_equal(dual_unchecked(op, identity(op.dim())), identity(op.dim()), tol);
}

Operation kraus_operation(const ComplexMatrix& k, const Tolerances& tol) {
  return Operation::from_kraus({k}, tol);
}

Operation luders_operation(const Effect& a, const Tolerances& tol) {
  Operation op({sqrt_psd(a.matrix(), tol)}, Flavor::luders);
  op.effect_ = a;
  return op;
}

Operation holevo_operation(const Effect& a, const State& alpha, const Tolerances& tol) {
  require_same_dim(a.matrix(), alpha.matrix(), "holevo_operation");
  const Index d = a.dim();
  const ComplexMatrix root = sqrt_psd(a.matrix(), tol);
  const EigenDecomposition eig = eigh(alpha.matrix(), tol);
  std::vector<ComplexMatrix> kraus;
  for (Index j = 0; j < d; ++j) {
    const double lambda = eig.eigenvalues(j);
    if (lambda <= tol.psd_tol) continue;
    const ComplexVector psi = eig.eigenvectors.col(j) * std::sqrt(lambda);
    for (Index k = 0; k < d; ++k) {
      // |psi_j><e_k| a^{1/2}: outer product with row k of a^{1/2}.
      kraus.emplace_back(psi * root.row(k));
    }
  }
  Operation op(std::move(kraus), Flavor::holevo);
  op.effect_ = a;
  op.state_ = alpha;

  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) {
      const ComplexMatrix unit = matrix_unit(d, r, c);
      const ComplexMatrix forward = seqprod::apply(op, unit);
      // tr(E_rc a) = a_cr
      const ComplexMatrix expected_forward = a.matrix()(c, r) * alpha.matrix();
      const ComplexMatrix backward = dual_unchecked(op, unit);
      const ComplexMatrix expected_backward = alpha.matrix()(c, r) * a.matrix();
      if (!approx_equal(forward, expected_forward, tol) ||
          !approx_equal(backward, expected_backward, tol)) {
        throw Error(ErrorKind::InvariantViolation,
                    "holevo_operation: Kraus family does not reproduce tr(rho a) alpha");
      }
    }
  }
  return op;
}

Operation zero_operation(Index dim) { return Operation({zero(dim)}, Flavor::zero); }

Operation kraus_measuring(const Effect& a, const ComplexMatrix& commuting_unitary,
                          const Tolerances& tol) {
  require_same_dim(a.matrix(), commuting_unitary, "kraus_measuring");
  const ComplexMatrix& u = commuting_unitary;
  if (!approx_equal(u.adjoint() * u, identity(a.dim()), tol)) {
    throw Error(ErrorKind::InvariantViolation, "kraus_measuring: U is not unitary");
  }
  if (!approx_equal(a.matrix() * u, u * a.matrix(), tol)) {
    throw Error(ErrorKind::InvariantViolation, "kraus_measuring: U does not commute with a");
  }
  return kraus_operation(sqrt_psd(a.matrix(), tol) * commuting_unitary, tol);
}

ComplexMatrix random_commuting_unitary(const Effect& a, Rng& rng, const Tolerances& tol) {
  const EigenDecomposition eig = eigh(a.matrix(), tol);
  const Index d = a.dim();
  ComplexMatrix blocks = zero(d);
  Index start = 0;
  while (start < d) {
    Index end = start + 1;
    while (end < d && eig.eigenvalues(end) - eig.eigenvalues(end - 1) <= tol.eq_tol) ++end;
    const Index size = end - start;
    blocks.block(start, start, size, size) = random_unitary(size, rng);
    start = end;
  }
  return eig.eigenvectors * blocks * eig.eigenvectors.adjoint();
}

Effect seq_product(const Operation& op_a, const Effect& b, const Tolerances& tol) {
  return Effect(dual_apply(op_a, b.matrix(), tol), tol);
}

CommutatorResult commutator(const Effect& a, const Effect& b, const Operation& op_a,
                            const Operation& op_b, const Tolerances& tol) {
  require_same_dim(a.matrix(), b.matrix(), "commutator");
  require_measures(op_a, a, tol, "commutator (first operation)");
  require_measures(op_b, b, tol, "commutator (second operation)");
  CommutatorResult out;
  out.value = dual_apply(op_a, b.matrix(), tol) - dual_apply(op_b, a.matrix(), tol);
  out.vanishes = is_zero(out.value, tol);
  return out;
}

bool is_repeatable(const Effect& a, const Operation& op, RepeatCriterion criterion, Rng& rng,
                   const Tolerances& tol, int random_witnesses) {
  require_measures(op, a, tol, "is_repeatable");
  const Index d = a.dim();
  const Effect a_prime = complement(a);

  switch (criterion) {
    case RepeatCriterion::def:
      return approx_equal(dual_apply(op, a.matrix(), tol), a.matrix(), tol);

    case RepeatCriterion::ii:
      return is_zero(dual_apply(op, a_prime.matrix(), tol), tol);

    case RepeatCriterion::iii: {
      // Every b with a ⊥ b, i.e. b <= a'.
      if (!is_zero(dual_apply(op, a_prime.matrix(), tol), tol)) return false;
      const ComplexMatrix root = sqrt_psd(a_prime.matrix(), tol);
      for (int i = 0; i < random_witnesses; ++i) {
        const Effect c = random_effect(d, rng);
        const ComplexMatrix b = hermitian_part(root * c.matrix() * root);
        if (!is_zero(dual_apply(op, b, tol), tol)) return false;
      }
      return true;
    }

    case RepeatCriterion::iv: {
      const ComplexMatrix top = dual_apply(op, a.matrix(), tol);
      auto dominated = [&](const ComplexMatrix& b) {
        return psd_check(top - dual_apply(op, b, tol), tol);
      };
      if (!dominated(identity(d)) || !dominated(a_prime.matrix()) || !dominated(zero(d))) {
        return false;
      }
      for (int i = 0; i < random_witnesses; ++i) {
        if (!dominated(random_effect(d, rng).matrix())) return false;
      }
      return true;
    }

    case RepeatCriterion::v: {
      const Operation twice = compose(op, op, tol);
      auto trace_preserved = [&](const ComplexMatrix& rho) {
        const double once = seqprod::apply(op, rho).trace().real();
        const double again = seqprod::apply(twice, rho).trace().real();
        return std::abs(once - again) <= tol.eq_tol;
      };
      if (!trace_preserved(State::maximally_mixed(d).matrix())) return false;
      for (int i = 0; i < random_witnesses; ++i) {
        if (!trace_preserved(random_state(d, rng).matrix())) return false;
      }
      return true;
    }
  }
  return false;
}

bool is_repeatable(const Effect& a, const Operation& op, RepeatCriterion criterion,
                   const Tolerances& tol) {
  Rng rng(0);
  return is_repeatable(a, op, criterion, rng, tol);
}

Effect condition_effect(const Effect& b, const Operation& op_a, const Operation& op_a_prime,
                        const Tolerances& tol) {
  require_same_dim(op_a.kraus().front(), b.matrix(), "condition_effect");
  require_same_dim(op_a_prime.kraus().front(), b.matrix(), "condition_effect");
  const ComplexMatrix total = dual_unchecked(op_a, identity(b.dim())) +
                              dual_unchecked(op_a_prime, identity(b.dim()));
  if (!approx_equal(total, identity(b.dim()), tol)) {
    throw Error(ErrorKind::ComplementMismatch,
                "condition_effect: the two operations do not measure a and a'");
  }
  return Effect(dual_apply(op_a, b.matrix(), tol) + dual_apply(op_a_prime, b.matrix(), tol), tol);
}

Effect condition_effect(const Effect& b, const Effect& a, const Operation& op_a,
                        const Operation& op_a_prime, const Tolerances& tol) {
  require_measures(op_a, a, tol, "condition_effect");
  return condition_effect(b, op_a, op_a_prime, tol);
}

Operation compose(const Operation& op1, const Operation& op2, const Tolerances& tol) {
  require_same_dim(op1.kraus().front(), op2.kraus().front(), "compose");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(op1.kraus().size() * op2.kraus().size());
  for (const auto& k2 : op2.kraus()) {
    for (const auto& k1 : op1.kraus()) kraus.emplace_back(k2 * k1);
  }
  Operation out = Operation::from_kraus(std::move(kraus), tol);
  const Index d = op1.dim();
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) {
      const ComplexMatrix unit = matrix_unit(d, r, c);
      if (!approx_equal(seqprod::apply(out, unit), seqprod::apply(op2, seqprod::apply(op1, unit)), tol)) {
        throw Error(ErrorKind::InvariantViolation, "compose: product family disagrees");
      }
    }
  }
  return out;
}

Operation operation_sum(std::span<const Operation> ops, const Tolerances& tol) {
  if (ops.empty()) throw Error(ErrorKind::LengthMismatch, "operation_sum: no operations");
  std::vector<ComplexMatrix> kraus;
  for (const auto& op : ops) {
    require_same_dim(ops.front().kraus().front(), op.kraus().front(), "operation_sum");
    kraus.insert(kraus.end(), op.kraus().begin(), op.kraus().end());
  }
  return Operation::from_kraus(std::move(kraus), tol);
}

bool same_map(const Operation& lhs, const Operation& rhs, double tol) {
  if (lhs.dim() != rhs.dim()) return false;
  const Index d = lhs.dim();
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) {
      const ComplexMatrix unit = matrix_unit(d, r, c);
      if (!approx_equal(seqprod::apply(lhs, unit), seqprod::apply(rhs, unit), tol)) return false;
    }
  }
  return true;
}

}  // namespace seqprod
