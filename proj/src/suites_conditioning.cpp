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

#include <array>
#include <cmath>
#include <string>

#include "seqprod/error.hpp"
#include "suite_support.hpp"

namespace seqprod::detail {
namespace {

constexpr double kBracketTol = 1e-8;
constexpr double kRepeatTol = 1e-10;
constexpr std::array<RepeatCriterion, 5> kCriteria = {
    RepeatCriterion::def, RepeatCriterion::ii, RepeatCriterion::iii, RepeatCriterion::iv,
    RepeatCriterion::v};

std::string tag(std::string_view what, Index d, int t) {
  return std::string(what) + " (dim " + std::to_string(d) + ", trial " + std::to_string(t) + ")";
}

Effect in_basis(const ComplexMatrix& v, const RealVector& d, const Tolerances& tol) {
  return Effect(hermitian_part(v * d.cast<Complex>().asDiagonal() * v.adjoint()), tol);
}

/// Effect V diag(1 (k times), u...) V^dagger with u uniform in [0, 0.99].
Effect with_unit_block(const ComplexMatrix& v, Index k, Rng& rng, const Tolerances& tol) {
  RealVector d(v.rows());
  for (Index i = 0; i < v.rows(); ++i) d(i) = i < k ? 1.0 : rng.uniform(0.0, 0.99);
  return in_basis(v, d, tol);
}

/// sum_j p_j |v_j><v_j| over the given columns with random weights.
State mixture_of_columns(const ComplexMatrix& v, Index first, Index count, Rng& rng) {
  ComplexMatrix rho = zero(v.rows());
  double total = 0.0;
  std::vector<double> w;
  for (Index j = 0; j < count; ++j) {
    w.push_back(rng.uniform(0.1, 1.0));
    total += w.back();
  }
  for (Index j = 0; j < count; ++j) {
    const ComplexVector col = v.col(first + j);
    rho += (w[static_cast<std::size_t>(j)] / total) * outer(col);
  }
  return State(hermitian_part(rho));
}

/// a = 0, or every eigenvector of alpha with positive eigenvalue is fixed by a.
bool fixes_support(const Effect& a, const State& alpha, const Tolerances& tol) {
  if (max_abs(a.matrix()) <= tol.eq_tol) return true;
  const EigenDecomposition eig = eigh(alpha.matrix());
  for (Index j = 0; j < alpha.dim(); ++j) {
    if (eig.eigenvalues(j) <= tol.psd_tol) continue;
    const ComplexVector psi = eig.eigenvectors.col(j);
    if ((a.matrix() * psi - psi).norm() > kBracketTol) return false;
  }
  return true;
}

enum class PairFlavor { luders, kraus, kraus_commuting, holevo };

struct MeasuringPair {
  Operation op_a;
  Operation op_a_prime;
};

MeasuringPair measuring_pair(const Effect& a, PairFlavor flavor, Rng& rng, const State& alpha,
                             const State& beta, const Tolerances& tol) {
  const Effect ap = complement(a);
  switch (flavor) {
    case PairFlavor::luders:
      return {luders_operation(a, tol), luders_operation(ap, tol)};
    case PairFlavor::kraus:
      return {random_kraus_measuring(a, rng, tol), random_kraus_measuring(ap, rng, tol)};
    case PairFlavor::kraus_commuting:
      return {kraus_measuring(a, random_commuting_unitary(a, rng, tol), tol),
              kraus_measuring(ap, random_commuting_unitary(ap, rng, tol), tol)};
    case PairFlavor::holevo:
      return {holevo_operation(a, alpha, tol), holevo_operation(ap, beta, tol)};
  }
  throw Error(ErrorKind::InvariantViolation, "unknown pair flavor");
}

std::string_view flavor_name(PairFlavor f) {
  switch (f) {
    case PairFlavor::luders:
      return "Lueders";
    case PairFlavor::kraus:
      return "Kraus";
    case PairFlavor::kraus_commuting:
      return "Kraus commuting";
    case PairFlavor::holevo:
      return "Holevo";
  }
  return "?";
}

template <typename Fn>
bool throws_kind(ErrorKind kind, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

void suite_thm31(Recorder& r) {
  const Tolerances& tol = r.tol();
  constexpr std::array<PairFlavor, 3> kFlavors = {PairFlavor::luders, PairFlavor::kraus_commuting,
                                                  PairFlavor::holevo};
  int disagreements = 0;
  int repeatable = 0;
  int total = 0;
  for (const PairFlavor flavor : kFlavors) {
    for (const Index d : r.dims(2, 4)) {
      Rng rng = r.stream(std::string("thm31 ") + std::string(flavor_name(flavor)), d);
      const int n = r.scaled(100);
      for (int t = 0; t < n; ++t) {
        const bool want = t % 2 == 0;
        std::optional<Effect> a;
        std::optional<Operation> op;
        if (flavor == PairFlavor::holevo) {
          ComplexVector psi;
          a = want || t % 4 == 1 ? random_effect_with_unit_eigenvalue(d, rng, &psi)
                                 : random_effect(d, rng);
          op = holevo_operation(*a, want ? State::pure(psi) : random_state(d, rng), tol);
        } else {
          a = want ? random_proper_projection(d, rng) : random_effect(d, rng);
          op = flavor == PairFlavor::luders
                   ? luders_operation(*a, tol)
                   : kraus_measuring(*a, random_commuting_unitary(*a, rng, tol), tol);
        }
        ++total;
        r.check(tag(std::string(flavor_name(flavor)) + ": five criteria agree", d, t), [&] {
          std::array<bool, 5> verdict{};
          for (std::size_t i = 0; i < kCriteria.size(); ++i) {
            verdict[i] = is_repeatable(*a, *op, kCriteria[i], rng, tol);
          }
          bool agree = true;
          for (const bool v : verdict) agree = agree && v == verdict[0];
          if (!agree) ++disagreements;
          if (verdict[0]) ++repeatable;
          return agree && verdict[0] == want;
        });
      }
    }
  }
  r.note(std::to_string(total) + " instances, " + std::to_string(repeatable) + " repeatable, " +
         std::to_string(disagreements) + " criterion disagreements");
}

void suite_thm32(Recorder& r) {
  const Tolerances& tol = r.tol();
  const std::vector<Index> dims = r.dims(2, 4);
  Rng rng = r.stream("thm32");
  const int n = r.scaled(50);
  for (int t = 0; t < n; ++t) {
    const Index d = dims[static_cast<std::size_t>(t) % dims.size()];
    ComplexVector psi;
    const Effect a = random_effect_with_unit_eigenvalue(d, rng, &psi);
    const Operation op = holevo_operation(a, State::pure(psi), tol);
    r.check(tag("eigenvalue 1: H(a, |psi><psi|) repeatable", d, t), [&] {
      return has_eigenvalue_one(a, tol) &&
             max_abs_diff(dual_apply(op, a.matrix(), tol), a.matrix()) <= kRepeatTol &&
             is_repeatable(a, op, RepeatCriterion::def, tol);
    });
  }
  for (const Index d : dims) {
    const Effect z = Effect::zero(d);
    r.check(tag("a = 0 is repeatable", d, 0), [&] {
      return is_repeatable(z, zero_operation(d), RepeatCriterion::def, tol) &&
             is_repeatable(z, luders_operation(z, tol), RepeatCriterion::def, tol);
    });
  }
  for (int t = 0; t < n; ++t) {
    const Index d = dims[static_cast<std::size_t>(t) % dims.size()];
    const Effect a = random_effect_in_range(d, rng, 0.0, 0.99);
    const EigenDecomposition eig = eigh(a.matrix());
    const ComplexVector top = eig.eigenvectors.col(d - 1);
    r.check(tag("max eigenvalue <= 0.99: every flavor non-repeatable", d, t), [&] {
      const std::vector<Operation> ops = {
          luders_operation(a, tol),
          kraus_measuring(a, random_commuting_unitary(a, rng, tol), tol),
          holevo_operation(a, State::pure(top), tol),
          holevo_operation(a, random_state(d, rng), tol),
          random_operation_measuring(a, rng, 2, tol)};
      bool none = !has_eigenvalue_one(a, tol);
      for (const auto& op : ops) none = none && !is_repeatable(a, op, RepeatCriterion::def, tol);
      return none;
    });
  }
}

void suite_thm33(Recorder& r) {
  const Tolerances& tol = r.tol();
  const std::vector<Index> dims = r.dims(2, 4);
  Rng rng = r.stream("thm33");
  const int n = r.scaled(50);
  for (int t = 0; t < 2 * n; ++t) {
    const Index d = dims[static_cast<std::size_t>(t) % dims.size()];
    const bool sharp = t < n;
    const Effect a = sharp ? random_projection(d, static_cast<Index>(rng.below(d + 1)), rng)
                           : random_effect(d, rng);
    const Operation op = kraus_measuring(a, random_commuting_unitary(a, rng, tol), tol);
    r.check(tag(sharp ? "Kraus: sharp a repeatable" : "Kraus: non-sharp a not repeatable", d, t),
            [&] {
              const bool rep = is_repeatable(a, op, RepeatCriterion::def, tol);
              return rep == is_sharp(a, tol) && is_sharp(a, tol) == sharp;
            });
  }
  for (int t = 0; t < n; ++t) {
    const Index d = dims[static_cast<std::size_t>(t) % dims.size()];
    const ComplexMatrix v = random_unitary(d, rng);
    const Index k = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(d - 1)));
    const Effect a = with_unit_block(v, k, rng, tol);
    struct Case {
      std::string what;
      Effect a;
      State alpha;
      bool expected;
    };
    const std::vector<Case> cases = {
        {"Holevo: alpha supported in the 1-eigenspace", a, mixture_of_columns(v, 0, k, rng), true},
        {"Holevo: alpha leaves the 1-eigenspace", a, mixture_of_columns(v, 0, k + 1, rng), false},
        {"Holevo: pure alpha outside the 1-eigenspace", a, State::pure(v.col(k)), false},
        {"Holevo: a = 0", Effect::zero(d), random_state(d, rng), true}};
    for (const auto& c : cases) {
      r.check(tag(c.what, d, t), [&] {
        const bool rep =
            is_repeatable(c.a, holevo_operation(c.a, c.alpha, tol), RepeatCriterion::def, tol);
        return rep == fixes_support(c.a, c.alpha, tol) && rep == c.expected;
      });
    }
  }
}

void suite_thm34(Recorder& r) {
  const Tolerances& tol = r.tol();
  const std::vector<Index> dims = r.dims(2, 4);
  Rng rng = r.stream("thm34");
  const int n = r.scaled(100);
  for (int t = 0; t < n; ++t) {
    const Index d = dims[static_cast<std::size_t>(t) % dims.size()];
    const Effect a = random_effect(d, rng);
    const Effect b = random_codiagonal_effect(a, rng);
    r.check(tag("[a,b] = 0 gives b|(L^a, L^a')a = b", d, t), [&] {
      const Effect cond = condition_effect(b, a, luders_operation(a, tol),
                                           luders_operation(complement(a), tol), tol);
      return close(cond.matrix(), b.matrix(), tol.eq_tol);
    });
  }
  const int m = r.scaled(50);
  for (int t = 0; t < m; ++t) {
    const Index d = dims[static_cast<std::size_t>(t) % dims.size()];
    const Effect a = random_proper_projection(d, rng);
    const bool fixed = t % 2 == 0;
    const Effect b = fixed ? pinch(random_effect(d, rng), a, tol) : random_effect(d, rng);
    r.check(tag("sharp a: fixed point implies [a,b] = 0", d, t), [&] {
      const Effect cond = condition_effect(b, a, luders_operation(a, tol),
                                           luders_operation(complement(a), tol), tol);
      const bool is_fixed = close(cond.matrix(), b.matrix(), tol.eq_tol);
      const bool commute = max_abs(bracket(a.matrix(), b.matrix())) <= kBracketTol;
      return is_fixed == fixed && (!is_fixed || commute);
    });
  }
}

void suite_conditioning(Recorder& r) {
  const Tolerances& tol = r.tol();
  const double eps = tol.eq_tol;
  constexpr std::array<PairFlavor, 4> kFlavors = {PairFlavor::luders, PairFlavor::kraus,
                                                  PairFlavor::kraus_commuting, PairFlavor::holevo};
  for (const Index d : r.dims(2, 4)) {
    Rng rng = r.stream("conditioning", d);
    const int n = r.scaled(100);
    const Effect id = Effect::identity(d);
    for (int t = 0; t < n; ++t) {
      const PairFlavor flavor = kFlavors[static_cast<std::size_t>(t) % kFlavors.size()];
      const std::string name(flavor_name(flavor));
      const Effect a = random_effect(d, rng);
      const Effect ap = complement(a);
      const State alpha = random_state(d, rng);
      const State beta = random_state(d, rng);
      const MeasuringPair pair = measuring_pair(a, flavor, rng, alpha, beta, tol);
      auto cond = [&](const Effect& b) {
        return condition_effect(b, a, pair.op_a, pair.op_a_prime, tol);
      };
      const Effect b = random_effect(d, rng);
      const Effect c = random_effect_below(complement(b), rng);
      r.check(tag(name + ": I|a = I", d, t), [&] { return close(cond(id).matrix(), id.matrix(), eps); });
      r.check(tag(name + ": b'|a = (b|a)'", d, t), [&] {
        return close(cond(complement(b)).matrix(), complement(cond(b)).matrix(), eps);
      });
      r.check(tag(name + ": morphism on b perpendicular to c", d, t), [&] {
        const Effect bc(b.matrix() + c.matrix(), tol);
        return close(cond(bc).matrix(), cond(b).matrix() + cond(c).matrix(), eps);
      });
      r.check(tag(name + ": convex morphism", d, t), [&] {
        const double w = rng.uniform();
        const std::vector<double> ws = {w, 1.0 - w};
        const std::vector<Effect> es = {b, c};
        return close(cond(convex_combination(ws, es, tol)).matrix(),
                     w * cond(b).matrix() + (1.0 - w) * cond(c).matrix(), eps);
      });
      if (flavor == PairFlavor::holevo) {
        r.check(tag("Holevo: b|a = tr[(alpha - beta) b] a + tr(beta b) I", d, t), [&] {
          const double diff = trace_product(alpha.matrix() - beta.matrix(), b.matrix()).real();
          return close(cond(b).matrix(),
                       diff * a.matrix() + prob(beta, b, tol) * identity(d), eps);
        });
        r.check(tag("Holevo, alpha = beta: b|a = tr(alpha b) I", d, t), [&] {
          const Effect same = condition_effect(b, a, holevo_operation(a, alpha, tol),
                                               holevo_operation(ap, alpha, tol), tol);
          return close(same.matrix(), prob(alpha, b, tol) * identity(d), eps);
        });
        r.check(tag("Holevo: a|a = tr(alpha a) a + tr(beta a) a'", d, t), [&] {
          return close(cond(a).matrix(),
                       prob(alpha, a, tol) * a.matrix() + prob(beta, a, tol) * ap.matrix(), eps);
        });
      } else if (flavor != PairFlavor::kraus) {
        r.check(tag(name + ": a|a = a", d, t),
                [&] { return close(cond(a).matrix(), a.matrix(), eps); });
      }
      r.check(tag("channel and zero operation: b|(I, 0)I = I*(b)", d, t), [&] {
        const Operation channel = random_operation_measuring(id, rng, 2, tol);
        const Effect got = condition_effect(b, id, channel, zero_operation(d), tol);
        return close(got.matrix(), dual_apply(channel, b.matrix(), tol), eps);
      });
      r.check(tag("mismatched operations are rejected", d, t), [&] {
        const bool complement_mismatch = throws_kind(ErrorKind::ComplementMismatch, [&] {
          condition_effect(b, pair.op_a, luders_operation(b, tol), tol);
        });
        const bool wrong_effect = throws_kind(ErrorKind::WrongMeasuredEffect, [&] {
          condition_effect(b, b, pair.op_a, pair.op_a_prime, tol);
        });
        return complement_mismatch && wrong_effect;
      });
    }
  }
}

}  // namespace seqprod::detail
