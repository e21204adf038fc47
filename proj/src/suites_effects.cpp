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

#include <cmath>
#include <string>

#include "seqprod/error.hpp"
#include "suite_support.hpp"

namespace seqprod::detail {
namespace {

constexpr double kDualityTol = 1e-8;
constexpr double kBracketTol = 1e-8;
// Witnesses must miss the property by a margin far above rounding.
constexpr double kWitnessMargin = 1e-6;

std::string tag(std::string_view what, Index d, int t) {
  return std::string(what) + " (dim " + std::to_string(d) + ", trial " + std::to_string(t) + ")";
}

Json mat(const ComplexMatrix& m) { return to_json(m); }

Effect eff(const ComplexMatrix& m, const Tolerances& tol) { return Effect(hermitian_part(m), tol); }

Effect scaled(const Effect& a, double s) { return Effect(s * a.matrix()); }

Effect sum(const Effect& a, const Effect& b, const Tolerances& tol) {
  return Effect(a.matrix() + b.matrix(), tol);
}

/// 0: Lüders, 1: random Kraus family, 2: Holevo, 3: Kraus with commuting unitary.
Operation flavored_operation(const Effect& a, Rng& rng, int which, const Tolerances& tol) {
  switch (which % 4) {
    case 0:
      return luders_operation(a, tol);
    case 1:
      return random_operation_measuring(a, rng, 1 + static_cast<int>(rng.below(3)), tol);
    case 2:
      return holevo_operation(a, random_state(a.dim(), rng), tol);
    default:
      return kraus_measuring(a, random_commuting_unitary(a, rng, tol), tol);
  }
}

Effect luders_product(const Effect& a, const Effect& b, const Tolerances& tol) {
  return seq_product(luders_operation(a, tol), b, tol);
}

CommutatorResult luders_commutator(const Effect& a, const Effect& b, const Tolerances& tol) {
  return commutator(a, b, luders_operation(a, tol), luders_operation(b, tol), tol);
}

Effect holevo_product(const Effect& a, const State& alpha, const Effect& b, const Tolerances& tol) {
  return seq_product(holevo_operation(a, alpha, tol), b, tol);
}

CommutatorResult holevo_commutator(const Effect& a, const Effect& b, const State& alpha,
                                   const State& beta, const Tolerances& tol) {
  return commutator(a, b, holevo_operation(a, alpha, tol), holevo_operation(b, beta, tol), tol);
}

bool clearly_not_leq(const Effect& x, const Effect& y) {
  return min_eigenvalue(y.matrix() - x.matrix()) < -kWitnessMargin;
}

double bracket_norm(const Effect& a, const Effect& b) {
  return max_abs(bracket(a.matrix(), b.matrix()));
}

/// Effect diagonal in the basis v with the given diagonal.
Effect in_basis(const ComplexMatrix& v, const RealVector& d, const Tolerances& tol) {
  return eff(v * d.cast<Complex>().asDiagonal() * v.adjoint(), tol);
}

RealVector uniform_vector(Index d, Rng& rng, double lo = 0.0, double hi = 1.0) {
  RealVector out(d);
  for (Index i = 0; i < d; ++i) out(i) = rng.uniform(lo, hi);
  return out;
}

/// A pure state supported in the range of the projection p.
State pure_in(const Effect& p, Rng& rng) {
  ComplexVector v(p.dim());
  for (Index i = 0; i < p.dim(); ++i) v(i) = rng.complex_normal();
  ComplexVector w = p.matrix() * v;
  return State::pure(w / w.norm());
}

}  // namespace

void suite_duality(Recorder& r) {
  const Tolerances& tol = r.tol();
  for (const Index d : r.dims(2, 4)) {
    Rng rng = r.stream("duality", d);
    const int n = r.scaled(200);
    for (int t = 0; t < n; ++t) {
      const Effect a = random_effect(d, rng);
      const Operation op = flavored_operation(a, rng, t, tol);
      const State rho = random_state(d, rng, t % 2 == 1);
      const Effect b = random_effect(d, rng);
      r.check(tag("tr[rho I*(b)] = tr[I(rho) b]", d, t), [&] {
        const Complex lhs = trace_product(rho.matrix(), dual_apply(op, b.matrix(), tol));
        const ComplexMatrix out = seqprod::apply(op, rho);
        const Complex rhs = trace_product(out, b.matrix());
        return std::abs(lhs - rhs) <= kDualityTol && nonnegative(out, tol.psd_tol) &&
               out.trace().real() <= 1.0 + tol.eq_tol;
      });
    }
  }
}

void suite_seqprod_laws(Recorder& r) {
  const Tolerances& tol = r.tol();
  const double eps = tol.eq_tol;
  for (const Index d : r.dims(2, 4)) {
    Rng rng = r.stream("laws", d);
    const int n = r.scaled(200);
    const Effect id = Effect::identity(d);
    const Effect zero_effect = Effect::zero(d);
    for (int t = 0; t < n; ++t) {
      const Effect a = t % 5 == 4 ? random_proper_projection(d, rng) : random_effect(d, rng);
      const Operation op = flavored_operation(a, rng, t, tol);
      const Effect b = random_effect(d, rng);
      const Effect c = random_effect_below(complement(b), rng);
      r.check(tag("I measures a", d, t),
              [&] { return close(measured_effect(op, tol).matrix(), a.matrix(), eps); });
      r.check(tag("a[I]I = a", d, t),
              [&] { return close(seq_product(op, id, tol).matrix(), a.matrix(), eps); });
      r.check(tag("a[I]0 = 0", d, t),
              [&] { return max_abs(seq_product(op, zero_effect, tol).matrix()) <= eps; });
      const Effect ab = seq_product(op, b, tol);
      r.check(tag("a[I]b <= a", d, t), [&] { return leq(ab, a, tol); });
      r.check(tag("a[I]b + a[I]b' = a", d, t), [&] {
        return close(ab.matrix() + seq_product(op, complement(b), tol).matrix(), a.matrix(), eps);
      });
      r.check(tag("additivity on b perpendicular to c", d, t), [&] {
        const Effect bc = sum(b, c, tol);
        return perp(b, c, tol) &&
               close(seq_product(op, bc, tol).matrix(),
                     ab.matrix() + seq_product(op, c, tol).matrix(), eps);
      });
      r.check(tag("convexity", d, t), [&] {
        std::vector<double> w = {rng.uniform(), rng.uniform(), rng.uniform()};
        const double total = w[0] + w[1] + w[2];
        for (double& x : w) x /= total;
        const std::vector<Effect> es = {random_effect(d, rng), random_effect(d, rng),
                                        random_effect(d, rng)};
        const Effect mix = convex_combination(w, es, tol);
        ComplexMatrix expected = zero(d);
        for (std::size_t i = 0; i < es.size(); ++i) {
          expected += w[i] * seq_product(op, es[i], tol).matrix();
        }
        return close(seq_product(op, mix, tol).matrix(), expected, eps);
      });
      r.check(tag("0[I^0]a = 0", d, t), [&] {
        return max_abs(seq_product(zero_operation(d), a, tol).matrix()) <= eps &&
               max_abs(seq_product(luders_operation(zero_effect, tol), a, tol).matrix()) <= eps;
      });
    }
  }
}

void suite_luders(Recorder& r) {
  const Tolerances& tol = r.tol();
  const double eps = tol.eq_tol;
  for (const Index d : r.dims(2, 4)) {
    Rng rng = r.stream("luders", d);
    const int n = r.scaled(200);
    const Effect id = Effect::identity(d);
    for (int t = 0; t < n; ++t) {
      {
        const Effect a = random_effect(d, rng);
        const Effect b = random_effect(d, rng);
        const Effect c = random_effect_below(complement(b), rng);
        r.check(tag("(L1)", d, t), [&] {
          return close(luders_product(a, sum(b, c, tol), tol).matrix(),
                       luders_product(a, b, tol).matrix() + luders_product(a, c, tol).matrix(),
                       eps);
        });
        r.check(tag("(L2)", d, t),
                [&] { return close(luders_product(id, a, tol).matrix(), a.matrix(), eps); });
      }
      {
        const Effect p = random_proper_projection(d, rng);
        const Effect a = random_effect_below(p, rng);
        const Effect b = random_effect_below(complement(p), rng);
        r.check(tag("(L3)", d, t), [&] {
          const bool hypothesis = max_abs(luders_product(a, b, tol).matrix()) <= eps;
          return hypothesis && max_abs(luders_product(b, a, tol).matrix()) <= eps;
        });
      }
      {
        const Effect a = random_effect(d, rng);
        const Effect b = random_codiagonal_effect(a, rng);
        const Effect c = random_effect(d, rng);
        r.check(tag("(L4)", d, t), [&] {
          const bool hypothesis = luders_commutator(a, b, tol).vanishes;
          const bool complement_commutes = luders_commutator(a, complement(b), tol).vanishes;
          const Effect lhs = luders_product(a, luders_product(b, c, tol), tol);
          const Effect rhs = luders_product(luders_product(a, b, tol), c, tol);
          return hypothesis && complement_commutes && close(lhs.matrix(), rhs.matrix(), eps);
        });
      }
      {
        const Effect c = random_degenerate_effect(d, rng);
        const Effect a = pinch(random_effect(d, rng), c, tol);
        const Effect b = pinch(random_effect_below(complement(a), rng), c, tol);
        r.check(tag("(L5)", d, t), [&] {
          const bool hypothesis = luders_commutator(a, c, tol).vanishes &&
                                  luders_commutator(b, c, tol).vanishes && perp(a, b, tol);
          return hypothesis && luders_commutator(luders_product(a, b, tol), c, tol).vanishes &&
                 luders_commutator(sum(a, b, tol), c, tol).vanishes;
        });
      }
      {
        const Effect a = random_effect(d, rng);
        const Effect commuting = random_codiagonal_effect(a, rng);
        // Keep the non-commuting side clear of rounding: ||[a, b]|| > 1e-3.
        Effect generic = random_effect(d, rng);
        for (int k = 0; k < 100 && bracket_norm(a, generic) <= 1e-3; ++k) {
          generic = random_effect(d, rng);
        }
        r.check(tag("commutator vanishes iff ab = ba", d, t), [&] {
          const bool forward = luders_commutator(a, commuting, tol).vanishes &&
                               bracket_norm(a, commuting) <= kBracketTol;
          const bool backward = !luders_commutator(a, generic, tol).vanishes &&
                                bracket_norm(a, generic) > kBracketTol;
          return forward && backward;
        });
      }
    }
  }
}

void suite_thm21(Recorder& r) {
  const Tolerances& tol = r.tol();
  const double eps = tol.eq_tol;
  const std::vector<Index> dims = r.dims(2, 3);
  for (const Index d : dims) {
    Rng rng = r.stream("thm21", d);
    const int n = r.scaled(200);
    for (int t = 0; t < n; ++t) {
      const State alpha = random_state(d, rng, t % 3 == 0);
      {
        const Effect a = random_effect(d, rng);
        const Effect b = random_effect(d, rng);
        const Effect c = random_effect_below(complement(b), rng);
        r.check(tag("(H1)", d, t), [&] {
          return close(holevo_product(a, alpha, sum(b, c, tol), tol).matrix(),
                       holevo_product(a, alpha, b, tol).matrix() +
                           holevo_product(a, alpha, c, tol).matrix(),
                       eps);
        });
      }
      // (H5) on proportional triples a = s c, b = t c with s + t <= 1.
      {
        const Effect c = random_effect(d, rng);
        const double s = rng.uniform(0.05, 0.95);
        const double u = rng.uniform(0.05, 1.0) * (1.0 - s);
        const Effect a = scaled(c, s);
        const Effect b = scaled(c, u);
        r.check(tag("(H5) proportional", d, t), [&] {
          const bool hypothesis = holevo_commutator(a, c, alpha, alpha, tol).vanishes &&
                                  holevo_commutator(b, c, alpha, alpha, tol).vanishes;
          const Effect ab = holevo_product(a, alpha, b, tol);
          return hypothesis && holevo_commutator(ab, c, alpha, alpha, tol).vanishes &&
                 holevo_commutator(sum(a, b, tol), c, alpha, alpha, tol).vanishes;
        });
      }
      // (H5) with alpha orthogonal to the supports of a, b, c.
      {
        const Effect p = random_proper_projection(d, rng);
        const Effect q = complement(p);
        const State beta = pure_in(p, rng);
        const Effect c = random_effect_below(q, rng);
        const Effect a = random_effect_below(q, rng);
        const Effect b = random_effect_below(Effect(q.matrix() - a.matrix(), tol), rng);
        r.check(tag("(H5) orthogonal support", d, t), [&] {
          const bool hypothesis = holevo_commutator(a, c, beta, beta, tol).vanishes &&
                                  holevo_commutator(b, c, beta, beta, tol).vanishes;
          const Effect ab = holevo_product(a, beta, b, tol);
          return hypothesis && holevo_commutator(ab, c, beta, beta, tol).vanishes &&
                 holevo_commutator(sum(a, b, tol), c, beta, beta, tol).vanishes;
        });
      }
      {
        const Effect a = random_effect(d, rng);
        const Effect b = random_effect(d, rng);
        const Effect c = random_effect(d, rng);
        r.check(tag("iterated product associativity", d, t), [&] {
          const Effect lhs = holevo_product(a, alpha, holevo_product(b, alpha, c, tol), tol);
          const Effect rhs = holevo_product(holevo_product(a, alpha, b, tol), alpha, c, tol);
          return close(lhs.matrix(), rhs.matrix(), eps);
        });
      }
    }
  }

  r.search("(H2) fails: I[H(I,alpha)]a = tr(alpha a) I != a", dims,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect a = random_effect(d, rng);
             const State alpha = random_state(d, rng);
             const Effect v = holevo_product(Effect::identity(d), alpha, a, tol);
             if (max_abs_diff(v.matrix(), a.matrix()) <= kWitnessMargin) return std::nullopt;
             return Json{{"a", mat(a.matrix())},
                         {"alpha", mat(alpha.matrix())},
                         {"product", mat(v.matrix())}};
           });
  r.search("(H3) fails: orthogonal projections", dims,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const ComplexMatrix u = random_unitary(d, rng);
             const State alpha = State::pure(u.col(0));
             const Effect a(alpha.matrix(), tol);
             const Effect b(outer(u.col(1)), tol);
             const Effect ab = holevo_product(a, alpha, b, tol);
             const Effect ba = holevo_product(b, alpha, a, tol);
             if (max_abs(ab.matrix()) > eps || max_abs(ba.matrix()) <= kWitnessMargin) {
               return std::nullopt;
             }
             return Json{{"a", mat(a.matrix())},
                         {"b", mat(b.matrix())},
                         {"alpha", mat(alpha.matrix())},
                         {"b_then_a", mat(ba.matrix())}};
           });
  r.search("(H4) fails: C(a,b) = 0 but C(a,b') != 0", dims,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect a = random_effect(d, rng);
             const State alpha = random_state(d, rng);
             const Effect b = scaled(a, rng.uniform(0.1, 0.9));
             const double ta = prob(alpha, a, tol);
             if (!holevo_commutator(a, b, alpha, alpha, tol).vanishes) return std::nullopt;
             if (max_abs_diff(a.matrix(), ta * identity(d)) <= kWitnessMargin) return std::nullopt;
             const CommutatorResult cb = holevo_commutator(a, complement(b), alpha, alpha, tol);
             if (max_abs(cb.value) <= kWitnessMargin) return std::nullopt;
             return Json{{"a", mat(a.matrix())},
                         {"b", mat(b.matrix())},
                         {"alpha", mat(alpha.matrix())},
                         {"commutator_with_complement", mat(cb.value)}};
           });
}

void suite_kraus_counterparts(Recorder& r) {
  const Tolerances& tol = r.tol();
  const double eps = tol.eq_tol;
  const std::vector<Index> dims = r.dims(2, 3);
  for (const Index d : dims) {
    Rng rng = r.stream("kraus", d);
    const int n = r.scaled(200);
    for (int t = 0; t < n; ++t) {
      {
        const Effect a = random_effect(d, rng);
        const Operation k = random_kraus_measuring(a, rng, tol);
        const Effect b = random_effect(d, rng);
        const Effect c = random_effect_below(complement(b), rng);
        r.check(tag("(L1) counterpart", d, t), [&] {
          return close(seq_product(k, sum(b, c, tol), tol).matrix(),
                       seq_product(k, b, tol).matrix() + seq_product(k, c, tol).matrix(), eps);
        });
        r.check(tag("C(a, 0; K, zero) = 0", d, t), [&] {
          return commutator(a, Effect::zero(d), k, zero_operation(d), tol).vanishes;
        });
      }
      {
        // K = U a^{1/2} with [U, a] = 0, so K = a^{1/2} U as the symmetry argument needs.
        const Effect p = random_proper_projection(d, rng);
        const Effect a = random_effect_below(p, rng);
        const Effect b = random_effect_below(complement(p), rng);
        const Operation k = kraus_measuring(a, random_commuting_unitary(a, rng, tol), tol);
        const Operation j = kraus_measuring(b, random_commuting_unitary(b, rng, tol), tol);
        r.check(tag("(L3) counterpart, commuting unitaries", d, t), [&] {
          const bool hypothesis = max_abs(seq_product(k, b, tol).matrix()) <= eps;
          return hypothesis && max_abs(seq_product(j, a, tol).matrix()) <= eps;
        });
      }
    }
  }

  const std::vector<Index> small = r.dims(2, 2);
  r.search("(L2) counterpart fails: unitary K with K* a K != a", small,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect a = random_effect(d, rng);
             const ComplexMatrix u = random_unitary(d, rng);
             const Operation k = kraus_operation(u, tol);
             const Effect v = seq_product(k, a, tol);
             if (!is_channel(k, tol) || max_abs_diff(v.matrix(), a.matrix()) <= kWitnessMargin) {
               return std::nullopt;
             }
             return Json{{"a", mat(a.matrix())}, {"K", mat(u)}, {"product", mat(v.matrix())}};
           });
  r.search("(L4) counterpart fails: C(a,0) = 0 but C(a,I) != 0", small,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect a = random_effect(d, rng);
             const Operation k = random_kraus_measuring(a, rng, tol);
             const ComplexMatrix u = random_unitary(d, rng);
             const Operation j = kraus_operation(u, tol);
             if (!commutator(a, Effect::zero(d), k, zero_operation(d), tol).vanishes) {
               return std::nullopt;
             }
             const CommutatorResult ci = commutator(a, Effect::identity(d), k, j, tol);
             if (max_abs(ci.value) <= kWitnessMargin) return std::nullopt;
             return Json{{"a", mat(a.matrix())},
                         {"K", mat(k.kraus().front())},
                         {"J", mat(u)},
                         {"commutator_with_identity", mat(ci.value)}};
           });
  // General K = U a^{1/2}: a[K]b = a^{1/2} U* b U a^{1/2} vanishes once U* b U is
  // orthogonal to a, which says nothing about b^{1/2} a b^{1/2}.
  r.search("(L3) counterpart fails for a non-commuting unitary", small,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect p = random_proper_projection(d, rng);
             const Effect a = random_effect_below(p, rng);
             const ComplexMatrix u = random_unitary(d, rng);
             const Effect b(hermitian_part(u * random_effect_below(complement(p), rng).matrix() *
                                           u.adjoint()),
                            tol);
             const Operation k = kraus_operation(u * sqrt_psd(a.matrix(), tol), tol);
             const Operation j = luders_operation(b, tol);
             const Effect ab = seq_product(k, b, tol);
             const Effect ba = seq_product(j, a, tol);
             if (max_abs(ab.matrix()) > eps || max_abs(ba.matrix()) <= kWitnessMargin) {
               return std::nullopt;
             }
             return Json{{"a", mat(a.matrix())},
                         {"b", mat(b.matrix())},
                         {"K", mat(k.kraus().front())},
                         {"a_K_b", mat(ab.matrix())},
                         {"b_L_a", mat(ba.matrix())}};
           });
  // Search space: co-diagonal a, b, c with a[K]b forced to a repeated eigenvalue,
  // each effect x measured by U_x x^{1/2} with U_x a random unitary commuting with x.
  r.search("(L5) counterpart fails", small,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const ComplexMatrix v = random_unitary(d, rng);
             RealVector da = uniform_vector(d, rng, 0.3, 1.0);
             const double k = rng.uniform(0.05, 1.0) * std::min(da(0), da(1));
             RealVector db = uniform_vector(d, rng);
             db(0) = k / da(0);
             db(1) = k / da(1);
             const Effect a = in_basis(v, da, tol);
             const Effect b = in_basis(v, db, tol);
             const Effect c = in_basis(v, uniform_vector(d, rng), tol);
             const Operation ka = kraus_measuring(a, random_commuting_unitary(a, rng, tol), tol);
             const Operation kb = kraus_measuring(b, random_commuting_unitary(b, rng, tol), tol);
             const Operation kc = kraus_measuring(c, random_commuting_unitary(c, rng, tol), tol);
             if (!commutator(a, c, ka, kc, tol).vanishes || !commutator(b, c, kb, kc, tol).vanishes) {
               return std::nullopt;
             }
             const Effect ab = seq_product(ka, b, tol);
             const Operation kab = kraus_measuring(ab, random_commuting_unitary(ab, rng, tol), tol);
             const CommutatorResult cab = commutator(ab, c, kab, kc, tol);
             if (max_abs(cab.value) <= kWitnessMargin) return std::nullopt;
             return Json{{"a", mat(a.matrix())},
                         {"b", mat(b.matrix())},
                         {"c", mat(c.matrix())},
                         {"K_ab", mat(kab.kraus().front())},
                         {"K_c", mat(kc.kraus().front())},
                         {"commutator", mat(cab.value)}};
           },
           /*required=*/false);
}

void suite_example1(Recorder& r) {
  const Tolerances& tol = r.tol();
  const std::vector<Index> dims = r.dims(2, 3);
  for (const Index d : dims) {
    Rng rng = r.stream("example1", d);
    const int n = r.scaled(200);
    for (int t = 0; t < n; ++t) {
      const Effect c = random_effect(d, rng);
      const Operation op = flavored_operation(c, rng, t, tol);
      const Effect b = random_effect(d, rng);
      const Effect a = random_effect_below(b, rng);
      r.check(tag("same operation: a <= b gives c[I]a <= c[I]b", d, t),
              [&] { return leq(seq_product(op, a, tol), seq_product(op, b, tol), tol); });
    }
  }

  r.search("Holevo state change: c[H(c,alpha)]a not <= c[H(c,beta)]a", dims,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect a = random_effect(d, rng);
             const Effect c = random_effect(d, rng);
             const State alpha = random_state(d, rng);
             const State beta = random_state(d, rng);
             const Effect lhs = holevo_product(c, alpha, a, tol);
             const Effect rhs = holevo_product(c, beta, a, tol);
             if (!clearly_not_leq(lhs, rhs)) return std::nullopt;
             return Json{{"a", mat(a.matrix())},
                         {"c", mat(c.matrix())},
                         {"alpha", mat(alpha.matrix())},
                         {"beta", mat(beta.matrix())}};
           });
  r.search("Holevo: a <= b but a[H(a,alpha)]c not <= b[H(b,beta)]c", dims,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect b = random_effect(d, rng);
             const Effect a = random_effect_below(b, rng);
             const Effect c = random_effect(d, rng);
             const State alpha = random_state(d, rng);
             const State beta = random_state(d, rng);
             if (!leq(a, b, tol)) return std::nullopt;
             if (!clearly_not_leq(holevo_product(a, alpha, c, tol), holevo_product(b, beta, c, tol))) {
               return std::nullopt;
             }
             return Json{{"a", mat(a.matrix())},
                         {"b", mat(b.matrix())},
                         {"c", mat(c.matrix())},
                         {"alpha", mat(alpha.matrix())},
                         {"beta", mat(beta.matrix())}};
           });
  r.search("Holevo: a[H(a,alpha)]c != a[H(a,beta)]c", dims,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect a = random_effect(d, rng);
             const Effect c = random_effect(d, rng);
             const State alpha = random_state(d, rng);
             const State beta = random_state(d, rng);
             const Effect lhs = holevo_product(a, alpha, c, tol);
             const Effect rhs = holevo_product(a, beta, c, tol);
             if (max_abs_diff(lhs.matrix(), rhs.matrix()) <= kWitnessMargin) return std::nullopt;
             return Json{{"a", mat(a.matrix())},
                         {"c", mat(c.matrix())},
                         {"alpha", mat(alpha.matrix())},
                         {"beta", mat(beta.matrix())}};
           });
  // Search space: b random, a = b^{1/2} e b^{1/2} (so a <= b), c a rank-one projection.
  r.search("Lueders: a <= b but a^{1/2} c a^{1/2} not <= b^{1/2} c b^{1/2}", dims,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect b = random_effect(d, rng);
             const Effect a = random_effect_below(b, rng);
             const Effect c = random_projection(d, 1, rng);
             if (!leq(a, b, tol)) return std::nullopt;
             const Effect lhs = luders_product(a, c, tol);
             const Effect rhs = luders_product(b, c, tol);
             if (!clearly_not_leq(lhs, rhs)) return std::nullopt;
             return Json{{"a", mat(a.matrix())},
                         {"b", mat(b.matrix())},
                         {"c", mat(c.matrix())},
                         {"gap_min_eigenvalue", min_eigenvalue(rhs.matrix() - lhs.matrix())}};
           });
}

void suite_example2(Recorder& r) {
  const Tolerances& tol = r.tol();
  const double eps = tol.eq_tol;
  const std::vector<Index> dims = r.dims(2, 3);
  for (const Index d : dims) {
    Rng rng = r.stream("example2", d);
    const int n = r.scaled(100);
    for (int t = 0; t < n; ++t) {
      const Effect c = random_effect(d, rng);
      const Effect a = random_codiagonal_effect(c, rng);
      const Effect b = random_codiagonal_effect(c, rng);
      const Effect ab = luders_product(a, b, tol);
      const State alpha = random_state(d, rng);
      r.check(tag("all Lueders: commutation passes to a o b", d, t), [&] {
        const bool hypothesis =
            luders_commutator(c, a, tol).vanishes && luders_commutator(c, b, tol).vanishes;
        return hypothesis && luders_commutator(c, ab, tol).vanishes;
      });
      r.check(tag("Holevo last: C = [c - tr(alpha c) I] a^{1/2} b a^{1/2}", d, t), [&] {
        const CommutatorResult cr =
            commutator(c, ab, luders_operation(c, tol), holevo_operation(ab, alpha, tol), tol);
        const ComplexMatrix expected =
            (c.matrix() - prob(alpha, c, tol) * identity(d)) * ab.matrix();
        return close(cr.value, expected, eps);
      });
      // Forward direction of the vanishing conditions.
      {
        const ComplexMatrix v = random_unitary(d, rng);
        RealVector da = uniform_vector(d, rng);
        RealVector db = uniform_vector(d, rng);
        const Index split = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(d - 1)));
        for (Index i = 0; i < d; ++i) (i < split ? db : da)(i) = 0.0;
        const Effect ao = in_basis(v, da, tol);
        const Effect bo = in_basis(v, db, tol);
        const Effect co = in_basis(v, uniform_vector(d, rng), tol);
        const Effect abo = luders_product(ao, bo, tol);
        r.check(tag("Holevo last vanishes when a^{1/2} b a^{1/2} = 0", d, t), [&] {
          return max_abs(abo.matrix()) <= eps &&
                 commutator(co, abo, luders_operation(co, tol), holevo_operation(abo, alpha, tol),
                            tol)
                     .vanishes;
        });
        const Effect cs = scaled(Effect::identity(d), rng.uniform(0.1, 1.0));
        r.check(tag("Holevo last vanishes when c = tr(alpha c) I", d, t), [&] {
          return commutator(cs, ab, luders_operation(cs, tol), holevo_operation(ab, alpha, tol), tol)
              .vanishes;
        });
      }
      // All Holevo, on a = s c, b = u c with alpha = beta = gamma.
      {
        const Effect ch = random_effect(d, rng);
        const Effect ah = scaled(ch, rng.uniform(0.1, 1.0));
        const Effect bh = scaled(ch, rng.uniform(0.1, 1.0));
        const State beta = random_state(d, rng);
        const State delta = random_state(d, rng);
        r.check(tag("all Holevo: closed form tr(beta b) tr[(beta - delta) c] a", d, t), [&] {
          const bool hypothesis = holevo_commutator(ch, ah, beta, beta, tol).vanishes &&
                                  holevo_commutator(ch, bh, beta, beta, tol).vanishes;
          const Effect prod = holevo_product(ah, beta, bh, tol);
          const ComplexMatrix value = holevo_commutator(ch, prod, beta, delta, tol).value;
          const double coeff = prob(beta, bh, tol) * trace_product(beta.matrix() - delta.matrix(),
                                                                   ch.matrix()).real();
          return hypothesis && close(value, coeff * ah.matrix(), eps);
        });
        r.check(tag("all Holevo vanishes when delta = beta", d, t), [&] {
          const Effect prod = holevo_product(ah, beta, bh, tol);
          return holevo_commutator(ch, prod, beta, beta, tol).vanishes;
        });
        const Effect p = random_proper_projection(d, rng);
        const State beta_o = pure_in(p, rng);
        const Effect co = random_effect_below(complement(p), rng);
        const Effect ao = scaled(co, rng.uniform(0.1, 1.0));
        const Effect bo = scaled(co, rng.uniform(0.1, 1.0));
        r.check(tag("all Holevo vanishes when beta b = 0", d, t), [&] {
          const bool hypothesis = holevo_commutator(co, ao, beta_o, beta_o, tol).vanishes &&
                                  holevo_commutator(co, bo, beta_o, beta_o, tol).vanishes;
          const Effect prod = holevo_product(ao, beta_o, bo, tol);
          return hypothesis && holevo_commutator(co, prod, beta_o, delta, tol).vanishes;
        });
      }
    }
  }

  r.search("Lueders then Holevo: C(c, a o b; L^c, H) != 0", dims,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect c = random_effect(d, rng);
             const Effect a = random_codiagonal_effect(c, rng);
             const Effect b = random_codiagonal_effect(c, rng);
             const State alpha = random_state(d, rng);
             if (!luders_commutator(c, a, tol).vanishes || !luders_commutator(c, b, tol).vanishes) {
               return std::nullopt;
             }
             const Effect ab = luders_product(a, b, tol);
             const CommutatorResult cr =
                 commutator(c, ab, luders_operation(c, tol), holevo_operation(ab, alpha, tol), tol);
             if (max_abs(cr.value) <= kWitnessMargin) return std::nullopt;
             return Json{{"a", mat(a.matrix())},
                         {"b", mat(b.matrix())},
                         {"c", mat(c.matrix())},
                         {"alpha", mat(alpha.matrix())},
                         {"commutator", mat(cr.value)}};
           });
  r.search("all Holevo: C(c, a[J]b; I, L) != 0", dims,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect c = random_effect(d, rng);
             const Effect a = scaled(c, rng.uniform(0.1, 1.0));
             const Effect b = scaled(c, rng.uniform(0.1, 1.0));
             const State beta = random_state(d, rng);
             const State delta = random_state(d, rng);
             if (!holevo_commutator(c, a, beta, beta, tol).vanishes ||
                 !holevo_commutator(c, b, beta, beta, tol).vanishes) {
               return std::nullopt;
             }
             const Effect prod = holevo_product(a, beta, b, tol);
             const CommutatorResult cr = holevo_commutator(c, prod, beta, delta, tol);
             if (max_abs(cr.value) <= kWitnessMargin) return std::nullopt;
             return Json{{"a", mat(a.matrix())},
                         {"b", mat(b.matrix())},
                         {"c", mat(c.matrix())},
                         {"alpha_beta_gamma", mat(beta.matrix())},
                         {"delta", mat(delta.matrix())},
                         {"commutator", mat(cr.value)}};
           });
}

void suite_example3(Recorder& r) {
  const Tolerances& tol = r.tol();
  const double eps = tol.eq_tol;
  const std::vector<Index> dims = r.dims(2, 3);
  for (const Index d : dims) {
    Rng rng = r.stream("example3", d);
    const int n = r.scaled(100);
    for (int t = 0; t < n; ++t) {
      {
        const Effect c = random_degenerate_effect(d, rng);
        const Effect a = pinch(random_effect(d, rng), c, tol);
        const Effect b = pinch(random_effect_below(complement(a), rng), c, tol);
        r.check(tag("all Lueders: commutation passes to a + b", d, t), [&] {
          const bool hypothesis =
              luders_commutator(c, a, tol).vanishes && luders_commutator(c, b, tol).vanishes;
          return hypothesis && luders_commutator(c, sum(a, b, tol), tol).vanishes;
        });
      }
      {
        const Effect c = random_effect(d, rng);
        const double s = rng.uniform(0.05, 0.95);
        const Effect a = scaled(c, s);
        const Effect b = scaled(c, rng.uniform(0.05, 1.0) * (1.0 - s));
        const State beta = random_state(d, rng);
        const State delta = random_state(d, rng);
        const Effect ab = sum(a, b, tol);
        r.check(tag("all Holevo: closed form tr[(beta-delta)c] a - tr[(gamma-delta)c] b", d, t), [&] {
          const bool hypothesis = holevo_commutator(c, a, beta, beta, tol).vanishes &&
                                  holevo_commutator(c, b, beta, beta, tol).vanishes;
          // beta = gamma here, so both coefficients coincide.
          const double coeff =
              trace_product(beta.matrix() - delta.matrix(), c.matrix()).real();
          const ComplexMatrix expected = coeff * a.matrix() + coeff * b.matrix();
          return hypothesis &&
                 close(holevo_commutator(c, ab, beta, delta, tol).value, expected, eps);
        });
        r.check(tag("all Holevo vanishes when delta = beta = gamma", d, t),
                [&] { return holevo_commutator(c, ab, beta, beta, tol).vanishes; });
      }
    }
  }

  r.search("all Holevo: C(c, a + b; I, L) != 0", dims,
           [&](Index d, Rng& rng) -> std::optional<Json> {
             const Effect c = random_effect(d, rng);
             const double s = rng.uniform(0.05, 0.95);
             const Effect a = scaled(c, s);
             const Effect b = scaled(c, rng.uniform(0.05, 1.0) * (1.0 - s));
             const State beta = random_state(d, rng);
             const State delta = random_state(d, rng);
             if (!holevo_commutator(c, a, beta, beta, tol).vanishes ||
                 !holevo_commutator(c, b, beta, beta, tol).vanishes) {
               return std::nullopt;
             }
             const CommutatorResult cr = holevo_commutator(c, sum(a, b, tol), beta, delta, tol);
             if (max_abs(cr.value) <= kWitnessMargin) return std::nullopt;
             // The expansion is tr[(beta-delta)c] a + tr[(gamma-delta)c] b; the variant
             // with a minus sign between the terms is recorded for comparison.
             const double coeff = trace_product(beta.matrix() - delta.matrix(), c.matrix()).real();
             const ComplexMatrix minus_form = coeff * a.matrix() - coeff * b.matrix();
             return Json{{"minus_form_deviation", max_abs_diff(cr.value, minus_form)},
                         {"a", mat(a.matrix())},
                         {"b", mat(b.matrix())},
                         {"c", mat(c.matrix())},
                         {"alpha_beta_gamma", mat(beta.matrix())},
                         {"delta", mat(delta.matrix())},
                         {"commutator", mat(cr.value)}};
           });
}

void suite_example4(Recorder& r) {
  const Tolerances& tol = r.tol();
  constexpr double kExact = 1e-12;
  ComplexMatrix a = zero(2);
  a(0, 0) = 1.0;
  a(1, 1) = 0.5;
  ComplexMatrix b = zero(2);
  b(1, 1) = 1.0;
  ComplexMatrix j = zero(2);
  j(0, 0) = 1.0;
  j(1, 1) = 1.0 / std::sqrt(2.0);
  ComplexMatrix k = zero(2);
  k(0, 1) = 1.0;
  ComplexMatrix expected = zero(2);
  expected(1, 1) = -0.5;

  const Effect ea(a, tol);
  const Effect eb(b, tol);
  const Operation opj = kraus_operation(j, tol);
  const Operation opk = kraus_operation(k, tol);
  r.expect(max_abs(bracket(a, b)) == 0.0, "ab - ba = 0");
  r.check("J measures a", [&] { return close(measured_effect(opj, tol).matrix(), a, kExact); });
  r.check("K measures b", [&] { return close(measured_effect(opk, tol).matrix(), b, kExact); });
  CommutatorResult cr;
  r.check("C(a,b;J,K) = diag(0, -1/2)", [&] {
    cr = commutator(ea, eb, opj, opk, tol);
    return close(cr.value, expected, kExact) && !cr.vanishes;
  });
  r.witness("C(a,b;J,K)", Json{{"a", mat(a)},
                               {"b", mat(b)},
                               {"J", mat(j)},
                               {"K", mat(k)},
                               {"commutator", mat(cr.value)}});
}

}  // namespace seqprod::detail
