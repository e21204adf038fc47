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

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "seqprod/error.hpp"
#include "suite_support.hpp"

namespace seqprod::detail {
namespace {

constexpr double kExact = 1e-10;
constexpr double kSum = 1e-9;
constexpr double kBracketTol = 1e-8;

std::string tag(std::string_view what, Index d, int t) {
  return std::string(what) + " (dim " + std::to_string(d) + ", trial " + std::to_string(t) + ")";
}

enum class InstrFlavor { luders, holevo, kraus };
constexpr std::array<InstrFlavor, 3> kInstrFlavors = {InstrFlavor::luders, InstrFlavor::holevo,
                                                      InstrFlavor::kraus};

std::string_view flavor_name(InstrFlavor f) {
  switch (f) {
    case InstrFlavor::luders:
      return "Lueders";
    case InstrFlavor::holevo:
      return "Holevo";
    case InstrFlavor::kraus:
      return "Kraus";
  }
  return "?";
}

struct Built {
  Observable a;
  Instrument instr;
  std::vector<State> alphas;
  std::vector<ComplexMatrix> kraus;
};

Built build(InstrFlavor flavor, Index d, std::size_t n, Rng& rng, const Tolerances& tol) {
  switch (flavor) {
    case InstrFlavor::luders: {
      Observable a = random_observable(d, n, rng, tol);
      Instrument instr = luders_instrument(a, tol);
      return {std::move(a), std::move(instr), {}, {}};
    }
    case InstrFlavor::holevo: {
      Observable a = random_observable(d, n, rng, tol);
      std::vector<State> alphas;
      for (std::size_t x = 0; x < n; ++x) alphas.push_back(random_state(d, rng, x % 2 == 0));
      Instrument instr = holevo_instrument(a, alphas, tol);
      return {std::move(a), std::move(instr), std::move(alphas), {}};
    }
    case InstrFlavor::kraus: {
      std::vector<ComplexMatrix> ks = random_kraus_family(d, n, rng);
      Instrument instr = kraus_instrument(ks, tol);
      Observable a = measured_observable(instr, tol);
      return {std::move(a), std::move(instr), {}, std::move(ks)};
    }
  }
  throw Error(ErrorKind::InvariantViolation, "unknown instrument flavor");
}

bool same_effects(const Observable& x, const Observable& y, double eps) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!close(x.effects()[i].matrix(), y.effects()[i].matrix(), eps)) return false;
  }
  return true;
}

ComplexMatrix effect_sum(const std::vector<Effect>& es) {
  ComplexMatrix out = zero(es.front().dim());
  for (const auto& e : es) out += e.matrix();
  return out;
}

std::size_t outcome_count(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

}  // namespace

void suite_obs_marginals(Recorder& r) {
  const Tolerances& tol = r.tol();
  for (const InstrFlavor flavor : kInstrFlavors) {
    const std::string name(flavor_name(flavor));
    for (const Index d : r.dims(2, 3)) {
      Rng rng = r.stream("marginals " + name, d);
      const int n = r.scaled(100);
      for (int t = 0; t < n; ++t) {
        const Built built = build(flavor, d, outcome_count(rng, 3, 4), rng, tol);
        const Observable b = random_observable(d, outcome_count(rng, 3, 4), rng, tol);
        const BiObservable joint = seq_product_obs(built.instr, b, tol);
        const Observable cond = conditioned_obs(b, built.instr, tol);
        r.check(tag(name + ": joint effects sum to I", d, t), [&] {
          return close(effect_sum(joint.effects()), identity(d), kSum);
        });
        r.check(tag(name + ": first marginal is the measured observable", d, t), [&] {
          return same_effects(marginal(joint, Marginal::first, tol), built.a, kExact);
        });
        r.check(tag(name + ": second marginal is B|(I)A", d, t), [&] {
          return same_effects(marginal(joint, Marginal::second, tol), cond, kExact);
        });
        r.check(tag(name + ": joint closed form", d, t), [&] {
          for (std::size_t x = 0; x < built.a.size(); ++x) {
            const ComplexMatrix& ax = built.a.effects()[x].matrix();
            for (std::size_t y = 0; y < b.size(); ++y) {
              const ComplexMatrix& by = b.effects()[y].matrix();
              ComplexMatrix expected;
              if (flavor == InstrFlavor::luders) {
                const ComplexMatrix root = sqrt_psd(ax, tol);
                expected = root * by * root;
              } else if (flavor == InstrFlavor::holevo) {
                expected = trace_product(built.alphas[x].matrix(), by).real() * ax;
              } else {
                expected = built.kraus[x].adjoint() * by * built.kraus[x];
              }
              if (!close(joint.at(x, y).matrix(), expected, kExact)) return false;
            }
          }
          return true;
        });
        r.check(tag(name + ": joint certifies coexistence of A and B|(I)A", d, t), [&] {
          std::vector<Effect> mixed = built.a.effects();
          const Effect avg(0.5 * (mixed[0].matrix() + mixed[1].matrix()), tol);
          mixed[0] = avg;
          mixed[1] = avg;
          const Observable perturbed(built.a.outcomes(), mixed, tol);
          return coexist_via_joint(joint, built.a, cond, tol) &&
                 !coexist_via_joint(joint, perturbed, cond, tol);
        });
      }
    }
  }
}

void suite_obs_distribution(Recorder& r) {
  const Tolerances& tol = r.tol();
  for (const Index d : r.dims(2, 4)) {
    Rng rng = r.stream("distribution", d);
    const int n = r.scaled(100);
    {
      const Observable trivial({Label{"all"}}, {Effect::identity(d)}, tol);
      const auto dist = distribution(random_state(d, rng), trivial, tol);
      r.expect(dist.size() == 1 && std::abs(dist[0].second - 1.0) <= kSum,
               tag("trivial observable has distribution [1]", d, 0));
    }
    for (int t = 0; t < n; ++t) {
      const State rho = random_state(d, rng, t % 2 == 0);
      const InstrFlavor flavor = kInstrFlavors[static_cast<std::size_t>(t) % kInstrFlavors.size()];
      const std::string name(flavor_name(flavor));
      const Built built = build(flavor, d, outcome_count(rng, 2, 4), rng, tol);
      r.check(tag("observable distribution is a probability distribution", d, t), [&] {
        double total = 0.0;
        for (const auto& [label, p] : distribution(rho, built.a, tol)) {
          if (p < -tol.eq_tol) return false;
          total += p;
        }
        return std::abs(total - 1.0) <= kSum;
      });
      r.check(tag(name + ": instrument distribution sums to 1", d, t), [&] {
        double total = 0.0;
        for (const auto& [label, p] : distribution(rho, built.instr)) {
          if (p < -tol.eq_tol) return false;
          total += p;
        }
        return std::abs(total - 1.0) <= kSum;
      });
      r.check(tag(name + ": instrument measures its observable", d, t), [&] {
        const auto probs = distribution(rho, built.a, tol);
        const auto inst = distribution(rho, built.instr);
        for (std::size_t x = 0; x < probs.size(); ++x) {
          if (std::abs(probs[x].second - inst[x].second) > kSum) return false;
        }
        return same_effects(measured_observable(built.instr, tol), built.a, kExact);
      });
      r.check(tag("subset effects", d, t), [&] {
        const auto& labels = built.a.outcomes();
        std::vector<Label> picked;
        std::vector<Label> rest;
        for (const auto& l : labels) (rng.uniform() < 0.5 ? picked : rest).push_back(l);
        const Effect full = subset_effect(built.a, labels, tol);
        const Effect none = subset_effect(built.a, std::vector<Label>{}, tol);
        const Effect part = subset_effect(built.a, picked, tol);
        const Effect other = subset_effect(built.a, rest, tol);
        return close(full.matrix(), identity(d), kSum) && max_abs(none.matrix()) == 0.0 &&
               close(part.matrix(), identity(d) - other.matrix(), kSum);
      });
    }
  }
}

void suite_post_processing(Recorder& r) {
  const Tolerances& tol = r.tol();
  for (const Index d : r.dims(2, 4)) {
    Rng rng = r.stream("post-processing", d);
    const int n = r.scaled(100);
    for (int t = 0; t < n; ++t) {
      const std::size_t na = outcome_count(rng, 2, 4);
      const Observable a = random_observable(d, na, rng, tol);
      const Observable b = random_observable(d, outcome_count(rng, 2, 4), rng, tol);
      std::vector<State> alphas;
      for (std::size_t x = 0; x < na; ++x) alphas.push_back(random_state(d, rng, x % 2 == 1));
      r.check(tag("transition matrix is row-stochastic", d, t), [&] {
        const auto tm = transition_matrix(b, alphas, tol);
        for (const auto& row : tm) {
          double total = 0.0;
          for (const double v : row) {
            if (v < -tol.eq_tol || v > 1.0 + tol.eq_tol) return false;
            total += v;
          }
          if (std::abs(total - 1.0) > kSum) return false;
        }
        return tm.size() == na;
      });
      r.check(tag("(B|H A)_y = sum_x tr(alpha_x B_y) A_x", d, t), [&] {
        const auto tm = transition_matrix(b, alphas, tol);
        const Observable cond = conditioned_obs(b, holevo_instrument(a, alphas, tol), tol);
        for (std::size_t y = 0; y < b.size(); ++y) {
          ComplexMatrix expected = zero(d);
          for (std::size_t x = 0; x < na; ++x) expected += tm[x][y] * a.effects()[x].matrix();
          if (!close(cond.effects()[y].matrix(), expected, kExact)) return false;
        }
        return true;
      });
      r.check(tag("shared alpha: (B|H A)_y = tr(alpha B_y) I", d, t), [&] {
        const std::vector<State> same(na, alphas.front());
        const Observable cond = conditioned_obs(b, holevo_instrument(a, same, tol), tol);
        for (std::size_t y = 0; y < b.size(); ++y) {
          const double p = prob(alphas.front(), b.effects()[y], tol);
          if (!close(cond.effects()[y].matrix(), p * identity(d), kExact)) return false;
        }
        return true;
      });
      r.check(tag("pure alpha, basis B: Born rule row", d, t), [&] {
        const ComplexMatrix v = random_unitary(d, rng);
        std::vector<Effect> basis;
        for (Index y = 0; y < d; ++y) basis.emplace_back(outer(v.col(y)), tol);
        const Observable sharp_b(default_labels(static_cast<std::size_t>(d)), basis, tol);
        ComplexVector phi(d);
        for (Index i = 0; i < d; ++i) phi(i) = rng.complex_normal();
        phi /= phi.norm();
        const std::vector<State> pure = {State::pure(phi)};
        const auto tm = transition_matrix(sharp_b, pure, tol);
        for (Index y = 0; y < d; ++y) {
          const double born = std::norm(v.col(y).dot(phi));
          if (std::abs(tm[0][static_cast<std::size_t>(y)] - born) > kExact) return false;
        }
        return true;
      });
      r.check(tag("sharp A: Holevo-conditioned effects commute", d, t), [&] {
        const std::size_t ns = std::min<std::size_t>(na, static_cast<std::size_t>(d));
        const Observable sa = random_sharp_observable(d, ns, rng, tol);
        const std::vector<State> states(alphas.begin(), alphas.begin() + static_cast<long>(ns));
        const Instrument instr = holevo_instrument(sa, states, tol);
        const Observable cb = conditioned_obs(b, instr, tol);
        const Observable cc = conditioned_obs(a, instr, tol);
        for (const auto& e : cb.effects()) {
          for (const auto& ax : sa.effects()) {
            if (max_abs(bracket(e.matrix(), ax.matrix())) > kBracketTol) return false;
          }
          for (const auto& f : cc.effects()) {
            if (max_abs(bracket(e.matrix(), f.matrix())) > kBracketTol) return false;
          }
        }
        return true;
      });
    }
  }
}

void suite_stats(Recorder& r) {
  const Tolerances& tol = r.tol();
  {
    ComplexMatrix p0 = zero(2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1 = zero(2);
    p1(1, 1) = 1.0;
    const RealObservable pm({1.0, -1.0}, {Effect(p0, tol), Effect(p1, tol)}, tol);
    ComplexMatrix expected = zero(2);
    expected(0, 0) = 1.0;
    expected(1, 1) = -1.0;
    r.check("+-1 sharp observable has stochastic operator diag(1, -1)", [&] {
      return close(stochastic_operator(pm, tol).matrix(), expected, kExact);
    });
  }
  int printed_differs = 0;
  int printed_total = 0;
  bool recorded = false;
  for (const Index d : r.dims(2, 4)) {
    Rng rng = r.stream("stats", d);
    const int n = r.scaled(100);
    for (int t = 0; t < n; ++t) {
      const InstrFlavor flavor = kInstrFlavors[static_cast<std::size_t>(t) % kInstrFlavors.size()];
      const std::string name(flavor_name(flavor));
      const std::size_t na = outcome_count(rng, 2, 4);
      const Built built = build(flavor, d, na, rng, tol);
      const RealObservable b =
          random_real_observable(d, random_outcome_values(outcome_count(rng, 2, 4), rng), rng, tol);
      const RealObservable c =
          random_real_observable(d, random_outcome_values(outcome_count(rng, 2, 4), rng), rng, tol);
      const State rho = random_state(d, rng, t % 2 == 0);
      const ComplexMatrix bt = stochastic_operator(b, tol).matrix();
      const ComplexMatrix ct = stochastic_operator(c, tol).matrix();
      const Operation total = total_channel(built.instr, tol);

      r.check(tag("stochastic operator spectrum within outcome range", d, t), [&] {
        const auto& vals = b.values();
        const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
        return min_eigenvalue(bt) >= *lo - kSum && max_eigenvalue(bt) <= *hi + kSum;
      });
      r.check(tag(name + ": (B|I A)~ = Ibar*(B~) and closed form", d, t), [&] {
        const ComplexMatrix got = conditioned_stochastic(b, built.instr, tol).matrix();
        if (!close(got, dual_apply(total, bt, tol), kExact)) return false;
        ComplexMatrix closed = zero(d);
        for (std::size_t x = 0; x < na; ++x) {
          const ComplexMatrix& ax = built.a.effects()[x].matrix();
          if (flavor == InstrFlavor::luders) {
            const ComplexMatrix root = sqrt_psd(ax, tol);
            closed += root * bt * root;
          } else if (flavor == InstrFlavor::holevo) {
            closed += trace_product(built.alphas[x].matrix(), bt).real() * ax;
          } else {
            closed += built.kraus[x].adjoint() * bt * built.kraus[x];
          }
        }
        return close(got, closed, kExact);
      });
      r.check(tag(name + ": E_rho(B|I A) = tr[Ibar(rho) B~]", d, t), [&] {
        const SelfAdjointOperator cond = conditioned_stochastic(b, built.instr, tol);
        const double direct = trace_product(seqprod::apply(total, rho), bt).real();
        return std::abs(expectation(rho, cond, tol) - direct) <= kExact;
      });
      r.check(tag(name + ": conditioned statistics", d, t), [&] {
        const UncertaintyReport rep = conditioned_stats(rho, b, c, built.instr, tol);
        const ComplexMatrix ib = dual_apply(total, bt, tol);
        const double e = trace_product(seqprod::apply(total, rho), bt).real();
        const double var = trace_product(rho.matrix(), ib * ib).real() - e * e;
        return std::abs(rep.expectation_s - e) <= kExact && std::abs(rep.variance_s - var) <= kSum &&
               rep.correlation_sq() <= rep.bound + kSum;
      });
      if (flavor == InstrFlavor::holevo) {
        r.check(tag("Holevo: expectation and variance closed forms", d, t), [&] {
          double e = 0.0;
          ComplexMatrix op = zero(d);
          for (std::size_t x = 0; x < na; ++x) {
            const double w = trace_product(built.alphas[x].matrix(), bt).real();
            e += prob(rho, built.a.effects()[x], tol) * w;
            op += w * built.a.effects()[x].matrix();
          }
          const double var = trace_product(rho.matrix(), op * op).real() - e * e;
          const UncertaintyReport rep = conditioned_stats(rho, b, b, built.instr, tol);
          return std::abs(rep.expectation_s - e) <= kExact && std::abs(rep.variance_s - var) <= kSum;
        });
      }
      if (flavor == InstrFlavor::luders) {
        r.check(tag("Lueders: E = sum_x tr(A_x^{1/2} rho A_x^{1/2} B~)", d, t), [&] {
          double e = 0.0;
          for (const auto& ax : built.a.effects()) {
            const ComplexMatrix root = sqrt_psd(ax.matrix(), tol);
            e += trace_product(root * rho.matrix() * root, bt).real();
          }
          return std::abs(conditioned_stats(rho, b, c, built.instr, tol).expectation_s - e) <= kExact;
        });
        r.check(tag("sharp A, Lueders: commutator reduces to sum_x A_x [B~A_x, C~A_x] A_x", d, t), [&] {
          const std::size_t ns = std::min<std::size_t>(na, static_cast<std::size_t>(d));
          const Observable sa = random_sharp_observable(d, ns, rng, tol);
          const Instrument li = luders_instrument(sa, tol);
          const ComplexMatrix x1 = conditioned_stochastic(b, li, tol).matrix();
          const ComplexMatrix x2 = conditioned_stochastic(c, li, tol).matrix();
          ComplexMatrix reduced = zero(d);
          for (const auto& ax : sa.effects()) {
            const ComplexMatrix& p = ax.matrix();
            reduced += p * bracket(bt * p, ct * p) * p;
          }
          return close(bracket(x1, x2), reduced, kExact);
        });
      }
    }

    // Holevo with one shared state: the conditioned operator is tr(alpha B~) I.
    const int m = r.scaled(20);
    for (int t = 0; t < m; ++t) {
      const std::size_t na = outcome_count(rng, 2, 4);
      const Observable a = random_observable(d, na, rng, tol);
      const State alpha = random_state(d, rng);
      const std::vector<State> shared(na, alpha);
      const Instrument instr = holevo_instrument(a, shared, tol);
      const RealObservable b =
          random_real_observable(d, random_outcome_values(outcome_count(rng, 2, 4), rng), rng, tol);
      const ComplexMatrix bt = stochastic_operator(b, tol).matrix();
      const double e_alpha = trace_product(alpha.matrix(), bt).real();
      r.check(tag("shared alpha: E_rho(B|H A) = E_alpha(B) for 20 states", d, t), [&] {
        for (int k = 0; k < 20; ++k) {
          const State rho = random_state(d, rng, k % 2 == 0);
          if (std::abs(conditioned_stats(rho, b, b, instr, tol).expectation_s - e_alpha) > kSum) {
            return false;
          }
        }
        return true;
      });
      const State rho = random_state(d, rng);
      const double variance = conditioned_stats(rho, b, b, instr, tol).variance_s;
      const ComplexMatrix ab = alpha.matrix() * bt;
      const double printed = trace_product(ab, ab).real() - e_alpha * e_alpha;
      r.check(tag("shared alpha: variance of the conditioned operator is 0", d, t),
              [&] { return std::abs(variance) <= kSum; });
      ++printed_total;
      if (std::abs(printed - variance) > kSum) ++printed_differs;
      if (!recorded) {
        recorded = true;
        r.witness("shared-alpha variance: printed tr[(alpha B~)^2] - E_alpha(B)^2 vs definition",
                  Json{{"dim", d},
                       {"alpha", to_json(alpha.matrix())},
                       {"B_tilde", to_json(bt)},
                       {"printed_form", printed},
                       {"variance", variance}});
      }
    }
  }
  r.note("shared-alpha variance: printed form tr[(alpha B~)^2] - E_alpha(B)^2 differs from the "
         "variance of the conditioned operator in " +
         std::to_string(printed_differs) + " of " + std::to_string(printed_total) + " instances");
}

void suite_uncertainty(Recorder& r) {
  const Tolerances& tol = r.tol();
  for (const Index d : r.dims(2, 4)) {
    Rng rng = r.stream("uncertainty", d);
    const int n = r.scaled(500);
    for (int t = 0; t < n; ++t) {
      const State rho = random_state(d, rng, t % 3 == 0);
      const SelfAdjointOperator s(random_hermitian(d, rng), tol);
      const SelfAdjointOperator u(random_hermitian(d, rng), tol);
      r.check(tag("bound, decomposition and commutator term", d, t), [&] {
        const UncertaintyReport rep = uncertainty_report(rho, s, u, tol);
        const double im = trace_product(rho.matrix(), s.matrix() * u.matrix()).imag();
        const Complex comm = trace_product(rho.matrix(), bracket(s.matrix(), u.matrix()));
        const double cor2 = rep.correlation_sq();
        const bool bound = rep.bound - cor2 >= -kSum;
        const bool split = std::abs(cor2 - (rep.covariance * rep.covariance + im * im)) <= kSum;
        const bool term = std::abs(std::norm(comm) - 4.0 * im * im) <= kSum &&
                          std::abs(rep.commutator_term - std::norm(comm)) <= kSum;
        const bool cov = std::abs(rep.covariance - rep.correlation.real()) <= tol.eq_tol;
        const bool conj =
            std::abs(correlation(rho, u, s) - std::conj(rep.correlation)) <= tol.eq_tol;
        return bound && split && term && cov && conj;
      });
    }
  }

  ComplexMatrix sx = zero(2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  ComplexMatrix sy = zero(2);
  sy(0, 1) = Complex(0.0, -1.0);
  sy(1, 0) = Complex(0.0, 1.0);
  ComplexVector e0 = ComplexVector::Zero(2);
  e0(0) = 1.0;
  const State rho0 = State::pure(e0);
  const UncertaintyReport rep =
      uncertainty_report(rho0, SelfAdjointOperator(sx, tol), SelfAdjointOperator(sy, tol), tol);
  constexpr double kFixed = 1e-12;
  r.expect(std::abs(rep.correlation - Complex(0.0, 1.0)) <= kFixed, "sigma_x, sigma_y: Cor = i");
  r.expect(std::abs(rep.correlation_sq() - 1.0) <= kFixed && std::abs(rep.bound - 1.0) <= kFixed,
           "sigma_x, sigma_y: |Cor|^2 = bound = 1");
  r.expect(std::abs(rep.commutator_term - 4.0) <= kFixed,
           "sigma_x, sigma_y: |tr(rho [S,T])|^2 = 4");
  Json w = to_json(rep);
  w["rho"] = to_json(rho0.matrix());
  w["S"] = to_json(sx);
  w["T"] = to_json(sy);
  w["without_quarter_factor"] = rep.commutator_term + rep.covariance * rep.covariance;
  w["with_quarter_factor"] = rep.commutator_term / 4.0 + rep.covariance * rep.covariance;
  r.witness("equality case: commutator term needs the factor 1/4", std::move(w));

  {
    const State mixed = State::maximally_mixed(2);
    const UncertaintyReport m =
        uncertainty_report(mixed, SelfAdjointOperator(sx, tol), SelfAdjointOperator(sy, tol), tol);
    r.expect(std::abs(m.correlation) <= kFixed && std::abs(m.bound - 1.0) <= kFixed,
             "maximally mixed: Cor = 0, bound = 1");
  }
}

}  // namespace seqprod::detail
