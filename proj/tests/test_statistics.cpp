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

#include "helpers.hpp"
#include "seqprod/error.hpp"
#include "seqprod/generators.hpp"
#include "seqprod/statistics.hpp"

using namespace seqprod;
using namespace testing;

namespace {

SelfAdjointOperator sa(const ComplexMatrix& m) { return SelfAdjointOperator(m); }

State ket0() { return State(diag({1, 0})); }

// Brute-force |Cor|^2, Cov and |tr(rho[S,T])|^2 from raw traces.
struct Raw {
  double cor_sq, cov, comm_sq;
};

Raw raw(const ComplexMatrix& rho, const ComplexMatrix& s, const ComplexMatrix& t) {
  const Complex es = (rho * s).trace();
  const Complex et = (rho * t).trace();
  const Complex cor = (rho * s * t).trace() - es * et;
  const Complex comm = (rho * (s * t - t * s)).trace();
  return {std::norm(cor), cor.real(), std::norm(comm)};
}

}  // namespace

TEST_SUITE("statistics") {
  TEST_CASE("stochastic_operator") {
    Rng rng(1);
    const Effect a1 = random_effect(2, rng);
    const RealObservable zero_one({0.0, 1.0}, {complement(a1), a1});
    CHECK_MAT_CLOSE(stochastic_operator(zero_one).matrix(), a1.matrix(), 1e-15);
    const RealObservable constant({2.5}, {Effect::identity(3)});
    CHECK_MAT_CLOSE(stochastic_operator(constant).matrix(), 2.5 * identity(3), 0.0);
    const RealObservable pm({1.0, -1.0}, {Effect(diag({1, 0})), Effect(diag({0, 1}))});
    CHECK_MAT_CLOSE(stochastic_operator(pm).matrix(), sigma_z(), 0.0);
    for (int t = 0; t < 100; ++t) {
      const std::vector<double> values = random_outcome_values(4, rng);
      const RealObservable obs = random_real_observable(3, values, rng);
      const ComplexMatrix m = stochastic_operator(obs).matrix();
      const double lo = *std::min_element(values.begin(), values.end());
      const double hi = *std::max_element(values.begin(), values.end());
      CHECK(min_eigenvalue(m) >= lo - 1e-9);
      CHECK(max_eigenvalue(m) <= hi + 1e-9);
    }
  }

  TEST_CASE("expectation") {
    Rng rng(2);
    CHECK(expectation(random_state(3, rng), sa(identity(3))) == doctest::Approx(1.0));
    CHECK(expectation(ket0(), sa(sigma_z())) == doctest::Approx(1.0));
    CHECK(error_kind_of([&] { expectation(random_state(3, rng), sa(sigma_z())); }) == ErrorKind::DimMismatch);
    CHECK(error_kind_of([] { SelfAdjointOperator(mat({{0, 1}, {0, 0}})); }) == ErrorKind::NotHermitian);
  }

  TEST_CASE("correlation and covariance") {
    Rng rng(3);
    const State rho = random_state(2, rng);
    const SelfAdjointOperator s = sa(random_hermitian(2, rng));
    CHECK(std::abs(correlation(rho, s, sa(identity(2)))) <= 1e-14);
    const Complex pauli = correlation(ket0(), sa(sigma_x()), sa(sigma_y()));
    CHECK(std::abs(pauli - Complex(0, 1)) <= 1e-15);
    CHECK(covariance(ket0(), sa(sigma_x()), sa(sigma_y())) == doctest::Approx(0.0));
    for (int t = 0; t < 50; ++t) {
      const State r = random_state(3, rng);
      const SelfAdjointOperator x = sa(random_hermitian(3, rng));
      const SelfAdjointOperator y = sa(random_hermitian(3, rng));
      CHECK(std::abs(correlation(r, x, y) - std::conj(correlation(r, y, x))) <= 1e-12);
      CHECK(std::abs(covariance(r, x, y) - covariance(r, y, x)) <= 1e-12);
      CHECK(std::abs(covariance(r, x, x) - variance(r, x)) <= 1e-12);
      CHECK(std::abs(correlation(r, x, x).imag()) <= 1e-12);
    }
    // Commuting diagonal operators under a diagonal state: classical covariance.
    const State p(diag({0.2, 0.3, 0.5}));
    const std::array<double, 3> xs{1.0, -2.0, 0.5}, ys{3.0, 1.0, -1.0}, ps{0.2, 0.3, 0.5};
    double ex = 0, ey = 0, exy = 0;
    for (int i = 0; i < 3; ++i) {
      ex += ps[i] * xs[i];
      ey += ps[i] * ys[i];
      exy += ps[i] * xs[i] * ys[i];
    }
    CHECK(covariance(p, sa(diag({1.0, -2.0, 0.5})), sa(diag({3.0, 1.0, -1.0}))) ==
          doctest::Approx(exy - ex * ey));
  }

  TEST_CASE("variance") {
    Rng rng(4);
    CHECK(variance(random_state(2, rng), sa(3.0 * identity(2))) == doctest::Approx(0.0));
    CHECK(variance(State::maximally_mixed(2), sa(sigma_z())) == doctest::Approx(1.0));
    CHECK(variance(ket0(), sa(sigma_z())) == doctest::Approx(0.0));
  }

  TEST_CASE("uncertainty_report examples") {
    const UncertaintyReport r = uncertainty_report(ket0(), sa(sigma_x()), sa(sigma_y()));
    CHECK(r.correlation_sq() == doctest::Approx(1.0));
    CHECK(r.bound == doctest::Approx(1.0));
    CHECK(r.commutator_term == doctest::Approx(4.0));
    CHECK(r.covariance == doctest::Approx(0.0));
    // The printed identity without the factor 1/4 overshoots.
    CHECK(r.commutator_term + r.covariance * r.covariance != doctest::Approx(r.correlation_sq()));
    CHECK(r.commutator_term / 4 + r.covariance * r.covariance == doctest::Approx(r.correlation_sq()));

    const UncertaintyReport mixed = uncertainty_report(State::maximally_mixed(2), sa(sigma_x()), sa(sigma_y()));
    CHECK(std::abs(mixed.correlation) <= 1e-15);
    CHECK(mixed.bound == doctest::Approx(1.0));

    Rng rng(5);
    const State rho = random_state(3, rng);
    const SelfAdjointOperator s = sa(random_hermitian(3, rng));
    const UncertaintyReport same = uncertainty_report(rho, s, s);
    CHECK(same.correlation_sq() == doctest::Approx(same.variance_s * same.variance_s));
    CHECK(same.bound == doctest::Approx(same.correlation_sq()));

    // Frozen from an independent numpy evaluation.
    const State r2(mat({{0.7, Complex(0.1, 0.2)}, {Complex(0.1, -0.2), 0.3}}));
    const UncertaintyReport f =
        uncertainty_report(r2, sa(mat({{1, 0.5}, {0.5, -1}})), sa(mat({{0, Complex(0, -1)}, {Complex(0, 1), 0.5}})));
    CHECK(f.expectation_s == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.expectation_t == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(f.variance_s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.variance_t == doctest::Approx(0.8125).epsilon(1e-12));
    CHECK(std::abs(f.correlation - Complex(0, -0.05)) <= 1e-12);
    CHECK(f.commutator_term == doctest::Approx(0.01).epsilon(1e-10));
  }

  TEST_CASE("uncertainty bound and decomposition on random instances") {
    Rng rng(6);
    for (Index d = 2; d <= 4; ++d) {
      for (int t = 0; t < 500; ++t) {
        const State rho = random_state(d, rng, t % 5 == 0);
        const ComplexMatrix s = random_hermitian(d, rng);
        const ComplexMatrix tm = random_hermitian(d, rng);
        const UncertaintyReport r = uncertainty_report(rho, sa(s), sa(tm));
        const Raw ref = raw(rho.matrix(), s, tm);
        CHECK(r.bound - r.correlation_sq() >= -1e-9);
        CHECK(std::abs(r.correlation_sq() - ref.cor_sq) <= 1e-9);
        CHECK(std::abs(r.covariance - ref.cov) <= 1e-9);
        CHECK(std::abs(r.commutator_term - ref.comm_sq) <= 1e-9);
        const double im = (rho.matrix() * s * tm).trace().imag();
        CHECK(std::abs(r.correlation_sq() - (r.covariance * r.covariance + im * im)) <= 1e-9);
        CHECK(std::abs(r.commutator_term - 4 * im * im) <= 1e-9);
      }
    }
  }

  TEST_CASE("conditioned stochastic operators") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
      const Observable a = random_observable(3, 3, rng);
      const RealObservable b = random_real_observable(3, random_outcome_values(3, rng), rng);
      const ComplexMatrix bt = stochastic_operator(b).matrix();
      const Instrument lud = luders_instrument(a);
      ComplexMatrix expect = zero(3);
      for (const auto& e : a.effects()) {
        const ComplexMatrix r = sqrt_psd(e.matrix());
        expect += r * bt * r;
      }
      CHECK_MAT_CLOSE(conditioned_stochastic(b, lud).matrix(), expect, 1e-10);

      std::vector<State> alphas;
      for (int x = 0; x < 3; ++x) alphas.push_back(random_state(3, rng));
      ComplexMatrix hexp = zero(3);
      for (std::size_t x = 0; x < 3; ++x)
        hexp += trace_product(alphas[x].matrix(), bt).real() * a.effects()[x].matrix();
      CHECK_MAT_CLOSE(conditioned_stochastic(b, holevo_instrument(a, alphas)).matrix(), hexp, 1e-10);

      const State rho = random_state(3, rng);
      const UncertaintyReport st = conditioned_stats(rho, b, b, lud);
      const ComplexMatrix bar = seqprod::apply(total_channel(lud), rho);
      CHECK(st.expectation_s == doctest::Approx(trace_product(bar, bt).real()).epsilon(1e-10));
      const ComplexMatrix cs = conditioned_stochastic(b, lud).matrix();
      const double var = trace_product(rho.matrix(), cs * cs).real() - st.expectation_s * st.expectation_s;
      CHECK(st.variance_s == doctest::Approx(var).epsilon(1e-9));
      CHECK(st.correlation_sq() == doctest::Approx(st.bound).epsilon(1e-9));
    }
  }

  TEST_CASE("shared alpha makes the conditioned expectation state-independent") {
    Rng rng(8);
    const Observable a = random_observable(3, 3, rng);
    const RealObservable b = random_real_observable(3, random_outcome_values(4, rng), rng);
    const State alpha = random_state(3, rng);
    const std::vector<State> shared(3, alpha);
    const Instrument h = holevo_instrument(a, shared);
    const double target = expectation(alpha, stochastic_operator(b));
    for (int t = 0; t < 20; ++t) {
      const UncertaintyReport r = conditioned_stats(random_state(3, rng), b, b, h);
      CHECK(std::abs(r.expectation_s - target) <= 1e-9);
      CHECK(std::abs(r.variance_s) <= 1e-9);
    }
  }
}
