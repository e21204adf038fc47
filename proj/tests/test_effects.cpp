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

#include "helpers.hpp"
#include "seqprod/effects.hpp"
#include "seqprod/error.hpp"
#include "seqprod/operations.hpp"

using namespace seqprod;
using namespace testing;

TEST_SUITE("effects") {
  TEST_CASE("effect and state invariants are enforced") {
    CHECK(error_kind_of([] { Effect(diag({1.5, 0})); }) == ErrorKind::NotEffect);
    CHECK(error_kind_of([] { Effect(mat({{0, 1}, {0, 0}})); }) == ErrorKind::NotHermitian);
    CHECK(error_kind_of([] { State(diag({0.5, 0.25})); }) == ErrorKind::NotState);
    CHECK(error_kind_of([] { State(diag({1.5, -0.5})); }) == ErrorKind::NotState);
    CHECK_NOTHROW(Effect(diag({1, 0.5})));
    CHECK_NOTHROW(State(diag({0.25, 0.75})));
  }

  TEST_CASE("complement") {
    CHECK_MAT_CLOSE(complement(Effect::identity(2)).matrix(), zero(2), 0.0);
    CHECK_MAT_CLOSE(complement(Effect(diag({1, 0.5}))).matrix(), diag({0, 0.5}), 0.0);
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
      const Effect a = random_effect(3, rng);
      CHECK_MAT_CLOSE(a.matrix() + complement(a).matrix(), identity(3), 1e-15);
      CHECK_MAT_CLOSE(complement(complement(a)).matrix(), a.matrix(), 1e-15);
    }
  }

  TEST_CASE("prob") {
    Rng rng(2);
    const State rho = random_state(3, rng);
    CHECK(prob(rho, Effect::identity(3)) == doctest::Approx(1.0));
    CHECK(prob(rho, Effect::zero(3)) == 0.0);
    CHECK(prob(State::maximally_mixed(2), Effect(diag({1, 0.5}))) == doctest::Approx(0.75));
    CHECK(error_kind_of([&] { prob(rho, Effect::identity(2)); }) == ErrorKind::DimMismatch);
  }

  TEST_CASE("leq") {
    Rng rng(3);
    const Effect a = random_effect(2, rng);
    CHECK(leq(a, Effect::identity(2)));
    CHECK_FALSE(leq(Effect(diag({0, 1})), Effect(diag({1, 0.5}))));
    for (int t = 0; t < 30; ++t) {
      const Effect c = random_effect(2, rng);
      const Effect b = random_effect(2, rng);
      CHECK(leq(seq_product(luders_operation(c), b), c));
    }
  }

  TEST_CASE("perp") {
    Rng rng(4);
    const Effect a = random_effect(3, rng);
    CHECK(perp(a, complement(a)));
    CHECK_FALSE(perp(Effect::identity(3), a));
    const Effect half(complement(a).matrix() / 2.0);
    CHECK(perp(a, half));
  }

  TEST_CASE("perp agrees with leq against the complement") {
    Rng rng(5);
    for (Index d = 2; d <= 4; ++d) {
      for (int t = 0; t < 100; ++t) {
        const Effect a = random_effect(d, rng);
        const Effect b(random_effect(d, rng).matrix() * rng.uniform(0.0, 0.8));
        CHECK(perp(a, b) == leq(b, complement(a)));
      }
    }
  }

  TEST_CASE("is_sharp and has_eigenvalue_one") {
    CHECK(is_sharp(Effect(diag({0, 1}))));
    CHECK_FALSE(is_sharp(Effect(diag({1, 0.5}))));
    CHECK(is_sharp(Effect::zero(2)));
    CHECK(is_sharp(Effect::identity(2)));
    CHECK(has_eigenvalue_one(Effect(diag({1, 0.5}))));
    CHECK_FALSE(has_eigenvalue_one(Effect(diag({0.5, 0.5}))));
    Rng rng(6);
    for (int t = 0; t < 20; ++t) {
      const State p = random_state(3, rng, true);
      CHECK(has_eigenvalue_one(Effect(p.matrix())));
    }
  }

  TEST_CASE("random effects and states") {
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const Effect a = random_effect(3, s);
      CHECK(is_hermitian(a.matrix()));
      CHECK(min_eigenvalue(a.matrix()) >= -1e-12);
      CHECK(max_eigenvalue(a.matrix()) <= 1 + 1e-12);
    }
    CHECK(random_effect(3, std::uint64_t{5}).matrix() == random_effect(3, std::uint64_t{5}).matrix());
    const Effect one = random_effect(1, std::uint64_t{3});
    CHECK((one.matrix()(0, 0).real() >= 0.0 && one.matrix()(0, 0).real() <= 1.0));
    for (std::uint64_t s = 0; s < 100; ++s) {
      CHECK(std::abs(random_state(4, s).matrix().trace() - Complex(1, 0)) <= 1e-12);
      CHECK(is_sharp(Effect(random_state(3, s, true).matrix())));
    }
    CHECK_MAT_CLOSE(random_state(1, std::uint64_t{2}).matrix(), identity(1), 1e-15);
  }

  TEST_CASE("convex_combination") {
    Rng rng(7);
    const Effect a = random_effect(2, rng);
    const std::array<double, 1> w1{1.0};
    const std::array<Effect, 1> e1{a};
    CHECK_MAT_CLOSE(convex_combination(w1, e1).matrix(), a.matrix(), 1e-15);
    const std::array<double, 2> w2{0.5, 0.5};
    const std::array<Effect, 2> e2{a, complement(a)};
    CHECK_MAT_CLOSE(convex_combination(w2, e2).matrix(), identity(2) / 2.0, 1e-15);
    const std::array<double, 3> w3{0.2, 0.3, 0.5};
    const std::array<Effect, 3> e3{random_effect(3, rng), random_effect(3, rng), random_effect(3, rng)};
    const Effect mix = convex_combination(w3, e3);
    CHECK(min_eigenvalue(mix.matrix()) >= -1e-12);
    CHECK(max_eigenvalue(mix.matrix()) <= 1 + 1e-12);
    const std::array<double, 2> bad{0.7, 0.7};
    CHECK(error_kind_of([&] { convex_combination(bad, e2); }) == ErrorKind::BadWeights);
    const std::array<double, 2> neg{1.5, -0.5};
    CHECK(error_kind_of([&] { convex_combination(neg, e2); }) == ErrorKind::BadWeights);
    const std::array<Effect, 2> mixed_dims{a, random_effect(3, rng)};
    CHECK(error_kind_of([&] { convex_combination(w2, mixed_dims); }) == ErrorKind::DimMismatch);
  }

  TEST_CASE("order matches probabilities") {
    Rng rng(8);
    for (Index d = 2; d <= 4; ++d) {
      for (int t = 0; t < 50; ++t) {
        const Effect b = random_effect(d, rng);
        const Effect a = t % 2 == 0 ? Effect(b.matrix() * rng.uniform()) : random_effect(d, rng);
        const bool ordered = leq(a, b);
        bool all_states = true;
        for (int s = 0; s < 100; ++s) {
          const State rho = random_state(d, rng, s % 2 == 0);
          all_states = all_states && prob(rho, a) <= prob(rho, b) + 1e-8;
          CHECK(std::abs(prob(rho, complement(a)) - (1.0 - prob(rho, a))) <= 1e-10);
        }
        if (ordered) CHECK(all_states);
        // Sampled reverse direction: a violated order is seen by its eigenvector.
        if (!ordered) {
          const EigenDecomposition e = eigh(b.matrix() - a.matrix());
          const State witness = State::pure(e.eigenvectors.col(0));
          CHECK(prob(witness, a) > prob(witness, b));
        }
      }
    }
  }
}
