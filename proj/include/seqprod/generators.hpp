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

#include <vector>

#include "seqprod/observables.hpp"

namespace seqprod {

/// Random instance builders shared by the verifier suites and tests.

/// V diag(d) V^dagger with d uniform in [lo, hi] and V Haar.
Effect random_effect_in_range(Index dim, Rng& rng, double lo, double hi);

/// An effect with a forced eigenvalue 1; *one_vector receives a unit 1-eigenvector.
/// The remaining eigenvalues are uniform in [0, 0.99].
Effect random_effect_with_unit_eigenvalue(Index dim, Rng& rng, ComplexVector* one_vector = nullptr);

/// Projection of the given rank onto a Haar-random subspace.
Effect random_projection(Index dim, Index rank, Rng& rng);

/// Projection of rank uniform in [1, dim - 1].
Effect random_proper_projection(Index dim, Rng& rng);

/// An effect co-diagonal with a (same eigenbasis, fresh eigenvalues).
Effect random_codiagonal_effect(const Effect& a, Rng& rng);

/// sum_k P_k b P_k over the spectral projections of c: the conditional
/// expectation onto c's commutant. Eigenvalues closer than tol.eq_tol are grouped.
Effect pinch(const Effect& b, const Effect& c, const Tolerances& tol = {});

/// An effect with a repeated eigenvalue: spectrum drawn from {s, s, t, ...}.
Effect random_degenerate_effect(Index dim, Rng& rng);

/// a^{1/2} e a^{1/2} for a random effect e; always below a.
Effect random_effect_below(const Effect& a, Rng& rng);

/// Operation measuring a with a random Kraus family {W_i a^{1/2}}, where the
/// W_i are the blocks of a random isometry. kraus_count >= 1.
Operation random_operation_measuring(const Effect& a, Rng& rng, int kraus_count,
                                     const Tolerances& tol = {});

/// K = U a^{1/2} with U Haar (not necessarily commuting with a).
Operation random_kraus_measuring(const Effect& a, Rng& rng, const Tolerances& tol = {});

/// Blocks of a random (n dim) x dim isometry: sum K_x^dagger K_x = I.
std::vector<ComplexMatrix> random_kraus_family(Index dim, std::size_t n, Rng& rng);

/// S^{-1/2} G_x S^{-1/2} for Wishart G_x and S = sum G_x.
Observable random_observable(Index dim, std::size_t n, Rng& rng, const Tolerances& tol = {});

/// Random observable with the given real outcome values.
RealObservable random_real_observable(Index dim, std::vector<double> values, Rng& rng,
                                      const Tolerances& tol = {});

/// Sharp observable: a Haar basis split into n non-empty groups (n <= dim).
Observable random_sharp_observable(Index dim, std::size_t n, Rng& rng, const Tolerances& tol = {});

/// n distinct outcome values, uniform in [-3, 3].
std::vector<double> random_outcome_values(std::size_t n, Rng& rng);

}  // namespace seqprod
