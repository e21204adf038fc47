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

#include <complex>
#include <cstdint>
#include <functional>
#include <string_view>

#include <Eigen/Dense>

#include "seqprod/random.hpp"

namespace seqprod {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Comparison thresholds. Operator equalities are entrywise absolute
/// comparisons against eq_tol; psd_tol is the floor below which an
/// eigenvalue counts as negative.
struct Tolerances {
  double eq_tol = 1e-9;
  double psd_tol = 1e-9;

  /// Throws BadConfig unless both are strictly positive and finite.
  void validate() const;
};

struct EigenDecomposition {
  RealVector eigenvalues;       // non-decreasing
  ComplexMatrix eigenvectors;   // orthonormal columns
};

struct PolarDecomposition {
  ComplexMatrix unitary;
  ComplexMatrix positive;
};

// ---- shape and comparison helpers ----

void require_square(const ComplexMatrix& a, std::string_view what);
void require_finite(const ComplexMatrix& a, std::string_view what);
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, std::string_view what);

ComplexMatrix identity(Index dim);
ComplexMatrix zero(Index dim);

/// |v><v| for the given (not necessarily normalized) vector.
ComplexMatrix outer(const ComplexVector& v);

/// (A + A^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& a);

/// AB - BA
ComplexMatrix bracket(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |A_ij|
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);
inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerances& tol) {
  return approx_equal(a, b, tol.eq_tol);
}

// ---- spectral routines ----

bool is_hermitian(const ComplexMatrix& a, const Tolerances& tol = {});

/// Hermitian eigendecomposition, eigenvalues ascending.
/// Throws NotHermitian.
EigenDecomposition eigh(const ComplexMatrix& a, const Tolerances& tol = {});

/// Smallest eigenvalue of a Hermitian matrix. Throws NotHermitian.
double min_eigenvalue(const ComplexMatrix& a, const Tolerances& tol = {});
double max_eigenvalue(const ComplexMatrix& a, const Tolerances& tol = {});

/// true iff the smallest eigenvalue is >= -psd_tol. Throws NotHermitian.
bool psd_check(const ComplexMatrix& a, const Tolerances& tol = {});

/// V f(diag) V^dagger.
ComplexMatrix spectral_function(const EigenDecomposition& eig,
                                const std::function<double(double)>& f);

/// Hermitian PSD square root. Eigenvalues in [-psd_tol, 0) are clamped to
/// zero, and so are rounding-level positive ones, so exact projections map to
/// themselves. Throws NotHermitian or NotPSD.
ComplexMatrix sqrt_psd(const ComplexMatrix& a, const Tolerances& tol = {});

/// K = U P with P = (K^dagger K)^{1/2} and U unitary. A rank-deficient P gets
/// its unitary completed from the full SVD, singular directions paired by
/// index.
PolarDecomposition polar_decompose(const ComplexMatrix& k, const Tolerances& tol = {});

/// tr(AB) = sum_ij A_ij B_ji. Throws DimMismatch.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// R's diagonal moved into Q.
ComplexMatrix random_unitary(Index dim, Rng& rng);
ComplexMatrix random_unitary(Index dim, std::uint64_t seed);

/// Hermitian matrix with real and imaginary parts uniform in [-1, 1].
ComplexMatrix random_hermitian(Index dim, Rng& rng);

}  // namespace seqprod
