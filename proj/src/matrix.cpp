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

#include "seqprod/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "seqprod/error.hpp"

namespace seqprod {

void Tolerances::validate() const {
  if (!(eq_tol > 0.0) || !(psd_tol > 0.0) || !std::isfinite(eq_tol) ||
      !std::isfinite(psd_tol)) {
    throw Error(ErrorKind::BadConfig, "tolerances must be positive and finite");
  }
}

void require_square(const ComplexMatrix& a, std::string_view what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorKind::NotSquare,
                std::string(what) + ": expected a non-empty square matrix, got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_finite(const ComplexMatrix& a, std::string_view what) {
  if (!a.allFinite()) {
    throw Error(ErrorKind::NonFinite, std::string(what) + ": non-finite entry");
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, std::string_view what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + " vs " +
                    std::to_string(b.rows()));
  }
}

ComplexMatrix identity(Index dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix zero(Index dim) { return ComplexMatrix::Zero(dim, dim); }

ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  return (a + a.adjoint()) * 0.5;
}

ComplexMatrix bracket(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "bracket");
  return a * b - b * a;
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  return max_abs(a - b);
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs(a - b) <= tol;
}

bool is_hermitian(const ComplexMatrix& a, const Tolerances& tol) {
  require_square(a, "is_hermitian");
  return max_abs(a - a.adjoint()) <= tol.eq_tol;
}

EigenDecomposition eigh(const ComplexMatrix& a, const Tolerances& tol) {
  if (!is_hermitian(a, tol)) {
    throw Error(ErrorKind::NotHermitian, "eigh: operand is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(a));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::InvariantViolation, "eigh: solver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const ComplexMatrix& a, const Tolerances& tol) {
  if (!is_hermitian(a, tol)) {
    throw Error(ErrorKind::NotHermitian, "min_eigenvalue: operand is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(a),
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double max_eigenvalue(const ComplexMatrix& a, const Tolerances& tol) {
  if (!is_hermitian(a, tol)) {
    throw Error(ErrorKind::NotHermitian, "max_eigenvalue: operand is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(a),
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(solver.eigenvalues().size() - 1);
}

bool psd_check(const ComplexMatrix& a, const Tolerances& tol) {
  return min_eigenvalue(a, tol) >= -tol.psd_tol;
}

ComplexMatrix spectral_function(const EigenDecomposition& eig,
                                const std::function<double(double)>& f) {
  RealVector mapped = eig.eigenvalues.unaryExpr([&](double x) { return f(x); });
  ComplexMatrix out =
      eig.eigenvectors * mapped.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
  return hermitian_part(out);
}

ComplexMatrix sqrt_psd(const ComplexMatrix& a, const Tolerances& tol) {
  const EigenDecomposition eig = eigh(a, tol);
  const double lowest = eig.eigenvalues(0);
  if (lowest < -tol.psd_tol) {
    throw Error(ErrorKind::NotPSD,
                "sqrt_psd: eigenvalue " + std::to_string(lowest) + " below -psd_tol");
  }
  const double scale = std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff());
  const double snap = 32.0 * std::numeric_limits<double>::epsilon() *
                      static_cast<double>(a.rows()) * scale;
  return spectral_function(eig, [snap](double x) { return x <= snap ? 0.0 : std::sqrt(x); });
}

PolarDecomposition polar_decompose(const ComplexMatrix& k, const Tolerances& tol) {
  require_square(k, "polar_decompose");
  require_finite(k, "polar_decompose");
  (void)tol;
  Eigen::JacobiSVD<ComplexMatrix> svd(k, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const ComplexMatrix& w = svd.matrixU();
  const ComplexMatrix& v = svd.matrixV();
  PolarDecomposition out;
  out.unitary = w * v.adjoint();
  out.positive = hermitian_part(
      v * svd.singularValues().cast<Complex>().asDiagonal() * v.adjoint());
  return out;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "trace_product");
  require_same_dim(a, b, "trace_product");
  // sum_ij A_ij B_ji without forming AB.
  return (a.array() * b.transpose().array()).sum();
}

ComplexMatrix random_unitary(Index dim, Rng& rng) {
  if (dim < 1) throw Error(ErrorKind::BadConfig, "random_unitary: dim must be >= 1");
  ComplexMatrix z(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) z(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Index i = 0; i < dim; ++i) {
    const double mag = std::abs(r(i, i));
    const Complex phase = mag > 0.0 ? r(i, i) / mag : Complex(1.0, 0.0);
    q.col(i) *= phase;
  }
  return q;
}

ComplexMatrix random_unitary(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(dim, rng);
}

ComplexMatrix random_hermitian(Index dim, Rng& rng) {
  ComplexMatrix h(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    h(i, i) = rng.uniform(-1.0, 1.0);
    for (Index j = i + 1; j < dim; ++j) {
      h(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

}  // namespace seqprod
