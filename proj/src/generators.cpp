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

#include "seqprod/generators.hpp"

#include <algorithm>
#include <cmath>

#include "seqprod/error.hpp"

namespace seqprod {
namespace {

ComplexMatrix diag_in_basis(const ComplexMatrix& v, const RealVector& d) {
  return hermitian_part(v * d.cast<Complex>().asDiagonal() * v.adjoint());
}

// Projectors on to the eigenvalue clusters of m (ascending).
std::vector<ComplexMatrix> spectral_projectors(const ComplexMatrix& m, double gap) {
  const EigenDecomposition eig = eigh(m);
  std::vector<ComplexMatrix> out;
  const Index d = m.rows();
  Index start = 0;
  for (Index k = 1; k <= d; ++k) {
    if (k == d || eig.eigenvalues(k) - eig.eigenvalues(k - 1) > gap) {
      const auto block = eig.eigenvectors.middleCols(start, k - start);
      out.push_back(block * block.adjoint());
      start = k;
    }
  }
  return out;
}

ComplexMatrix wishart(Index dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index k = 0; k < dim; ++k) g(i, k) = rng.complex_normal();
  }
  return hermitian_part(g * g.adjoint());
}

}  // namespace

Effect random_effect_in_range(Index dim, Rng& rng, double lo, double hi) {
  const ComplexMatrix v = random_unitary(dim, rng);
  RealVector d(dim);
  for (Index i = 0; i < dim; ++i) d(i) = rng.uniform(lo, hi);
  return Effect(diag_in_basis(v, d));
}

Effect random_effect_with_unit_eigenvalue(Index dim, Rng& rng, ComplexVector* one_vector) {
  const ComplexMatrix v = random_unitary(dim, rng);
  RealVector d(dim);
  d(0) = 1.0;
  for (Index i = 1; i < dim; ++i) d(i) = rng.uniform(0.0, 0.99);
  if (one_vector != nullptr) *one_vector = v.col(0);
  return Effect(diag_in_basis(v, d));
}

Effect random_projection(Index dim, Index rank, Rng& rng) {
  if (rank < 0 || rank > dim) throw Error(ErrorKind::BadConfig, "projection rank out of range");
  const ComplexMatrix v = random_unitary(dim, rng);
  const auto block = v.leftCols(rank);
  return Effect(hermitian_part(block * block.adjoint()));
}

Effect random_proper_projection(Index dim, Rng& rng) {
  const auto rank = static_cast<Index>(1 + rng.below(static_cast<std::uint64_t>(dim - 1)));
  return random_projection(dim, rank, rng);
}

Effect random_codiagonal_effect(const Effect& a, Rng& rng) {
  const EigenDecomposition eig = eigh(a.matrix());
  RealVector d(a.dim());
  for (Index i = 0; i < a.dim(); ++i) d(i) = rng.uniform();
  return Effect(diag_in_basis(eig.eigenvectors, d));
}

Effect pinch(const Effect& b, const Effect& c, const Tolerances& tol) {
  require_same_dim(b.matrix(), c.matrix(), "pinch");
  ComplexMatrix out = zero(b.dim());
  for (const auto& p : spectral_projectors(c.matrix(), tol.eq_tol)) out += p * b.matrix() * p;
  return Effect(hermitian_part(out), tol);
}

Effect random_degenerate_effect(Index dim, Rng& rng) {
  const ComplexMatrix v = random_unitary(dim, rng);
  const double s = rng.uniform();
  RealVector d(dim);
  d(0) = s;
  d(1) = s;
  for (Index i = 2; i < dim; ++i) d(i) = rng.uniform();
  return Effect(diag_in_basis(v, d));
}

Effect random_effect_below(const Effect& a, Rng& rng) {
  const ComplexMatrix r = sqrt_psd(a.matrix());
  const Effect e = random_effect(a.dim(), rng);
  return Effect(hermitian_part(r * e.matrix() * r));
}

std::vector<ComplexMatrix> random_kraus_family(Index dim, std::size_t n, Rng& rng) {
  const auto rows = static_cast<Index>(n) * dim;
  const ComplexMatrix u = random_unitary(rows, rng);
  std::vector<ComplexMatrix> out;
  for (std::size_t x = 0; x < n; ++x) {
    out.push_back(u.block(static_cast<Index>(x) * dim, 0, dim, dim));
  }
  return out;
}

Operation random_operation_measuring(const Effect& a, Rng& rng, int kraus_count,
                                     const Tolerances& tol) {
  if (kraus_count < 1) throw Error(ErrorKind::BadConfig, "kraus_count must be positive");
  const ComplexMatrix r = sqrt_psd(a.matrix(), tol);
  std::vector<ComplexMatrix> ks;
  for (const auto& w : random_kraus_family(a.dim(), static_cast<std::size_t>(kraus_count), rng)) {
    ks.push_back(w * r);
  }
  return Operation::from_kraus(std::move(ks), tol);
}

Operation random_kraus_measuring(const Effect& a, Rng& rng, const Tolerances& tol) {
  return kraus_operation(random_unitary(a.dim(), rng) * sqrt_psd(a.matrix(), tol), tol);
}

Observable random_observable(Index dim, std::size_t n, Rng& rng, const Tolerances& tol) {
  std::vector<ComplexMatrix> gs;
  ComplexMatrix s = zero(dim);
  for (std::size_t x = 0; x < n; ++x) {
    gs.push_back(wishart(dim, rng));
    s += gs.back();
  }
  const EigenDecomposition eig = eigh(s);
  const ComplexMatrix inv_sqrt = spectral_function(eig, [](double v) { return 1.0 / std::sqrt(v); });
  std::vector<Effect> effects;
  for (const auto& g : gs) effects.emplace_back(hermitian_part(inv_sqrt * g * inv_sqrt), tol);
  return Observable(default_labels(n), std::move(effects), tol);
}

RealObservable random_real_observable(Index dim, std::vector<double> values, Rng& rng,
                                      const Tolerances& tol) {
  const Observable obs = random_observable(dim, values.size(), rng, tol);
  return RealObservable(std::move(values), obs.effects(), tol);
}

Observable random_sharp_observable(Index dim, std::size_t n, Rng& rng, const Tolerances& tol) {
  if (n < 1 || static_cast<Index>(n) > dim) {
    throw Error(ErrorKind::BadConfig, "sharp observable needs 1 <= n <= dim");
  }
  const ComplexMatrix v = random_unitary(dim, rng);
  // First n basis vectors seed the groups; the rest land uniformly.
  std::vector<std::size_t> group(static_cast<std::size_t>(dim));
  for (std::size_t k = 0; k < group.size(); ++k) {
    group[k] = k < n ? k : static_cast<std::size_t>(rng.below(n));
  }
  std::vector<ComplexMatrix> ps(n, zero(dim));
  for (std::size_t k = 0; k < group.size(); ++k) {
    const ComplexVector col = v.col(static_cast<Index>(k));
    ps[group[k]] += outer(col);
  }
  std::vector<Effect> effects;
  for (const auto& p : ps) effects.emplace_back(hermitian_part(p), tol);
  return Observable(default_labels(n), std::move(effects), tol);
}

std::vector<double> random_outcome_values(std::size_t n, Rng& rng) {
  std::vector<double> out;
  while (out.size() < n) {
    const double v = std::round(rng.uniform(-3.0, 3.0) * 1000.0) / 1000.0;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace seqprod
