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

// Reference linear algebra for tests. Deliberately shares no code with the
// library: plain nested vectors, a cyclic Jacobi eigensolver for Hermitian
// matrices and a Denman-Beavers square root.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "seqprod/matrix.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<C>(n, 0.0)); }

inline Mat eye(std::size_t n) {
  Mat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat from_eigen(const seqprod::ComplexMatrix& a) {
  Mat m = zeros(static_cast<std::size_t>(a.rows()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = a(i, j);
  return m;
}

inline seqprod::ComplexMatrix to_eigen(const Mat& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  seqprod::ComplexMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m[i][j];
  return a;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat add(const Mat& a, const Mat& b, C s = 1.0) {
  Mat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += s * b[i][j];
  return c;
}

inline Mat scale(const Mat& a, C s) {
  Mat c = a;
  for (auto& row : c)
    for (auto& x : row) x *= s;
  return c;
}

inline Mat adjoint(const Mat& a) {
  Mat c = zeros(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[j][i] = std::conj(a[i][j]);
  return c;
}

inline C trace(const Mat& a) {
  C t = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

inline double max_diff(const Mat& a, const Mat& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

/// Gauss-Jordan inverse with partial pivoting.
inline Mat inverse(Mat a) {
  const std::size_t n = a.size();
  Mat inv = eye(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    const C p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const C f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

struct Eig {
  std::vector<double> values;  // ascending
  Mat vectors;                 // columns
};

/// Cyclic complex Jacobi: each sweep zeroes off-diagonal (p, q) with a
/// unitary Givens rotation until the off-diagonal mass vanishes.
inline Eig jacobi(Mat a) {
  const std::size_t n = a.size();
  Mat v = eye(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a[p][q]);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a[p][q]);
        if (mag < 1e-300) continue;
        const C phase = a[p][q] / mag;
        const double app = a[p][p].real();
        const double aqq = a[q][q].real();
        const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // Columns p, q of the rotation G: G_pp = c, G_qp = -s conj(phase),
        // G_pq = s phase, G_qq = c. A <- G^dagger A G, V <- V G.
        for (std::size_t k = 0; k < n; ++k) {
          const C akp = a[k][p];
          const C akq = a[k][q];
          a[k][p] = c * akp - s * std::conj(phase) * akq;
          a[k][q] = s * phase * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const C apk = a[p][k];
          const C aqk = a[q][k];
          a[p][k] = c * apk - s * phase * aqk;
          a[q][k] = s * std::conj(phase) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const C vkp = v[k][p];
          const C vkq = v[k][q];
          v[k][p] = c * vkp - s * std::conj(phase) * vkq;
          v[k][q] = s * phase * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a[x][x].real() < a[y][y].real(); });
  Eig out;
  out.vectors = zeros(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values.push_back(a[order[j]][order[j]].real());
    for (std::size_t k = 0; k < n; ++k) out.vectors[k][j] = v[k][order[j]];
  }
  return out;
}

/// Denman-Beavers iteration; requires a positive definite input. For PSD
/// inputs shift by eps and accept an O(sqrt(eps)) error.
inline Mat sqrt_db(const Mat& a, double shift = 0.0) {
  Mat y = add(a, eye(a.size()), shift);
  Mat z = eye(a.size());
  for (int it = 0; it < 100; ++it) {
    const Mat yi = inverse(y);
    const Mat zi = inverse(z);
    const Mat ny = scale(add(y, zi), 0.5);
    const Mat nz = scale(add(z, yi), 0.5);
    const double change = max_diff(ny, y);
    y = ny;
    z = nz;
    if (change < 1e-15) break;
  }
  return y;
}

/// Lüders product a^{1/2} b a^{1/2} via Denman-Beavers.
inline Mat luders(const Mat& a, const Mat& b) {
  const Mat s = sqrt_db(a);
  return mul(mul(s, b), s);
}

}  // namespace oracle
