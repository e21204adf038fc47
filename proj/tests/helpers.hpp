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

#include <cmath>
#include <initializer_list>

#include <doctest.h>

#include "seqprod/error.hpp"
#include "seqprod/matrix.hpp"

namespace testing {

using seqprod::Complex;
using seqprod::ComplexMatrix;

inline ComplexMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline ComplexMatrix diag(std::initializer_list<double> d) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()),
                                        static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

inline const ComplexMatrix& sigma_x() {
  static const ComplexMatrix m = mat({{0, 1}, {1, 0}});
  return m;
}
inline const ComplexMatrix& sigma_y() {
  static const ComplexMatrix m = mat({{0, Complex(0, -1)}, {Complex(0, 1), 0}});
  return m;
}
inline const ComplexMatrix& sigma_z() {
  static const ComplexMatrix m = diag({1, -1});
  return m;
}

#define CHECK_MAT_CLOSE(x, y, tol) CHECK(seqprod::max_abs_diff((x), (y)) <= (tol))

template <class F>
seqprod::ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const seqprod::Error& e) {
    return e.kind();
  }
  FAIL("expected seqprod::Error");
  return seqprod::ErrorKind::InvariantViolation;
}

}  // namespace testing
