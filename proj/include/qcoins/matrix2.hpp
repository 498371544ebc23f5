// Copyright 2026 The qcoins Authors
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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qcoins {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix stored row-major. Rows and columns are indexed
/// by spin projection: index 0 is m = +1/2, index 1 is m = -1/2.
struct Matrix2 {
  std::array<Complex, 4> m{};

  constexpr Complex& operator()(std::size_t row, std::size_t col) { return m[2 * row + col]; }
  constexpr const Complex& operator()(std::size_t row, std::size_t col) const {
    return m[2 * row + col];
  }

  static constexpr Matrix2 identity() { return Matrix2{{Complex{1.0}, {}, {}, Complex{1.0}}}; }

  constexpr Complex trace() const { return m[0] + m[3]; }

  constexpr Matrix2 adjoint() const {
    return Matrix2{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
  }

  /// Largest absolute entrywise deviation from Hermiticity.
  double hermiticity_error() const {
    return std::max({std::abs(m[0].imag()), std::abs(m[3].imag()),
                     std::abs(m[1] - std::conj(m[2]))});
  }

  friend constexpr Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    return Matrix2{{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
  }
  friend constexpr Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
    return Matrix2{{a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]}};
  }
  friend constexpr Matrix2 operator*(Complex s, const Matrix2& a) {
    return Matrix2{{s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]}};
  }
  friend constexpr Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return Matrix2{{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
                    a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
  }
  friend constexpr bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Max absolute entrywise difference.
inline double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

}  // namespace qcoins
