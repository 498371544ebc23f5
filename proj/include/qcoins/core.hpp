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

// Qubit states as three coin probabilities.
//
// A spin-1/2 state is identified with the triple (p1, p2, p3) of
// probabilities to find spin projection +1/2 along x, y and z. The triple
// determines the 2x2 density matrix
//
//     | p3                       (p1-1/2) - i(p2-1/2) |
//     | (p1-1/2) + i(p2-1/2)     1 - p3               |
//
// and vice versa. Every triple in the unit cube maps to a Hermitian,
// unit-trace matrix; only those inside the ball of radius 1/2 about
// (1/2,1/2,1/2) give a positive semidefinite one. Triples outside the ball
// describe independent classical coins and are valid inputs everywhere a
// state is not explicitly required.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "qcoins/error.hpp"
#include "qcoins/matrix2.hpp"

namespace qcoins {

/// Additive slack on the ball boundary, so pure states survive round trips.
inline constexpr double kValidityTolerance = 1e-9;
/// Entrywise deviation from Hermiticity tolerated (and symmetrized away).
inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-12;
/// Slack when a probability is recovered from a matrix.
inline constexpr double kRangeTolerance = 1e-12;

/// Probabilities of spin-up along x, y, z; equivalently, heads
/// probabilities of three coins. The components need not sum to one.
struct ProbabilityTriple {
  double p1 = 0.5;
  double p2 = 0.5;
  double p3 = 0.5;

  constexpr double operator[](std::size_t k) const { return k == 0 ? p1 : (k == 1 ? p2 : p3); }
  constexpr std::array<double, 3> as_array() const { return {p1, p2, p3}; }

  /// Two-outcome distribution (p_k, 1 - p_k) of coin k (0-based).
  constexpr std::array<double, 2> coin_distribution(std::size_t k) const {
    return {(*this)[k], 1.0 - (*this)[k]};
  }

  friend constexpr bool operator==(const ProbabilityTriple&, const ProbabilityTriple&) = default;
};

/// Mean spin projections; x_k = 2 p_k - 1.
struct BlochVector {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  friend constexpr bool operator==(const BlochVector&, const BlochVector&) = default;
};

struct ValidityReport {
  double radius_squared = 0.0;
  bool is_quantum = true;
  /// Ascending: {1/2 - sqrt(radius_squared), 1/2 + sqrt(radius_squared)}.
  std::array<double, 2> eigenvalues{0.5, 0.5};
  /// (p1-1/2)^2 + (p2-1/2)^2 - p3(1-p3); zero on the pure-state sphere.
  double purity_defect = 0.0;
};

namespace detail {

inline std::string component_name(std::string_view prefix, std::size_t k) {
  return std::string(prefix) + std::to_string(k + 1);
}

inline void check_unit_interval(double v, const std::string& field) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError(field, "not a coin probability (" + std::to_string(v) + " outside [0,1])");
  }
}

}  // namespace detail

/// Throws DomainError naming the first component outside [0,1].
/// `prefix` is prepended to the component index ("p" -> "p1", "q" -> "q1").
inline void check_in_cube(const ProbabilityTriple& p, std::string_view prefix = "p") {
  for (std::size_t k = 0; k < 3; ++k) detail::check_unit_interval(p[k], detail::component_name(prefix, k));
}

/// A Hermitian, unit-trace 2x2 matrix. Positivity is not part of the type:
/// classical coin triples map onto indefinite matrices, see quantum_validity().
class DensityMatrix {
 public:
  /// The maximally mixed state.
  DensityMatrix() : m_(Complex{0.5} * Matrix2::identity()) {}

  /// Validates Hermiticity (within kHermiticityTolerance, then symmetrized)
  /// and unit trace (within kTraceTolerance).
  static DensityMatrix from_matrix(const Matrix2& a) {
    const double herm = a.hermiticity_error();
    if (!(herm <= kHermiticityTolerance)) {
      throw DomainError("m", "matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    const double tr = a(0, 0).real() + a(1, 1).real();
    if (!(std::abs(tr - 1.0) <= kTraceTolerance)) {
      throw DomainError("m", "trace is " + std::to_string(tr) + ", expected 1");
    }
    const Complex lower = 0.5 * (a(1, 0) + std::conj(a(0, 1)));
    return DensityMatrix(
        Matrix2{{Complex{a(0, 0).real()}, std::conj(lower), lower, Complex{a(1, 1).real()}}});
  }

  const Matrix2& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  explicit DensityMatrix(const Matrix2& m) : m_(m) {}
  friend DensityMatrix probs_to_density(const ProbabilityTriple& p);

  Matrix2 m_;
};

/// Density matrix of a coin triple. Hermitian and unit-trace for every
/// triple in the cube; positive only inside the ball.
inline DensityMatrix probs_to_density(const ProbabilityTriple& p) {
  check_in_cube(p);
  const Complex off{p.p1 - 0.5, p.p2 - 0.5};
  return DensityMatrix(Matrix2{{Complex{p.p3}, std::conj(off), off, Complex{1.0 - p.p3}}});
}

/// Inverse of probs_to_density: p_k = Tr(rho rho_k) for the projectors onto
/// spin-up along x, y, z. Throws if a recovered probability leaves [0,1].
inline ProbabilityTriple density_to_probs(const DensityMatrix& rho) {
  const Complex lower = rho(1, 0);
  std::array<double, 3> p{0.5 + lower.real(), 0.5 + lower.imag(), rho(0, 0).real()};
  for (std::size_t k = 0; k < 3; ++k) {
    if (p[k] < -kRangeTolerance || p[k] > 1.0 + kRangeTolerance || std::isnan(p[k])) {
      throw DomainError(detail::component_name("p", k),
                        "matrix maps to a value outside [0,1] (" + std::to_string(p[k]) + ")");
    }
    p[k] = std::clamp(p[k], 0.0, 1.0);
  }
  return {p[0], p[1], p[2]};
}

inline double radius_squared(const ProbabilityTriple& p) {
  const double a = p.p1 - 0.5, b = p.p2 - 0.5, c = p.p3 - 0.5;
  return a * a + b * b + c * c;
}

inline double purity_defect(const ProbabilityTriple& p) {
  check_in_cube(p);
  const double a = p.p1 - 0.5, b = p.p2 - 0.5;
  return a * a + b * b - p.p3 * (1.0 - p.p3);
}

inline bool is_quantum(const ProbabilityTriple& p) {
  check_in_cube(p);
  return radius_squared(p) <= 0.25 + kValidityTolerance;
}

inline ValidityReport quantum_validity(const ProbabilityTriple& p) {
  check_in_cube(p);
  ValidityReport r;
  r.radius_squared = radius_squared(p);
  r.is_quantum = r.radius_squared <= 0.25 + kValidityTolerance;
  const double s = std::sqrt(r.radius_squared);
  r.eigenvalues = {0.5 - s, 0.5 + s};
  r.purity_defect = purity_defect(p);
  return r;
}

/// Tr(rho_p rho_q) written in coin probabilities. Both triples must be
/// quantum states.
///
/// Expanding the trace with the matrices above gives
///   p3 q3 + (1-p3)(1-q3) + 2[(p1-1/2)(q1-1/2) + (p2-1/2)(q2-1/2)],
/// with a plus between the first two terms. A minus there would give the
/// maximally mixed state an overlap of 0 with itself instead of 1/2.
inline double overlap(const ProbabilityTriple& p, const ProbabilityTriple& q) {
  check_in_cube(p, "p");
  check_in_cube(q, "q");
  if (!is_quantum(p)) throw DomainError("p", "overlap requires a quantum state (outside the ball)");
  if (!is_quantum(q)) throw DomainError("q", "overlap requires a quantum state (outside the ball)");
  return p.p3 * q.p3 + (1.0 - p.p3) * (1.0 - q.p3) +
         2.0 * ((p.p1 - 0.5) * (q.p1 - 0.5) + (p.p2 - 0.5) * (q.p2 - 0.5));
}

inline ProbabilityTriple bloch_to_probs(const BlochVector& x) {
  const std::array<double, 3> v{x.x1, x.x2, x.x3};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!(v[k] >= -1.0 && v[k] <= 1.0)) {
      throw DomainError(detail::component_name("x", k),
                        "mean spin projection " + std::to_string(v[k]) + " outside [-1,1]");
    }
  }
  return {(x.x1 + 1.0) / 2.0, (x.x2 + 1.0) / 2.0, (x.x3 + 1.0) / 2.0};
}

inline BlochVector probs_to_bloch(const ProbabilityTriple& p) {
  check_in_cube(p);
  return {2.0 * p.p1 - 1.0, 2.0 * p.p2 - 1.0, 2.0 * p.p3 - 1.0};
}

}  // namespace qcoins
