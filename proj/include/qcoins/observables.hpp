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

// Coin-game observables.
//
// Coin 1 pays +x on heads and -x on tails, coin 2 pays +y / -y, coin 3
// pays z1 / z2. The game corresponds to the Hermitian matrix
//
//     A = | z1       x - iy |  = c 1 + x sx + y sy + z sz,
//         | x + iy   z2     |
//
// with c = (z1+z2)/2, z = (z1-z2)/2 and r = |(x, y, z)|. Its eigenvalues are
// c +- r, so A^2 = 2c A + (r^2 - c^2) 1 and every moment <A^n> = Tr(rho A^n)
// follows from <A> through a two-term recurrence.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcoins/core.hpp"
#include "qcoins/error.hpp"
#include "qcoins/matrix2.hpp"

namespace qcoins {

/// Below this r the observable is treated as c times the identity.
inline constexpr double kDegenerateRadius = 1e-12;

struct GameObservable {
  double x = 0.0;
  double y = 0.0;
  double z1 = 0.0;
  double z2 = 0.0;

  constexpr double center() const { return 0.5 * (z1 + z2); }
  constexpr double half_split() const { return 0.5 * (z1 - z2); }
  double radius() const { return std::hypot(x, y, half_split()); }

  friend constexpr bool operator==(const GameObservable&, const GameObservable&) = default;
};

struct PauliBasis {
  static constexpr Matrix2 identity() { return Matrix2::identity(); }
  static constexpr Matrix2 sigma_x() { return Matrix2{{Complex{0.0}, Complex{1.0}, Complex{1.0}, Complex{0.0}}}; }
  static constexpr Matrix2 sigma_y() {
    return Matrix2{{Complex{0.0}, Complex{0.0, -1.0}, Complex{0.0, 1.0}, Complex{0.0}}};
  }
  static constexpr Matrix2 sigma_z() { return Matrix2{{Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{-1.0}}}; }
};

struct MomentSequence {
  std::vector<double> moments;
  double c = 0.0;
  double r = 0.0;
  /// (<A> - c) / r; empty when r < kDegenerateRadius.
  std::optional<double> f;
};

struct Outcome {
  double value = 0.0;
  double probability = 0.0;

  friend constexpr bool operator==(const Outcome&, const Outcome&) = default;
};

inline Matrix2 to_matrix(const GameObservable& a) {
  return Matrix2{{Complex{a.z1}, Complex{a.x, -a.y}, Complex{a.x, a.y}, Complex{a.z2}}};
}

/// <X> + <Y> + <Z> for independent coins with heads probabilities p. Any
/// cube triple is accepted; for a quantum state this is Tr(rho A).
inline double mean(const ProbabilityTriple& p, const GameObservable& a) {
  check_in_cube(p);
  return (2.0 * p.p1 - 1.0) * a.x + (2.0 * p.p2 - 1.0) * a.y + p.p3 * a.z1 + (1.0 - p.p3) * a.z2;
}

inline double second_moment(const ProbabilityTriple& p, const GameObservable& a) {
  const double c = a.center();
  const double r = a.radius();
  return (a.z1 + a.z2) * mean(p, a) + r * r - c * c;
}

namespace detail {

inline std::optional<double> anisotropy(double mean_value, double c, double r) {
  if (r < kDegenerateRadius) return std::nullopt;
  return (mean_value - c) / r;
}

}  // namespace detail

/// G(lambda) = Tr(rho exp(lambda A)) = e^{lambda c} [cosh(lambda r) + f sinh(lambda r)].
inline double generating_function(const ProbabilityTriple& p, const GameObservable& a, double lambda) {
  const double m1 = mean(p, a);
  const double c = a.center();
  const double r = a.radius();
  const auto f = detail::anisotropy(m1, c, r);
  if (!f) return std::exp(lambda * c);
  return std::exp(lambda * c) * (std::cosh(lambda * r) + *f * std::sinh(lambda * r));
}

/// m_0..m_n by m_{k+2} = 2c m_{k+1} + (r^2 - c^2) m_k. The state enters only
/// through m_1 = <A>.
inline MomentSequence moments(const ProbabilityTriple& p, const GameObservable& a, std::size_t n) {
  MomentSequence seq;
  seq.c = a.center();
  seq.r = a.radius();
  const double m1 = mean(p, a);
  seq.f = detail::anisotropy(m1, seq.c, seq.r);
  seq.moments.resize(n + 1);
  seq.moments[0] = 1.0;
  if (!seq.f) {
    for (std::size_t k = 1; k <= n; ++k) seq.moments[k] = seq.moments[k - 1] * seq.c;
    return seq;
  }
  if (n >= 1) seq.moments[1] = m1;
  const double lin = 2.0 * seq.c;
  const double cst = seq.r * seq.r - seq.c * seq.c;
  for (std::size_t k = 2; k <= n; ++k) {
    seq.moments[k] = lin * seq.moments[k - 1] + cst * seq.moments[k - 2];
  }
  return seq;
}

/// Reference moments Re Tr(rho A^n) by repeated 2x2 multiplication.
inline MomentSequence moments_oracle(const ProbabilityTriple& p, const GameObservable& a, std::size_t n) {
  const Matrix2 rho = probs_to_density(p).matrix();
  const Matrix2 obs = to_matrix(a);
  MomentSequence seq;
  seq.c = a.center();
  seq.r = a.radius();
  seq.moments.reserve(n + 1);
  Matrix2 power = Matrix2::identity();
  for (std::size_t k = 0; k <= n; ++k) {
    seq.moments.push_back((rho * power).trace().real());
    power = power * obs;
  }
  seq.f = detail::anisotropy((rho * obs).trace().real(), seq.c, seq.r);
  return seq;
}

/// Spectral distribution of A in state p: c + r with probability (1+f)/2,
/// c - r with probability (1-f)/2, or c with certainty when r vanishes.
inline std::vector<Outcome> outcome_distribution(const ProbabilityTriple& p, const GameObservable& a) {
  if (!is_quantum(p)) throw DomainError("p", "outcome distribution requires a quantum state (outside the ball)");
  const double c = a.center();
  const double r = a.radius();
  const auto f = detail::anisotropy(mean(p, a), c, r);
  if (!f) return {Outcome{c, 1.0}};
  if (std::abs(*f) > 1.0 + kValidityTolerance) {
    throw DomainError("f", "anisotropy " + std::to_string(*f) + " outside [-1,1]; not a quantum state");
  }
  const double fc = std::clamp(*f, -1.0, 1.0);
  return {Outcome{c + r, 0.5 * (1.0 + fc)}, Outcome{c - r, 0.5 * (1.0 - fc)}};
}

}  // namespace qcoins
