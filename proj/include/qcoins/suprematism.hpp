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

// Malevich-square triads.
//
// A coin triple is drawn as three squares. The side y_k of square k depends
// on p_k and p_{k+1} (indices cyclic, p_4 = p_1):
//
//   y_k^2 = 2 p_k^2 + 2 p_{k+1}^2 + 2 p_k p_{k+1} - 4 p_k - 2 p_{k+1} + 2
//
// The summed area S = y_1^2 + y_2^2 + y_3^2 equals
//
//   2 [3 + 2(p1^2+p2^2+p3^2) - 3(p1+p2+p3) + p1 p2 + p2 p3 + p3 p1]
//
// which reaches 6 on the cube (at (0,0,0) and (1,1,1)) but only 3 on the
// quantum ball.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>

#include "qcoins/core.hpp"
#include "qcoins/error.hpp"

namespace qcoins {

struct MalevichTriad {
  std::array<double, 3> sides{};
  double area_sum = 0.0;
};

enum class Region { cube, ball };

inline constexpr std::string_view to_string(Region r) { return r == Region::cube ? "cube" : "ball"; }

struct ExtremizationResult {
  ProbabilityTriple best_p;
  double best_value = 0.0;
  /// Objective evaluations: grid points plus refinement probes.
  std::size_t iterations = 0;
  Region region = Region::cube;
};

/// Radicand of y_k for 0-based k. Non-negative on the cube up to rounding.
inline double side_radicand(const ProbabilityTriple& p, std::size_t k) {
  const double a = p[k];
  const double b = p[(k + 1) % 3];
  return 2.0 * a * a + 2.0 * b * b + 2.0 * a * b - 4.0 * a - 2.0 * b + 2.0;
}

inline MalevichTriad side_lengths(const ProbabilityTriple& p) {
  check_in_cube(p);
  MalevichTriad t;
  for (std::size_t k = 0; k < 3; ++k) {
    double rad = side_radicand(p, k);
    // Minimum on the cube is 0, at p_k = 1, p_{k+1} = 0.
    if (rad < 0.0 && rad >= -1e-12) rad = 0.0;
    t.sides[k] = std::sqrt(rad);
    t.area_sum += rad;
  }
  return t;
}

inline double area_sum_closed_form(const ProbabilityTriple& p) {
  check_in_cube(p);
  const auto [a, b, c] = p.as_array();
  return 2.0 * (3.0 + 2.0 * (a * a + b * b + c * c) - 3.0 * (a + b + c) + a * b + b * c + c * a);
}

namespace detail {

inline ProbabilityTriple project_onto(Region region, ProbabilityTriple p) {
  if (region == Region::ball) {
    const double r2 = radius_squared(p);
    if (r2 > 0.25) {
      const double s = 0.5 / std::sqrt(r2);
      p = {0.5 + s * (p.p1 - 0.5), 0.5 + s * (p.p2 - 0.5), 0.5 + s * (p.p3 - 0.5)};
    }
  }
  p.p1 = std::clamp(p.p1, 0.0, 1.0);
  p.p2 = std::clamp(p.p2, 0.0, 1.0);
  p.p3 = std::clamp(p.p3, 0.0, 1.0);
  return p;
}

inline double area_unchecked(const ProbabilityTriple& p) {
  const auto [a, b, c] = p.as_array();
  return 2.0 * (3.0 + 2.0 * (a * a + b * b + c * c) - 3.0 * (a + b + c) + a * b + b * c + c * a);
}

inline void set_component(ProbabilityTriple& p, std::size_t k, double v) {
  (k == 0 ? p.p1 : (k == 1 ? p.p2 : p.p3)) = v;
}

}  // namespace detail

/// Maximizes the summed square area over the cube or the quantum ball.
///
/// A uniform grid of `grid_density` points per axis is scanned (for the
/// ball, only points inside it), then the best point is refined by
/// coordinate hill climbing. Each of the `refinement_steps` levels probes
/// +-h along every axis until no probe improves, then halves h. Probes
/// leaving the ball are projected radially onto its surface. Ties keep the
/// first point in scan order, so the cube result is (0,0,0).
inline ExtremizationResult maximize_area(Region region, std::size_t grid_density,
                                         std::size_t refinement_steps) {
  if (grid_density < 10) throw DomainError("grid_density", "must be at least 10");

  ExtremizationResult res;
  res.region = region;
  res.best_value = -1.0;
  const double h0 = 1.0 / static_cast<double>(grid_density - 1);

  for (std::size_t i = 0; i < grid_density; ++i) {
    for (std::size_t j = 0; j < grid_density; ++j) {
      for (std::size_t k = 0; k < grid_density; ++k) {
        const ProbabilityTriple p{static_cast<double>(i) * h0, static_cast<double>(j) * h0,
                                  static_cast<double>(k) * h0};
        if (region == Region::ball && radius_squared(p) > 0.25) continue;
        ++res.iterations;
        const double v = detail::area_unchecked(p);
        if (v > res.best_value) {
          res.best_value = v;
          res.best_p = p;
        }
      }
    }
  }

  constexpr std::size_t kMaxSweepsPerLevel = 100000;
  double h = h0;
  for (std::size_t level = 0; level < refinement_steps; ++level, h *= 0.5) {
    for (std::size_t sweep = 0; sweep < kMaxSweepsPerLevel; ++sweep) {
      bool improved = false;
      for (std::size_t axis = 0; axis < 3; ++axis) {
        for (const double dir : {1.0, -1.0}) {
          ProbabilityTriple cand = res.best_p;
          detail::set_component(cand, axis, cand[axis] + dir * h);
          cand = detail::project_onto(region, cand);
          ++res.iterations;
          const double v = detail::area_unchecked(cand);
          if (v > res.best_value) {
            res.best_value = v;
            res.best_p = cand;
            improved = true;
          }
        }
      }
      if (!improved) break;
    }
  }
  return res;
}

/// Layout of render_svg(). `scale` is pixels per unit side length.
struct SvgStyle {
  double scale = 100.0;
  double margin = 10.0;
  double gap = 10.0;
};

/// SVG 1.1 drawing of the triad: three axis-aligned squares, left to right
/// in index order, filled red, black and white with black outlines, aligned
/// on a common baseline. Output bytes depend only on the triad and style.
inline std::string render_svg(const MalevichTriad& triad, const SvgStyle& style = {}) {
  if (!(style.scale > 0.0) || !std::isfinite(style.scale)) {
    throw DomainError("scale", "must be a positive number of pixels per unit");
  }
  if (!(style.margin >= 0.0) || !(style.gap >= 0.0)) {
    throw DomainError("margin", "margin and gap must be non-negative");
  }
  static constexpr std::array<const char*, 3> kFill{"red", "black", "white"};

  const auto fmt = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };

  std::array<double, 3> px{};
  double width = 2.0 * style.margin + 2.0 * style.gap;
  double tallest = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    px[k] = triad.sides[k] * style.scale;
    width += px[k];
    tallest = std::max(tallest, px[k]);
  }
  const double height = 2.0 * style.margin + tallest;
  const double baseline = style.margin + tallest;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  out += "  <title>Malevich squares, total area " + fmt(triad.area_sum) + "</title>\n";
  double x = style.margin;
  for (std::size_t k = 0; k < 3; ++k) {
    out += "  <rect x=\"" + fmt(x) + "\" y=\"" + fmt(baseline - px[k]) + "\" width=\"" + fmt(px[k]) +
           "\" height=\"" + fmt(px[k]) + "\" fill=\"" + kFill[k] +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    x += px[k] + style.gap;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace qcoins
