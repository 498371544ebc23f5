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

#include "qcoins/suprematism.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "oracle.hpp"

using namespace qcoins;

namespace {

// Side radicand with a linear term 2 p_{k+1} in place of 2 p_{k+1}^2;
// it disagrees with the closed-form area.
double radicand_linear_term(const ProbabilityTriple& p, std::size_t k) {
  const double a = p[k], b = p[(k + 1) % 3];
  return 2 * a * a + 2 * b + 2 * a * b - 4 * a - 2 * b + 2;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(SideLengths, Examples) {
  const auto center = side_lengths({0.5, 0.5, 0.5});
  for (double y : center.sides) EXPECT_NEAR(y, std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(center.area_sum, 1.5, 1e-15);

  for (const ProbabilityTriple& p : {ProbabilityTriple{0, 0, 0}, ProbabilityTriple{1, 1, 1}}) {
    const auto t = side_lengths(p);
    for (double y : t.sides) EXPECT_NEAR(y, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(t.area_sum, 6.0, 1e-15);
  }
}

TEST(SideLengths, CyclicIndexWraps) {
  // y_3 pairs p3 with p1.
  const ProbabilityTriple p{0.1, 0.4, 0.9};
  const double a = 0.9, b = 0.1;
  EXPECT_NEAR(side_lengths(p).sides[2], std::sqrt(2 * a * a + 2 * b * b + 2 * a * b - 4 * a - 2 * b + 2), 1e-15);
}

TEST(SideLengths, ZeroSideAtItsMinimum) {
  const auto t = side_lengths({1.0, 0.0, 0.5});
  EXPECT_EQ(t.sides[0], 0.0);
}

TEST(SideLengths, RejectsOutOfRange) { EXPECT_THROW((void)side_lengths({0.5, 1.2, 0.5}), DomainError); }

TEST(AreaSumClosedForm, Examples) {
  EXPECT_DOUBLE_EQ(area_sum_closed_form({0, 0, 0}), 6.0);
  EXPECT_DOUBLE_EQ(area_sum_closed_form({0.5, 0.5, 0.5}), 1.5);
  EXPECT_DOUBLE_EQ(area_sum_closed_form({1.0, 0.5, 0.5}), 2.5);
  EXPECT_NEAR(side_lengths({1.0, 0.5, 0.5}).area_sum, 2.5, 1e-15);
}

TEST(AreaSum, SquaredSidesMatchClosedForm) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const ProbabilityTriple p{u(rng), u(rng), u(rng)};
    const auto t = side_lengths(p);
    double squares = 0;
    for (double y : t.sides) squares += y * y;
    EXPECT_NEAR(squares, area_sum_closed_form(p), 1e-12);
    EXPECT_NEAR(t.area_sum, area_sum_closed_form(p), 1e-12);
    EXPECT_GE(t.area_sum, 0.0);
    EXPECT_LE(t.area_sum, 6.0 + 1e-12);
  }
}

TEST(AreaSum, LinearTermVariantDisagreesWithClosedForm) {
  const ProbabilityTriple p{0.5, 0.5, 0.5};
  double s = 0;
  for (std::size_t k = 0; k < 3; ++k) s += radicand_linear_term(p, k);
  EXPECT_GT(std::abs(s - area_sum_closed_form(p)), 0.5);
}

TEST(AreaSum, CyclicSymmetry) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const ProbabilityTriple p{u(rng), u(rng), u(rng)};
    EXPECT_NEAR(area_sum_closed_form(p), area_sum_closed_form({p.p2, p.p3, p.p1}), 1e-13);
    EXPECT_NEAR(side_lengths(p).area_sum, side_lengths({p.p3, p.p1, p.p2}).area_sum, 1e-13);
  }
}

TEST(AreaSum, RadicandsNonNegativeOnCube) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 1.0;
  for (int i = 0; i < 1000000; ++i) {
    const ProbabilityTriple p{u(rng), u(rng), u(rng)};
    for (std::size_t k = 0; k < 3; ++k) worst = std::min(worst, side_radicand(p, k));
  }
  EXPECT_GE(worst, -1e-12);
}

TEST(MaximizeArea, CubeReachesSixAtVertex) {
  const auto r = maximize_area(Region::cube, 50, 20);
  EXPECT_NEAR(r.best_value, 6.0, 1e-6);
  EXPECT_EQ(r.best_p.p1, r.best_p.p2);
  EXPECT_EQ(r.best_p.p2, r.best_p.p3);
  EXPECT_TRUE(r.best_p.p1 == 0.0 || r.best_p.p1 == 1.0);
  EXPECT_EQ(r.region, Region::cube);
  EXPECT_GE(r.iterations, 50u * 50u * 50u);
}

TEST(MaximizeArea, BallReachesThree) {
  const auto r = maximize_area(Region::ball, 50, 20);
  EXPECT_NEAR(r.best_value, 3.0, 1e-4);
  EXPECT_TRUE(is_quantum(r.best_p));
  EXPECT_EQ(r.region, Region::ball);
}

TEST(MaximizeArea, CoarseBallScanNeverExceedsBound) {
  const auto r = maximize_area(Region::ball, 10, 0);
  EXPECT_LE(r.best_value, 3.0 + 1e-9);
  EXPECT_TRUE(is_quantum(r.best_p));
}

TEST(MaximizeArea, BallBoundAgreesWithRandomSphereSearch) {
  // Independent estimate: best of many pure states.
  std::mt19937_64 rng(14);
  std::normal_distribution<double> g;
  double best = 0;
  for (int i = 0; i < 200000; ++i) {
    double v[3] = {g(rng), g(rng), g(rng)};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    best = std::max(best, area_sum_closed_form({0.5 + 0.5 * v[0] / n, 0.5 + 0.5 * v[1] / n, 0.5 + 0.5 * v[2] / n}));
  }
  const auto r = maximize_area(Region::ball, 50, 20);
  EXPECT_LE(best, r.best_value + 1e-12);
  EXPECT_NEAR(best, 3.0, 1e-3);
}

TEST(MaximizeArea, Deterministic) {
  const auto a = maximize_area(Region::ball, 20, 10);
  const auto b = maximize_area(Region::ball, 20, 10);
  EXPECT_EQ(a.best_p, b.best_p);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(MaximizeArea, RejectsSparseGrid) { EXPECT_THROW((void)maximize_area(Region::cube, 9, 0), DomainError); }

TEST(RenderSvg, ThreeSquaresInMalevichPalette) {
  const std::string svg = render_svg(side_lengths({0.5, 0.5, 0.5}));
  EXPECT_EQ(count(svg, "<rect "), 3u);
  const auto red = svg.find("fill=\"red\"");
  const auto black = svg.find("fill=\"black\"");
  const auto white = svg.find("fill=\"white\"");
  ASSERT_NE(red, std::string::npos);
  EXPECT_LT(red, black);
  EXPECT_LT(black, white);
  EXPECT_EQ(count(svg, "stroke=\"black\""), 3u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  // sqrt(1/2) * 100 px.
  EXPECT_EQ(count(svg, "width=\"70.711\""), 3u);
}

TEST(RenderSvg, ScaleAndDeterminism) {
  const auto t = side_lengths({0.0, 0.0, 0.0});
  EXPECT_EQ(render_svg(t, {.scale = 50.0}), render_svg(t, {.scale = 50.0}));
  EXPECT_NE(render_svg(t, {.scale = 50.0}).find("width=\"70.711\""), std::string::npos);
  EXPECT_THROW((void)render_svg(t, {.scale = 0.0}), DomainError);
  EXPECT_THROW((void)render_svg(t, {.scale = -1.0}), DomainError);
}
